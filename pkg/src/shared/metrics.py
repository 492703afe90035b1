# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Metrics tracking for verification check families.

A family is one group of checks built together (golden.rank2_z2,
identity.mod2, groups, ...). Each run of a family records its duration, how
many checks it produced and how many of them failed or were flagged.
"""

import logging
import time
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterator, List

logger = logging.getLogger(__name__)


@dataclass
class FamilyStats:
    """Accumulated runs of one check family."""
    runs: int = 0
    errors: int = 0
    checks: int = 0
    failed: int = 0
    flagged: int = 0
    durations: List[float] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        durations = self.durations
        return {
            "count": self.runs,
            "errors": self.errors,
            "checks": self.checks,
            "failed": self.failed,
            "flagged": self.flagged,
            "avg_duration_ms": sum(durations) / len(durations) * 1000 if durations else 0,
            "max_duration_ms": max(durations) * 1000 if durations else 0,
        }


class SuiteMetrics:
    """Per family run counts, check outcomes and timings."""

    def __init__(self):
        self.families: Dict[str, FamilyStats] = defaultdict(FamilyStats)
        self.last_reset = datetime.now()

    def record_family(
        self,
        family: str,
        duration: float,
        checks: int = 0,
        failed: int = 0,
        flagged: int = 0,
        success: bool = True,
    ) -> None:
        """
        Record one run of a family.

        A run counts as an error when it raised or produced a failing check.
        """
        stats = self.families[family]
        stats.runs += 1
        stats.checks += checks
        stats.failed += failed
        stats.flagged += flagged
        stats.durations.append(duration)
        if not success or failed:
            stats.errors += 1
        logger.debug(f"{family}: {checks} checks in {duration * 1000:.1f} ms ({failed} failed, {flagged} flagged)")

    @contextmanager
    def timed(self, family: str) -> Iterator[Dict[str, int]]:
        """
        Time a block and record it under family.

        The block fills the yielded dict's checks/failed/flagged entries; an
        exception records the run as an error and propagates.
        """
        outcome = {"checks": 0, "failed": 0, "flagged": 0}
        success = True
        start = time.perf_counter()
        try:
            yield outcome
        except Exception:
            success = False
            raise
        finally:
            self.record_family(family, time.perf_counter() - start, success=success, **outcome)

    def get_stats(self) -> Dict[str, Dict[str, Any]]:
        return {family: self.families[family].to_dict() for family in sorted(self.families)}

    def reset(self):
        """Reset metrics."""
        self.families.clear()
        self.last_reset = datetime.now()


# Global metrics instance
_metrics = SuiteMetrics()


def get_metrics() -> SuiteMetrics:
    """Get global metrics instance."""
    return _metrics
