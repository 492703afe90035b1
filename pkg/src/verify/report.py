# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Verification report model.

A report embeds the check name, every input parameter, the status and, for
anything other than a pass, a witness: the first differing degree and the
coefficients on both sides.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from ..algebra.series import PoincarePolynomial, TruncatedSeries

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    FLAGGED = "flagged"


class WitnessMissingError(ValueError):
    """A fail or flagged report was built without a witness."""
    pass


@dataclass
class VerificationReport:
    """Outcome of one check."""
    check: str
    params: Dict[str, Any]
    status: CheckStatus
    witness: Optional[Dict[str, Any]] = None
    discrepancy: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.status = CheckStatus(self.status)
        if self.status != CheckStatus.PASS and not self.witness:
            raise WitnessMissingError(f"{self.check}: a {self.status.value} report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    @property
    def sort_key(self) -> str:
        return self.check + "|" + json.dumps(self.params, sort_keys=True, default=str)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status.value,
            "witness": self.witness,
            "discrepancy": self.discrepancy,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, default=str)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        return cls(
            check=data["check"],
            params=dict(data.get("params", {})),
            status=CheckStatus(data["status"]),
            witness=data.get("witness"),
            discrepancy=data.get("discrepancy"),
            details=dict(data.get("details") or {}),
        )


def _coefficients(value: Any) -> List[Any]:
    if isinstance(value, (TruncatedSeries, PoincarePolynomial)):
        return list(value.coeffs)
    return list(value)


def _encode(ring: Any, value: Any) -> Any:
    if ring is not None:
        return ring.encode(value)
    return value


def series_witness(expected: Any, actual: Any, upto: Optional[int] = None) -> Optional[Dict[str, Any]]:
    """
    First degree where two coefficient sequences differ, or None when they agree.

    Series, polynomials and plain lists are accepted; missing coefficients
    count as zero. upto bounds the degrees compared.
    """
    ring = getattr(expected, "ring", None) or getattr(actual, "ring", None)
    left, right = _coefficients(expected), _coefficients(actual)
    length = max(len(left), len(right))
    if upto is not None:
        length = min(length, upto + 1)
    zero = ring.zero() if ring is not None else 0
    for k in range(length):
        x = left[k] if k < len(left) else zero
        y = right[k] if k < len(right) else zero
        if x != y:
            return {"degree": k, "expected": _encode(ring, x), "actual": _encode(ring, y)}
    return None


def series_payload(value: Any) -> Any:
    """JSON form of a compared series, for embedding in report details."""
    if isinstance(value, (TruncatedSeries, PoincarePolynomial)):
        return {"str": str(value), **value.to_dict()}
    return value


def comparison_report(
    check: str,
    params: Dict[str, Any],
    expected: Any,
    actual: Any,
    upto: Optional[int] = None,
    discrepancy: Optional[str] = None,
    details: Optional[Dict[str, Any]] = None,
) -> VerificationReport:
    """
    Pass when expected and actual agree, otherwise fail, or flagged when a
    known discrepancy key applies to the parameters.
    """
    witness = series_witness(expected, actual, upto)
    payload = {"expected": series_payload(expected), "actual": series_payload(actual)}
    payload.update(details or {})
    if witness is None:
        return VerificationReport(check, params, CheckStatus.PASS, details=payload)
    status = CheckStatus.FLAGGED if discrepancy else CheckStatus.FAIL
    if status == CheckStatus.FAIL:
        logger.warning(f"{check} {params}: mismatch at t^{witness['degree']}")
    return VerificationReport(check, params, status, witness, discrepancy if discrepancy else None, payload)


def value_report(
    check: str,
    params: Dict[str, Any],
    expected: Any,
    actual: Any,
    degree: Optional[int] = None,
    discrepancy: Optional[str] = None,
) -> VerificationReport:
    """Compare two plain values, e.g. a Betti number against a group invariant."""
    details = {"expected": expected, "actual": actual}
    if expected == actual:
        return VerificationReport(check, params, CheckStatus.PASS, details=details)
    witness = {"degree": degree, "expected": expected, "actual": actual}
    status = CheckStatus.FLAGGED if discrepancy else CheckStatus.FAIL
    if status == CheckStatus.FAIL:
        logger.warning(f"{check} {params}: expected {expected}, got {actual}")
    return VerificationReport(check, params, status, witness, discrepancy, details)


def sort_reports(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    """Deterministic report order: by check name, then parameters."""
    return sorted(reports, key=lambda report: report.sort_key)


def summarize(reports: Iterable[VerificationReport]) -> Dict[str, int]:
    counts = {status.value: 0 for status in CheckStatus}
    for report in reports:
        counts[report.status.value] += 1
    return counts
