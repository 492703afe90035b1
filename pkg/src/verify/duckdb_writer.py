# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
DuckDB Sink for verification history.

Stores every verification run and its reports in a queryable analytics
database, so regressions can be traced across runs. Behind the
features.duckdb_sink.enabled flag.
"""

import json
import logging
import uuid
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .report import VerificationReport, summarize

logger = logging.getLogger(__name__)

# Flag to check if DuckDB is available
try:
    import duckdb
    DUCKDB_AVAILABLE = True
except ImportError:
    DUCKDB_AVAILABLE = False
    logger.debug("DuckDB not available - install with: pip install duckdb>=0.9.0")


class VerificationDuckDBWriter:
    """
    DuckDB writer for verification runs.

    One row per run in verification_runs and one row per report in
    verification_reports, keyed by run_id.
    """

    def __init__(self, database_path: Optional[Path] = None):
        """
        Initialize DuckDB writer.

        Args:
            database_path: Path to DuckDB database file
                          (default: ~/.moduli_betti/verification_history.duckdb)
        """
        if not DUCKDB_AVAILABLE:
            raise RuntimeError(
                "DuckDB is not available. Install with: pip install duckdb>=0.9.0"
            )

        if database_path is None:
            database_path = Path.home() / ".moduli_betti" / "verification_history.duckdb"

        self.database_path = Path(database_path)
        self.database_path.parent.mkdir(parents=True, exist_ok=True)

        self._connection: Optional[Any] = None

        logger.debug(f"DuckDB writer initialized (database: {self.database_path})")

    def connect(self) -> None:
        """Connect to DuckDB database and initialize schema."""
        if self._connection is not None:
            return

        logger.debug(f"Connecting to DuckDB: {self.database_path}")
        self._connection = duckdb.connect(str(self.database_path))
        self._create_schema()

    def _create_schema(self) -> None:
        """Create DuckDB schema for verification history."""
        if self._connection is None:
            raise RuntimeError("Not connected to DuckDB")

        self._connection.execute("""
            CREATE TABLE IF NOT EXISTS verification_runs (
                run_id VARCHAR PRIMARY KEY,
                suite VARCHAR NOT NULL,
                started_at TIMESTAMP NOT NULL,
                version VARCHAR,
                total INTEGER NOT NULL,
                passed INTEGER NOT NULL,
                failed INTEGER NOT NULL,
                flagged INTEGER NOT NULL
            )
        """)

        self._connection.execute("""
            CREATE TABLE IF NOT EXISTS verification_reports (
                run_id VARCHAR NOT NULL,
                seq INTEGER NOT NULL,
                check_name VARCHAR NOT NULL,
                params VARCHAR NOT NULL,
                status VARCHAR NOT NULL,
                discrepancy VARCHAR,
                witness VARCHAR,
                report_json VARCHAR NOT NULL,
                PRIMARY KEY (run_id, seq),
                FOREIGN KEY (run_id) REFERENCES verification_runs(run_id)
            )
        """)

        logger.debug("DuckDB schema created/verified")

    def write_run(
        self,
        suite: str,
        reports: Sequence[VerificationReport],
        timestamp: Optional[datetime] = None,
        version: Optional[str] = None,
    ) -> str:
        """
        Write one verification run and all its reports.

        Returns:
            Run ID
        """
        if self._connection is None:
            self.connect()
        if timestamp is None:
            timestamp = datetime.now()

        run_id = f"{suite}_{timestamp.strftime('%Y%m%d_%H%M%S')}_{uuid.uuid4().hex[:8]}"
        counts = summarize(reports)

        self._connection.execute("""
            INSERT INTO verification_runs (run_id, suite, started_at, version, total, passed, failed, flagged)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        """, [run_id, suite, timestamp, version, len(reports), counts["pass"], counts["fail"], counts["flagged"]])

        rows = [
            [
                run_id,
                seq,
                report.check,
                json.dumps(report.params, sort_keys=True, default=str),
                report.status.value,
                report.discrepancy,
                json.dumps(report.witness, sort_keys=True, default=str) if report.witness else None,
                report.to_json(),
            ]
            for seq, report in enumerate(reports)
        ]
        if rows:
            self._connection.executemany("""
                INSERT INTO verification_reports
                    (run_id, seq, check_name, params, status, discrepancy, witness, report_json)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """, rows)

        logger.info(f"Wrote verification run {run_id} ({len(reports)} reports) to DuckDB")
        return run_id

    def run_summaries(self, suite: Optional[str] = None) -> List[Dict[str, Any]]:
        """Stored runs, oldest first, optionally for one suite."""
        if self._connection is None:
            self.connect()
        query = "SELECT run_id, suite, started_at, total, passed, failed, flagged FROM verification_runs"
        args: List[Any] = []
        if suite is not None:
            query += " WHERE suite = ?"
            args.append(suite)
        query += " ORDER BY started_at, run_id"
        columns = ["run_id", "suite", "started_at", "total", "passed", "failed", "flagged"]
        return [dict(zip(columns, row)) for row in self._connection.execute(query, args).fetchall()]

    def close(self) -> None:
        """Close DuckDB connection."""
        if self._connection is not None:
            self._connection.close()
            self._connection = None
            logger.debug("DuckDB connection closed")

    def __enter__(self):
        """Context manager entry."""
        self.connect()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit."""
        self.close()
        return False
