#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for configuration loading, logging setup and metrics."""

import logging
import shutil
import tempfile
from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.shared.config import TRUNC_ENV_VAR, Config
from src.shared.logging_setup import setup_logging
from src.shared.metrics import SuiteMetrics


CONFIG_YAML = """
paths:
  home: ~/.moduli_betti_test
computation:
  default_truncation: 12
  default_characteristic: odd
oracle:
  internal_cap: 9
  fields: [Q]
verify:
  r_max: 3
  odd_genera: [3, 5]
logging:
  level: DEBUG
  rotation:
    max_bytes: 1024
features:
  duckdb_sink:
    enabled: true
"""


@pytest.fixture
def temp_dir():
    """Create temporary directory for testing."""
    path = tempfile.mkdtemp()
    yield Path(path)
    shutil.rmtree(path)


@pytest.fixture
def config_dir(temp_dir, monkeypatch):
    monkeypatch.delenv(TRUNC_ENV_VAR, raising=False)
    (temp_dir / "config.yaml").write_text(CONFIG_YAML)
    return temp_dir


class TestConfig:
    def test_defaults_without_file(self, temp_dir, monkeypatch):
        monkeypatch.delenv(TRUNC_ENV_VAR, raising=False)
        config = Config(temp_dir)
        assert config.computation.default_truncation == 40
        assert config.computation.default_characteristic == "2"
        assert config.oracle.fields == ["Q", "F3", "F5"]
        assert config.verify.g_max == 6
        assert config.logging.level == "WARNING"
        assert config.features.duckdb_sink.enabled is False

    def test_yaml_overrides(self, config_dir):
        config = Config(config_dir)
        assert config.computation.default_truncation == 12
        assert config.computation.default_characteristic == "odd"
        assert config.oracle.internal_cap == 9
        assert config.oracle.fields == ["Q"]
        assert config.verify.r_max == 3
        assert config.verify.odd_genera == [3, 5]
        assert config.verify.g_max == 6
        assert config.logging.level == "DEBUG"
        assert config.logging.rotation.max_bytes == 1024
        assert config.logging.rotation.backup_count == 5
        assert config.features.duckdb_sink.enabled is True

    def test_paths_expand_home(self, config_dir):
        config = Config(config_dir)
        assert config.paths.home == Path.home() / ".moduli_betti_test"
        assert config.paths.reports_dir == Path.home() / ".moduli_betti" / "reports"

    def test_get_dot_path(self, config_dir):
        config = Config(config_dir)
        assert config.get("oracle.internal_cap") == 9
        assert config.get("oracle.missing", "fallback") == "fallback"
        assert config.get("oracle.internal_cap.deeper", 1) == 1

    def test_get_path_without_default(self, config_dir):
        with pytest.raises(ValueError):
            Config(config_dir).get_path("paths.nowhere")

    def test_truncation_from_environment(self, config_dir, monkeypatch):
        monkeypatch.setenv(TRUNC_ENV_VAR, "7")
        assert Config(config_dir).computation.default_truncation == 7

    @pytest.mark.parametrize("value", ["seven", "-1"])
    def test_invalid_truncation_from_environment(self, config_dir, monkeypatch, value):
        monkeypatch.setenv(TRUNC_ENV_VAR, value)
        with pytest.raises(ValueError):
            Config(config_dir).computation


class TestLoggingSetup:
    def test_file_and_console_handlers(self, config_dir):
        log_file = config_dir / "logs" / "moduli_betti.log"
        setup_logging("INFO", log_file=log_file, config=Config(config_dir))
        root = logging.getLogger()
        assert root.level == logging.INFO
        assert len(root.handlers) == 2
        logging.getLogger("moduli_betti.test").info("hello")
        for handler in root.handlers:
            handler.flush()
        assert "hello" in log_file.read_text()

    def test_unknown_level(self, config_dir):
        with pytest.raises(ValueError):
            setup_logging("LOUD", log_file=config_dir / "x.log", config=Config(config_dir))


class TestSuiteMetrics:
    def test_record_and_stats(self):
        metrics = SuiteMetrics()
        metrics.record_family("golden", 0.002, checks=12)
        metrics.record_family("golden", 0.004, checks=3, failed=1, flagged=2)
        stats = metrics.get_stats()["golden"]
        assert stats["count"] == 2
        assert stats["checks"] == 15
        assert (stats["failed"], stats["flagged"]) == (1, 2)
        assert stats["errors"] == 1
        assert stats["max_duration_ms"] == pytest.approx(4.0)
        assert stats["avg_duration_ms"] == pytest.approx(3.0)

    def test_timed_records_outcome_and_exceptions(self):
        metrics = SuiteMetrics()
        with pytest.raises(RuntimeError):
            with metrics.timed("oracle"):
                raise RuntimeError("boom")
        with metrics.timed("oracle") as outcome:
            outcome.update(checks=4, flagged=1)
        stats = metrics.get_stats()["oracle"]
        assert stats["count"] == 2
        assert stats["errors"] == 1
        assert (stats["checks"], stats["flagged"]) == (4, 1)

    def test_families_sorted(self):
        metrics = SuiteMetrics()
        metrics.record_family("identity.mod2", 0.001)
        metrics.record_family("groups", 0.001)
        assert list(metrics.get_stats()) == ["groups", "identity.mod2"]

    def test_reset(self):
        metrics = SuiteMetrics()
        metrics.record_family("groups", 0.001)
        metrics.reset()
        assert metrics.get_stats() == {}
