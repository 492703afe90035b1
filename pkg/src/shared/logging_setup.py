# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Logging setup shared by the CLI and scripts.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, TextIO

from .config import Config

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'


def setup_logging(
    level: str = "INFO",
    log_file: Optional[Path] = None,
    config: Optional[Config] = None,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Setup logging configuration with file rotation.

    Logs to a console stream (stderr unless given) and a rotating file
    (~/.moduli_betti/moduli_betti.log unless given).
    """
    numeric_level = getattr(logging, level.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError(f"Unknown log level '{level}'")

    # Load config for rotation settings
    try:
        config = config or Config()
        max_bytes = config.get("logging.rotation.max_bytes", 10485760)  # 10 MB default
        backup_count = config.get("logging.rotation.backup_count", 5)
    except Exception:
        max_bytes = 10485760
        backup_count = 5

    if log_file is None:
        log_file = Path.home() / ".moduli_betti" / "moduli_betti.log"
    log_file = Path(log_file)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT)

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(stream or sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    try:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )
    except OSError as e:
        logger.warning(f"File logging disabled, cannot open {log_file}: {e}")
    else:
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    logger.debug(f"Logging initialized: level={level}, file={log_file}, max_size={max_bytes/1024/1024:.1f}MB, backups={backup_count}")
