#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
moduli-betti CLI entry point.

Usage:
    python scripts/moduli_betti.py betti --rank 2 --genus 3 --circles 4 --odd 1 --target moduli
    python scripts/moduli_betti.py verify --suite all
"""

import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.main import main


if __name__ == '__main__':
    sys.exit(main())
