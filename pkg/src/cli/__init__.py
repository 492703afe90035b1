# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Command line interface for moduli-betti.
"""

from .formatters import FormatNotSupportedError, OutputFormat, format_csv, format_json, format_latex, format_markdown
from .main import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_PARAMETER_ERROR,
    NoClosedFormError,
    __version__,
    build_parser,
    compute_betti,
    main,
)

__all__ = [
    "FormatNotSupportedError",
    "OutputFormat",
    "format_csv",
    "format_json",
    "format_latex",
    "format_markdown",
    "EXIT_FAILURE",
    "EXIT_OK",
    "EXIT_PARAMETER_ERROR",
    "NoClosedFormError",
    "__version__",
    "build_parser",
    "compute_betti",
    "main",
]
