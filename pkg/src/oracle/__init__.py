# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Differential graded algebra oracle: presented complexes, their homology
Hilbert series, and comparison against closed forms.
"""

from .complexes import (
    ComplexKind,
    ComplexParams,
    ExpectedHomology,
    build_standard_complex,
    expected_homology,
)
from .dga import (
    DEFAULT_BASIS_LIMIT,
    BasisLimitExceeded,
    Comparison,
    ComplexParameterError,
    DifferentialError,
    Flavor,
    Generator,
    HilbertTable,
    OracleError,
    PresentedDGA,
    compare_hilbert,
    compare_series,
    enumerate_basis,
    homology_hilbert,
    internal_cap_for_total,
    term,
    with_differential,
)

__all__ = [
    "ComplexKind",
    "ComplexParams",
    "ExpectedHomology",
    "build_standard_complex",
    "expected_homology",
    "DEFAULT_BASIS_LIMIT",
    "BasisLimitExceeded",
    "Comparison",
    "ComplexParameterError",
    "DifferentialError",
    "Flavor",
    "Generator",
    "HilbertTable",
    "OracleError",
    "PresentedDGA",
    "compare_hilbert",
    "compare_series",
    "enumerate_basis",
    "homology_hilbert",
    "internal_cap_for_total",
    "term",
    "with_differential",
]
