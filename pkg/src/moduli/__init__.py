# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Real curves, Real bundles, and the Betti numbers and fundamental groups of
the real moduli spaces and gauge group classifying spaces built from them.
"""

from .betti import (
    BettiParameterError,
    BettiResult,
    FormulaError,
    GtCase,
    LoopGroupKind,
    Rank2Mode,
    UnknownSeriesKindError,
    bcg_odd,
    bcg_odd_character_route,
    bcg_z2,
    beta_from_gt,
    beta_leading,
    bg_z2,
    bg_z2_product_form,
    bsg_odd,
    bsg_z2,
    f_t,
    fixed_det_rank2_odd,
    fixed_det_rank2_z2,
    fixed_det_rank3_z2,
    g_t,
    loop_group_series,
    t_complex_series,
)
from .groups import (
    FGAbelianGroup,
    GroupDescriptor,
    GroupKind,
    UnsupportedCaseError,
    abelianize,
    group_table,
    h1_fixed_det_moduli,
    pi0_cgauge,
    pi0_sgauge,
    pi1_fixed_det_moduli,
)
from .topology import (
    QuaternionicComponentError,
    RealBundleTopType,
    RealCurveType,
    TopologyError,
    bundle_from_counts,
    enumerate_curves,
    moduli_dimension,
    quotient_surface,
    smallest_coprime_degree,
    stable_range,
    validate_bundle,
    validate_curve,
)

__all__ = [
    # topology
    "TopologyError",
    "QuaternionicComponentError",
    "RealCurveType",
    "RealBundleTopType",
    "validate_curve",
    "enumerate_curves",
    "validate_bundle",
    "bundle_from_counts",
    "smallest_coprime_degree",
    "stable_range",
    "quotient_surface",
    "moduli_dimension",
    # betti
    "BettiParameterError",
    "BettiResult",
    "FormulaError",
    "GtCase",
    "LoopGroupKind",
    "Rank2Mode",
    "UnknownSeriesKindError",
    "bg_z2",
    "bg_z2_product_form",
    "bsg_z2",
    "bcg_z2",
    "f_t",
    "g_t",
    "bcg_odd",
    "bcg_odd_character_route",
    "bsg_odd",
    "beta_leading",
    "beta_from_gt",
    "t_complex_series",
    "loop_group_series",
    "fixed_det_rank2_z2",
    "fixed_det_rank3_z2",
    "fixed_det_rank2_odd",
    # groups
    "UnsupportedCaseError",
    "GroupKind",
    "FGAbelianGroup",
    "GroupDescriptor",
    "pi0_sgauge",
    "pi0_cgauge",
    "pi1_fixed_det_moduli",
    "abelianize",
    "h1_fixed_det_moduli",
    "group_table",
]
