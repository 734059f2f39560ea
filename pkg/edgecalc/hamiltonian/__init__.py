"""Helium Hamiltonian: coefficient functions, test fields and operator forms"""

from edgecalc.hamiltonian.coefficients import (
    coeff_h,
    coeff_v,
    coeff_v_chart,
    coulomb_potential,
    r_over_sin,
    series_branch_gap,
)
from edgecalc.hamiltonian.fields import EdgeField, HyperPartials, ScalarField
from edgecalc.hamiltonian.operators import (
    FuchsTerm,
    apply_beltrami,
    apply_cartesian,
    apply_corner,
    apply_edge,
    apply_laplacian_hyperspherical,
    check_fuchs_shape,
    edge_fuchs_terms,
    radial_reduction,
)

__all__ = [
    "EdgeField",
    "FuchsTerm",
    "HyperPartials",
    "ScalarField",
    "apply_beltrami",
    "apply_cartesian",
    "apply_corner",
    "apply_edge",
    "apply_laplacian_hyperspherical",
    "check_fuchs_shape",
    "coeff_h",
    "coeff_v",
    "coeff_v_chart",
    "coulomb_potential",
    "edge_fuchs_terms",
    "r_over_sin",
    "radial_reduction",
    "series_branch_gap",
]
