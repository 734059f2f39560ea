"""Kernel of the principal edge symbol: Bessel solutions, weighted membership, Fredholm data"""

from edgecalc.edge_kernel.bessel import (
    BesselHalfOrder,
    BesselKind,
    bessel_half,
    bessel_half_derivatives,
    bessel_ode_residual,
)
from edgecalc.edge_kernel.fredholm import (
    ExitSymbols,
    FredholmData,
    cokernel_decide,
    exit_symbols,
    fredholm_data,
    fredholm_table,
    index_jumps,
    isomorphism_window,
)
from edgecalc.edge_kernel.membership import (
    LargeRClass,
    WeightGamma,
    annihilation_residual,
    kernel_field,
    membership_check,
    membership_decide,
    membership_exponent,
    radial_residual,
    truncated_weighted_norm,
)

__all__ = [
    "BesselHalfOrder",
    "BesselKind",
    "ExitSymbols",
    "FredholmData",
    "LargeRClass",
    "WeightGamma",
    "annihilation_residual",
    "bessel_half",
    "bessel_half_derivatives",
    "bessel_ode_residual",
    "cokernel_decide",
    "exit_symbols",
    "fredholm_data",
    "fredholm_table",
    "index_jumps",
    "isomorphism_window",
    "kernel_field",
    "membership_check",
    "membership_decide",
    "membership_exponent",
    "radial_residual",
    "truncated_weighted_norm",
]
