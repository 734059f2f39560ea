"""Kernel and cokernel dimensions of σ_∧ over the weight line, and the exit symbols"""

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from edgecalc.edge_kernel.membership import WeightGamma, membership_decide
from edgecalc.exceptions import TruncationBound
from edgecalc.symbols import EdgeSymbolParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FredholmData:
    """
    Dimensions of ker σ_∧ and ker σ_∧* at weight γ

    Dimensions count the (2l+1)-fold Y_lm degeneracy; the sector lists hold one generator
    per l.
    """

    gamma: float
    dim_ker: int
    dim_coker: int
    index: int
    fredholm_ok: bool
    kernel_sectors: Tuple[int, ...] = ()
    cokernel_sectors: Tuple[int, ...] = ()

    @property
    def is_isomorphism(self) -> bool:
        return self.fredholm_ok and self.dim_ker == 0 and self.dim_coker == 0


def cokernel_decide(l: int, gamma: float) -> bool:
    """Whether sector l contributes to ker σ_∧* at weight γ: 0 ≤ l < γ − 3/2"""
    if l < 0:
        raise ValueError(f"Sector index must be nonnegative, got l={l}")
    return bool(l < gamma - 1.5)


def fredholm_data(gamma: float, l_max: int = 10) -> FredholmData:
    """
    Fredholm data of σ_∧ on K^{s,γ}

    The kernel is spanned by K-solutions with γ < ½ − l; the cokernel is the kernel of
    the adjoint, counted from the sectors with γ > 3/2 + l.

    Raises:
        TruncationBound: when a sector above l_max would contribute
    """
    weight = WeightGamma(gamma)
    if 0.5 - gamma >= l_max or gamma - 1.5 >= l_max:
        raise TruncationBound(f"l_max={l_max} truncates the sector sums at γ={gamma}")
    if not weight.fredholm_ok:
        logger.warning(f"γ={gamma} lies on ℤ + ½; σ_∧ is not Fredholm there")

    sectors = range(l_max + 1)
    kernel = tuple(l for l in sectors if membership_decide(l, gamma))
    cokernel = tuple(l for l in sectors if cokernel_decide(l, gamma))
    dim_ker = sum(2 * l + 1 for l in kernel)
    dim_coker = sum(2 * l + 1 for l in cokernel)
    return FredholmData(
        gamma=gamma,
        dim_ker=dim_ker,
        dim_coker=dim_coker,
        index=dim_ker - dim_coker,
        fredholm_ok=weight.fredholm_ok,
        kernel_sectors=kernel,
        cokernel_sectors=cokernel,
    )


def gamma_grid(gamma_min: float, gamma_max: float, step: float) -> np.ndarray:
    """gamma_min + k·step up to gamma_max, rounded to 12 decimals"""
    if step <= 0 or gamma_min >= gamma_max:
        raise ValueError(f"Invalid γ range [{gamma_min}, {gamma_max}] with step {step}")
    count = int(np.floor((gamma_max - gamma_min) / step + 1e-9)) + 1
    return np.round(gamma_min + step * np.arange(count), 12)


def fredholm_table(
    gamma_min: float, gamma_max: float, step: float, l_max: int = 10
) -> List[FredholmData]:
    """FredholmData over the γ-grid, excluded weights included and flagged"""
    return [fredholm_data(float(gamma), l_max) for gamma in gamma_grid(gamma_min, gamma_max, step)]


def isomorphism_window(table: Sequence[FredholmData]) -> List[float]:
    """Weights of the table where σ_∧ is an isomorphism"""
    return [row.gamma for row in table if row.is_isomorphism]


@dataclass(frozen=True)
class IndexJump:
    before: float
    after: float
    crossings: Tuple[float, ...]
    jump: int

    @property
    def expected(self) -> int:
        return sum(expected_index_jump(h) for h in self.crossings)


def expected_index_jump(crossing: float) -> int:
    """Index change at γ = ½ − l (kernel side) or γ = 3/2 + l (cokernel side): −(2l+1)"""
    l = 0.5 - crossing if crossing <= 0.5 else crossing - 1.5
    return -(2 * int(round(l)) + 1)


def index_jumps(table: Sequence[FredholmData]) -> List[IndexJump]:
    """Index changes between consecutive Fredholm rows, with the half-integers crossed"""
    rows = [row for row in table if row.fredholm_ok]
    jumps = []
    for before, after in zip(rows, rows[1:]):
        first = int(np.floor(before.gamma - 0.5)) + 1
        last = int(np.floor(after.gamma - 0.5))
        crossings = tuple(k + 0.5 for k in range(first, last + 1))
        if after.index != before.index or crossings:
            jump = after.index - before.index
            jumps.append(IndexJump(before.gamma, after.gamma, crossings, jump))
    return jumps


class ExitSymbols(NamedTuple):
    sigma_e: float
    sigma_psi_e: float


def exit_symbols(params: EdgeSymbolParams, xi: Sequence[float]) -> ExitSymbols:
    """
    Exit symbols of σ_∧ after pushing the cone to ℝ³

    σ_e = (|ξ|² − C)/(2t²) and σ_ψ,e = |ξ|²/(2t²). For vanishing edge covariables C = 0
    and σ_e(0) = 0, which lies outside the ellipticity hypothesis.
    """
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (3,):
        raise ValueError(f"Exit covariable must have 3 components, got shape {xi.shape}")
    squared = float(xi @ xi)
    t2 = params.t**2
    if params.is_edge_zero():
        logger.debug("Exit symbols evaluated at zero edge covariables (C = 0)")
    return ExitSymbols((squared - params.C) / (2.0 * t2), squared / (2.0 * t2))
