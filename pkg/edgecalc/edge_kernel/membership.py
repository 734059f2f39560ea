"""
Separated solutions of σ_∧u = 0 and their membership in the weighted cone spaces

On the degree-l harmonics the equation reduces to f″ + (2/r)f′ − l(l+1)f/r² + Cf = 0,
solved by f_l = r^{−1/2}B_{l+½}(ar) with a = √(−C). Only the K-solution decays at
infinity; it lies in K^{2,γ} near the tip exactly when γ < ½ − l.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy.integrate import quad

from edgecalc.edge_kernel.bessel import BesselHalfOrder, BesselKind, bessel_half_derivatives
from edgecalc.exceptions import NonpositiveArgument
from edgecalc.symbols import ConeField, ConePartials, EdgeSymbolParams, sigma_wedge_apply
from edgecalc.utils.harmonics import real_spherical_harmonic, sphere_eigenvalue

logger = logging.getLogger(__name__)

EXCLUDED_WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class WeightGamma:
    """A weight γ and whether σ_∧ is Fredholm on K^{s,γ}"""

    gamma: float
    tol: float = EXCLUDED_WEIGHT_TOL

    @property
    def distance_to_excluded(self) -> float:
        """Distance from γ to ℤ + ½"""
        return float(abs(self.gamma - 0.5 - np.round(self.gamma - 0.5)))

    @property
    def fredholm_ok(self) -> bool:
        return self.distance_to_excluded > self.tol


class LargeRClass(str, Enum):
    GROWING = "growing"
    DECAYING = "decaying"


@dataclass(frozen=True)
class MembershipExponent:
    small_r_exponent: float
    large_r_class: LargeRClass


@dataclass(frozen=True)
class RadialSolution:
    """f, f′, f″ of f_l(r) = r^{−1/2}B(ar)"""

    value: float
    first: float
    second: float


def _decay_rate(C: float) -> float:
    if C >= 0.0:
        raise NonpositiveArgument(f"Nonzero edge covariables give C < 0, got C={C}")
    return float(np.sqrt(-C))


def radial_solution(l: int, kind: BesselKind, a: float, r: float) -> RadialSolution:
    """f_l and its r-derivatives from the Bessel value and its z-derivatives"""
    if r <= 0.0:
        raise NonpositiveArgument(f"Cone variable must be positive, got r={r}")
    b = bessel_half_derivatives(BesselHalfOrder(l, kind), a * r)
    root = r**-0.5
    return RadialSolution(
        value=root * b.value,
        first=-0.5 * root / r * b.value + a * root * b.first,
        second=0.75 * root / r**2 * b.value - a * root / r * b.first + a**2 * root * b.second,
    )


def radial_residual(l: int, C: float, r: float, kind: BesselKind = BesselKind.K) -> float:
    """
    Scale-relative residual of f″ + (2/r)f′ − l(l+1)f/r² + Cf at r

    Raises:
        NonpositiveArgument: C ≥ 0 or r ≤ 0
    """
    f = radial_solution(l, kind, _decay_rate(C), r)
    terms = np.array(
        [f.second, 2.0 / r * f.first, sphere_eigenvalue(l) / r**2 * f.value, C * f.value]
    )
    scale = float(np.sum(np.abs(terms)))
    return float(abs(terms.sum()) / scale) if scale > 0.0 else 0.0


def analytic_small_r_exponent(l: int, kind: BesselKind) -> int:
    """Leading power of f_l at the tip: l for I_plus, −(l+1) otherwise"""
    return l if kind is BesselKind.I_PLUS else -(l + 1)


def membership_exponent(l: int, kind: BesselKind) -> MembershipExponent:
    """
    Small-r power of f_l fitted on r ∈ [1e-6, 1e-3] and its behaviour at infinity (a = 1)

    The large-r class compares f_l(50) with f_l(25).
    """
    radii = np.logspace(-6, -3, 16)
    values = np.array([abs(radial_solution(l, kind, 1.0, r).value) for r in radii])
    slope = float(np.polyfit(np.log(radii), np.log(values), 1)[0])
    ratio = abs(radial_solution(l, kind, 1.0, 50.0).value) / abs(
        radial_solution(l, kind, 1.0, 25.0).value
    )
    large = LargeRClass.GROWING if ratio > 1.0 else LargeRClass.DECAYING
    logger.debug(f"l={l} {kind.value}: fitted exponent {slope:.6f}, f(50)/f(25)={ratio:.3e}")
    return MembershipExponent(slope, large)


def truncated_weighted_norm(
    l: int,
    gamma: float,
    eps: float,
    a: float = 1.0,
    kind: BesselKind = BesselKind.K,
) -> float:
    """
    ∫_ε¹ r^{−2(γ−1)} Σ_{j≤2} |(r∂r)^j f_l|² dr, integrated in s = log r

    This is the squared K^{2,γ} norm of the cut-off solution near the tip on the base
    X = S² (n = 2), up to the harmonic's unit L² norm.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"Truncation must lie in (0, 1), got eps={eps}")

    def integrand(s: float) -> float:
        r = np.exp(s)
        f = radial_solution(l, kind, a, r)
        euler = r * f.first
        euler2 = r * f.first + r**2 * f.second
        return r ** (-2.0 * (gamma - 1.0)) * (f.value**2 + euler**2 + euler2**2) * r

    value, _ = quad(integrand, np.log(eps), 0.0, limit=200, epsrel=1e-10)
    return float(value)


@dataclass(frozen=True)
class MembershipDecision:
    """Analytic membership and the quadrature oracle's opinion"""

    l: int
    gamma: float
    member: bool
    quadrature_member: Optional[bool] = None
    growth: Optional[float] = None

    @property
    def agrees(self) -> bool:
        return self.quadrature_member is None or self.quadrature_member == self.member


def membership_decide(l: int, gamma: float) -> bool:
    """Whether r^{−1/2}K_{l+½}(ar)·Y_lm lies in K^{2,γ} of the cone: γ < ½ − l"""
    if l < 0:
        raise ValueError(f"Sector index must be nonnegative, got l={l}")
    # integrand ~ r^{−2(γ+l)}, integrable at 0 iff −2(γ+l) > −1
    return bool(-2.0 * (gamma - 1.0) + 2.0 * analytic_small_r_exponent(l, BesselKind.K) > -1.0)


def membership_check(
    l: int, gamma: float, eps: float = 1e-6, growth_limit: float = 0.1
) -> MembershipDecision:
    """
    Decide membership analytically and confirm it by ε-refinement of the truncated norm

    Halving ε must grow the truncated norm by more than growth_limit (relative) for the
    quadrature to call it divergent.
    """
    member = membership_decide(l, gamma)
    coarse = truncated_weighted_norm(l, gamma, eps)
    fine = truncated_weighted_norm(l, gamma, 0.5 * eps)
    growth = (fine - coarse) / coarse
    decision = MembershipDecision(l, gamma, member, growth <= growth_limit, growth)
    if not decision.agrees:
        logger.warning(
            f"Quadrature disagrees with the exponent criterion at l={l}, γ={gamma} "
            f"(growth {growth:.3e})"
        )
    return decision


def kernel_field(
    l: int, m: int, params: EdgeSymbolParams, kind: BesselKind = BesselKind.K
) -> ConeField:
    """r^{−1/2}B_{l+½}(√(−C)r)·Y_lm(θ, φ) with analytic derivatives"""
    a = _decay_rate(params.C)
    eigenvalue = sphere_eigenvalue(l)

    def oracle(r: float, theta: float, phi: float) -> ConePartials:
        f = radial_solution(l, kind, a, r)
        y = float(real_spherical_harmonic(l, m, theta, phi))
        return ConePartials(f.value * y, f.first * y, f.second * y, eigenvalue * f.value * y)

    def value(r: float, theta: float, phi: float) -> float:
        return oracle(r, theta, phi).value

    return ConeField(f"kernel[{kind.value},l={l},m={m}]", value, oracle)


def annihilation_residual(
    l: int,
    m: int,
    params: EdgeSymbolParams,
    r: float,
    theta: float,
    phi: float,
    kind: BesselKind = BesselKind.K,
    form: str = "footnote",
) -> float:
    """
    |σ_∧u| for u = kernel_field(l, m, params, kind), relative to the size of its terms

    The scale is (1/2t²)(|∂²r u| + (2/r)|∂r u| + |Δ_X u|/r² + |C u|).
    """
    field = kernel_field(l, m, params, kind)
    d = field.partials(r, theta, phi)
    applied = sigma_wedge_apply(params, field, r, theta, phi, form=form)
    scale = (
        abs(d.d_rr) + 2.0 / r * abs(d.d_r) + abs(d.laplace_x) / r**2 + abs(params.C * d.value)
    ) / (2.0 * params.t**2)
    return float(abs(applied) / scale) if scale > 0.0 else abs(applied)
