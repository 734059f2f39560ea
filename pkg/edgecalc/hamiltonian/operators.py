"""
The helium Hamiltonian in Cartesian, corner-degenerate and edge-degenerate form

The edge form is written as r⁻² Σ a_jα(r, t, angles) (−r∂r)^j (r∂t, r∂θ2, r∂φ2)^α plus a
Δ_X term. The table of those terms (edge_fuchs_terms) drives apply_edge, the structural
shape check and the frozen coefficients of the principal edge symbol.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from edgecalc.charts import CartesianPoint, ChartId, HyperPoint
from edgecalc.config import settings
from edgecalc.exceptions import OnSingularSet
from edgecalc.hamiltonian.coefficients import (
    coeff_h,
    coeff_v_chart,
    coulomb_potential,
    r_over_sin,
)
from edgecalc.hamiltonian.fields import EdgeField, HyperPartials, ScalarField

logger = logging.getLogger(__name__)

# Edge derivative slots of alpha, as indices into HyperPartials arrays
_EDGE_SLOTS = (0, 4, 5)  # t, θ2, φ2


def _v(p: HyperPoint) -> float:
    return coeff_v_chart(p.chart, p.r, p.theta1, p.phi1, p.theta2, p.phi2)


@dataclass(frozen=True)
class FuchsTerm:
    """
    One term a(p)·(−r∂r)^j (r∂t)^α0 (r∂θ2)^α1 (r∂φ2)^α2 of the bracket in the edge form

    ``base_order`` is 2 for the Δ_X term (which carries no r-powers of its own) and 0
    otherwise.
    """

    label: str
    j: int
    alpha: Tuple[int, int, int]
    base_order: int
    coefficient: Callable[[HyperPoint], float]

    @property
    def order(self) -> int:
        return self.j + sum(self.alpha) + self.base_order

    def monomial(self, partials: HyperPartials, p: HyperPoint) -> float:
        """The differential monomial applied to u, from its partial derivatives"""
        r = p.r
        if self.base_order == 2:
            return partials.laplace_x(p.theta1)
        if self.j == 1:
            return -r * partials.gradient[1]
        if self.j == 2:
            return r * partials.gradient[1] + r**2 * partials.second[1]
        for slot, power in zip(_EDGE_SLOTS, self.alpha):
            if power == 1:
                return r * partials.gradient[slot]
            if power == 2:
                return r**2 * partials.second[slot]
        return partials.value

    def apply(self, partials: HyperPartials, p: HyperPoint) -> float:
        return self.coefficient(p) * self.monomial(partials, p)


def edge_fuchs_terms() -> List[FuchsTerm]:
    """Terms of the edge-degenerate form, in display order"""

    def t2(p):
        return p.t**2

    def cos2(p):
        return np.cos(p.r) ** 2

    return [
        FuchsTerm("(-r dr)^2", 2, (0, 0, 0), 0, lambda p: -0.5 / t2(p)),
        FuchsTerm("(-r dr)", 1, (0, 0, 0), 0, lambda p: -0.5 * coeff_h(p.r) / t2(p)),
        FuchsTerm("(r dt)^2", 0, (2, 0, 0), 0, lambda p: -0.5),
        FuchsTerm("(r dt)", 0, (1, 0, 0), 0, lambda p: -2.5 * p.r / p.t),
        FuchsTerm("(r dtheta2)^2", 0, (0, 2, 0), 0, lambda p: -0.5 / (t2(p) * cos2(p))),
        FuchsTerm(
            "(r dtheta2)",
            0,
            (0, 1, 0),
            0,
            lambda p: -0.5 * p.r * np.cos(p.theta2) / (np.sin(p.theta2) * t2(p) * cos2(p)),
        ),
        FuchsTerm(
            "(r dphi2)^2",
            0,
            (0, 0, 2),
            0,
            lambda p: -0.5 / (t2(p) * np.sin(p.theta2) ** 2 * cos2(p)),
        ),
        FuchsTerm("laplace_x", 0, (0, 0, 0), 2, lambda p: -0.5 * r_over_sin(p.r) ** 2 / t2(p)),
        FuchsTerm("potential", 0, (0, 0, 0), 0, lambda p: p.r / p.t * _v(p)),
    ]


def _require_edge_interior(p: HyperPoint) -> None:
    if p.r < settings.degenerate_tol:
        raise OnSingularSet(f"The edge form is singular at r={p.r}")
    p.require_interior()


def apply_edge(u: EdgeField, p: HyperPoint) -> float:
    """Hu at p from the edge-degenerate form"""
    _require_edge_interior(p)
    partials = u.partials(p)
    bracket = sum(term.apply(partials, p) for term in edge_fuchs_terms())
    return float(bracket / p.r**2)


def apply_corner(u: EdgeField, p: HyperPoint) -> float:
    """Hu at p from the corner-degenerate form t⁻²r⁻²[−½(−rt∂t)² + 2r(−rt∂t) + …]"""
    _require_edge_interior(p)
    d = u.partials(p)
    t, r = p.t, p.r
    cos2 = np.cos(r) ** 2
    sin_theta2 = np.sin(p.theta2)

    corner_t = -r * t * d.gradient[0]
    corner_t2 = r**2 * (t * d.gradient[0] + t**2 * d.second[0])
    fuchs_r = -r * d.gradient[1]
    fuchs_r2 = r * d.gradient[1] + r**2 * d.second[1]

    bracket = (
        -0.5 * corner_t2
        + 2.0 * r * corner_t
        - 0.5 * fuchs_r2
        - 0.5 * coeff_h(r) * fuchs_r
        - 0.5 / cos2 * r**2 * d.second[4]
        - 0.5 * r * np.cos(p.theta2) / (sin_theta2 * cos2) * r * d.gradient[4]
        - 0.5 / (sin_theta2**2 * cos2) * r**2 * d.second[5]
        - 0.5 * r_over_sin(r) ** 2 * d.laplace_x(p.theta1)
        + t * r * _v(p) * d.value
    )
    return float(bracket / (t**2 * r**2))


def apply_cartesian(u: ScalarField, x: CartesianPoint, tol: Optional[float] = None) -> float:
    """
    Hu(x) = −½Δu − 2u/|x1| − 2u/|x2| + u/|x1 − x2|

    Raises:
        OnSingularSet: any interparticle distance below tol
    """
    potential = coulomb_potential(x, tol)
    return float(-0.5 * u.laplacian_at(x) + potential * u(x))


def _cone_laplacian(d: HyperPartials, p: HyperPoint) -> float:
    r = p.r
    fuchs_r = -r * d.gradient[1]
    fuchs_r2 = r * d.gradient[1] + r**2 * d.second[1]
    return float(
        (
            fuchs_r2
            + coeff_h(r) * fuchs_r
            + r_over_sin(r) ** 2 * d.laplace_x(p.theta1)
            + (r / np.cos(r)) ** 2 * d.laplace_y(p.theta2)
        )
        / r**2
    )


def apply_beltrami(
    u: EdgeField,
    r: float,
    theta1: float,
    phi1: float,
    theta2: float,
    phi2: float,
    *,
    t: float = 1.0,
    chart: ChartId = ChartId.U1,
) -> float:
    """
    Laplace-Beltrami operator Δ̃ of S^5 near the edge

    Δ̃ = r⁻²[(−r∂r)² + h(−r∂r) + (r²/sin²r)Δ_X + (r²/cos²r)Δ_Y]; u is read on the
    sphere of radius t.

    Raises:
        DegenerateAngles: outside the chart interior
    """
    p = HyperPoint(chart, t, r, theta1, phi1, theta2, phi2)
    p.require_interior()
    return _cone_laplacian(u.partials(p), p)


def apply_laplacian_hyperspherical(u: EdgeField, p: HyperPoint) -> float:
    """Δu = t⁻²[(−t∂t)² − 4(−t∂t) + Δ̃]u"""
    p.require_interior()
    d = u.partials(p)
    t = p.t
    euler_t = -t * d.gradient[0]
    euler_t2 = t * d.gradient[0] + t**2 * d.second[0]
    return float((euler_t2 - 4.0 * euler_t + _cone_laplacian(d, p)) / t**2)


def radial_reduction(
    f: Callable[[float], float],
    df: Callable[[float], float],
    d2f: Callable[[float], float],
    p: HyperPoint,
) -> float:
    """Hu for u = f(t): −½f″ − (5/2t)f′ + V f"""
    potential = _v(p) / (p.t * p.r)
    return float(-0.5 * d2f(p.t) - 2.5 / p.t * df(p.t) + potential * f(p.t))


@dataclass(frozen=True)
class FuchsShapeEntry:
    """Shape certificate of one edge term"""

    label: str
    order: int
    max_abs: float
    cauchy_gap: float
    ok: bool


_SHAPE_ANGLES = (
    (1.0, 0.7, 0.3, 1.2, 2.1),
    (0.6, 2.0, 4.0, 0.9, 5.0),
    (1.7, 1.1, 1.4, 2.4, 3.3),
)


def check_fuchs_shape(
    samples: int = 64, cauchy_tol: float = 1e-6, order: int = 2
) -> List[FuchsShapeEntry]:
    """
    Certify the Fuchs shape of the edge form

    Each term must satisfy j + |α| + base order ≤ order and have a coefficient that is finite
    on r ∈ [0, π/4] with values at r = 10⁻ᵏ (k = 4..8) forming a Cauchy sequence: successive
    steps shrink and the value at r = 10⁻⁸ is within cauchy_tol of the value at r = 0.

    Returns:
        One entry per term; ``ok`` is False for any violation
    """
    radii = np.linspace(0.0, 0.25 * np.pi, samples)
    near_zero = 10.0 ** -np.arange(4, 9)
    entries = []
    for term in edge_fuchs_terms():
        max_abs = 0.0
        gap = 0.0
        finite = True
        for t, theta1, phi1, theta2, phi2 in _SHAPE_ANGLES:

            def coefficient(r: float) -> float:
                return term.coefficient(HyperPoint(ChartId.U1, t, r, theta1, phi1, theta2, phi2))

            values = np.array([coefficient(r) for r in radii])
            finite = finite and bool(np.all(np.isfinite(values)))
            max_abs = max(max_abs, float(np.max(np.abs(values))))
            tail = np.array([coefficient(r) for r in near_zero] + [coefficient(0.0)])
            steps = np.abs(np.diff(tail))
            finite = finite and bool(np.all(steps[1:] <= steps[:-1] + 1e-14))
            gap = max(gap, float(abs(tail[-2] - tail[-1])))
        ok = term.order <= order and finite and gap < cauchy_tol
        if not ok:
            logger.warning(f"Edge term {term.label} violates the Fuchs shape (gap {gap:.3e})")
        entries.append(FuchsShapeEntry(term.label, term.order, max_abs, gap, ok))
    return entries
