"""
Symbol hierarchy of the edge-degenerate Hamiltonian

σ_ψ and σ̃_ψ are diagonal quadratic forms in the covariables (ρ, τ, Θ1, Φ1, Θ2, Φ2);
σ_∧ is an operator family on the stretched cone (S²)^∧ parametrized by the edge point
and covariables; σ_c is the conormal polynomial in the Mellin covariable w.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from edgecalc.charts import HALF_PI, ChartId, HyperPoint
from edgecalc.config import settings
from edgecalc.exceptions import DegenerateAngles, NonpositiveArgument
from edgecalc.hamiltonian.operators import edge_fuchs_terms
from edgecalc.utils.finite_difference import derivative_pair
from edgecalc.utils.harmonics import sphere_eigenvalue

logger = logging.getLogger(__name__)

COVARIABLES = ("rho", "tau", "Theta1", "Phi1", "Theta2", "Phi2")


@dataclass(frozen=True)
class Covector:
    """Covariables dual to (r, t, θ1, φ1, θ2, φ2)"""

    rho: float = 0.0
    tau: float = 0.0
    Theta1: float = 0.0
    Phi1: float = 0.0
    Theta2: float = 0.0
    Phi2: float = 0.0

    @classmethod
    def from_array(cls, values) -> "Covector":
        return cls(*(float(v) for v in values))

    def as_array(self) -> np.ndarray:
        return np.array([self.rho, self.tau, self.Theta1, self.Phi1, self.Theta2, self.Phi2])

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def scaled(self, factor: float) -> "Covector":
        return Covector.from_array(factor * self.as_array())

    def compressed(self, r: float) -> "Covector":
        """(ρ/r, τ/r, Θ1, Φ1, Θ2/r, Φ2/r), the rescaling relating σ̃_ψ to σ_ψ"""
        arr = self.as_array()
        arr[[0, 1, 4, 5]] /= r
        return Covector.from_array(arr)


def _check_angles(theta1: float, theta2: float, r: float) -> None:
    tol = settings.degenerate_tol
    if np.sin(theta1) < tol or np.sin(theta2) < tol or np.cos(r) < tol:
        raise DegenerateAngles(f"Symbol undefined at r={r}, θ1={theta1}, θ2={theta2}")


def _psi_weights(t, r, theta1, theta2, compressed: bool) -> np.ndarray:
    """Diagonal coefficients in covariable order; arrays broadcast"""
    t2 = np.asarray(t, dtype=float) ** 2
    r = np.asarray(r, dtype=float)
    cos2 = np.cos(r) ** 2
    if compressed:
        # r²/sin²r, continuous at r = 0
        x_scale = np.where(r > 0.0, r**2 / np.where(r > 0.0, np.sin(r) ** 2, 1.0), 1.0)
        x_scale = x_scale / (2.0 * t2)
    else:
        x_scale = 1.0 / (2.0 * t2 * np.sin(r) ** 2)
    return np.stack(
        np.broadcast_arrays(
            1.0 / (2.0 * t2),
            np.full_like(t2, 0.5),
            x_scale,
            x_scale / np.sin(theta1) ** 2,
            1.0 / (2.0 * t2 * cos2),
            1.0 / (2.0 * t2 * np.sin(theta2) ** 2 * cos2),
        ),
        axis=-1,
    )


def symbol_weights(p: HyperPoint) -> np.ndarray:
    """Coefficients w with σ_ψ(p, c) = Σ w_i c_i²"""
    p.require_interior()
    return _psi_weights(p.t, p.r, p.theta1, p.theta2, compressed=False)


def compressed_symbol_weights(p: HyperPoint) -> np.ndarray:
    """Coefficients of σ̃_ψ; defined up to r = 0"""
    _check_angles(p.theta1, p.theta2, p.r)
    return _psi_weights(p.t, p.r, p.theta1, p.theta2, compressed=True)


def sigma_psi(p: HyperPoint, cov: Covector) -> float:
    """Principal symbol σ_ψ(H) at (p, cov)"""
    return float(symbol_weights(p) @ cov.as_array() ** 2)


def sigma_psi_tilde(p: HyperPoint, cov: Covector) -> float:
    """Compressed principal symbol σ̃_ψ(H) at (p, cov), r = 0 allowed"""
    return float(compressed_symbol_weights(p) @ cov.as_array() ** 2)


@dataclass(frozen=True)
class EdgeSymbolParams:
    """Frozen edge point (t, θ2, φ2) and edge covariables (τ, Θ2, Φ2)"""

    t: float
    theta2: float
    phi2: float
    tau: float
    Theta2: float
    Phi2: float

    def __post_init__(self):
        if self.t <= 0:
            raise NonpositiveArgument(f"Edge variable must be positive, got t={self.t}")
        if np.sin(self.theta2) < settings.degenerate_tol:
            raise DegenerateAngles(f"Edge point θ2={self.theta2} on the polar axis")

    @property
    def C(self) -> float:
        """C = −(tτ)² − Θ2² − Φ2²/sin²θ2"""
        return float(
            -((self.t * self.tau) ** 2) - self.Theta2**2 - self.Phi2**2 / np.sin(self.theta2) ** 2
        )

    @property
    def covariables(self) -> np.ndarray:
        return np.array([self.tau, self.Theta2, self.Phi2])

    def is_edge_zero(self) -> bool:
        return not np.any(self.covariables)


@dataclass(frozen=True)
class ConePartials:
    """u, ∂r u, ∂²r u and Δ_X u at a point of (S²)^∧"""

    value: float
    d_r: float
    d_rr: float
    laplace_x: float


@dataclass(frozen=True)
class ConeField:
    """A function u(r, θ, φ) on the stretched cone"""

    name: str
    value: Callable[[float, float, float], float]
    partials_oracle: Optional[Callable[[float, float, float], ConePartials]] = None
    fd_step: float = field(default_factory=lambda: settings.field_fd_step)

    def partials(self, r: float, theta: float, phi: float) -> ConePartials:
        if self.partials_oracle is not None:
            return self.partials_oracle(r, theta, phi)
        h = self.fd_step
        d_r, d_rr = derivative_pair(lambda s: self.value(s, theta, phi), r, min(h, 0.25 * r))
        d_th, d_thth = derivative_pair(lambda s: self.value(r, s, phi), theta, h)
        _, d_phph = derivative_pair(lambda s: self.value(r, theta, s), phi, h)
        laplace_x = d_thth + np.cos(theta) / np.sin(theta) * d_th + d_phph / np.sin(theta) ** 2
        return ConePartials(float(self.value(r, theta, phi)), d_r, d_rr, float(laplace_x))


@dataclass(frozen=True)
class FrozenTerm:
    """A term of the edge form with its coefficient frozen at r = 0"""

    label: str
    j: int
    alpha: Tuple[int, int, int]
    base_order: int
    value: float


def principal_edge_coefficients(params: EdgeSymbolParams) -> List[FrozenTerm]:
    """Coefficients a_jα(0, y) of the edge form at the edge point of params"""
    p = HyperPoint(ChartId.U1, params.t, 0.0, HALF_PI, 0.0, params.theta2, params.phi2)
    return [
        FrozenTerm(term.label, term.j, term.alpha, term.base_order, float(term.coefficient(p)))
        for term in edge_fuchs_terms()
    ]


def _frozen_apply(params: EdgeSymbolParams, d: ConePartials, r: float) -> float:
    eta = params.covariables
    total = 0.0
    for term in principal_edge_coefficients(params):
        if term.value == 0.0:
            continue
        if term.base_order == 2:
            total += term.value * d.laplace_x
        elif term.j == 1:
            total += term.value * (-r * d.d_r)
        elif term.j == 2:
            total += term.value * (r * d.d_r + r**2 * d.d_rr)
        elif any(term.alpha):
            power = sum(term.alpha)
            if power % 2:
                raise ValueError(f"Odd edge term {term.label} survives at r = 0")
            (slot,) = np.flatnonzero(term.alpha)
            # (r∂y)^k ↦ (i r η)^k
            total += term.value * (-1.0) ** (power // 2) * (r * eta[slot]) ** power * d.value
        else:
            total += term.value * d.value
    return total / r**2


def sigma_wedge_apply(
    params: EdgeSymbolParams,
    u: ConeField,
    r: float,
    theta: float,
    phi: float,
    form: str = "footnote",
) -> float:
    """
    Principal edge symbol σ_∧(H)(y, η) applied to u at (r, θ, φ) ∈ (S²)^∧

    Args:
        form: ``footnote`` for −(1/2t²)[∂²r + (2/r)∂r + Δ_X/r² + C], ``display`` for the
            Fuchs-form grouping, ``frozen`` for the edge form with coefficients frozen at
            r = 0 and (r∂y)^α ↦ (i r η)^α

    Raises:
        NonpositiveArgument: r ≤ 0
        DegenerateAngles: θ on the polar axis
    """
    if r <= 0.0:
        raise NonpositiveArgument(f"Cone variable must be positive, got r={r}")
    if np.sin(theta) < settings.degenerate_tol:
        raise DegenerateAngles(f"θ={theta} on the polar axis")
    d = u.partials(r, theta, phi)
    t2 = params.t**2

    if form == "footnote":
        return float(
            -0.5 / t2 * (d.d_rr + 2.0 / r * d.d_r + d.laplace_x / r**2 + params.C * d.value)
        )
    if form == "display":
        fuchs_r = -r * d.d_r
        fuchs_r2 = r * d.d_r + r**2 * d.d_rr
        edge = (
            (r * params.tau) ** 2 / 2.0
            + (r * params.Theta2) ** 2 / (2.0 * t2)
            + (r * params.Phi2) ** 2 / (2.0 * t2 * np.sin(params.theta2) ** 2)
        )
        bracket = (
            -0.5 / t2 * fuchs_r2 + 0.5 / t2 * fuchs_r + edge * d.value - 0.5 / t2 * d.laplace_x
        )
        return float(bracket / r**2)
    if form == "frozen":
        return float(_frozen_apply(params, d, r))
    raise ValueError(f"Unknown σ_∧ form {form!r}")


def conormal_polynomial(l: int, t: float) -> np.ndarray:
    """
    Coefficients (highest degree first) of σ_c restricted to the degree-l harmonics

    Built from the α = 0 terms of the edge form at r = 0: (−r∂r)^j ↦ w^j and Δ_X ↦ −l(l+1).
    """
    if l < 0:
        raise ValueError(f"Sector index must be nonnegative, got l={l}")
    p = HyperPoint(ChartId.U1, t, 0.0, HALF_PI, 0.0, HALF_PI, 0.0)
    coefficients = np.zeros(3)
    for term in edge_fuchs_terms():
        if any(term.alpha):
            continue
        a = term.coefficient(p)
        if term.base_order == 2:
            coefficients[2] += a * sphere_eigenvalue(l)
        else:
            coefficients[2 - term.j] += a
    return coefficients


def conormal_symbol(w: complex, l: int, t: float = 1.0) -> complex:
    """σ_c(w) on the degree-l harmonics, (1/2t²)(−w² + w + l(l+1))"""
    return np.polyval(conormal_polynomial(l, t), w)


@dataclass(frozen=True)
class ConormalSector:
    l: int
    roots: Tuple[float, float]


@dataclass(frozen=True)
class ConormalSpectrum:
    """Non-invertibility points of σ_c, per spherical-harmonic sector"""

    t: float
    sectors: Tuple[ConormalSector, ...]

    def union(self) -> List[int]:
        return sorted({int(round(root)) for sector in self.sectors for root in sector.roots})

    def max_nonintegrality(self) -> float:
        roots = np.array([root for sector in self.sectors for root in sector.roots])
        return float(np.max(np.abs(roots - np.round(roots)))) if roots.size else 0.0


def conormal_spectrum(l_max: int, t: float = 1.0) -> ConormalSpectrum:
    """Roots of σ_c per sector l ≤ l_max"""
    if l_max < 0:
        raise ValueError(f"l_max must be nonnegative, got {l_max}")
    sectors = []
    for l in range(l_max + 1):
        roots = np.roots(conormal_polynomial(l, t))
        if np.max(np.abs(roots.imag)) > 0.0:
            logger.warning(f"Conormal roots for l={l} are not real: {roots}")
        low, high = sorted(float(root) for root in roots.real)
        sectors.append(ConormalSector(l, (low, high)))
    return ConormalSpectrum(t, tuple(sectors))


@dataclass(frozen=True)
class EllipticityGrid:
    """Tensor grid over (t, r, θ1, θ2) with one seeded unit covector per point"""

    name: str
    points_per_axis: int
    t_range: Tuple[float, float] = (0.5, 2.0)
    r_margin: float = 1e-3
    theta_margin: float = 0.05
    zero_covectors: bool = False

    def axes(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        n = self.points_per_axis
        theta = np.linspace(self.theta_margin, np.pi - self.theta_margin, n)
        return (
            np.linspace(*self.t_range, n),
            np.linspace(self.r_margin, HALF_PI - self.r_margin, n),
            theta,
            theta,
        )


GRID_PRESETS: Dict[str, EllipticityGrid] = {
    "default": EllipticityGrid("default", 10),
    "smoke": EllipticityGrid("smoke", 4),
    "fine": EllipticityGrid("fine", 14),
    "null-covector": EllipticityGrid("null-covector", 4, zero_covectors=True),
}


def grid_preset(name: str) -> EllipticityGrid:
    try:
        return GRID_PRESETS[name]
    except KeyError:
        raise ValueError(f"Unknown grid preset {name!r}; choose from {sorted(GRID_PRESETS)}")


@dataclass(frozen=True)
class EllipticityReport:
    """Sampled and certified minima of σ_ψ and σ̃_ψ over a grid"""

    grid: str
    points: int
    r0_points: int
    min_sigma_psi: float
    certified_min_sigma_psi: float
    min_sigma_psi_tilde: float
    certified_min_sigma_psi_tilde: float
    threshold: float
    degenerate: bool = False

    @property
    def passed(self) -> bool:
        return not self.degenerate and min(
            self.min_sigma_psi, self.min_sigma_psi_tilde
        ) > self.threshold


def check_ellipticity(
    grid: EllipticityGrid, rng: np.random.Generator, threshold: Optional[float] = None
) -> EllipticityReport:
    """
    Minimum of σ_ψ and σ̃_ψ over the grid on unit covectors

    σ̃_ψ is also evaluated on the r = 0 slice. With ``zero_covectors`` the report is marked
    degenerate instead of failed.
    """
    threshold = settings.positivity_threshold if threshold is None else threshold
    t, r, theta1, theta2 = (a.ravel() for a in np.meshgrid(*grid.axes(), indexing="ij"))
    count = t.size
    r0 = np.meshgrid(grid.axes()[0], grid.axes()[2], grid.axes()[3], indexing="ij")
    r0_t, r0_theta1, r0_theta2 = (a.ravel() for a in r0)

    def covectors(n: int) -> np.ndarray:
        if grid.zero_covectors:
            return np.zeros((n, len(COVARIABLES)))
        draws = rng.standard_normal((n, len(COVARIABLES)))
        return draws / np.linalg.norm(draws, axis=1, keepdims=True)

    psi_w = _psi_weights(t, r, theta1, theta2, compressed=False)
    tilde_w = np.concatenate(
        [
            _psi_weights(t, r, theta1, theta2, compressed=True),
            _psi_weights(r0_t, np.zeros_like(r0_t), r0_theta1, r0_theta2, compressed=True),
        ]
    )
    psi = np.sum(psi_w * covectors(count) ** 2, axis=1)
    tilde = np.sum(tilde_w * covectors(tilde_w.shape[0]) ** 2, axis=1)

    report = EllipticityReport(
        grid=grid.name,
        points=count,
        r0_points=r0_t.size,
        min_sigma_psi=float(psi.min()),
        certified_min_sigma_psi=float(psi_w.min()),
        min_sigma_psi_tilde=float(tilde.min()),
        certified_min_sigma_psi_tilde=float(tilde_w.min()),
        threshold=threshold,
        degenerate=grid.zero_covectors,
    )
    if report.degenerate:
        logger.warning(f"Grid {grid.name} uses zero covectors; positivity is not tested")
    logger.info(
        f"Ellipticity on {grid.name}: min σ_ψ={report.min_sigma_psi:.3e}, "
        f"min σ̃_ψ={report.min_sigma_psi_tilde:.3e}"
    )
    return report
