"""
Hyperspherical charts around the three Coulomb edges

Chart U1 carries the explicit formulas

    x/t = (sin r sin θ1 cos φ1, sin r sin θ1 sin φ1, sin r cos θ1,
           cos r sin θ2 cos φ2, cos r sin θ2 sin φ2, cos r cos θ2)

with t = |x|. Charts U2 and U3 reuse them after an orthogonal pre-transform of R^6:
the electron swap for U2 and the 1/√2-normalized center-of-mass map for U3.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import FrozenSet, Optional, Tuple

import numpy as np
from scipy.linalg import block_diag

from edgecalc.config import settings
from edgecalc.exceptions import DegenerateAngles, InvalidPoint, WrongChart, ZeroPoint

logger = logging.getLogger(__name__)

HALF_PI = 0.5 * np.pi
TWO_PI = 2.0 * np.pi

COORDINATES = ("t", "r", "theta1", "phi1", "theta2", "phi2")


class ChartId(str, Enum):
    """Edge neighbourhoods on S^5"""

    U1 = "u1"  # |x1| = 0
    U2 = "u2"  # |x2| = 0
    U3 = "u3"  # |x1 - x2| = 0


_I3 = np.eye(3)
_O3 = np.zeros((3, 3))
_SWAP = np.block([[_O3, _I3], [_I3, _O3]])
# z = M x; z[:3] vanishes on the electron-electron edge
_CENTER_OF_MASS = np.block([[_I3, -_I3], [_I3, _I3]]) / np.sqrt(2.0)

_FRAMES = {
    ChartId.U1: np.eye(6),
    ChartId.U2: _SWAP,
    ChartId.U3: _CENTER_OF_MASS.T,
}


def chart_frame(chart: ChartId) -> np.ndarray:
    """Orthogonal matrix P with x = P z, where z obeys the U1 formulas"""
    return _FRAMES[chart]


@dataclass(frozen=True)
class CartesianPoint:
    """Point of the two-electron configuration space R^6 (atomic units)"""

    x1: float
    x2: float
    x3: float
    x4: float
    x5: float
    x6: float

    def __post_init__(self):
        if not np.all(np.isfinite(self.as_array())):
            raise InvalidPoint(f"Cartesian coordinates must be finite: {self}")

    @classmethod
    def from_array(cls, values) -> "CartesianPoint":
        arr = np.asarray(values, dtype=float)
        if arr.shape != (6,):
            raise InvalidPoint(f"Expected 6 coordinates, got shape {arr.shape}")
        return cls(*(float(v) for v in arr))

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3, self.x4, self.x5, self.x6])

    @property
    def electron1(self) -> np.ndarray:
        return self.as_array()[:3]

    @property
    def electron2(self) -> np.ndarray:
        return self.as_array()[3:]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))


@dataclass(frozen=True)
class HyperPoint:
    """
    Chart-tagged hyperspherical coordinates (t, r, θ1, φ1, θ2, φ2).

    Boundary values r ∈ {0, π/2} and θ ∈ {0, π} are accepted; they are reported by
    degenerate_loci() rather than rejected, because symbol evaluation needs r = 0.
    """

    chart: ChartId
    t: float
    r: float
    theta1: float
    phi1: float
    theta2: float
    phi2: float
    degenerate: FrozenSet[str] = field(default_factory=frozenset, compare=False)

    def __post_init__(self):
        coords = self.as_array()
        if not np.all(np.isfinite(coords)):
            raise InvalidPoint(f"Hyperspherical coordinates must be finite: {coords}")
        if self.t <= 0:
            raise InvalidPoint(f"Corner radius must be positive, got t={self.t}")
        if not 0.0 <= self.r <= HALF_PI:
            raise InvalidPoint(f"Axial variable r={self.r} outside [0, π/2]")
        for name in ("theta1", "theta2"):
            if not 0.0 <= getattr(self, name) <= np.pi:
                raise InvalidPoint(f"{name}={getattr(self, name)} outside [0, π]")

    @classmethod
    def from_array(cls, chart: ChartId, values) -> "HyperPoint":
        t, r, theta1, phi1, theta2, phi2 = (float(v) for v in values)
        return cls(chart, t, r, theta1, phi1, theta2, phi2)

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.r, self.theta1, self.phi1, self.theta2, self.phi2])

    def with_coordinate(self, index: int, value: float) -> "HyperPoint":
        """Copy with coordinate COORDINATES[index] replaced"""
        return replace(self, **{COORDINATES[index]: float(value)}, degenerate=frozenset())

    def degenerate_loci(self, tol: Optional[float] = None) -> FrozenSet[str]:
        """Names of the chart loci this point lies on, within tol"""
        tol = settings.degenerate_tol if tol is None else tol
        sin_r, cos_r = np.sin(self.r), np.cos(self.r)
        loci = set()
        if sin_r < tol or cos_r < tol:
            loci.add("r")
        if np.sin(self.theta1) < tol:
            loci.add("theta1")
        if np.sin(self.theta2) < tol:
            loci.add("theta2")
        if sin_r * np.sin(self.theta1) < tol:
            loci.add("phi1")
        if cos_r * np.sin(self.theta2) < tol:
            loci.add("phi2")
        return frozenset(loci)

    def is_interior(self, tol: Optional[float] = None) -> bool:
        return not self.degenerate_loci(tol)

    def require_interior(self, tol: Optional[float] = None) -> None:
        loci = self.degenerate_loci(tol)
        if loci:
            raise DegenerateAngles(f"Point on degenerate loci {sorted(loci)}: {self}")


def _wrap_angle(phi: float) -> float:
    phi = float(np.mod(phi, TWO_PI))
    return 0.0 if phi >= TWO_PI else phi


def to_hyper(
    x: CartesianPoint, chart: ChartId, *, tol: Optional[float] = None, strict: bool = False
) -> HyperPoint:
    """
    Hyperspherical coordinates of x in the given chart

    Args:
        x: Point of R^6, not the origin
        chart: Edge neighbourhood; U3 applies the center-of-mass map first
        tol: Degeneracy tolerance (defaults to settings.degenerate_tol)
        strict: Raise DegenerateAngles instead of flagging degenerate loci

    Returns:
        HyperPoint with its degenerate loci recorded in ``degenerate``
    """
    arr = x.as_array()
    t = float(np.linalg.norm(arr))
    if t == 0.0:
        raise ZeroPoint("The origin has no hyperspherical coordinates")

    z = chart_frame(chart).T @ arr
    a, b = z[:3], z[3:]
    r = float(np.arctan2(np.linalg.norm(a), np.linalg.norm(b)))
    theta1 = float(np.arctan2(np.hypot(a[0], a[1]), a[2]))
    theta2 = float(np.arctan2(np.hypot(b[0], b[1]), b[2]))
    phi1 = _wrap_angle(np.arctan2(a[1], a[0]))
    phi2 = _wrap_angle(np.arctan2(b[1], b[0]))

    point = HyperPoint(chart, t, r, theta1, phi1, theta2, phi2)
    loci = point.degenerate_loci(tol)
    if loci:
        if strict:
            raise DegenerateAngles(f"{chart.value}: angles undefined on {sorted(loci)}")
        logger.debug(f"to_hyper flagged degenerate loci {sorted(loci)} in {chart.value}")
        point = replace(point, degenerate=loci)
    return point


def _unit_u1(p: HyperPoint) -> np.ndarray:
    sr, cr = np.sin(p.r), np.cos(p.r)
    return np.array(
        [
            sr * np.sin(p.theta1) * np.cos(p.phi1),
            sr * np.sin(p.theta1) * np.sin(p.phi1),
            sr * np.cos(p.theta1),
            cr * np.sin(p.theta2) * np.cos(p.phi2),
            cr * np.sin(p.theta2) * np.sin(p.phi2),
            cr * np.cos(p.theta2),
        ]
    )


def to_cartesian(p: HyperPoint) -> CartesianPoint:
    """Inverse of to_hyper; the chart pre-transform is undone last"""
    return CartesianPoint.from_array(chart_frame(p.chart) @ (p.t * _unit_u1(p)))


def cartesian_partials(p: HyperPoint) -> Tuple[np.ndarray, np.ndarray]:
    """
    Closed-form derivatives of to_cartesian

    Returns:
        (first, second): 6x6 arrays whose row i is ∂x/∂q_i and ∂²x/∂q_i² for
        q = (t, r, θ1, φ1, θ2, φ2)
    """
    t, sr, cr = p.t, np.sin(p.r), np.cos(p.r)

    def sphere(theta, phi):
        st, ct, sp, cp = np.sin(theta), np.cos(theta), np.sin(phi), np.cos(phi)
        unit = np.array([st * cp, st * sp, ct])
        d_theta = np.array([ct * cp, ct * sp, -st])
        d_phi = np.array([-st * sp, st * cp, 0.0])
        d_phi2 = np.array([-st * cp, -st * sp, 0.0])
        return unit, d_theta, d_phi, -unit, d_phi2

    a, a_th, a_ph, a_thth, a_phph = sphere(p.theta1, p.phi1)
    b, b_th, b_ph, b_thth, b_phph = sphere(p.theta2, p.phi2)
    zero = np.zeros(3)

    first = np.array(
        [
            np.concatenate([sr * a, cr * b]),
            t * np.concatenate([cr * a, -sr * b]),
            t * np.concatenate([sr * a_th, zero]),
            t * np.concatenate([sr * a_ph, zero]),
            t * np.concatenate([zero, cr * b_th]),
            t * np.concatenate([zero, cr * b_ph]),
        ]
    )
    second = np.array(
        [
            np.zeros(6),
            -t * np.concatenate([sr * a, cr * b]),
            t * np.concatenate([sr * a_thth, zero]),
            t * np.concatenate([sr * a_phph, zero]),
            t * np.concatenate([zero, cr * b_thth]),
            t * np.concatenate([zero, cr * b_phph]),
        ]
    )
    frame_t = chart_frame(p.chart).T
    return first @ frame_t, second @ frame_t


def angular_overlap(theta1: float, phi1: float, theta2: float, phi2: float) -> float:
    """κ = cos θ1 cos θ2 + sin θ1 sin θ2 cos(φ1 − φ2), the cosine between the two blocks"""
    return float(
        np.cos(theta1) * np.cos(theta2)
        + np.sin(theta1) * np.sin(theta2) * np.cos(phi1 - phi2)
    )


def interparticle_distances(p: HyperPoint) -> Tuple[float, float, float]:
    """
    Closed-form (|x1|, |x2|, |x1 − x2|) in chart U1

    Raises:
        WrongChart: for U2/U3, use electron_distances()
    """
    if p.chart is not ChartId.U1:
        raise WrongChart(f"Closed-form distances are written for u1, got {p.chart.value}")
    kappa = angular_overlap(p.theta1, p.phi1, p.theta2, p.phi2)
    radicand = max(1.0 - np.sin(2.0 * p.r) * kappa, 0.0)
    return p.t * np.sin(p.r), p.t * np.cos(p.r), p.t * float(np.sqrt(radicand))


def electron_distances(p: HyperPoint) -> Tuple[float, float, float]:
    """(|x1|, |x2|, |x1 − x2|) in any chart, from the U1 formulas and the chart map"""
    if p.chart is ChartId.U1:
        return interparticle_distances(p)
    if p.chart is ChartId.U2:
        d2, d1, d12 = interparticle_distances(replace(p, chart=ChartId.U1))
        return d1, d2, d12
    # U3: x1 = (z_a + z_b)/√2, x2 = (z_b − z_a)/√2 with |z_a| = t sin r, |z_b| = t cos r
    s_kappa = np.sin(2.0 * p.r) * angular_overlap(p.theta1, p.phi1, p.theta2, p.phi2)
    scale = p.t / np.sqrt(2.0)
    return (
        scale * float(np.sqrt(max(1.0 + s_kappa, 0.0))),
        scale * float(np.sqrt(max(1.0 - s_kappa, 0.0))),
        np.sqrt(2.0) * p.t * np.sin(p.r),
    )


def swap_electrons(x: CartesianPoint) -> CartesianPoint:
    """Exchange (x1, x2, x3) with (x4, x5, x6)"""
    return CartesianPoint.from_array(_SWAP @ x.as_array())


def edge_distance_ratio(
    t: float,
    r: float,
    theta1: float = HALF_PI,
    phi1: float = 0.0,
    theta2: float = HALF_PI,
    phi2: float = 0.0,
) -> float:
    """Measured |x1 − x2| / (t r) at a chart-U3 point"""
    x = to_cartesian(HyperPoint(ChartId.U3, t, r, theta1, phi1, theta2, phi2))
    return float(np.linalg.norm(x.electron1 - x.electron2) / (t * r))


@dataclass(frozen=True)
class MetricBlocks:
    """ds² = dt² + t²[dr² + sin²r g_X + cos²r g_Y] split into its blocks"""

    dt2_coeff: float
    dr2_coeff: float
    gX_scale: float
    gY_scale: float
    g_X: np.ndarray
    g_Y: np.ndarray
    degenerate: FrozenSet[str] = frozenset()

    def matrix(self) -> np.ndarray:
        """6x6 metric in coordinate order (t, r, θ1, φ1, θ2, φ2)"""
        return block_diag(
            [[self.dt2_coeff]],
            [[self.dr2_coeff]],
            self.gX_scale * self.g_X,
            self.gY_scale * self.g_Y,
        )

    def is_positive_definite(self) -> bool:
        return bool(np.linalg.eigvalsh(self.matrix()).min() > 0.0)


def metric_closed_form(p: HyperPoint) -> MetricBlocks:
    """Closed-form pulled-back Euclidean metric at p"""
    t2 = p.t**2
    return MetricBlocks(
        dt2_coeff=1.0,
        dr2_coeff=t2,
        gX_scale=t2 * np.sin(p.r) ** 2,
        gY_scale=t2 * np.cos(p.r) ** 2,
        g_X=np.diag([1.0, np.sin(p.theta1) ** 2]),
        g_Y=np.diag([1.0, np.sin(p.theta2) ** 2]),
        degenerate=p.degenerate_loci(),
    )


def _central_jacobian(p: HyperPoint, step: float) -> np.ndarray:
    columns = []
    for index, value in enumerate(p.as_array()):
        forward = to_cartesian(p.with_coordinate(index, value + step)).as_array()
        backward = to_cartesian(p.with_coordinate(index, value - step)).as_array()
        columns.append((forward - backward) / (2.0 * step))
    return np.column_stack(columns)


def metric_pullback(
    p: HyperPoint, step: Optional[float] = None, *, richardson: bool = False
) -> np.ndarray:
    """
    J^T J for the central-difference Jacobian J of to_cartesian at p

    Args:
        p: Interior point
        step: Difference step in [1e-7, 1e-3] (defaults to settings.fd_step)
        richardson: Combine steps h and h/2 to cancel the O(h²) term

    Raises:
        DegenerateAngles: when the stencil leaves the chart interior
    """
    step = settings.fd_step if step is None else step
    if not 1e-7 <= step <= 1e-3:
        raise ValueError(f"Finite-difference step {step} outside [1e-7, 1e-3]")
    if (
        p.r - step <= 0.0
        or p.r + step >= HALF_PI
        or p.theta1 - step <= 0.0
        or p.theta1 + step >= np.pi
        or p.theta2 - step <= 0.0
        or p.theta2 + step >= np.pi
    ):
        raise DegenerateAngles(f"Stencil of width {step} leaves the chart at {p}")

    jacobian = _central_jacobian(p, step)
    if richardson:
        jacobian = (4.0 * _central_jacobian(p, 0.5 * step) - jacobian) / 3.0
    metric = jacobian.T @ jacobian
    return 0.5 * (metric + metric.T)
