"""
Coefficient functions of the helium Hamiltonian near an edge

h(r) = 1 + 2r tan r − 2r cot r multiplies the first-order (−r∂r) term of the
Laplace-Beltrami operator on S^5; v is the smooth factor of the Coulomb potential,
V = t⁻¹ r⁻¹ v. Both have removable singularities at r = 0, where they are evaluated
by degree-6 Taylor polynomials.
"""

from typing import Optional

import numpy as np
from numpy.polynomial import polynomial

from edgecalc.charts import HALF_PI, CartesianPoint, ChartId, angular_overlap
from edgecalc.config import settings
from edgecalc.exceptions import CoalescenceOverlap, OnSingularSet, OutOfDomain

# Taylor coefficients in powers of r
_H_SERIES = np.array([-1.0, 0.0, 8.0 / 3.0, 0.0, 32.0 / 45.0, 0.0, 256.0 / 945.0])
_R_OVER_SIN_SERIES = np.array([1.0, 0.0, 1.0 / 6.0, 0.0, 7.0 / 360.0, 0.0, 31.0 / 15120.0])

SQRT2 = np.sqrt(2.0)


def _check_axial(r: float) -> None:
    if not 0.0 <= r < HALF_PI:
        raise OutOfDomain(f"Axial variable r={r} outside [0, π/2)")


def r_over_sin(r: float) -> float:
    """r / sin r, continuous at r = 0"""
    if r < settings.series_threshold:
        return float(polynomial.polyval(r, _R_OVER_SIN_SERIES))
    return float(r / np.sin(r))


def coeff_h(r: float) -> float:
    """h(r) = 1 + 2r tan r − 2r cot r on [0, π/2); h(0) = −1"""
    _check_axial(r)
    if r < settings.series_threshold:
        return float(polynomial.polyval(r, _H_SERIES))
    return float(1.0 + 2.0 * r * np.tan(r) - 2.0 * r / np.tan(r))


def coeff_v(r: float, theta1: float, phi1: float, theta2: float, phi2: float) -> float:
    """
    Smooth potential coefficient v in chart U1 (and, by the electron swap, U2)

    Raises:
        OutOfDomain: r outside [0, π/2)
        CoalescenceOverlap: the point lies on the electron-electron edge
    """
    _check_axial(r)
    radicand = 1.0 - np.sin(2.0 * r) * angular_overlap(theta1, phi1, theta2, phi2)
    if radicand <= settings.degenerate_tol:
        raise CoalescenceOverlap(f"1 − sin(2r)κ = {radicand:.3e} at r={r}")
    return float(-2.0 * r_over_sin(r) - 2.0 * r / np.cos(r) + r / np.sqrt(radicand))


def coeff_v_chart(
    chart: ChartId, r: float, theta1: float, phi1: float, theta2: float, phi2: float
) -> float:
    """
    t·r·V expressed in the coordinates of the given chart

    In U3 the axial variable measures the electron-electron edge, so the nuclear
    attraction terms carry the radicands 1 ± sin(2r)κ instead.
    """
    if chart is not ChartId.U3:
        return coeff_v(r, theta1, phi1, theta2, phi2)
    _check_axial(r)
    s_kappa = np.sin(2.0 * r) * angular_overlap(theta1, phi1, theta2, phi2)
    plus, minus = 1.0 + s_kappa, 1.0 - s_kappa
    if min(plus, minus) <= settings.degenerate_tol:
        raise OnSingularSet(f"Electron-nucleus edge inside u3 at r={r}")
    return float(
        -2.0 * SQRT2 * r / np.sqrt(plus)
        - 2.0 * SQRT2 * r / np.sqrt(minus)
        + r_over_sin(r) / SQRT2
    )


def coulomb_potential(x: CartesianPoint, tol: Optional[float] = None) -> float:
    """
    V(x) = −2/|x1| − 2/|x2| + 1/|x1 − x2|

    Raises:
        OnSingularSet: any interparticle distance below tol
    """
    tol = settings.degenerate_tol if tol is None else tol
    d1 = np.linalg.norm(x.electron1)
    d2 = np.linalg.norm(x.electron2)
    d12 = np.linalg.norm(x.electron1 - x.electron2)
    if min(d1, d2, d12) < tol:
        raise OnSingularSet(f"Distances ({d1:.3e}, {d2:.3e}, {d12:.3e}) touch a singular set")
    return float(-2.0 / d1 - 2.0 / d2 + 1.0 / d12)


def series_branch_gap(r: Optional[float] = None) -> float:
    """Largest disagreement between the Taylor and direct forms of h and r/sin r at r"""
    r = settings.series_threshold if r is None else r
    _check_axial(r)
    h_direct = 1.0 + 2.0 * r * np.tan(r) - 2.0 * r / np.tan(r)
    return float(
        max(
            abs(polynomial.polyval(r, _H_SERIES) - h_direct),
            abs(polynomial.polyval(r, _R_OVER_SIN_SERIES) - r / np.sin(r)),
        )
    )
