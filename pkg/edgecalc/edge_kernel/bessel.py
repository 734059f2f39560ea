"""
Modified Bessel functions of half-integer order

Orders are indexed by an integer n with ν = n + ½ (I_plus, K) or ν = −(n + ½) (I_minus).
K and I_minus are built from their elementary closed forms by the three-term recurrence
in the direction where it is stable; I_plus comes from scipy.special.iv, since its
upward recurrence loses accuracy.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np
from scipy.special import iv

from edgecalc.config import settings
from edgecalc.exceptions import NonpositiveArgument, OrderOverflow

logger = logging.getLogger(__name__)


class BesselKind(str, Enum):
    """Solution families of the modified Bessel equation"""

    I_PLUS = "I_plus"
    I_MINUS = "I_minus"
    K = "K"


@dataclass(frozen=True)
class BesselHalfOrder:
    """B_{l+½} for K and I_plus, I_{−(l+½)} for I_minus"""

    l: int
    kind: BesselKind

    def __post_init__(self):
        if self.l < 0:
            raise ValueError(f"Bessel index must be nonnegative, got l={self.l}")

    @property
    def order(self) -> float:
        nu = self.l + 0.5
        return -nu if self.kind is BesselKind.I_MINUS else nu


class BesselValues(NamedTuple):
    value: float
    first: float
    second: float


def _k_ladder(n_max: int, z: float) -> np.ndarray:
    """K_{n+½}(z) for n = 0..n_max, by K_{ν+1} = K_{ν−1} + (2ν/z)K_ν"""
    ladder = np.empty(n_max + 1)
    ladder[0] = np.sqrt(0.5 * np.pi / z) * np.exp(-z)
    previous = ladder[0]  # K_{−½} = K_{½}
    for n in range(n_max):
        ladder[n + 1] = previous + (2.0 * n + 1.0) / z * ladder[n]
        previous = ladder[n]
    return ladder


def _i_minus_ladder(n_max: int, z: float) -> np.ndarray:
    """I_{−(n+½)}(z) for n = 0..n_max, by I_{μ−1} = I_{μ+1} + (2μ/z)I_μ"""
    scale = np.sqrt(2.0 / (np.pi * z))
    ladder = np.empty(n_max + 1)
    ladder[0] = scale * np.cosh(z)
    previous = scale * np.sinh(z)  # I_{½}
    for n in range(n_max):
        ladder[n + 1] = previous - (2.0 * n + 1.0) / z * ladder[n]
        previous = ladder[n]
    return ladder


def _check(l: int, z: float, l_max: Optional[int]) -> None:
    l_max = settings.bessel_l_max if l_max is None else l_max
    if z <= 0.0:
        raise NonpositiveArgument(f"Bessel argument must be positive, got z={z}")
    if l > l_max:
        raise OrderOverflow(f"Order l={l} exceeds l_max={l_max}")


def _indexed(kind: BesselKind, indices: np.ndarray, z: float) -> np.ndarray:
    """Values for integer indices n (possibly negative) of the given family"""
    # Negative indices reflect to positive half-integer orders: K_{−ν} = K_ν and
    # I_{−(n+½)} with n < 0 is I_plus of index −n−1.
    if kind is BesselKind.I_PLUS:
        return iv(indices + 0.5, z)
    reflected = np.where(indices < 0, -indices - 1, indices)
    if kind is BesselKind.K:
        return _k_ladder(int(reflected.max()), z)[reflected]
    ladder = _i_minus_ladder(int(max(indices.max(), 0)), z)
    return np.where(indices < 0, iv(reflected + 0.5, z), ladder[np.maximum(indices, 0)])


def bessel_half(bessel: BesselHalfOrder, z: float, l_max: Optional[int] = None) -> float:
    """
    Value of the half-integer order Bessel function at z

    Raises:
        NonpositiveArgument: z ≤ 0
        OrderOverflow: l above l_max (defaults to settings.bessel_l_max)
    """
    _check(bessel.l, z, l_max)
    return float(_indexed(bessel.kind, np.array([bessel.l]), z)[0])


def bessel_half_derivatives(
    bessel: BesselHalfOrder, z: float, l_max: Optional[int] = None
) -> BesselValues:
    """
    Value, first and second z-derivative

    B′ = ±½(B_{ν−1} + B_{ν+1}) and B″ = ¼(B_{ν−2} + 2B_ν + B_{ν+2}), with the minus sign
    for K.
    """
    _check(bessel.l, z, l_max)
    stencil = _indexed(bessel.kind, bessel.l + np.arange(-2, 3), z)
    sign = -1.0 if bessel.kind is BesselKind.K else 1.0
    return BesselValues(
        value=float(stencil[2]),
        first=float(sign * 0.5 * (stencil[1] + stencil[3])),
        second=float(0.25 * (stencil[0] + 2.0 * stencil[2] + stencil[4])),
    )


def bessel_ode_residual(bessel: BesselHalfOrder, z: float, l_max: Optional[int] = None) -> float:
    """
    Scale-relative residual of z²w″ + zw′ − (z² + ν²)w = 0

    The residual is divided by the sum of the magnitudes of its three terms.
    """
    w = bessel_half_derivatives(bessel, z, l_max)
    terms = np.array([z**2 * w.second, z * w.first, -(z**2 + bessel.order**2) * w.value])
    scale = float(np.sum(np.abs(terms)))
    return float(abs(terms.sum()) / scale) if scale > 0.0 else 0.0
