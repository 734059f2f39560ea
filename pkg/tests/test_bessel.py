"""Half-integer order Bessel function tests"""

import numpy as np
import pytest
from scipy.special import iv, kv

from edgecalc.edge_kernel.bessel import (
    BesselHalfOrder,
    BesselKind,
    bessel_half,
    bessel_half_derivatives,
    bessel_ode_residual,
)
from edgecalc.exceptions import NonpositiveArgument, OrderOverflow

Z_GRID = np.logspace(-1.0, 1.0, 15)


def test_k_half_closed_form():
    """K_{1/2}(1) = √(π/2)·e⁻¹ ≈ 0.4610685"""
    value = bessel_half(BesselHalfOrder(0, BesselKind.K), 1.0)
    assert value == pytest.approx(0.4610685044478946, abs=1e-15)


def test_i_half_closed_forms():
    """I_{±1/2}(z) = √(2/πz)·(sinh z, cosh z)"""
    z = 0.8
    scale = np.sqrt(2.0 / (np.pi * z))
    assert bessel_half(BesselHalfOrder(0, BesselKind.I_PLUS), z) == pytest.approx(
        scale * np.sinh(z), rel=1e-14
    )
    assert bessel_half(BesselHalfOrder(0, BesselKind.I_MINUS), z) == pytest.approx(
        scale * np.cosh(z), rel=1e-14
    )


def test_order_property():
    """I_minus carries the negative order"""
    assert BesselHalfOrder(2, BesselKind.I_MINUS).order == -2.5
    assert BesselHalfOrder(2, BesselKind.K).order == 2.5


@pytest.mark.parametrize("l", range(11))
def test_recurrence_matches_scipy(l):
    """Upward K and I_minus ladders agree with scipy.special"""
    for z in Z_GRID:
        k = bessel_half(BesselHalfOrder(l, BesselKind.K), z)
        i_minus = bessel_half(BesselHalfOrder(l, BesselKind.I_MINUS), z)
        assert k == pytest.approx(kv(l + 0.5, z), rel=1e-10)
        assert i_minus == pytest.approx(iv(-(l + 0.5), z), rel=1e-10)


@pytest.mark.parametrize("kind", list(BesselKind))
def test_ode_residuals(kind):
    """z²w″ + zw′ − (z² + ν²)w = 0 to 1e-8 for l ≤ 10 on [0.1, 10]"""
    worst = max(
        bessel_ode_residual(BesselHalfOrder(l, kind), float(z)) for l in range(11) for z in Z_GRID
    )
    assert worst < 1e-8


def test_k_derivative_sign():
    """K decreases: K′_{1/2}(z) = −K_{1/2}(z)(1 + 1/(2z))"""
    z = 1.3
    values = bessel_half_derivatives(BesselHalfOrder(0, BesselKind.K), z)
    assert values.first == pytest.approx(-values.value * (1.0 + 0.5 / z), rel=1e-13)


def test_derivative_against_central_difference():
    """First derivatives agree with a central difference"""
    bessel = BesselHalfOrder(3, BesselKind.I_MINUS)
    z, h = 2.0, 1e-5
    numeric = (bessel_half(bessel, z + h) - bessel_half(bessel, z - h)) / (2.0 * h)
    assert bessel_half_derivatives(bessel, z).first == pytest.approx(numeric, rel=1e-8)


def test_nonpositive_argument():
    """z ≤ 0 raises NonpositiveArgument"""
    with pytest.raises(NonpositiveArgument):
        bessel_half(BesselHalfOrder(0, BesselKind.K), 0.0)


def test_order_overflow():
    """Orders above l_max raise OrderOverflow"""
    with pytest.raises(OrderOverflow):
        bessel_half(BesselHalfOrder(12, BesselKind.K), 1.0, l_max=10)


def test_negative_index_rejected():
    """The index l is nonnegative"""
    with pytest.raises(ValueError):
        BesselHalfOrder(-1, BesselKind.K)
