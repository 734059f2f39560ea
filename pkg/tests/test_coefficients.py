"""Coefficient function tests"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgecalc.charts import HALF_PI, CartesianPoint, ChartId, HyperPoint, to_cartesian
from edgecalc.exceptions import CoalescenceOverlap, OnSingularSet, OutOfDomain
from edgecalc.hamiltonian.coefficients import (
    coeff_h,
    coeff_v,
    coeff_v_chart,
    coulomb_potential,
    r_over_sin,
    series_branch_gap,
)


def test_h_at_zero():
    """h(0) = −1"""
    assert coeff_h(0.0) == -1.0


def test_v_at_zero():
    """v(0, ·) = −2 in U1"""
    assert coeff_v(0.0, 1.0, 0.5, 2.0, 1.5) == -2.0


def test_r_over_sin_at_zero():
    """r/sin r → 1"""
    assert r_over_sin(0.0) == 1.0


@pytest.mark.parametrize("r", [0.01, 0.3, 0.9, 1.4])
def test_h_direct_formula(r):
    """Above the series threshold h is the direct formula"""
    assert coeff_h(r) == pytest.approx(1.0 + 2.0 * r * np.tan(r) - 2.0 * r / np.tan(r), rel=1e-14)


def test_series_and_direct_branches_meet():
    """The Taylor and direct forms agree at the switch-over radius"""
    assert series_branch_gap() < 1e-12
    assert series_branch_gap(5e-4) < 1e-12


@given(st.floats(min_value=0.0, max_value=2e-3))
@settings(max_examples=100, deadline=None)
def test_h_is_continuous_across_threshold(r):
    """h stays within O(r²) of −1 near the edge"""
    assert abs(coeff_h(r) + 1.0) <= 3.0 * r**2 + 1e-15


def test_h_domain():
    """r must lie in [0, π/2)"""
    with pytest.raises(OutOfDomain):
        coeff_h(-0.1)
    with pytest.raises(OutOfDomain):
        coeff_h(HALF_PI)


def test_v_rejects_coalescence():
    """1 − sin(2r)κ = 0 at r = π/4 with aligned angles"""
    with pytest.raises(CoalescenceOverlap):
        coeff_v(0.25 * np.pi, 1.0, 0.5, 1.0, 0.5)


@pytest.mark.parametrize("chart", list(ChartId))
def test_potential_factorization(chart):
    """t·r·V equals the smooth coefficient in every chart"""
    p = HyperPoint(chart, 1.7, 0.45, 1.2, 0.3, 2.1, 4.0)
    v = coeff_v_chart(chart, p.r, p.theta1, p.phi1, p.theta2, p.phi2)
    assert p.t * p.r * coulomb_potential(to_cartesian(p)) == pytest.approx(v, rel=1e-12)


def test_u2_shares_the_u1_coefficient():
    """Chart U2 is U1 after the electron swap"""
    args = (0.45, 1.2, 0.3, 2.1, 4.0)
    assert coeff_v_chart(ChartId.U2, *args) == coeff_v(*args)


def test_u3_rejects_nucleus_edge():
    """The electron-nucleus edge sits at sin(2r)κ = ±1 inside U3"""
    with pytest.raises(OnSingularSet):
        coeff_v_chart(ChartId.U3, 0.25 * np.pi, 1.0, 0.5, 1.0, 0.5)


def test_coulomb_potential_value():
    """V at x1 = (1,0,0), x2 = (0,2,0)"""
    x = CartesianPoint(1.0, 0.0, 0.0, 0.0, 2.0, 0.0)
    assert coulomb_potential(x) == pytest.approx(-2.0 - 1.0 + 1.0 / np.sqrt(5.0))


def test_coulomb_potential_singular_set():
    """Coalescing electrons raise OnSingularSet"""
    with pytest.raises(OnSingularSet):
        coulomb_potential(CartesianPoint(1.0, 0.0, 0.0, 1.0, 0.0, 0.0))
