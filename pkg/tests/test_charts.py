"""Hyperspherical chart tests"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgecalc.charts import (
    HALF_PI,
    CartesianPoint,
    ChartId,
    HyperPoint,
    edge_distance_ratio,
    electron_distances,
    interparticle_distances,
    metric_closed_form,
    metric_pullback,
    swap_electrons,
    to_cartesian,
    to_hyper,
)
from edgecalc.exceptions import DegenerateAngles, InvalidPoint, WrongChart, ZeroPoint
from edgecalc.utils.sampling import interior_points

coordinate = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)


def _wrapped_gap(a: float, b: float) -> float:
    return abs((a - b + np.pi) % (2 * np.pi) - np.pi)


@pytest.mark.parametrize("chart", list(ChartId))
def test_round_trip_interior_points(chart, rng):
    """to_hyper inverts to_cartesian away from the chart loci"""
    for p in interior_points(chart, 100, rng):
        q = to_hyper(to_cartesian(p), chart)
        assert q.chart is chart
        assert abs(q.t - p.t) < 1e-12
        assert abs(q.r - p.r) < 1e-12
        assert abs(q.theta1 - p.theta1) < 1e-12
        assert abs(q.theta2 - p.theta2) < 1e-12
        assert _wrapped_gap(q.phi1, p.phi1) < 1e-12
        assert _wrapped_gap(q.phi2, p.phi2) < 1e-12
        assert not q.degenerate


@given(st.lists(coordinate, min_size=6, max_size=6))
@settings(max_examples=200, deadline=None)
def test_cartesian_round_trip(values):
    """to_cartesian(to_hyper(x)) = x for every nonzero x"""
    x = CartesianPoint.from_array(values)
    if x.norm < 1e-3:
        return
    for chart in ChartId:
        back = to_cartesian(to_hyper(x, chart)).as_array()
        assert np.allclose(back, x.as_array(), atol=1e-12 * max(1.0, x.norm))


def test_norm_is_corner_variable(interior_point):
    """|x| = t"""
    assert to_cartesian(interior_point).norm == pytest.approx(interior_point.t, abs=1e-14)


def test_u1_explicit_formula():
    """U1 coordinates reproduce the explicit sin/cos formulas"""
    p = HyperPoint(ChartId.U1, 2.0, 0.3, 0.7, 1.1, 1.9, 4.0)
    x = to_cartesian(p).as_array()
    s, c = np.sin(0.3), np.cos(0.3)
    expected = 2.0 * np.array(
        [
            s * np.sin(0.7) * np.cos(1.1),
            s * np.sin(0.7) * np.sin(1.1),
            s * np.cos(0.7),
            c * np.sin(1.9) * np.cos(4.0),
            c * np.sin(1.9) * np.sin(4.0),
            c * np.cos(1.9),
        ]
    )
    assert np.allclose(x, expected, atol=1e-14)


def test_origin_has_no_coordinates():
    """The origin raises ZeroPoint"""
    with pytest.raises(ZeroPoint):
        to_hyper(CartesianPoint(0, 0, 0, 0, 0, 0), ChartId.U1)


def test_nonfinite_point_rejected():
    """Cartesian points must be finite"""
    with pytest.raises(InvalidPoint):
        CartesianPoint(np.nan, 0, 0, 0, 0, 1)


def test_hyperpoint_invariants():
    """t > 0 and r, θ within their closed ranges"""
    with pytest.raises(InvalidPoint):
        HyperPoint(ChartId.U1, 0.0, 0.1, 1.0, 0.0, 1.0, 0.0)
    with pytest.raises(InvalidPoint):
        HyperPoint(ChartId.U1, 1.0, 2.0, 1.0, 0.0, 1.0, 0.0)
    with pytest.raises(InvalidPoint):
        HyperPoint(ChartId.U1, 1.0, 0.1, -0.1, 0.0, 1.0, 0.0)


def test_polar_axis_is_flagged():
    """θ1 = 0 is flagged by default and raises in strict mode"""
    x = CartesianPoint(0.0, 0.0, 0.5, 0.0, 0.0, np.sqrt(3.0) / 2.0)
    p = to_hyper(x, ChartId.U1)
    assert "theta1" in p.degenerate
    assert "phi1" in p.degenerate
    with pytest.raises(DegenerateAngles):
        to_hyper(x, ChartId.U1, strict=True)


def test_edge_point_flags_axial_locus():
    """x1 = 0 is the edge r = 0 of U1"""
    p = to_hyper(CartesianPoint(0.0, 0.0, 0.0, 0.3, 0.4, 0.0), ChartId.U1)
    assert p.r == 0.0
    assert "r" in p.degenerate
    assert p.t == pytest.approx(0.5)


def test_swap_exchanges_charts():
    """Swapping electrons maps U1 coordinates to U2 coordinates"""
    p = HyperPoint(ChartId.U1, 1.4, 0.5, 1.2, 0.3, 2.2, 4.4)
    x = to_cartesian(p)
    q = to_hyper(swap_electrons(x), ChartId.U2)
    assert np.allclose(q.as_array(), p.as_array(), atol=1e-12)


def test_swap_reflects_axial_variable():
    """Within U1, the swap sends r to π/2 − r and exchanges the angle pairs"""
    p = HyperPoint(ChartId.U1, 1.4, 0.5, 1.2, 0.3, 2.2, 4.4)
    q = to_hyper(swap_electrons(to_cartesian(p)), ChartId.U1)
    assert q.r == pytest.approx(HALF_PI - p.r, abs=1e-12)
    assert q.theta1 == pytest.approx(p.theta2, abs=1e-12)
    assert q.theta2 == pytest.approx(p.theta1, abs=1e-12)


@pytest.mark.parametrize("chart", list(ChartId))
def test_electron_distances_match_euclidean(chart, rng):
    """Closed-form distances agree with the Cartesian ones in every chart"""
    for p in interior_points(chart, 50, rng):
        x = to_cartesian(p)
        expected = (
            np.linalg.norm(x.electron1),
            np.linalg.norm(x.electron2),
            np.linalg.norm(x.electron1 - x.electron2),
        )
        assert np.allclose(electron_distances(p), expected, atol=1e-12)


def test_interparticle_distances_only_in_u1():
    """The closed form is written for U1"""
    with pytest.raises(WrongChart):
        interparticle_distances(HyperPoint(ChartId.U3, 1.0, 0.5, 1.0, 0.0, 1.0, 0.0))


def test_edge_limit_of_distances():
    """At r = 0 in U1 the distances are (0, t, t)"""
    d1, d2, d12 = interparticle_distances(HyperPoint(ChartId.U1, 1.5, 0.0, 1.0, 2.0, 0.5, 1.0))
    assert d1 == 0.0
    assert d2 == pytest.approx(1.5)
    assert d12 == pytest.approx(1.5)


def test_u3_axial_variable_measures_coalescence():
    """|x1 − x2| = √2·t·sin r in U3, so the ratio to t·r tends to √2"""
    assert edge_distance_ratio(1.0, 1e-4) == pytest.approx(np.sqrt(2.0), rel=1e-8)
    assert edge_distance_ratio(2.0, 0.3) == pytest.approx(np.sqrt(2.0) * np.sin(0.3) / 0.3)


@pytest.mark.parametrize("chart", list(ChartId))
def test_metric_pullback_matches_closed_form(chart, rng):
    """Central-difference J^T J agrees with the closed-form metric to 1e-8"""
    for p in interior_points(chart, 20, rng):
        pulled = metric_pullback(p, 1e-5)
        closed = metric_closed_form(p).matrix()
        assert np.max(np.abs(pulled - closed)) < 1e-8
        assert np.array_equal(pulled, pulled.T)


def test_metric_richardson_is_tighter(interior_point):
    """Richardson extrapolation shrinks the truncation error"""
    closed = metric_closed_form(interior_point).matrix()
    plain = np.max(np.abs(metric_pullback(interior_point, 1e-3) - closed))
    refined = np.max(np.abs(metric_pullback(interior_point, 1e-3, richardson=True) - closed))
    assert refined < plain


def test_metric_diagonal_entries(interior_point):
    """diag(1, t², t²sin²r, t²sin²r sin²θ1, t²cos²r, t²cos²r sin²θ2)"""
    p = interior_point
    t2, s2, c2 = p.t**2, np.sin(p.r) ** 2, np.cos(p.r) ** 2
    expected = [
        1.0,
        t2,
        t2 * s2,
        t2 * s2 * np.sin(p.theta1) ** 2,
        t2 * c2,
        t2 * c2 * np.sin(p.theta2) ** 2,
    ]
    blocks = metric_closed_form(p)
    assert np.allclose(np.diag(blocks.matrix()), expected)
    assert blocks.is_positive_definite()


def test_metric_pullback_step_range(interior_point):
    """Steps outside [1e-7, 1e-3] are rejected"""
    with pytest.raises(ValueError):
        metric_pullback(interior_point, 1e-2)


def test_metric_pullback_stencil_leaves_chart():
    """A stencil crossing r = 0 raises DegenerateAngles"""
    p = HyperPoint(ChartId.U1, 1.0, 1e-6, 1.0, 0.0, 1.0, 0.0)
    with pytest.raises(DegenerateAngles):
        metric_pullback(p, 1e-5)
