"""Symbol hierarchy tests"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgecalc.charts import HALF_PI, ChartId, HyperPoint
from edgecalc.exceptions import DegenerateAngles, NonpositiveArgument
from edgecalc.symbols import (
    GRID_PRESETS,
    ConeField,
    ConePartials,
    Covector,
    EdgeSymbolParams,
    check_ellipticity,
    conormal_polynomial,
    conormal_spectrum,
    conormal_symbol,
    grid_preset,
    principal_edge_coefficients,
    sigma_psi,
    sigma_psi_tilde,
    sigma_wedge_apply,
)

covariable = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False).filter(
    lambda v: v == 0.0 or abs(v) > 1e-6
)


def _damped(r, theta, phi):
    return float(np.exp(-r) * (1.0 + r * np.cos(theta) + r**2 * np.sin(theta) * np.cos(phi)))


def test_sigma_psi_rho_direction(interior_point):
    """σ_ψ(·, ρ=1) = 1/(2t²)"""
    value = sigma_psi(interior_point, Covector(rho=1.0))
    assert value == pytest.approx(0.5 / interior_point.t**2)


def test_sigma_psi_tau_direction(interior_point):
    """σ_ψ(·, τ=1) = ½"""
    assert sigma_psi(interior_point, Covector(tau=1.0)) == pytest.approx(0.5)


def test_sigma_psi_zero_covector(interior_point):
    """σ_ψ vanishes on the zero section"""
    assert sigma_psi(interior_point, Covector()) == 0.0


@given(st.lists(covariable, min_size=6, max_size=6), st.floats(min_value=0.1, max_value=10.0))
@settings(max_examples=100, deadline=None)
def test_sigma_psi_is_homogeneous(values, factor):
    """σ_ψ(p, λc) = λ²σ_ψ(p, c)"""
    p = HyperPoint(ChartId.U1, 1.3, 0.6, 1.1, 0.4, 2.0, 5.1)
    cov = Covector.from_array(values)
    base = sigma_psi(p, cov)
    assert sigma_psi(p, cov.scaled(factor)) == pytest.approx(factor**2 * base, rel=1e-12)


@given(st.lists(covariable, min_size=6, max_size=6))
@settings(max_examples=100, deadline=None)
def test_sigma_psi_positive_off_zero_section(values):
    """Classical ellipticity: σ_ψ > 0 for c ≠ 0"""
    cov = Covector.from_array(values)
    p = HyperPoint(ChartId.U1, 0.8, 0.3, 0.9, 1.0, 2.5, 0.2)
    if cov.norm() > 0:
        assert sigma_psi(p, cov) > 0.0


def test_compressed_symbol_relation(interior_point):
    """σ̃_ψ(c) = r²σ_ψ(ρ/r, τ/r, Θ1, Φ1, Θ2/r, Φ2/r)"""
    cov = Covector(0.3, -0.7, 1.1, 0.2, -0.4, 0.9)
    r = interior_point.r
    expected = r**2 * sigma_psi(interior_point, cov.compressed(r))
    assert sigma_psi_tilde(interior_point, cov) == pytest.approx(expected, rel=1e-12)


def test_compressed_symbol_at_edge():
    """σ̃_ψ stays defined at r = 0, where r²/sin²r → 1"""
    p = HyperPoint(ChartId.U1, 1.0, 0.0, HALF_PI, 0.0, 1.0, 0.0)
    assert sigma_psi_tilde(p, Covector(Theta1=1.0)) == pytest.approx(0.5)
    assert sigma_psi_tilde(p, Covector(rho=1.0)) == pytest.approx(0.5)


def test_sigma_psi_rejects_edge():
    """The uncompressed symbol needs an interior point"""
    p = HyperPoint(ChartId.U1, 1.0, 0.0, HALF_PI, 0.0, 1.0, 0.0)
    with pytest.raises(DegenerateAngles):
        sigma_psi(p, Covector(rho=1.0))


def test_edge_parameter_constant(edge_params):
    """C = −(tτ)² − Θ2² − Φ2²/sin²θ2"""
    expected = -((1.2 * 0.7) ** 2) - 0.3**2 - 0.5**2 / np.sin(1.1) ** 2
    assert edge_params.C == pytest.approx(expected)
    assert not edge_params.is_edge_zero()


def test_edge_parameters_validate():
    """t > 0 and θ2 off the polar axis"""
    with pytest.raises(NonpositiveArgument):
        EdgeSymbolParams(0.0, 1.0, 0.0, 1.0, 0.0, 0.0)
    with pytest.raises(DegenerateAngles):
        EdgeSymbolParams(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)


@pytest.mark.parametrize("form", ["display", "frozen"])
def test_sigma_wedge_forms_agree(edge_params, form):
    """The display and frozen-coefficient forms reproduce the closed form"""
    u = ConeField("damped", _damped)
    for r, theta, phi in [(0.3, 1.0, 0.5), (1.2, 2.2, 4.0), (2.8, 0.6, 3.1)]:
        closed = sigma_wedge_apply(edge_params, u, r, theta, phi, "footnote")
        assert sigma_wedge_apply(edge_params, u, r, theta, phi, form) == pytest.approx(
            closed, rel=1e-10, abs=1e-10
        )


def test_sigma_wedge_on_constant(edge_params):
    """σ_∧1 = −C/(2t²)"""
    one = ConeField("one", lambda r, th, ph: 1.0, lambda r, th, ph: ConePartials(1.0, 0, 0, 0))
    value = sigma_wedge_apply(edge_params, one, 0.7, 1.0, 0.0)
    assert value == pytest.approx(-edge_params.C / (2.0 * edge_params.t**2))


def test_sigma_wedge_annihilates_l0_kernel(edge_params):
    """e^{−ar}/r with a = √(−C) solves σ_∧u = 0"""
    a = np.sqrt(-edge_params.C)

    def partials(r, th, ph):
        e = np.exp(-a * r)
        return ConePartials(
            e / r, -(1.0 / r**2 + a / r) * e, (2.0 / r**3 + 2.0 * a / r**2 + a**2 / r) * e, 0.0
        )

    u = ConeField("l0", lambda r, th, ph: partials(r, th, ph).value, partials)
    for r in (0.2, 1.0, 3.0):
        assert abs(sigma_wedge_apply(edge_params, u, r, 1.0, 0.0)) < 1e-12


def test_sigma_wedge_domain(edge_params):
    """r > 0, θ off the axis, known form"""
    u = ConeField("damped", _damped)
    with pytest.raises(NonpositiveArgument):
        sigma_wedge_apply(edge_params, u, 0.0, 1.0, 0.0)
    with pytest.raises(DegenerateAngles):
        sigma_wedge_apply(edge_params, u, 1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        sigma_wedge_apply(edge_params, u, 1.0, 1.0, 0.0, form="unknown")


def test_odd_edge_terms_vanish_at_edge(edge_params):
    """First-order edge derivatives carry coefficients vanishing at r = 0"""
    odd = [term for term in principal_edge_coefficients(edge_params) if sum(term.alpha) % 2]
    assert odd
    assert all(term.value == 0.0 for term in odd)


@pytest.mark.parametrize("t", [1.0, 1.7])
def test_conormal_polynomial_shape(t):
    """σ_c on the degree-l harmonics is (1/2t²)(−w² + w + l(l+1))"""
    for l in range(6):
        expected = np.array([-1.0, 1.0, l * (l + 1)]) / (2.0 * t**2)
        assert np.allclose(conormal_polynomial(l, t), expected, atol=1e-15)


def test_conormal_roots_are_integers():
    """Sector roots are {−l, l+1}, and their union is {−l_max, …, l_max + 1}"""
    spectrum = conormal_spectrum(10)
    assert spectrum.max_nonintegrality() < 1e-12
    for sector in spectrum.sectors:
        assert sector.roots[0] == pytest.approx(-sector.l, abs=1e-12)
        assert sector.roots[1] == pytest.approx(sector.l + 1, abs=1e-12)
    assert spectrum.union() == list(range(-10, 12))


def test_conormal_invertible_off_integers():
    """σ_c(w) ≠ 0 at half-integers"""
    for l in range(5):
        for k in range(-6, 7):
            assert abs(conormal_symbol(k + 0.5, l)) > 0.0
    assert conormal_symbol(3.0, 2) == pytest.approx(0.0, abs=1e-15)


def test_conormal_rejects_negative_sector():
    """l must be nonnegative"""
    with pytest.raises(ValueError):
        conormal_polynomial(-1, 1.0)


def test_ellipticity_default_grid(rng):
    """Both symbols stay positive on the default grid, r = 0 slice included"""
    report = check_ellipticity(grid_preset("default"), rng)
    assert report.passed
    assert report.points == 10**4
    assert report.r0_points == 10**3
    assert report.min_sigma_psi > 1e-12
    assert report.min_sigma_psi_tilde > 1e-12
    assert report.certified_min_sigma_psi > 1e-12


def test_ellipticity_zero_covectors_are_degenerate(rng):
    """The zero-covector grid is reported degenerate, not failed"""
    report = check_ellipticity(GRID_PRESETS["null-covector"], rng)
    assert report.degenerate
    assert not report.passed
    assert report.min_sigma_psi == 0.0


def test_unknown_grid_preset():
    """Unknown preset names raise ValueError"""
    with pytest.raises(ValueError):
        grid_preset("enormous")
