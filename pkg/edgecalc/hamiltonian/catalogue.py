"""
Test-field catalogue

Each field stresses a different part of the operator: |x|² the t-derivatives, Gaussians
every second-order term, the mixed polynomial the coupling between the electron blocks,
and solid harmonics times a Gaussian the Δ_X term through their Y_lm dependence.
"""

from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from edgecalc.hamiltonian.fields import EdgeField, ScalarField
from edgecalc.utils.harmonics import real_spherical_harmonic

_EYE = np.eye(6)


def squared_norm() -> ScalarField:
    """u = |x|² = t²; Δu = 12"""
    return ScalarField(
        "squared_norm",
        lambda x: float(x @ x),
        lambda x: 2.0 * x,
        lambda x: 2.0 * _EYE,
    )


def _gaussian_parts(
    x: np.ndarray, alpha: float, center: np.ndarray
) -> Tuple[float, np.ndarray, np.ndarray]:
    shifted = x - center
    g = float(np.exp(-alpha * shifted @ shifted))
    grad = -2.0 * alpha * shifted * g
    hess = (4.0 * alpha**2 * np.outer(shifted, shifted) - 2.0 * alpha * _EYE) * g
    return g, grad, hess


def gaussian(alpha: float = 1.0, center: Optional[Sequence[float]] = None) -> ScalarField:
    """u = exp(−α|x − c|²)"""
    c = np.zeros(6) if center is None else np.asarray(center, dtype=float)
    label = "gaussian" if center is None else "shifted_gaussian"
    return ScalarField(
        f"{label}[alpha={alpha:g}]",
        lambda x: _gaussian_parts(x, alpha, c)[0],
        lambda x: _gaussian_parts(x, alpha, c)[1],
        lambda x: _gaussian_parts(x, alpha, c)[2],
    )


def mixed_polynomial() -> ScalarField:
    """u = x1·x5 + x3²·x4 + x2·x6²"""

    def value(x):
        return float(x[0] * x[4] + x[2] ** 2 * x[3] + x[1] * x[5] ** 2)

    def gradient(x):
        return np.array(
            [x[4], x[5] ** 2, 2.0 * x[2] * x[3], x[2] ** 2, x[0], 2.0 * x[1] * x[5]]
        )

    def hessian(x):
        hess = np.zeros((6, 6))
        hess[0, 4] = hess[4, 0] = 1.0
        hess[1, 5] = hess[5, 1] = 2.0 * x[5]
        hess[2, 2] = 2.0 * x[3]
        hess[2, 3] = hess[3, 2] = 2.0 * x[2]
        hess[5, 5] = 2.0 * x[1]
        return hess

    return ScalarField("mixed_polynomial", value, gradient, hessian)


# Harmonic polynomials of electron 1 proportional to |x1|^l Y_l0
_SOLID_HARMONICS: dict = {
    0: (
        lambda x: 1.0,
        lambda x: np.zeros(6),
        lambda x: np.zeros((6, 6)),
    ),
    1: (
        lambda x: float(x[2]),
        lambda x: _EYE[2].copy(),
        lambda x: np.zeros((6, 6)),
    ),
    2: (
        lambda x: float(2.0 * x[2] ** 2 - x[0] ** 2 - x[1] ** 2),
        lambda x: np.array([-2.0 * x[0], -2.0 * x[1], 4.0 * x[2], 0.0, 0.0, 0.0]),
        lambda x: np.diag([-2.0, -2.0, 4.0, 0.0, 0.0, 0.0]),
    ),
}


def harmonic_gaussian(l: int, alpha: float = 0.5) -> ScalarField:
    """u = P_l(x1, x2, x3)·exp(−α|x|²) with P_l a degree-l harmonic polynomial (l ≤ 2)"""
    if l not in _SOLID_HARMONICS:
        raise ValueError(f"Solid harmonics are catalogued for l ≤ 2, got l={l}")
    p_value, p_grad, p_hess = _SOLID_HARMONICS[l]
    origin = np.zeros(6)

    def value(x):
        return p_value(x) * _gaussian_parts(x, alpha, origin)[0]

    def gradient(x):
        g, g_grad, _ = _gaussian_parts(x, alpha, origin)
        return p_grad(x) * g + p_value(x) * g_grad

    def hessian(x):
        g, g_grad, g_hess = _gaussian_parts(x, alpha, origin)
        cross = np.outer(p_grad(x), g_grad)
        return p_hess(x) * g + cross + cross.T + p_value(x) * g_hess

    return ScalarField(f"harmonic_gaussian[l={l}]", value, gradient, hessian)


def default_catalogue() -> List[ScalarField]:
    """Fields used by the operator-equivalence suite"""
    return [
        squared_norm(),
        gaussian(1.0),
        gaussian(0.7, center=(0.3, -0.2, 0.1, -0.1, 0.25, 0.05)),
        mixed_polynomial(),
        harmonic_gaussian(1),
        harmonic_gaussian(2),
    ]


def radial_profile(
    f: Callable[[float], float] = lambda t: float(np.exp(-t)),
    df: Callable[[float], float] = lambda t: float(-np.exp(-t)),
    d2f: Callable[[float], float] = lambda t: float(np.exp(-t)),
    name: str = "radial[exp(-t)]",
) -> EdgeField:
    """u = f(t), defaulting to e^{−t}"""
    return EdgeField.radial(name, f, df, d2f)


def spherical_harmonic_field(l: int, m: int = 0) -> EdgeField:
    """u = Y_lm(θ1, φ1), independent of t, r, θ2, φ2; derivatives by finite differences"""
    return EdgeField(
        f"Y[{l},{m}](theta1,phi1)",
        lambda p: float(real_spherical_harmonic(l, m, p.theta1, p.phi1)),
    )
