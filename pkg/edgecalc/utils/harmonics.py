"""Real spherical harmonics on S²"""

import numpy as np
from scipy.special import factorial, lpmv


def real_spherical_harmonic(l: int, m: int, theta, phi):
    """
    Orthonormal real spherical harmonic Y_lm(θ, φ)

    m > 0 selects the cos(mφ) harmonic, m < 0 the sin(|m|φ) harmonic.
    """
    if l < 0 or abs(m) > l:
        raise ValueError(f"Invalid harmonic indices l={l}, m={m}")
    order = abs(m)
    norm = np.sqrt((2 * l + 1) / (4.0 * np.pi) * factorial(l - order) / factorial(l + order))
    legendre = lpmv(order, l, np.cos(theta))
    if m > 0:
        return np.sqrt(2.0) * norm * legendre * np.cos(order * phi)
    if m < 0:
        return np.sqrt(2.0) * norm * legendre * np.sin(order * phi)
    return norm * legendre


def sphere_eigenvalue(l: int) -> float:
    """Eigenvalue of the Laplace-Beltrami operator of S² on degree-l harmonics"""
    return -float(l * (l + 1))
