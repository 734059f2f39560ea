"""Fourth-order central finite-difference stencils"""

from typing import Callable, Tuple

import numpy as np

_OFFSETS = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
_FIRST = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_SECOND = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0


def derivative_pair(func: Callable[[float], float], x: float, step: float) -> Tuple[float, float]:
    """
    First and second derivative of a scalar function of one variable

    Args:
        func: Function to differentiate
        x: Evaluation point
        step: Stencil spacing

    Returns:
        (f'(x), f''(x)), both with O(step⁴) truncation error
    """
    values = np.array([func(x + offset * step) for offset in _OFFSETS])
    return float(_FIRST @ values / step), float(_SECOND @ values / step**2)


def axis_derivatives(
    func: Callable[[np.ndarray], float], x: np.ndarray, step: float
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Gradient and pure second derivatives along every coordinate axis

    Returns:
        (gradient, second) with second[i] = ∂²f/∂x_i²
    """
    x = np.asarray(x, dtype=float)
    gradient = np.empty_like(x)
    second = np.empty_like(x)
    for index in range(x.size):
        unit = np.zeros_like(x)
        unit[index] = 1.0
        gradient[index], second[index] = derivative_pair(lambda s: func(x + s * unit), 0.0, step)
    return gradient, second


def laplacian(func: Callable[[np.ndarray], float], x: np.ndarray, step: float) -> float:
    """Sum of the pure second derivatives"""
    return float(axis_derivatives(func, x, step)[1].sum())
