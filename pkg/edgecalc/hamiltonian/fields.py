"""Test functions acted on by the Hamiltonian, in Cartesian and hyperspherical form"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from edgecalc.charts import CartesianPoint, HyperPoint, cartesian_partials, to_cartesian
from edgecalc.config import settings
from edgecalc.utils.finite_difference import axis_derivatives, derivative_pair, laplacian

logger = logging.getLogger(__name__)

ArrayLike = Union[CartesianPoint, np.ndarray]


def _as_array(x: ArrayLike) -> np.ndarray:
    return x.as_array() if isinstance(x, CartesianPoint) else np.asarray(x, dtype=float)


@dataclass(frozen=True)
class HyperPartials:
    """Value, gradient and pure second derivatives in (t, r, θ1, φ1, θ2, φ2)"""

    value: float
    gradient: np.ndarray
    second: np.ndarray

    def laplace_x(self, theta1: float) -> float:
        """Δ_X u = ∂²θ1 u + cot θ1 ∂θ1 u + sin⁻²θ1 ∂²φ1 u"""
        return float(
            self.second[2]
            + np.cos(theta1) / np.sin(theta1) * self.gradient[2]
            + self.second[3] / np.sin(theta1) ** 2
        )

    def laplace_y(self, theta2: float) -> float:
        """Δ_Y u, the same operator in (θ2, φ2)"""
        return float(
            self.second[4]
            + np.cos(theta2) / np.sin(theta2) * self.gradient[4]
            + self.second[5] / np.sin(theta2) ** 2
        )


@dataclass(frozen=True)
class ScalarField:
    """
    A C² function on R^6 with optional analytic derivative oracles

    Without oracles, derivatives fall back to 4th-order central differences with step
    ``fd_step``.
    """

    name: str
    value: Callable[[np.ndarray], float]
    gradient: Optional[Callable[[np.ndarray], np.ndarray]] = None
    hessian: Optional[Callable[[np.ndarray], np.ndarray]] = None
    fd_step: float = field(default_factory=lambda: settings.field_fd_step)

    @property
    def analytic(self) -> bool:
        return self.gradient is not None and self.hessian is not None

    def __call__(self, x: ArrayLike) -> float:
        return float(self.value(_as_array(x)))

    def gradient_at(self, x: ArrayLike) -> np.ndarray:
        x = _as_array(x)
        if self.gradient is not None:
            return np.asarray(self.gradient(x), dtype=float)
        return axis_derivatives(self.value, x, self.fd_step)[0]

    def laplacian_at(self, x: ArrayLike) -> float:
        x = _as_array(x)
        if self.hessian is not None:
            return float(np.trace(self.hessian(x)))
        return laplacian(self.value, x, self.fd_step)


@dataclass(frozen=True)
class EdgeField:
    """A function of hyperspherical coordinates with partial derivatives up to order 2"""

    name: str
    value: Callable[[HyperPoint], float]
    partials_oracle: Optional[Callable[[HyperPoint], HyperPartials]] = None
    fd_step: float = field(default_factory=lambda: settings.field_fd_step)

    def __call__(self, p: HyperPoint) -> float:
        return float(self.value(p))

    def partials(self, p: HyperPoint) -> HyperPartials:
        if self.partials_oracle is not None:
            return self.partials_oracle(p)
        coords = p.as_array()
        gradient = np.empty(6)
        second = np.empty(6)
        for index, base in enumerate(coords):
            gradient[index], second[index] = derivative_pair(
                lambda s: self.value(p.with_coordinate(index, s)), base, self.fd_step
            )
        return HyperPartials(self(p), gradient, second)

    @classmethod
    def pullback(cls, u: ScalarField) -> "EdgeField":
        """u ∘ to_cartesian, differentiated by the chain rule when u has analytic oracles"""

        def value(p: HyperPoint) -> float:
            return u(to_cartesian(p))

        if not u.analytic:
            logger.debug(f"Pullback of {u.name} uses finite differences")
            return cls(f"pullback[{u.name}]", value, fd_step=u.fd_step)

        def chain_rule(p: HyperPoint) -> HyperPartials:
            x = to_cartesian(p).as_array()
            first, second = cartesian_partials(p)
            grad_x = np.asarray(u.gradient(x), dtype=float)
            hess_x = np.asarray(u.hessian(x), dtype=float)
            return HyperPartials(
                value=float(u.value(x)),
                gradient=first @ grad_x,
                second=np.einsum("ij,jk,ik->i", first, hess_x, first) + second @ grad_x,
            )

        return cls(f"pullback[{u.name}]", value, chain_rule)

    @classmethod
    def radial(
        cls,
        name: str,
        f: Callable[[float], float],
        df: Callable[[float], float],
        d2f: Callable[[float], float],
    ) -> "EdgeField":
        """u = f(t), independent of r and all angles"""

        def oracle(p: HyperPoint) -> HyperPartials:
            gradient = np.zeros(6)
            second = np.zeros(6)
            gradient[0], second[0] = df(p.t), d2f(p.t)
            return HyperPartials(float(f(p.t)), gradient, second)

        return cls(name, lambda p: float(f(p.t)), oracle)
