"""Seeded sampling of chart points and covectors"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from edgecalc.charts import HALF_PI, TWO_PI, ChartId, HyperPoint, electron_distances

logger = logging.getLogger(__name__)


def make_rng(seed: Optional[int]) -> np.random.Generator:
    """Random generator for reproducible sweeps"""
    return np.random.default_rng(seed)


def interior_points(
    chart: ChartId,
    count: int,
    rng: np.random.Generator,
    *,
    t_range: Tuple[float, float] = (0.5, 2.0),
    margin: float = 0.1,
    min_separation: Optional[float] = None,
) -> List[HyperPoint]:
    """
    Uniformly drawn chart-interior points

    Args:
        chart: Edge neighbourhood
        count: Number of points
        rng: Random generator
        t_range: Range of the corner radius
        margin: Distance kept from r ∈ {0, π/2} and θ ∈ {0, π}
        min_separation: If set, redraw points where any interparticle distance divided
            by t falls below this value (keeps Coulomb terms bounded)

    Returns:
        List of HyperPoints
    """
    points: List[HyperPoint] = []
    rejected = 0
    while len(points) < count:
        point = HyperPoint(
            chart,
            float(rng.uniform(*t_range)),
            float(rng.uniform(margin, HALF_PI - margin)),
            float(rng.uniform(margin, np.pi - margin)),
            float(rng.uniform(0.0, TWO_PI)),
            float(rng.uniform(margin, np.pi - margin)),
            float(rng.uniform(0.0, TWO_PI)),
        )
        if min_separation is not None and min(electron_distances(point)) < min_separation * point.t:
            rejected += 1
            continue
        points.append(point)
    if rejected:
        logger.debug(f"Rejected {rejected} samples closer than {min_separation}·t to a singularity")
    return points


def unit_covectors(count: int, rng: np.random.Generator, dimension: int = 6) -> np.ndarray:
    """Rows drawn uniformly from the unit sphere"""
    draws = rng.standard_normal((count, dimension))
    return draws / np.linalg.norm(draws, axis=1, keepdims=True)
