"""Shared fixtures"""

import numpy as np
import pytest

from edgecalc.charts import ChartId, HyperPoint
from edgecalc.schemas import CheckRecord, CheckStatus, Command, Report, RunConfig
from edgecalc.symbols import EdgeSymbolParams


@pytest.fixture
def rng():
    """Seeded generator"""
    return np.random.default_rng(42)


@pytest.fixture
def interior_point():
    """Generic interior point of chart U1"""
    return HyperPoint(ChartId.U1, 1.3, 0.6, 1.1, 0.4, 2.0, 5.1)


@pytest.fixture
def edge_params():
    """Edge point with nonzero covariables, C = −(1.2·0.7)² − 0.3² − 0.5²/sin²(1.1)"""
    return EdgeSymbolParams(t=1.2, theta2=1.1, phi2=0.4, tau=0.7, Theta2=0.3, Phi2=0.5)


@pytest.fixture
def sample_report():
    """Small report with one record of every status"""
    config = RunConfig(command=Command.SYMBOLS, seed=7)
    records = [
        CheckRecord(
            command="symbols", name="b.check", status=CheckStatus.PASS, value=1e-13, tolerance=1e-12
        ),
        CheckRecord(
            command="symbols", name="a.check", status=CheckStatus.FAIL, value=0.5, tolerance=0.1
        ),
        CheckRecord(
            command="symbols",
            name="c.check",
            status=CheckStatus.WARNING,
            value=float("inf"),
            detail="reported, not asserted",
        ),
        CheckRecord(command="symbols", name="d.check", status=CheckStatus.DEGENERATE),
    ]
    return Report.assemble(config, records, wall_time=0.25)


@pytest.fixture(autouse=True)
def _no_env_seed(monkeypatch):
    """Keep EDGECALC_SEED from the developer's shell out of the tests"""
    monkeypatch.delenv("EDGECALC_SEED", raising=False)
