"""
Pydantic schemas for run configuration and verification reports
"""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from edgecalc.charts import ChartId
from edgecalc.symbols import GRID_PRESETS


class Command(str, Enum):
    """CLI subcommands, one per claim cluster"""

    VERIFY_COORDS = "verify-coords"
    VERIFY_OPERATOR = "verify-operator"
    SYMBOLS = "symbols"
    ELLIPTICITY = "ellipticity"
    CONORMAL = "conormal"
    KERNEL = "kernel"
    FREDHOLM = "fredholm"
    REPORT_ALL = "report-all"


class ReportFormat(str, Enum):
    """Report serialization formats"""

    JSON = "json"
    CSV = "csv"


class CheckStatus(str, Enum):
    """Outcome of a single check"""

    PASS = "pass"
    FAIL = "fail"
    DEGENERATE = "degenerate"
    WARNING = "warning"


class RunConfig(BaseModel):
    """Configuration for a single CLI run"""

    command: Command
    chart: ChartId = Field(ChartId.U1, description="Edge neighbourhood for chart-bound suites")
    samples: int = Field(100, ge=1, description="Seeded samples per check")
    seed: int = Field(42, description="Random seed for reproducible sampling")
    tol: float = Field(1e-10, gt=0, description="Round-trip tolerance")
    gamma_min: float = -3.0
    gamma_max: float = 4.0
    gamma_step: float = Field(0.05, gt=0)
    l_max: int = Field(10, ge=0)
    grid: str = Field("default", description="Ellipticity grid preset")
    output_path: Optional[Path] = None
    table_path: Optional[Path] = Field(None, description="Plot-ready Fredholm table (CSV)")
    format: ReportFormat = ReportFormat.JSON

    @field_validator("grid")
    @classmethod
    def _known_grid(cls, value: str) -> str:
        if value not in GRID_PRESETS:
            raise ValueError(f"Unknown grid preset {value!r}; choose from {sorted(GRID_PRESETS)}")
        return value

    @model_validator(mode="after")
    def _check_gamma_range(self) -> "RunConfig":
        if self.gamma_min >= self.gamma_max:
            raise ValueError(
                f"gamma_min ({self.gamma_min}) must be below gamma_max ({self.gamma_max})"
            )
        return self

    def echo(self) -> Dict[str, Any]:
        """JSON-friendly copy of the configuration"""
        return self.model_dump(mode="json")


class CheckRecord(BaseModel):
    """Result of one verification check"""

    command: str
    name: str
    status: CheckStatus
    value: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""


class Report(BaseModel):
    """Verification report for one run"""

    command: Command
    config: Dict[str, Any]
    records: List[CheckRecord] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)
    wall_time: float = 0.0

    @classmethod
    def assemble(
        cls, config: RunConfig, records: List[CheckRecord], wall_time: float
    ) -> "Report":
        """Sort records by check name and tally the summary counts"""
        ordered = sorted(records, key=lambda record: (record.name, record.command))
        summary = {status.value: 0 for status in CheckStatus}
        for record in ordered:
            summary[record.status.value] += 1
        summary["total"] = len(ordered)
        return cls(
            command=config.command,
            config=config.echo(),
            records=ordered,
            summary=summary,
            wall_time=wall_time,
        )

    @property
    def failed(self) -> bool:
        return self.summary.get(CheckStatus.FAIL.value, 0) > 0
