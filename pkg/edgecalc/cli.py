"""
Command-line frontend for the verification suites

Usage:
    edgecalc verify-coords --chart u1 --samples 100 --seed 42 --tol 1e-10
    edgecalc fredholm --gamma-min -3 --gamma-max 4 --gamma-step 0.05 --l-max 10 \\
        --table-output fredholm.csv
    edgecalc report-all --config run.env --output report.json
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from dotenv import dotenv_values
from pydantic import ValidationError

from edgecalc import __version__
from edgecalc.charts import ChartId
from edgecalc.config import Settings, settings
from edgecalc.exceptions import ConfigError, InvalidReport, ReportWriteError
from edgecalc.progress import ProgressCallback, create_progress_callback
from edgecalc.renderers import csv_renderer, json_renderer
from edgecalc.schemas import Command, Report, ReportFormat, RunConfig
from edgecalc.sentry import capture_exception, init_sentry
from edgecalc.services.verification_service import run_suites
from edgecalc.symbols import GRID_PRESETS
from edgecalc.utils.validation import report_errors

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED_CHECKS = 1
EXIT_CONFIG_ERROR = 2

# config-file keys that differ from RunConfig field names
_KEY_ALIASES = {"output": "output_path", "table_output": "table_path"}
_CONFIG_KEYS = set(RunConfig.model_fields) - {"command"}


def _normalize_key(key: str) -> str:
    key = key.strip().lower().replace("-", "_")
    return _KEY_ALIASES.get(key, key)


def read_config_file(path: Path) -> Dict[str, Any]:
    """
    Read a flat key=value config file

    Raises:
        ConfigError: missing file, unknown key or key without a value
    """
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}")
    values: Dict[str, Any] = {}
    for key, value in dotenv_values(path).items():
        name = _normalize_key(key)
        if name not in _CONFIG_KEYS:
            raise ConfigError(f"Unknown config key '{key}' in {path}")
        if value is None or value == "":
            raise ConfigError(f"Config key '{key}' in {path} has no value")
        values[name] = value
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgecalc",
        description="Numerical checks of the helium Hamiltonian as an edge-degenerate operator",
    )
    parser.add_argument("--version", action="version", version=f"edgecalc {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--chart", type=str.lower, choices=[c.value for c in ChartId])
    common.add_argument("--samples", type=int, help="Seeded samples per check")
    common.add_argument("--seed", type=int, help="Random seed (default 42)")
    common.add_argument("--tol", type=float, help="Round-trip tolerance")
    common.add_argument("--gamma-min", type=float)
    common.add_argument("--gamma-max", type=float)
    common.add_argument("--gamma-step", type=float)
    common.add_argument("--l-max", type=int, help="Highest spherical-harmonic sector")
    common.add_argument("--grid", choices=sorted(GRID_PRESETS), help="Ellipticity grid preset")
    common.add_argument("--output", dest="output_path", type=Path, help="Report path (stdout)")
    common.add_argument("--format", choices=[f.value for f in ReportFormat])
    common.add_argument(
        "--table-output", dest="table_path", type=Path, help="Plot-ready Fredholm table (CSV)"
    )
    common.add_argument("--config", type=Path, help="key=value file overriding the defaults")
    common.add_argument("--log-level", default=None, help="Logging level (default INFO)")
    common.add_argument("--quiet", action="store_true", help="Drop progress updates")

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in Command:
        subparsers.add_parser(command.value, parents=[common])
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge defaults, config file and flags into a RunConfig

    Flags override the file, the file overrides the defaults. EDGECALC_SEED only applies
    when neither sets a seed.

    Raises:
        ConfigError: unreadable file or values RunConfig rejects
    """
    values: Dict[str, Any] = {}
    if args.config is not None:
        values.update(read_config_file(args.config))
    for name in _CONFIG_KEYS:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    if "seed" not in values:
        env_seed = Settings().seed
        if env_seed is not None:
            logger.info(f"Using EDGECALC_SEED={env_seed}")
            values["seed"] = env_seed
    try:
        return RunConfig(command=args.command, **values)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration: {e}") from e


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(f"Cannot write {path}: {e}") from e


def render_report(report: Report, fmt: ReportFormat) -> str:
    if fmt is ReportFormat.CSV:
        return csv_renderer.render(report)
    return json_renderer.render(report)


def run(config: RunConfig, progress: Optional[ProgressCallback] = None) -> Report:
    """
    Run the configured command and write its report

    The report goes to config.output_path, or stdout without one. A fredholm run with a
    table path also writes the plot-ready table.

    Raises:
        InvalidReport: the assembled report violates the report schema
        ReportWriteError: an output path is not writable
    """
    started = time.perf_counter()
    records, table = run_suites(config, progress)
    report = Report.assemble(config, records, time.perf_counter() - started)
    errors = report_errors(json_renderer.render_document(report))
    if errors:
        raise InvalidReport(f"{config.command.value} report is malformed: {'; '.join(errors)}")

    rendered = render_report(report, config.format)
    if config.output_path is None:
        sys.stdout.write(rendered)
    else:
        _write(config.output_path, rendered)
        logger.info(f"Report written to {config.output_path}")

    if config.table_path is not None:
        if table:
            _write(config.table_path, csv_renderer.render_fredholm_table(table))
            logger.info(f"Fredholm table written to {config.table_path} ({len(table)} rows)")
        else:
            logger.warning(f"{config.command.value} produced no Fredholm table; skipping")

    logger.info(
        f"{config.command.value}: {report.summary['total']} checks, "
        f"{report.summary['fail']} failed, {report.wall_time:.2f}s"
    )
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit status"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or settings.log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    init_sentry()

    try:
        config = build_config(args)
        report = run(config, create_progress_callback(quiet=args.quiet))
    except (ConfigError, ReportWriteError) as e:
        logger.error(str(e))
        return EXIT_CONFIG_ERROR
    except Exception as e:
        capture_exception(e, {"command": args.command})
        logger.exception(f"{args.command} aborted: {e}")
        return EXIT_FAILED_CHECKS

    return EXIT_FAILED_CHECKS if report.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
