"""
Verification suites

Each suite turns one cluster of claims into CheckRecords. Numerical failures never raise:
they become ``fail`` records, unusable inputs become ``degenerate`` and quantities that are
reported but not asserted become ``warning``. report-all fans the suites out over a thread
pool; every suite draws from its own generator seeded with the run seed, so the records do
not depend on scheduling.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import iv, kv

from edgecalc.charts import (
    HALF_PI,
    TWO_PI,
    CartesianPoint,
    ChartId,
    HyperPoint,
    chart_frame,
    edge_distance_ratio,
    electron_distances,
    interparticle_distances,
    metric_closed_form,
    metric_pullback,
    swap_electrons,
    to_cartesian,
    to_hyper,
)
from edgecalc.config import settings
from edgecalc.edge_kernel.bessel import (
    BesselHalfOrder,
    BesselKind,
    bessel_half,
    bessel_ode_residual,
)
from edgecalc.edge_kernel.fredholm import (
    FredholmData,
    exit_symbols,
    fredholm_data,
    fredholm_table,
    index_jumps,
    isomorphism_window,
)
from edgecalc.edge_kernel.membership import (
    LargeRClass,
    analytic_small_r_exponent,
    annihilation_residual,
    membership_check,
    membership_exponent,
    radial_residual,
)
from edgecalc.exceptions import EdgecalcError, TruncationBound
from edgecalc.hamiltonian.catalogue import (
    default_catalogue,
    gaussian,
    radial_profile,
    spherical_harmonic_field,
)
from edgecalc.hamiltonian.coefficients import (
    coeff_h,
    coeff_v_chart,
    coulomb_potential,
    series_branch_gap,
)
from edgecalc.hamiltonian.fields import EdgeField
from edgecalc.hamiltonian.operators import (
    apply_beltrami,
    apply_cartesian,
    apply_corner,
    apply_edge,
    apply_laplacian_hyperspherical,
    check_fuchs_shape,
    radial_reduction,
)
from edgecalc.progress import NoOpProgressCallback, ProgressCallback
from edgecalc.schemas import CheckRecord, CheckStatus, Command, RunConfig
from edgecalc.symbols import (
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
from edgecalc.utils.sampling import interior_points, make_rng, unit_covectors

logger = logging.getLogger(__name__)

METRIC_STEP = 1e-5
METRIC_TOL = 1e-8
SYMMETRY_TOL = 1e-14
CART_EDGE_TOL = 1e-6
EDGE_CORNER_TOL = 1e-9
ODE_TOL = 1e-8
INTEGER_TOL = 1e-12
EXPONENT_TOL = 1e-2

# (l, γ) pairs at least 0.25 away from the membership threshold ½ − l
MEMBERSHIP_PROBES = ((0, 0.0), (0, 0.75), (1, -1.0), (1, 0.0), (2, -2.0), (2, -1.0))


def _bounded(
    command: Command, name: str, value: float, tolerance: float, detail: str = ""
) -> CheckRecord:
    """pass iff value is finite and ≤ tolerance"""
    ok = bool(np.isfinite(value)) and value <= tolerance
    return CheckRecord(
        command=command.value,
        name=name,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        value=float(value),
        tolerance=tolerance,
        detail=detail,
    )


def _positive(
    command: Command, name: str, value: float, threshold: float, detail: str = ""
) -> CheckRecord:
    """pass iff value > threshold"""
    return CheckRecord(
        command=command.value,
        name=name,
        status=CheckStatus.PASS if value > threshold else CheckStatus.FAIL,
        value=float(value),
        tolerance=threshold,
        detail=detail,
    )


def _flag(
    command: Command, name: str, ok: bool, value: float = 0.0, detail: str = ""
) -> CheckRecord:
    return CheckRecord(
        command=command.value,
        name=name,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        value=float(value),
        detail=detail,
    )


def _sector_polynomial(l: int, t: float) -> np.ndarray:
    return np.array([-1.0, 1.0, l * (l + 1)]) / (2.0 * t**2)


def _angle_gap(a: float, b: float) -> float:
    return float(abs((a - b + np.pi) % TWO_PI - np.pi))


def _coordinate_gap(p: HyperPoint, q: HyperPoint) -> float:
    linear = np.abs(p.as_array()[[0, 1, 2, 4]] - q.as_array()[[0, 1, 2, 4]]).max()
    return max(float(linear), _angle_gap(p.phi1, q.phi1), _angle_gap(p.phi2, q.phi2))


class VerificationService:
    """Runs the suites selected by a RunConfig"""

    def __init__(
        self,
        config: RunConfig,
        progress: Optional[ProgressCallback] = None,
        max_workers: Optional[int] = None,
    ):
        self.config = config
        self.progress = progress or NoOpProgressCallback()
        self.max_workers = max_workers or settings.max_workers
        self.table: List[FredholmData] = []

    def _rng(self) -> np.random.Generator:
        return make_rng(self.config.seed)

    def run(self) -> List[CheckRecord]:
        """Records of the configured command"""
        command = self.config.command
        logger.info(f"Running {command.value} (seed={self.config.seed})")
        if command is Command.REPORT_ALL:
            return self.report_all()
        suites: Dict[Command, Callable[[], List[CheckRecord]]] = {
            Command.VERIFY_COORDS: lambda: self.verify_coords(self.config.chart),
            Command.VERIFY_OPERATOR: lambda: self.verify_operator(self.config.chart),
            Command.SYMBOLS: self.symbols,
            Command.ELLIPTICITY: self.ellipticity,
            Command.CONORMAL: self.conormal,
            Command.KERNEL: self.kernel,
            Command.FREDHOLM: self.fredholm,
        }
        records = suites[command]()
        self.progress.update(command.value, 100, "done", records=len(records))
        return records

    # Coordinates and metric

    def verify_coords(self, chart: ChartId) -> List[CheckRecord]:
        cmd = Command.VERIFY_COORDS
        prefix = f"coords.{chart.value}"
        tol = self.config.tol
        points = interior_points(chart, self.config.samples, self._rng())

        round_trip = norm_gap = distance_gap = 0.0
        for p in points:
            x = to_cartesian(p)
            round_trip = max(round_trip, _coordinate_gap(to_hyper(x, chart), p))
            norm_gap = max(norm_gap, abs(x.norm - p.t))
            arr = x.as_array()
            euclidean = (
                np.linalg.norm(arr[:3]),
                np.linalg.norm(arr[3:]),
                np.linalg.norm(arr[:3] - arr[3:]),
            )
            distance_gap = max(
                distance_gap, float(np.max(np.abs(np.subtract(electron_distances(p), euclidean))))
            )

        metric_gap = symmetry_gap = 0.0
        min_eigenvalue = np.inf
        for p in points[:50]:
            closed = metric_closed_form(p).matrix()
            pulled = metric_pullback(p, METRIC_STEP)
            metric_gap = max(metric_gap, float(np.max(np.abs(pulled - closed))))
            symmetry_gap = max(symmetry_gap, float(np.max(np.abs(pulled - pulled.T))))
            min_eigenvalue = min(min_eigenvalue, float(np.linalg.eigvalsh(closed).min()))

        records = [
            _bounded(cmd, f"{prefix}.round_trip", round_trip, tol, f"{len(points)} samples"),
            _bounded(cmd, f"{prefix}.norm_preservation", norm_gap, tol),
            _bounded(cmd, f"{prefix}.distances", distance_gap, tol),
            _bounded(cmd, f"{prefix}.metric_pullback", metric_gap, METRIC_TOL, "step=1e-05"),
            _bounded(cmd, f"{prefix}.metric_symmetry", symmetry_gap, SYMMETRY_TOL),
            _positive(cmd, f"{prefix}.metric_positive", min_eigenvalue, 0.0),
        ]

        # polar-axis point of the chart: θ1 = 0 must be flagged
        polar = CartesianPoint.from_array(
            chart_frame(chart) @ np.array([0.0, 0.0, 0.5, 0.0, 0.0, np.sqrt(3.0) / 2.0])
        )
        flagged = to_hyper(polar, chart).degenerate
        records.append(
            _flag(
                cmd, f"{prefix}.degenerate_flag", "theta1" in flagged, detail=str(sorted(flagged))
            )
        )

        if chart is ChartId.U3:
            ratio = edge_distance_ratio(1.0, 1e-4)
            records.append(
                CheckRecord(
                    command=cmd.value,
                    name=f"{prefix}.edge_distance_ratio",
                    status=CheckStatus.WARNING,
                    value=ratio,
                    detail="|x1 - x2|/(t r) at r=1e-4; reported, not asserted",
                )
            )
        else:
            swap_gap = 0.0
            for p in points:
                q = to_hyper(swap_electrons(to_cartesian(p)), chart)
                expected = HyperPoint(
                    chart, p.t, HALF_PI - p.r, p.theta2, p.phi2, p.theta1, p.phi1
                )
                swap_gap = max(swap_gap, _coordinate_gap(q, expected))
            records.append(_bounded(cmd, f"{prefix}.electron_swap", swap_gap, tol))
        if chart is ChartId.U1:
            # r = 0 in U1: (|x1|, |x2|, |x1 - x2|) = (0, t, t)
            edge = HyperPoint(chart, 1.5, 0.0, 1.0, 2.0, 0.5, 1.0)
            limit = np.abs(np.subtract(interparticle_distances(edge), (0.0, 1.5, 1.5)))
            records.append(_bounded(cmd, f"{prefix}.edge_limit", float(limit.max()), tol))
        return records

    # Operator forms

    def verify_operator(self, chart: ChartId) -> List[CheckRecord]:
        cmd = Command.VERIFY_OPERATOR
        prefix = f"operator.{chart.value}"
        points = interior_points(
            chart, self.config.samples, self._rng(), margin=0.15, min_separation=0.2
        )
        records = []
        skipped = 0

        for u in default_catalogue():
            field = EdgeField.pullback(u)
            cart_edge = edge_corner = 0.0
            for p in points:
                try:
                    cartesian = apply_cartesian(u, to_cartesian(p))
                    edge = apply_edge(field, p)
                    corner = apply_corner(field, p)
                except EdgecalcError as e:
                    logger.debug(f"Skipped {u.name} at {p}: {e}")
                    skipped += 1
                    continue
                cart_edge = max(cart_edge, abs(cartesian - edge))
                edge_corner = max(edge_corner, abs(edge - corner))
            records.append(
                _bounded(cmd, f"{prefix}.{u.name}.cartesian_vs_edge", cart_edge, CART_EDGE_TOL)
            )
            records.append(
                _bounded(cmd, f"{prefix}.{u.name}.edge_vs_corner", edge_corner, EDGE_CORNER_TOL)
            )

        blob = gaussian(0.8, center=(0.2, 0.1, -0.3, 0.1, -0.2, 0.3))
        blob_field = EdgeField.pullback(blob)
        radial = radial_profile()
        constant = radial_profile(lambda t: 1.0, lambda t: 0.0, lambda t: 0.0, "constant")
        harmonic = spherical_harmonic_field(1, 0)
        laplacian_gap = radial_gap = constant_gap = factor_gap = eigen_gap = 0.0
        for p in points:
            x = to_cartesian(p)
            laplacian_gap = max(
                laplacian_gap,
                abs(apply_laplacian_hyperspherical(blob_field, p) - blob.laplacian_at(x)),
            )
            reduced = radial_reduction(
                lambda t: np.exp(-t), lambda t: -np.exp(-t), lambda t: np.exp(-t), p
            )
            radial_gap = max(
                radial_gap,
                abs(apply_edge(radial, p) - reduced),
                abs(apply_corner(radial, p) - reduced),
            )
            potential = coulomb_potential(x)
            constant_gap = max(constant_gap, abs(apply_corner(constant, p) - potential))
            v = coeff_v_chart(chart, p.r, p.theta1, p.phi1, p.theta2, p.phi2)
            factor_gap = max(factor_gap, abs(v - p.t * p.r * potential) / max(1.0, abs(v)))
            beltrami = apply_beltrami(
                harmonic, p.r, p.theta1, p.phi1, p.theta2, p.phi2, t=p.t, chart=chart
            )
            eigen_gap = max(eigen_gap, abs(beltrami + 2.0 * harmonic(p) / np.sin(p.r) ** 2))
        records += [
            _bounded(cmd, f"{prefix}.laplacian_assembly", laplacian_gap, CART_EDGE_TOL),
            _bounded(cmd, f"{prefix}.radial_reduction", radial_gap, EDGE_CORNER_TOL),
            _bounded(cmd, f"{prefix}.constant_field", constant_gap, EDGE_CORNER_TOL),
            _bounded(cmd, f"{prefix}.potential_factorization", factor_gap, self.config.tol),
            _bounded(cmd, f"{prefix}.beltrami_eigenfunction", eigen_gap, CART_EDGE_TOL),
        ]
        if skipped:
            records.append(
                CheckRecord(
                    command=cmd.value,
                    name=f"{prefix}.skipped_samples",
                    status=CheckStatus.DEGENERATE,
                    value=float(skipped),
                )
            )

        if chart is ChartId.U1:
            for entry in check_fuchs_shape():
                records.append(
                    CheckRecord(
                        command=cmd.value,
                        name=f"operator.fuchs_shape.{entry.label}",
                        status=CheckStatus.PASS if entry.ok else CheckStatus.FAIL,
                        value=entry.cauchy_gap,
                        tolerance=1e-6,
                        detail=f"order={entry.order} max|a|={entry.max_abs:.6g}",
                    )
                )
            records += [
                _bounded(cmd, "operator.coefficients.h_at_zero", abs(coeff_h(0.0) + 1.0), 1e-15),
                _bounded(
                    cmd,
                    "operator.coefficients.v_at_zero",
                    abs(coeff_v_chart(chart, 0.0, 1.0, 0.5, 2.0, 1.5) + 2.0),
                    1e-15,
                ),
                _bounded(cmd, "operator.coefficients.series_branch", series_branch_gap(), 1e-12),
            ]
        return records

    # Symbols

    def symbols(self) -> List[CheckRecord]:
        cmd = Command.SYMBOLS
        rng = self._rng()
        points = interior_points(ChartId.U1, self.config.samples, rng, margin=1e-3)
        covectors = unit_covectors(len(points), rng)

        homogeneity = compression = rho_gap = 0.0
        for p, c in zip(points, covectors):
            cov = Covector.from_array(c)
            base = sigma_psi(p, cov)
            for factor in (0.5, 2.0, 3.7):
                scaled = sigma_psi(p, cov.scaled(factor))
                homogeneity = max(homogeneity, abs(scaled - factor**2 * base) / (factor**2 * base))
            tilde = sigma_psi_tilde(p, cov)
            compression = max(
                compression, abs(p.r**2 * sigma_psi(p, cov.compressed(p.r)) - tilde) / tilde
            )
            rho_gap = max(rho_gap, abs(sigma_psi(p, Covector(rho=1.0)) - 0.5 / p.t**2))

        r0 = HyperPoint(ChartId.U1, 1.0, 0.0, HALF_PI, 0.0, 1.0, 0.0)
        tilde_r0 = sigma_psi_tilde(r0, Covector(Theta1=1.0))
        records = [
            _bounded(cmd, "symbols.psi.homogeneity", homogeneity, 1e-12),
            _bounded(cmd, "symbols.psi.compression", compression, 1e-12),
            _bounded(cmd, "symbols.psi.rho_direction", rho_gap, 1e-14),
            _bounded(cmd, "symbols.psi_tilde.r0_value", abs(tilde_r0 - 0.5), 1e-15),
            _bounded(
                cmd, "symbols.psi.zero_covector", abs(sigma_psi(points[0], Covector())), 0.0
            ),
        ]
        records += self._wedge_records(cmd, rng)
        return records

    def _edge_params(self, rng: np.random.Generator, count: int) -> List[EdgeSymbolParams]:
        params = []
        for _ in range(count):
            tau, theta_cov, phi_cov = rng.normal(size=3)
            params.append(
                EdgeSymbolParams(
                    t=float(rng.uniform(0.5, 2.0)),
                    theta2=float(rng.uniform(0.2, np.pi - 0.2)),
                    phi2=float(rng.uniform(0.0, TWO_PI)),
                    tau=float(tau),
                    Theta2=float(theta_cov),
                    Phi2=float(phi_cov),
                )
            )
        return params

    def _wedge_records(self, cmd: Command, rng: np.random.Generator) -> List[CheckRecord]:
        def damped(r: float, theta: float, phi: float) -> float:
            angular = 1.0 + r * np.cos(theta) + r**2 * np.sin(theta) * np.cos(phi)
            return float(np.exp(-r) * angular)

        smooth = ConeField("damped", damped)
        constant = ConeField(
            "constant", lambda r, th, ph: 1.0, lambda r, th, ph: ConePartials(1.0, 0.0, 0.0, 0.0)
        )
        form_gap = constant_gap = tip_gap = odd_max = 0.0
        for params in self._edge_params(rng, self.config.samples):
            r = float(rng.uniform(0.1, 3.0))
            theta = float(rng.uniform(0.2, np.pi - 0.2))
            phi = float(rng.uniform(0.0, TWO_PI))
            footnote = sigma_wedge_apply(params, smooth, r, theta, phi, "footnote")
            for form in ("display", "frozen"):
                other = sigma_wedge_apply(params, smooth, r, theta, phi, form)
                form_gap = max(form_gap, abs(other - footnote) / max(1.0, abs(footnote)))
            constant_gap = max(
                constant_gap,
                abs(
                    sigma_wedge_apply(params, constant, r, theta, phi)
                    + params.C / (2.0 * params.t**2)
                ),
            )
            a = np.sqrt(-params.C)

            # u = e^{−ar}/r, the l = 0 kernel element
            def tip(r, th, ph, a=a):
                e = np.exp(-a * r)
                return ConePartials(
                    e / r,
                    -(1.0 / r**2 + a / r) * e,
                    (2.0 / r**3 + 2.0 * a / r**2 + a**2 / r) * e,
                    0.0,
                )

            tip_field = ConeField("l0_kernel", lambda r, th, ph: tip(r, th, ph).value, tip)
            tip_gap = max(tip_gap, abs(sigma_wedge_apply(params, tip_field, r, theta, phi)))
            odd_max = max(
                [odd_max]
                + [
                    abs(term.value)
                    for term in principal_edge_coefficients(params)
                    if sum(term.alpha) % 2
                ]
            )
        return [
            _bounded(cmd, "symbols.wedge.forms_agree", form_gap, 1e-10),
            _bounded(cmd, "symbols.wedge.constant_field", constant_gap, 1e-12),
            _bounded(cmd, "symbols.wedge.l0_kernel", tip_gap, 1e-9),
            _bounded(cmd, "symbols.wedge.odd_edge_terms", odd_max, 0.0),
        ]

    def ellipticity(self) -> List[CheckRecord]:
        cmd = Command.ELLIPTICITY
        grid = grid_preset(self.config.grid)
        report = check_ellipticity(grid, self._rng())
        prefix = f"ellipticity.{grid.name}"
        detail = f"{report.points} points, {report.r0_points} on r=0"
        sampled = [
            ("sigma_psi_min", report.min_sigma_psi),
            ("sigma_psi_tilde_min", report.min_sigma_psi_tilde),
        ]
        if report.degenerate:
            records = [
                CheckRecord(
                    command=cmd.value,
                    name=f"{prefix}.{name}",
                    status=CheckStatus.DEGENERATE,
                    value=value,
                    tolerance=report.threshold,
                    detail="zero covectors",
                )
                for name, value in sampled
            ]
        else:
            records = [
                _positive(cmd, f"{prefix}.{name}", value, report.threshold, detail)
                for name, value in sampled
            ]
        records += [
            _positive(
                cmd,
                f"{prefix}.certified_sigma_psi_min",
                report.certified_min_sigma_psi,
                report.threshold,
                "smallest diagonal coefficient",
            ),
            _positive(
                cmd,
                f"{prefix}.certified_sigma_psi_tilde_min",
                report.certified_min_sigma_psi_tilde,
                report.threshold,
                "smallest diagonal coefficient, r=0 slice included",
            ),
        ]
        return records

    # Conormal symbol

    def conormal(self) -> List[CheckRecord]:
        cmd = Command.CONORMAL
        l_max = self.config.l_max
        records = []
        for t in (1.0, 1.7):
            spectrum = conormal_spectrum(l_max, t)
            prefix = f"conormal.t{t:g}"
            records.append(
                _bounded(cmd, f"{prefix}.integrality", spectrum.max_nonintegrality(), INTEGER_TOL)
            )
            for sector in spectrum.sectors:
                l = sector.l
                gap = float(np.max(np.abs(np.subtract(sector.roots, (-l, l + 1)))))
                records.append(_bounded(cmd, f"{prefix}.sector.{l:02d}", gap, INTEGER_TOL))
            expected = list(range(-l_max, l_max + 2))
            records.append(
                _flag(
                    cmd,
                    f"{prefix}.union",
                    spectrum.union() == expected,
                    len(spectrum.union()),
                    f"{{{-l_max}..{l_max + 1}}}",
                )
            )
            shape_gap = max(
                float(np.max(np.abs(conormal_polynomial(l, t) - _sector_polynomial(l, t))))
                for l in range(l_max + 1)
            )
            records.append(_bounded(cmd, f"{prefix}.polynomial", shape_gap, 1e-14))
            off_integer = min(
                abs(conormal_symbol(k + 0.5, l, t))
                for l in range(l_max + 1)
                for k in range(-l_max - 1, l_max + 2)
            )
            records.append(_positive(cmd, f"{prefix}.invertible_off_integers", off_integer, 0.0))
        return records

    # Kernel of the principal edge symbol

    def kernel(self) -> List[CheckRecord]:
        cmd = Command.KERNEL
        rng = self._rng()
        l_max = min(self.config.l_max, settings.bessel_l_max)
        records = []

        z_grid = np.logspace(-1.0, 1.0, 25)
        for kind in BesselKind:
            worst = max(
                bessel_ode_residual(BesselHalfOrder(l, kind), float(z))
                for l in range(l_max + 1)
                for z in z_grid
            )
            records.append(
                _bounded(cmd, f"kernel.bessel.{kind.value}.ode_residual", worst, ODE_TOL)
            )

        scale = np.sqrt(2.0 / np.pi)
        closed_forms = {
            BesselKind.K: np.sqrt(0.5 * np.pi) / np.e,
            BesselKind.I_PLUS: scale * np.sinh(1.0),
            BesselKind.I_MINUS: scale * np.cosh(1.0),
        }
        closed = max(
            abs(bessel_half(BesselHalfOrder(0, kind), 1.0) - value)
            for kind, value in closed_forms.items()
        )
        records.append(_bounded(cmd, "kernel.bessel.closed_forms", closed, 1e-15))
        reference = 0.0
        for l in range(l_max + 1):
            for z in z_grid:
                k_ref, i_ref = kv(l + 0.5, z), iv(-(l + 0.5), z)
                reference = max(
                    reference,
                    abs(bessel_half(BesselHalfOrder(l, BesselKind.K), z) / k_ref - 1.0),
                    abs(bessel_half(BesselHalfOrder(l, BesselKind.I_MINUS), z) / i_ref - 1.0),
                )
        records.append(_bounded(cmd, "kernel.bessel.recurrence_vs_reference", reference, 1e-10))

        radii = np.linspace(0.1, 5.0, 12)
        for kind in BesselKind:
            worst = max(
                radial_residual(l, C, float(r), kind)
                for l in range(l_max + 1)
                for C in (-0.25, -1.0, -4.0)
                for r in radii
            )
            records.append(_bounded(cmd, f"kernel.radial.{kind.value}.residual", worst, ODE_TOL))

        for kind in BesselKind:
            for l in range(min(l_max, 3) + 1):
                fitted = membership_exponent(l, kind)
                expected_class = (
                    LargeRClass.DECAYING if kind is BesselKind.K else LargeRClass.GROWING
                )
                gap = abs(fitted.small_r_exponent - analytic_small_r_exponent(l, kind))
                ok = gap <= EXPONENT_TOL and fitted.large_r_class is expected_class
                records.append(
                    CheckRecord(
                        command=cmd.value,
                        name=f"kernel.exponent.{kind.value}.l{l}",
                        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
                        value=fitted.small_r_exponent,
                        tolerance=EXPONENT_TOL,
                        detail=f"expected {analytic_small_r_exponent(l, kind)}, "
                        f"{fitted.large_r_class.value}",
                    )
                )

        for l, gamma in MEMBERSHIP_PROBES:
            decision = membership_check(l, gamma)
            records.append(
                CheckRecord(
                    command=cmd.value,
                    name=f"kernel.membership.l{l}.gamma{gamma:+.2f}",
                    status=CheckStatus.PASS if decision.agrees else CheckStatus.WARNING,
                    value=decision.growth,
                    tolerance=0.1,
                    detail=f"member={decision.member} quadrature={decision.quadrature_member}",
                )
            )

        params = self._edge_params(rng, 5)
        for l in range(min(l_max, 5) + 1):
            worst = 0.0
            for p in params:
                for m in range(-l, l + 1):
                    for r in (0.3, 1.0, 2.5):
                        theta = float(rng.uniform(0.2, np.pi - 0.2))
                        phi = float(rng.uniform(0.0, TWO_PI))
                        worst = max(worst, annihilation_residual(l, m, p, r, theta, phi))
            records.append(_bounded(cmd, f"kernel.annihilation.l{l}", worst, ODE_TOL))

        records += self._exit_records(cmd, rng)
        return records

    def _exit_records(self, cmd: Command, rng: np.random.Generator) -> List[CheckRecord]:
        sigma_e_min = sigma_psi_e_min = np.inf
        for params in self._edge_params(rng, 1000):
            xi = rng.normal(size=3) * rng.uniform(0.0, 3.0)
            symbols = exit_symbols(params, xi)
            sigma_e_min = min(sigma_e_min, symbols.sigma_e)
            if np.any(xi):
                sigma_psi_e_min = min(sigma_psi_e_min, symbols.sigma_psi_e / float(xi @ xi))
        excluded = exit_symbols(EdgeSymbolParams(1.0, HALF_PI, 0.0, 0.0, 0.0, 0.0), np.zeros(3))
        threshold = settings.positivity_threshold
        return [
            _positive(cmd, "kernel.exit.sigma_e_min", sigma_e_min, threshold, "1000 samples"),
            _positive(
                cmd, "kernel.exit.sigma_psi_e_min", sigma_psi_e_min, threshold, "per |xi|^2"
            ),
            CheckRecord(
                command=cmd.value,
                name="kernel.exit.excluded_case",
                status=CheckStatus.WARNING,
                value=excluded.sigma_e,
                detail="tau=Theta2=Phi2=0 gives C=0 and sigma_e(0)=0, outside the hypothesis",
            ),
        ]

    # Fredholm data over the weight line

    def fredholm(self) -> List[CheckRecord]:
        cmd = Command.FREDHOLM
        config = self.config
        try:
            table = fredholm_table(
                config.gamma_min, config.gamma_max, config.gamma_step, config.l_max
            )
        except TruncationBound as e:
            return [_flag(cmd, "fredholm.truncation", False, detail=str(e))]
        self.table = table

        records = []
        for index, row in enumerate(table):
            records.append(
                CheckRecord(
                    command=cmd.value,
                    name=f"fredholm.row.{index:04d}",
                    status=CheckStatus.PASS if row.fredholm_ok else CheckStatus.WARNING,
                    value=float(row.index),
                    detail=(
                        f"gamma={row.gamma!r} dim_ker={row.dim_ker} "
                        f"dim_coker={row.dim_coker} index={row.index}"
                        + ("" if row.fredholm_ok else " excluded")
                    ),
                )
            )

        ok_rows = [row for row in table if row.fredholm_ok]
        window = isomorphism_window(table)
        expected = [row.gamma for row in ok_rows if 0.5 < row.gamma < 1.5]
        records.append(
            _flag(
                cmd,
                "fredholm.isomorphism_window",
                window == expected,
                len(window),
                f"[{min(window)}, {max(window)}]" if window else "empty",
            )
        )
        jumps = index_jumps(table)
        bad_jumps = [jump for jump in jumps if jump.jump != jump.expected]
        records.append(
            _flag(cmd, "fredholm.index_jumps", not bad_jumps, len(bad_jumps), f"{len(jumps)} jumps")
        )
        drops = sum(1 for a, b in zip(ok_rows, ok_rows[1:]) if b.index > a.index)
        records.append(_flag(cmd, "fredholm.index_monotone", drops == 0, drops))

        mismatches = 0
        for row in ok_rows:
            try:
                dual = fredholm_data(2.0 - row.gamma, config.l_max)
            except TruncationBound:
                continue
            mismatches += int(dual.dim_ker != row.dim_coker)
        records.append(_flag(cmd, "fredholm.duality", mismatches == 0, mismatches))
        return records

    def report_all(self) -> List[CheckRecord]:
        """Every suite, coordinates and operator forms in all three charts"""
        jobs: List[Tuple[str, Callable[[], List[CheckRecord]]]] = []
        for chart in ChartId:
            jobs.append((f"verify-coords:{chart.value}", lambda c=chart: self.verify_coords(c)))
            jobs.append((f"verify-operator:{chart.value}", lambda c=chart: self.verify_operator(c)))
        jobs += [
            ("symbols", self.symbols),
            ("ellipticity", self.ellipticity),
            ("conormal", self.conormal),
            ("kernel", self.kernel),
            ("fredholm", self.fredholm),
        ]
        records: List[CheckRecord] = []
        started = time.perf_counter()
        with ThreadPoolExecutor(
            max_workers=self.max_workers, thread_name_prefix="edgecalc-suite"
        ) as executor:
            futures = {executor.submit(job): name for name, job in jobs}
            for done, future in enumerate(as_completed(futures), start=1):
                records.extend(future.result())
                self.progress.update(
                    Command.REPORT_ALL.value,
                    int(100 * done / len(jobs)),
                    f"finished {futures[future]}",
                )
        logger.info(f"report-all ran {len(jobs)} suites in {time.perf_counter() - started:.2f}s")
        return records


def run_suites(
    config: RunConfig, progress: Optional[ProgressCallback] = None
) -> Tuple[List[CheckRecord], Sequence[FredholmData]]:
    """Records of the configured command and the Fredholm table it produced, if any"""
    service = VerificationService(config, progress)
    records = service.run()
    return records, service.table
