"""Command-line front end: point reports, sweeps, the mean-speed figure, and
the series-vs-quadrature validation gate.

Exit codes: 0 ok, 1 validation failure, 2 usage error, 3 numerical
non-convergence.  All numeric output uses 17 significant digits so repeated
runs are byte-identical and every cell round-trips through float parsing.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import core, oracle
from .config import NumericsConfig
from .errors import (ConvergenceError, DivergenceError, DomainError,
                     MassParseError, RegimeError)
from .oracle import QuadratureConfig
from .specfun import SeriesTolerance
from .units import SI, GasParameters, parse_mass, reduce

SWEEP_COLUMNS = ("index", "T_K", "x", "n_per_m3", "u_J_per_m3", "vbar_m_per_s",
                 "R_W_per_m2", "R_naive_W_per_m2", "method_flags")
POINT_COLUMNS = ("mass_kg",) + SWEEP_COLUMNS[1:]
FIGURE_COLUMNS = ("x", "kT_over_mc2", "vbar_over_c", "nonrel_approx")

VALIDATE_GRID = (0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0)
VALIDATE_LIMIT = 1e-7

_NONREL_MIN_X = 8.0 / math.pi


@dataclass(frozen=True)
class SweepSpec:
    """Grid over temperature (K) or the reduced variable x."""

    variable: str
    minimum: float
    maximum: float
    points: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.variable not in ("temperature", "x"):
            raise DomainError(f"sweep variable must be 'temperature' or 'x', got {self.variable!r}")
        if self.spacing not in ("linear", "log"):
            raise DomainError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if not (math.isfinite(self.minimum) and self.minimum > 0):
            raise DomainError(f"sweep minimum must be finite and > 0, got {self.minimum!r}")
        if not (math.isfinite(self.maximum) and self.maximum > self.minimum):
            raise DomainError("sweep needs minimum < maximum")
        if self.points < 2:
            raise DomainError(f"sweep needs at least 2 points, got {self.points}")

    def grid(self) -> list[float]:
        n = self.points
        if self.spacing == "log":
            lo, hi = math.log(self.minimum), math.log(self.maximum)
            values = [math.exp(lo + i * (hi - lo) / (n - 1)) for i in range(n)]
        else:
            values = [self.minimum + i * (self.maximum - self.minimum) / (n - 1)
                      for i in range(n)]
        values[0] = self.minimum
        values[-1] = self.maximum
        return values


def _fmt(value: float) -> str:
    return f"{value:.16e}"


def _method_flags(report: core.RadiometryReport) -> str:
    order = ("n", "u", "v", "R", "R_naive")
    return ";".join(f"{key}:{report.methods[key]}" for key in order)


def _report_cells(report: core.RadiometryReport) -> list[str]:
    return [
        _fmt(report.params.temperature),
        _fmt(report.x),
        _fmt(report.number_density),
        _fmt(report.energy_density),
        _fmt(report.mean_speed),
        _fmt(report.radiance),
        _fmt(report.radiance_naive),
        _method_flags(report),
    ]


def _write_output(text: str, path: str | None) -> None:
    # The full text is assembled before this call, so a failure during
    # evaluation can never leave a partial file behind.
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _numerics_from_args(args: argparse.Namespace) -> NumericsConfig:
    return NumericsConfig(
        series=SeriesTolerance(rel_tol=args.series_tol),
        quadrature=QuadratureConfig(rel_tol=args.quad_tol),
        x_switch=args.x_switch,
    )


def _params_from_args(args: argparse.Namespace) -> GasParameters:
    return GasParameters(mass=parse_mass(args.mass), temperature=args.temp,
                         degeneracy=args.g)


# ---------------------------------------------------------------------------
# point
# ---------------------------------------------------------------------------

def _render_point_text(report: core.RadiometryReport) -> str:
    lines = [
        f"mass        = {_fmt(report.params.mass)} kg",
        f"temperature = {_fmt(report.params.temperature)} K",
        f"degeneracy  = {_fmt(report.params.degeneracy)}",
        f"x = mc^2/kT = {_fmt(report.x)}",
        f"N/V     = {_fmt(report.number_density)} m^-3  [{report.methods['n']}]",
        f"U/V     = {_fmt(report.energy_density)} J/m^3  [{report.methods['u']}]",
        f"vbar    = {_fmt(report.mean_speed)} m/s  [{report.methods['v']}]",
        f"R       = {_fmt(report.radiance)} W/m^2  [{report.methods['R']}]",
        f"R_naive = {_fmt(report.radiance_naive)} W/m^2  [{report.methods['R_naive']}]",
    ]
    return "\n".join(lines) + "\n"


def _render_point_json(report: core.RadiometryReport) -> str:
    methods = ",".join(
        f'"{key}":"{report.methods[key]}"' for key in ("n", "u", "v", "R", "R_naive")
    )
    fields = [
        f'"mass_kg":{_fmt(report.params.mass)}',
        f'"T_K":{_fmt(report.params.temperature)}',
        f'"degeneracy":{_fmt(report.params.degeneracy)}',
        f'"x":{_fmt(report.x)}',
        f'"n_per_m3":{_fmt(report.number_density)}',
        f'"u_J_per_m3":{_fmt(report.energy_density)}',
        f'"vbar_m_per_s":{_fmt(report.mean_speed)}',
        f'"R_W_per_m2":{_fmt(report.radiance)}',
        f'"R_naive_W_per_m2":{_fmt(report.radiance_naive)}',
        '"methods":{%s}' % methods,
    ]
    return "{" + ",".join(fields) + "}\n"


def _cmd_point(args: argparse.Namespace) -> int:
    cfg = _numerics_from_args(args)
    params = _params_from_args(args)
    report = core.evaluate(params, cfg)
    if args.format == "text":
        text = _render_point_text(report)
    elif args.format == "json":
        text = _render_point_json(report)
    else:
        cells = [_fmt(params.mass)] + _report_cells(report)
        text = ",".join(POINT_COLUMNS) + "\n" + ",".join(cells) + "\n"
    _write_output(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _numerics_from_args(args)
    mass = parse_mass(args.mass)
    if args.variable == "x":
        if mass <= 0:
            raise DomainError("an x sweep needs a positive mass to fix T = mc^2/(k_B x)")
        spec = SweepSpec("x", args.x_min, args.x_max, args.points, args.spacing)
    else:
        spec = SweepSpec("temperature", args.t_min, args.t_max, args.points, args.spacing)

    rows = [",".join(SWEEP_COLUMNS)]
    for index, value in enumerate(spec.grid()):
        if spec.variable == "x":
            temperature = mass * SI.c * SI.c / (SI.k_B * value)
        else:
            temperature = value
        params = GasParameters(mass=mass, temperature=temperature, degeneracy=args.g)
        report = core.evaluate(params, cfg)
        rows.append(",".join([str(index)] + _report_cells(report)))
    _write_output("\n".join(rows) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# figure mean-speed
# ---------------------------------------------------------------------------

def _figure_rows(spec: SweepSpec, cfg: NumericsConfig) -> list[tuple[float, float, float, float | None]]:
    rows = []
    for x in spec.grid():
        v_hat, _ = core._v_hat(x, cfg)
        approx = math.sqrt(8.0 / (math.pi * x)) if x > _NONREL_MIN_X else None
        rows.append((x, 1.0 / x, v_hat, approx))
    return rows


def _figure_csv(rows) -> str:
    lines = [",".join(FIGURE_COLUMNS)]
    for x, kt_ratio, v_hat, approx in rows:
        cell = "" if approx is None else _fmt(approx)
        lines.append(f"{_fmt(x)},{_fmt(kt_ratio)},{_fmt(v_hat)},{cell}")
    return "\n".join(lines) + "\n"


def _figure_svg(rows) -> str:
    # Mean speed over c against kT/mc^2 on a log abscissa; the dashed line is
    # the nonrelativistic asymptote sqrt(8 kT / pi m c^2).
    width, height = 800, 500
    left, right, top, bottom = 70, 20, 20, 60
    ratios = [r[1] for r in rows]
    lo = math.log10(min(ratios))
    hi = math.log10(max(ratios))

    def px(ratio: float) -> float:
        return left + (math.log10(ratio) - lo) / (hi - lo) * (width - left - right)

    def py(v: float) -> float:
        return height - bottom - v / 1.05 * (height - top - bottom)

    def polyline(points, style) -> str:
        coords = " ".join(f"{px(r):.2f},{py(v):.2f}" for r, v in points)
        return f'<polyline fill="none" {style} points="{coords}"/>'

    curve = sorted(((r[1], r[2]) for r in rows))
    asymptote = sorted(((r[1], r[3]) for r in rows if r[3] is not None))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect x="{left}" y="{top}" width="{width - left - right}" '
        f'height="{height - top - bottom}" fill="none" stroke="#444"/>',
    ]
    decade = math.ceil(lo)
    while decade <= hi:
        x_px = px(10.0**decade)
        parts.append(f'<line x1="{x_px:.2f}" y1="{top}" x2="{x_px:.2f}" '
                     f'y2="{height - bottom}" stroke="#ddd"/>')
        parts.append(f'<text x="{x_px:.2f}" y="{height - bottom + 20}" '
                     f'text-anchor="middle" font-size="14">1e{decade}</text>')
        decade += 1
    for tick in (0.0, 0.25, 0.5, 0.75, 1.0):
        y_px = py(tick)
        parts.append(f'<line x1="{left}" y1="{y_px:.2f}" x2="{width - right}" '
                     f'y2="{y_px:.2f}" stroke="#ddd"/>')
        parts.append(f'<text x="{left - 8}" y="{y_px + 5:.2f}" text-anchor="end" '
                     f'font-size="14">{tick:g}</text>')
    if asymptote:
        parts.append(polyline(asymptote,
                              'stroke="#d62728" stroke-width="1.5" stroke-dasharray="6 4"'))
    parts.append(polyline(curve, 'stroke="#1f77b4" stroke-width="2"'))
    parts.append(f'<text x="{(left + width - right) / 2:.0f}" y="{height - 14}" '
                 f'text-anchor="middle" font-size="15">kT / mc^2</text>')
    parts.append(f'<text x="18" y="{(top + height - bottom) / 2:.0f}" font-size="15" '
                 f'transform="rotate(-90 18 {(top + height - bottom) / 2:.0f})" '
                 f'text-anchor="middle">mean speed / c</text>')
    parts.append('<text x="690" y="40" text-anchor="end" font-size="13" '
                 'fill="#d62728">dashed: nonrelativistic asymptote</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_figure_mean_speed(args: argparse.Namespace) -> int:
    cfg = _numerics_from_args(args)
    spec = SweepSpec("x", args.x_min, args.x_max, args.points, args.spacing)
    rows = _figure_rows(spec, cfg)
    _write_output(_figure_csv(rows), args.out)
    if args.svg is not None:
        _write_output(_figure_svg(rows), args.svg)
    return 0


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def _cmd_validate(args: argparse.Namespace) -> int:
    cfg = _numerics_from_args(args)
    halved = QuadratureConfig(rel_tol=0.5 * cfg.quadrature.rel_tol,
                              max_depth=cfg.quadrature.max_depth,
                              tail_cutoff=cfg.quadrature.tail_cutoff)
    residuals = {"n_hat": 0.0, "v_hat": 0.0, "u_hat": 0.0, "r_hat": 0.0}
    lines = ["closed-form vs quadrature validation",
             "x grid: " + " ".join(f"{x:g}" for x in VALIDATE_GRID)]
    eq18_line = None
    for x in VALIDATE_GRID:
        quad_values = {
            "n_hat": oracle.quad_number_density(x, cfg.quadrature),
            "v_hat": oracle.quad_mean_speed(x, cfg.quadrature),
            "u_hat": oracle.quad_energy_density(x, cfg.quadrature),
            "r_hat": oracle.quad_radiance(x, cfg.quadrature),
        }
        if x >= cfg.x_switch:
            other = {
                "n_hat": core.n_hat_series(x, cfg.series),
                "v_hat": core.v_hat_series(x, cfg.series),
                "u_hat": core.u_hat_series(x, cfg.series),
                "r_hat": core.r_hat_closed(x),
            }
        else:
            # Below the switch there is no series route; check the quadrature
            # against itself under tolerance halving instead.
            other = {
                "n_hat": oracle.quad_number_density(x, halved),
                "v_hat": oracle.quad_mean_speed(x, halved),
                "u_hat": oracle.quad_energy_density(x, halved),
                "r_hat": oracle.quad_radiance(x, halved),
            }
        for key, reference in quad_values.items():
            residual = abs(other[key] / reference - 1.0)
            residuals[key] = max(residuals[key], residual)
        if x == 50.0:
            eq18 = x * x * math.exp(-x) / (2.0 * math.pi**2)
            eq18_line = (f"x = 50: r_hat / low-temperature asymptote = "
                         f"{quad_values['r_hat'] / eq18:.6f} (expect ~ 1 + 3/x)")
    for key in ("n_hat", "v_hat", "u_hat", "r_hat"):
        lines.append(f"{key:6s} max relative residual = {residuals[key]:.3e}")
    if eq18_line:
        lines.append(eq18_line)
    ok = all(value <= VALIDATE_LIMIT for value in residuals.values())
    lines.append(f"RESULT: {'PASS' if ok else 'FAIL'} (limit {VALIDATE_LIMIT:g})")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _add_numerics_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--series-tol", type=float, default=1e-12,
                        help="relative truncation tolerance of the Bessel sums")
    parser.add_argument("--quad-tol", type=float, default=1e-10,
                        help="relative tolerance of the adaptive quadrature")
    parser.add_argument("--x-switch", type=float, default=0.1,
                        help="below this x the closed forms delegate to quadrature")


def _add_sweep_flags(parser: argparse.ArgumentParser, default_points: int) -> None:
    parser.add_argument("--x-min", type=float, default=0.01)
    parser.add_argument("--x-max", type=float, default=100.0)
    parser.add_argument("--points", type=int, default=default_points)
    parser.add_argument("--spacing", choices=("linear", "log"), default="log")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photongas",
        description="Thermodynamics and radiometry of a blackbody photon gas "
                    "with nonzero photon rest mass.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate one (mass, temperature) state")
    point.add_argument("--mass", required=True,
                       help="photon mass as <number><unit>; units kg, g, eV, meV, "
                            "keV (the eV family means eV/c^2)")
    point.add_argument("--temp", type=float, required=True, help="temperature in K")
    point.add_argument("--g", type=float, default=2.0,
                       help="polarization degeneracy (default 2: the extra "
                            "longitudinal state is assumed unthermalized)")
    point.add_argument("--format", choices=("text", "csv", "json"), default="text")
    point.add_argument("--out", default=None, help="write output to this path")
    _add_numerics_flags(point)
    point.set_defaults(func=_cmd_point)

    sweep = sub.add_parser("sweep", help="tabulate a grid over T or x as CSV")
    sweep.add_argument("--mass", required=True)
    sweep.add_argument("--variable", choices=("x", "temperature"), default="x")
    _add_sweep_flags(sweep, default_points=25)
    sweep.add_argument("--t-min", type=float, default=1.0,
                       help="lowest temperature in K (temperature sweeps)")
    sweep.add_argument("--t-max", type=float, default=1000.0,
                       help="highest temperature in K (temperature sweeps)")
    sweep.add_argument("--g", type=float, default=2.0)
    sweep.add_argument("--out", default=None)
    _add_numerics_flags(sweep)
    sweep.set_defaults(func=_cmd_sweep)

    figure = sub.add_parser("figure", help="reproduce reference figures")
    figure_sub = figure.add_subparsers(dest="figure_name", required=True)
    mean_speed = figure_sub.add_parser(
        "mean-speed",
        help="mean speed over c against kT/mc^2; the default range "
             "kT/mc^2 in [0.01, 100] is a choice, not a published value",
    )
    _add_sweep_flags(mean_speed, default_points=50)
    mean_speed.add_argument("--out", default=None, help="CSV output path")
    mean_speed.add_argument("--svg", default=None, help="also emit an SVG plot")
    _add_numerics_flags(mean_speed)
    mean_speed.set_defaults(func=_cmd_figure_mean_speed)

    validate = sub.add_parser(
        "validate", help="compare closed forms against the quadrature oracle"
    )
    _add_numerics_flags(validate)
    validate.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        code = exc.code
        return 0 if code in (0, None) else int(code)
    try:
        return args.func(args)
    except (MassParseError, DomainError, DivergenceError, RegimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main_entry() -> None:
    raise SystemExit(main())
