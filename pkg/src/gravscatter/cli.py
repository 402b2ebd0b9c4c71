"""Command-line front end.

    gravscatter angle-scan   --m-gev 1 --M-gev 10 --E-gev 5 --theta-min 0.1 --n 50 --out scan.csv
    gravscatter energy-scan  --m-gev 1 --M-gev 10 --E-min-gev 1.5 --E-max-gev 100 --theta 1.0
    gravscatter limit-compare --M-gev 1
    gravscatter selftest --seed 7

Exit status: 0 success, 1 physics or flag error, 2 self-test failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import amplitude as amp
from . import cross_section as xs
from .errors import PhysicsError
from .kinematics import build_state, mandelstam_t
from .validation import DEFAULT_SEED, selftest_report

EXIT_OK, EXIT_USAGE, EXIT_SELFTEST = 0, 1, 2

SCAN_COLUMNS = (
    "theta_rad", "E_prime_gev", "t_gev2", "dsigma_full", "dsigma_mott_like",
    "dsigma_rutherford", "dsigma_ultrarel", "interaction_strength",
)
ENERGY_SCAN_COLUMNS = ("E_gev",) + SCAN_COLUMNS

LIMIT_EM_GRID = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5)
LIMIT_BETA_GRID = (1e-2, 1e-1, 0.5, 0.9, 1.0)
LIMIT_THETA_GRID = (math.pi / 6, math.pi / 2, math.pi)
# beta = 1 rows evaluate the full formula at this m/E
MASSLESS_PROXY = 1e-9


class FlagError(PhysicsError):
    pass


@dataclass(frozen=True)
class ScanRequest:
    mode: str
    m: float = 1.0
    M: float = 10.0
    E: float = 5.0
    G: float = amp.NEWTON_G
    g_squared: float = 4.0 * math.pi
    theta_min: float = 0.1
    theta_max: float = math.pi
    n: int = 50
    spacing: str = "uniform_theta"
    E_lo: float | None = None
    E_hi: float | None = None
    theta: float = math.pi / 2
    units: str = "gev"
    output_path: str = "-"
    tolerance: float = 1e-3
    seed: int = DEFAULT_SEED

    @property
    def coupling(self):
        return amp.CouplingConfig(G=self.G, g_squared=self.g_squared)

    @property
    def unit_factor(self):
        return xs.GEV2_TO_MB if self.units == "millibarn" else 1.0


def _fmt(x) -> str:
    return repr(float(x))


def _row(state, req: ScanRequest):
    c = req.coupling
    f = req.unit_factor
    b = state.beta
    return [
        state.theta,
        state.E_prime,
        mandelstam_t(state),
        xs.dsigma(state, c).value * f,
        xs.mott_like_limit(b, state.theta, state.M, c).value * f,
        xs.rutherford_limit(b, state.theta, state.M, c.G).value * f,
        xs.ultrarelativistic_limit(state.E, state.theta, state.M, c).value * f,
        amp.interaction_strength(state, c),
    ]


def _write_csv(req: ScanRequest, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    text = buf.getvalue()
    if req.output_path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(req.output_path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise FlagError(f"--out: cannot write {req.output_path!r}: {exc.strerror}") from None


def _check_physics(req: ScanRequest, need_E=True):
    for flag, value in (("--m-gev", req.m), ("--M-gev", req.M), ("--G", req.G), ("--g2", req.g_squared)):
        if not (math.isfinite(value) and value > 0):
            raise FlagError(f"{flag} must be positive, got {value}")
    if need_E and not req.E > req.m:
        raise FlagError(f"--E-gev must exceed --m-gev, got E={req.E}, m={req.m}")
    if req.units not in ("gev", "millibarn"):
        raise FlagError(f"--units must be gev or millibarn, got {req.units!r}")


def run_angle_scan(req: ScanRequest) -> str:
    """Tabulate every cross-section formula on an angular grid; returns the summary line."""
    _check_physics(req)
    try:
        grid = xs.AngularGrid(req.theta_min, req.theta_max, req.n, req.spacing)
    except (PhysicsError, ValueError) as exc:
        raise FlagError(f"--theta-min/--theta-max/--n/--spacing: {exc}") from None
    rows = [_row(build_state(req.E, req.m, req.M, th), req) for th in grid.nodes()]
    _write_csv(req, SCAN_COLUMNS, rows)
    return f"angle_scan: {len(rows)} rows, theta in [{req.theta_min:.6g}, {req.theta_max:.6g}] rad -> {req.output_path}"


def run_energy_scan(req: ScanRequest) -> str:
    _check_physics(req, need_E=False)
    if req.E_lo is None or req.E_hi is None:
        raise FlagError("--E-min-gev and --E-max-gev are required for energy-scan")
    if not req.m < req.E_lo < req.E_hi:
        raise FlagError(f"need --m-gev < --E-min-gev < --E-max-gev, got {req.m}, {req.E_lo}, {req.E_hi}")
    if not req.n >= 2:
        raise FlagError(f"--n must be at least 2, got {req.n}")
    energies = np.geomspace(req.E_lo, req.E_hi, req.n)
    rows = [[E] + _row(build_state(E, req.m, req.M, req.theta), req) for E in energies]
    _write_csv(req, ENERGY_SCAN_COLUMNS, rows)
    return f"energy_scan: {len(rows)} rows, E in [{req.E_lo:.6g}, {req.E_hi:.6g}] GeV -> {req.output_path}"


def _ratio(a, b):
    return a / b if b != 0.0 else None


def _cell(x):
    return "undefined" if x is None else f"{x:.9g}"


def _band(ratio, in_corner, tol):
    if not in_corner:
        return "-"
    if ratio is None:
        return "undef"
    return "ok" if abs(ratio - 1.0) <= tol else "OUT"


def limit_compare_rows(req: ScanRequest):
    """Ratios full/mott_like, mott_like/rutherford, full/ultrarel on the fixed grid."""
    c = req.coupling
    M = req.M
    rows = []
    for em in LIMIT_EM_GRID:
        E = em * M
        for b in LIMIT_BETA_GRID:
            m = E * MASSLESS_PROXY if b == 1.0 else E * math.sqrt((1.0 - b) * (1.0 + b))
            for th in LIMIT_THETA_GRID:
                full = xs.differential_cross_section(E, m, M, th, c).value
                mott = xs.mott_like_limit(b, th, M, c).value
                ruth = xs.rutherford_limit(b, th, M, c.G).value if b < 1.0 else None
                ultra = xs.ultrarelativistic_limit(E, th, M, c).value
                rows.append({
                    "E_over_M": em, "beta": b, "theta": th,
                    "mott_like": mott * req.unit_factor,
                    "full/mott_like": _ratio(full, mott),
                    "mott_like/rutherford": None if ruth is None else _ratio(mott, ruth),
                    "full/ultrarel": _ratio(full, ultra),
                })
    return rows


def run_limit_compare(req: ScanRequest) -> str:
    """Render the limit table as aligned text; flags ratios outside the band in asymptotic corners."""
    _check_physics(req, need_E=False)
    tol = req.tolerance
    header = (f"{'E/M':>8s} {'beta':>6s} {'theta':>8s} {'mott_like':>14s} "
              f"{'full/mott_like':>14s} {'mott/ruth':>14s} {'full/ultrarel':>14s}  flags")
    lines = [f"limit comparison  M={req.M:.6g} GeV  tolerance={tol:.1e}  units={req.units}", header]
    for r in limit_compare_rows(req):
        flags = "/".join((
            _band(r["full/mott_like"], r["E_over_M"] <= 1e-4, tol),
            _band(r["mott_like/rutherford"], r["beta"] <= 1e-2, tol),
            _band(r["full/ultrarel"], r["beta"] == 1.0, tol),
        ))
        lines.append(
            f"{r['E_over_M']:8.0e} {r['beta']:6.2f} {r['theta']:8.5f} {r['mott_like']:14.6e} "
            f"{_cell(r['full/mott_like']):>14s} {_cell(r['mott_like/rutherford']):>14s} "
            f"{_cell(r['full/ultrarel']):>14s}  {flags}")
    lines.append(f"beta = 1 rows evaluate the full cross-section at m/E = {MASSLESS_PROXY:g}; "
                 "flags: full/mott_like, mott/ruth, full/ultrarel ('-' outside the asymptotic corner)")
    text = "\n".join(lines) + "\n"
    if req.output_path == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(req.output_path, "w", encoding="ascii") as fh:
                fh.write(text)
        except OSError as exc:
            raise FlagError(f"--out: cannot write {req.output_path!r}: {exc.strerror}") from None
    n_out = text.count("OUT")
    return f"limit_compare: {len(lines) - 3} rows, {n_out} outside tolerance"


def run_selftest(seed=DEFAULT_SEED, n_states=1000):
    """Print the invariant-suite report; returns True when every suite passed."""
    report, ok = selftest_report(seed, n_states)
    sys.stdout.write(report)
    return ok


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _physics_flags(p, energy=True):
    p.add_argument("--m-gev", dest="m", type=float, default=1.0, help="light mass (GeV)")
    p.add_argument("--M-gev", dest="M", type=float, default=10.0, help="heavy mass (GeV)")
    if energy:
        p.add_argument("--E-gev", dest="E", type=float, default=5.0, help="incoming energy (GeV)")
    p.add_argument("--G", dest="G", type=float, default=amp.NEWTON_G, help="Newton constant (GeV^-2)")
    p.add_argument("--g2", dest="g_squared", type=float, default=4.0 * math.pi)
    p.add_argument("--units", choices=("gev", "millibarn"), default="gev")
    p.add_argument("--out", dest="output_path", default="-", help="output file ('-' = stdout)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="unused by scans; accepted for uniformity")


def build_parser():
    parser = _Parser(prog="gravscatter", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    angle = sub.add_parser("angle-scan", help="cross-sections on an angular grid (CSV)")
    _physics_flags(angle)
    angle.add_argument("--theta-min", type=float, default=0.1)
    angle.add_argument("--theta-max", type=float, default=math.pi)
    angle.add_argument("--n", type=int, default=50)
    angle.add_argument("--spacing", choices=("uniform_theta", "uniform_cos_theta"), default="uniform_theta")

    energy = sub.add_parser("energy-scan", help="cross-sections on a log energy grid at fixed angle (CSV)")
    _physics_flags(energy, energy=False)
    energy.add_argument("--E-min-gev", dest="E_lo", type=float, required=True)
    energy.add_argument("--E-max-gev", dest="E_hi", type=float, required=True)
    energy.add_argument("--theta", type=float, default=math.pi / 2)
    energy.add_argument("--n", type=int, default=50)

    limits = sub.add_parser("limit-compare", help="ratio table for the asymptotic limits")
    _physics_flags(limits, energy=False)
    limits.add_argument("--tolerance", type=float, default=1e-3)

    selftest = sub.add_parser("selftest", help="run the seeded invariant suites")
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED)
    selftest.add_argument("--n", dest="n_states", type=int, default=1000)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return EXIT_OK if run_selftest(args.seed, args.n_states) else EXIT_SELFTEST

    fields = {k: v for k, v in vars(args).items() if k in ScanRequest.__dataclass_fields__}
    req = ScanRequest(mode=args.command.replace("-", "_"), **fields)
    runner = {"angle_scan": run_angle_scan, "energy_scan": run_energy_scan,
              "limit_compare": run_limit_compare}[req.mode]
    try:
        summary = runner(req)
    except PhysicsError as exc:
        print(f"gravscatter {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(summary, file=sys.stderr if req.output_path == "-" else sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
