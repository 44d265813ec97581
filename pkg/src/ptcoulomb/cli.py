"""Command-line front end: ``pt-coulomb-lab``.

Subcommands
-----------
spectrum   closed-form levels of the oscillator or Coulomb model
verify     residual / liouville / shoot checks, exit 1 on a tolerance breach
figure     A-dependence tables for plots 1-3
crossings  all unavoided crossings up to n_max

Tables go to stdout (or --output) as CSV with a versioned comment header, or
as a JSON array of row objects.  ``--config file.json`` supplies flag
defaults; explicit flags win.  PTCL_TOL overrides the residual gate of
``verify shoot`` (default 1e-8).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Any, Sequence

import numpy as np

from . import analysis, liouville, models, solver
from .contour import Contour
from .errors import PTCoulombError
from .models import QuantumState

SCHEMA = "pt-coulomb-lab v1"
RESIDUAL_TOL = 1e-9
LIOUVILLE_TOL = 1e-10
SHOOT_REL_TOL = 1e-5


class UsageError(Exception):
    """Invalid flag value; reported with exit code 2."""


def _fmt(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, (np.floating, float)):
        v = float(value)
        return v if math.isfinite(v) else None
    if isinstance(value, np.integer):
        return int(value)
    return value


def write_table(rows: list[dict[str, Any]], columns: list[str], command: str,
                fmt: str, out) -> None:
    if fmt == "json":
        data = [{k: _json_value(r.get(k)) for k in columns} for r in rows]
        out.write(json.dumps(data, indent=1) + "\n")
        return
    buf = io.StringIO()
    buf.write(f"# {SCHEMA}, command={command}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt(r.get(k)) for k in columns])
    out.write(buf.getvalue())


# -- parameter helpers -------------------------------------------------------

def _need(args, name: str, flag: str):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"missing required flag {flag}")
    return value


def _alpha_from(args) -> float:
    if args.alpha is not None:
        if args.alpha <= 0:
            raise UsageError("--alpha must be positive")
        return float(args.alpha)
    if args.d is None:
        raise UsageError("give --alpha or --d/--j/--f")
    try:
        return models.alpha(models.OscillatorParams(args.d, args.j or 0, args.f or 0.0))
    except PTCoulombError as exc:
        raise UsageError(f"--d/--j/--f: {exc}") from exc


def _big_a_from(args) -> float:
    if args.A is not None:
        if args.A <= 0:
            raise UsageError("--A must be positive")
        return float(args.A)
    if args.D is None:
        raise UsageError("give --A or --D/--J/--F")
    try:
        return models.big_a(models.CoulombParams(args.D, args.J or 0, args.F or 0.0, args.ze2))
    except PTCoulombError as exc:
        raise UsageError(f"--D/--J/--F: {exc}") from exc


def _ze2(args) -> float:
    if args.ze2 is None or args.ze2 <= 0:
        raise UsageError("--ze2 must be positive")
    return float(args.ze2)


def _state(args) -> QuantumState:
    n = _need(args, "n", "--n")
    q = _need(args, "q", "--q")
    if n < 0:
        raise UsageError("--n must be non-negative")
    return QuantumState(n, q)


def _q_values(args) -> list[int]:
    return [1, -1] if args.q is None else [args.q]


# -- commands ----------------------------------------------------------------

def cmd_spectrum(args) -> tuple[list[dict], list[str], int]:
    n_max = _need(args, "n_max", "--n-max")
    if n_max < 0:
        raise UsageError("--n-max must be non-negative")
    rows = []
    if args.model == "ho":
        a = _alpha_from(args)
        for q in _q_values(args):
            for n in range(n_max + 1):
                e = models.ho_energy(QuantumState(n, q), a)
                rows.append(dict(n=n, q=q, energy=e, normalizable=True, status="ok"))
        rows.sort(key=lambda r: (r["energy"], -r["q"], r["n"]))
    else:
        A = _big_a_from(args)
        z = _ze2(args)
        for q in _q_values(args):
            for n in range(n_max + 1):
                try:
                    lvl = models.coulomb_energy(QuantumState(n, q), A, z)
                except models.DivergentState:
                    rows.append(dict(n=n, q=q, energy=None, normalizable=False, status="divergent"))
                    continue
                status = "ok" if lvl.normalizable else "non_normalizable"
                rows.append(dict(n=n, q=q, energy=lvl.energy, normalizable=lvl.normalizable,
                                 status=status))
    return rows, ["n", "q", "energy", "normalizable", "status"], 0


def _check_row(check: str, value: float, tol: float) -> dict:
    return dict(check=check, max_value=value, tolerance=tol, passed=bool(value <= tol))


def verify_residual(args) -> list[dict]:
    s = _state(args)
    x = np.linspace(-args.x_span, args.x_span, args.points)
    if args.model == "ho":
        a = _alpha_from(args)
        r = Contour.shifted_line(args.c).eval(x)
        res = models.ho_residual(s, a, r)
    else:
        A = _big_a_from(args)
        t = Contour.ks_parabola(args.c, args.kappa_c_sq).eval(x)
        res = models.coulomb_residual(s, A, _ze2(args), t)
    return [_check_row(f"ode_residual_{args.model}", float(np.max(res)), RESIDUAL_TOL)]


def verify_liouville(args) -> list[dict]:
    s = _state(args)
    a = _alpha_from(args)
    z = _ze2(args)
    A = liouville.ks_big_a(a)
    eps2 = models.ho_energy(s, a)
    k2 = liouville.ks_kappa_sq(eps2, z)
    ks = liouville.MapKS(k2)
    contour = Contour.ks_parabola(args.c, args.kappa_c_sq)
    t = contour.eval(np.linspace(-args.x_span, args.x_span, args.points))
    lhs = liouville.transform_potential(liouville.oscillator_source(a), ks, t, eps2)
    rhs = liouville.coulomb_target(A, z)(t) - models.coulomb_energy(s, A, z).energy
    identity = float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(t) ** -2)))
    moved = liouville.transform_wavefunction(lambda r: models.ho_wavefunction(s, a, r), ks, t)
    ratio = moved / models.coulomb_wavefunction(s, A, z, t)
    mean = ratio.mean()
    spread = float(np.max(np.abs(ratio - mean)) / abs(mean))
    return [
        _check_row("potential_identity", identity, LIOUVILLE_TOL),
        _check_row("wavefunction_ratio_spread", spread, LIOUVILLE_TOL),
    ]


def formula_levels(model: str, param: float, z_e2: float, e_min: float, e_max: float):
    """[(n, q, E)] of normalizable closed-form levels inside [e_min, e_max]."""
    out = []
    for q in (1, -1):
        n = 0
        while True:
            s = QuantumState(n, q)
            if model == "ho":
                e = models.ho_energy(s, param)
                if e > e_max:
                    break
            else:
                den = models.coulomb_denominator(s, param)
                if den <= 1e-12:
                    n += 1
                    continue
                e = z_e2 * z_e2 / den**2
                if e < e_min:
                    break
            if e_min <= e <= e_max:
                out.append((n, q, e))
            n += 1
    return sorted(out, key=lambda r: r[2])


def verify_shoot(args) -> list[dict]:
    tol = float(os.environ.get("PTCL_TOL", solver.DEFAULT_ACCEPT_TOL))
    e_min = _need(args, "e_min", "--e-min")
    e_max = _need(args, "e_max", "--e-max")
    if not e_min < e_max:
        raise UsageError("--e-min must be below --e-max")
    if args.model == "ho":
        param, z = _alpha_from(args), 0.0
        contour = Contour.shifted_line(args.c, x_max=args.x_max or 12.0)
        prob = solver.ShootingProblem.oscillator(param, contour)
    else:
        param, z = _big_a_from(args), _ze2(args)
        if e_min <= 0:
            raise UsageError("--e-min must be positive for the Coulomb model")
        contour = Contour.ks_parabola(args.c, args.kappa_c_sq, x_max=args.x_max or 20.0)
        prob = solver.ShootingProblem.coulomb(param, z, contour)
    found = solver.scan_eigenvalues(prob, e_min, e_max, args.grid, accept_tol=tol)
    expected = formula_levels(args.model, param, z, e_min, e_max)

    rows = []
    unused = list(found)
    for n, q, e in expected:
        best = min(unused, key=lambda r: abs(r.energy - e), default=None)
        rel = None if best is None else abs(best.energy - e) / abs(e)
        ok = rel is not None and rel <= SHOOT_REL_TOL
        if ok:
            unused.remove(best)
        rows.append(dict(n=n, q=q, formula_energy=e, found_energy=best.energy if ok else None,
                         rel_error=rel if ok else None,
                         match_residual=best.match_residual if ok else None, passed=ok))
    for extra in unused:
        rows.append(dict(n=None, q=None, formula_energy=None, found_energy=extra.energy,
                         rel_error=None, match_residual=extra.match_residual, passed=False))
    return rows


VERIFY_COLUMNS = {
    "residual": ["check", "max_value", "tolerance", "passed"],
    "liouville": ["check", "max_value", "tolerance", "passed"],
    "shoot": ["n", "q", "formula_energy", "found_energy", "rel_error", "match_residual", "passed"],
}


def cmd_verify(args) -> tuple[list[dict], list[str], int]:
    if args.target in ("residual", "liouville"):
        if args.points < 2:
            raise UsageError("--points must be at least 2")
    if args.target == "residual":
        rows = verify_residual(args)
    elif args.target == "liouville":
        rows = verify_liouville(args)
    else:
        if args.grid < 8:
            raise UsageError("--grid must be at least 8")
        rows = verify_shoot(args)
    failed = [r for r in rows if not r["passed"]]
    for r in failed:
        print(f"tolerance breach: {r}", file=sys.stderr)
    return rows, VERIFY_COLUMNS[args.target], 1 if failed else 0


def cmd_figure(args) -> tuple[list[dict], list[str], int]:
    which = {1: analysis.FigureFamily.FIG1_Q_PLUS, 2: analysis.FigureFamily.FIG2_Q_MINUS,
             3: analysis.FigureFamily.FIG3_CROSSING}[args.which]
    n_list = args.n if args.n is not None else [0, 1, 2]
    a_min, a_max = args.a_min, args.a_max
    crossing = analysis.CrossingKind.OPPOSITE_Q
    if which is analysis.FigureFamily.FIG3_CROSSING:
        if args.nprime is None:
            raise UsageError("figure 3 needs --nprime")
        crossing = (analysis.CrossingKind.OPPOSITE_Q if args.crossing == "opposite"
                    else analysis.CrossingKind.SAME_POSITIVE_Q)
        n = n_list[0]
        try:
            rec = (analysis.crossing_opposite(n, args.nprime) if args.crossing == "opposite"
                   else analysis.crossing_same_positive(n, args.nprime))
        except PTCoulombError as exc:
            raise UsageError(f"--n/--nprime: {exc}") from exc
        if a_min is None:
            a_min = max(rec.a_crit - 0.45, 0.01)
        if a_max is None:
            a_max = rec.a_crit + 0.45
        n_list = [n, args.nprime]
    a_min = 0.01 if a_min is None else a_min
    a_max = 3.0 if a_max is None else a_max
    if not (0 < a_min < a_max) or args.a_step <= 0:
        raise UsageError("empty A range: need 0 < --a-min < --a-max and --a-step > 0")
    if any(n < 0 for n in n_list):
        raise UsageError("--n values must be non-negative")
    rows = analysis.figure_data(which, a_min, a_max, args.a_step, n_list, _ze2(args),
                                crossing=crossing)
    return [r.__dict__ for r in rows], ["A", "n", "q", "E", "normalizable"], 0


def cmd_crossings(args) -> tuple[list[dict], list[str], int]:
    if args.n_max is None or args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    rows = []
    for rec in analysis.all_crossings(args.n_max, _ze2(args)):
        row = dict(rec.__dict__)
        row["kind"] = rec.kind.value
        rows.append(row)
    cols = ["kind", "n", "n_prime", "a_crit", "energy_at_crossing", "denominator",
            "denominator_prime"]
    return rows, cols, 0


# -- parser ------------------------------------------------------------------

def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["csv", "json"], default="csv", help="output format (default csv)")
    p.add_argument("--output", default=None, help="output file (default stdout)")
    p.add_argument("--config", default=None, help="flat JSON file of flag defaults")


def _oscillator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, help="oscillator alpha (> 0)")
    p.add_argument("--d", type=int, help="oscillator dimension, used when --alpha is absent")
    p.add_argument("--j", type=int, help="oscillator partial wave (default 0)")
    p.add_argument("--f", type=float, help="oscillator 1/r^2 spike strength (default 0)")


def _coulomb_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--A", type=float, help="Coulomb A (> 0)")
    p.add_argument("--D", type=int, help="Coulomb dimension, used when --A is absent")
    p.add_argument("--J", type=int, help="Coulomb partial wave (default 0)")
    p.add_argument("--F", type=float, help="Coulomb 1/t^2 spike strength (default 0)")
    p.add_argument("--ze2", type=float, default=1.0, help="coupling Ze^2 (default 1)")


def _contour_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c", type=float, default=1.0, help="contour shift c (default 1)")
    p.add_argument("--kappa-c-sq", type=float, default=1.0, help="parabola scale (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pt-coulomb-lab", description=__doc__.split("\n")[0], allow_abbrev=False
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", allow_abbrev=False, help="closed-form spectrum")
    sp.add_argument("model", choices=["ho", "coulomb"])
    _oscillator_flags(sp)
    _coulomb_flags(sp)
    sp.add_argument("--n-max", type=int, help="largest principal index")
    sp.add_argument("--q", type=int, choices=[1, -1], help="keep one quasi-parity (default both)")
    _output_flags(sp)
    sp.set_defaults(handler=cmd_spectrum)

    vp = sub.add_parser("verify", allow_abbrev=False, help="numerical verification")
    vp.add_argument("target", choices=["residual", "liouville", "shoot"])
    vp.add_argument("--model", choices=["ho", "coulomb"], default="coulomb",
                    help="model for residual/shoot (default coulomb)")
    _oscillator_flags(vp)
    _coulomb_flags(vp)
    _contour_flags(vp)
    vp.add_argument("--n", type=int, help="principal index")
    vp.add_argument("--q", type=int, choices=[1, -1], help="quasi-parity")
    vp.add_argument("--points", type=int, default=50, help="contour samples (default 50)")
    vp.add_argument("--x-span", type=float, default=5.0, help="sample x in [-span, span] (default 5)")
    vp.add_argument("--e-min", type=float, help="scan window lower end")
    vp.add_argument("--e-max", type=float, help="scan window upper end")
    vp.add_argument("--grid", type=int, default=600, help="scan grid size (default 600)")
    vp.add_argument("--x-max", type=float, default=None,
                    help="contour truncation (default 12 oscillator, 20 Coulomb)")
    _output_flags(vp)
    vp.set_defaults(handler=cmd_verify)

    fp = sub.add_parser("figure", allow_abbrev=False, help="A-dependence table for figure 1, 2 or 3")
    fp.add_argument("which", type=int, choices=[1, 2, 3])
    fp.add_argument("--a-min", type=float, default=None, help="first A (default 0.01)")
    fp.add_argument("--a-max", type=float, default=None, help="last A (default 3)")
    fp.add_argument("--a-step", type=float, default=0.01, help="A step (default 0.01)")
    fp.add_argument("--n", type=int, nargs="+", help="principal indices (default 0 1 2)")
    fp.add_argument("--nprime", type=int, help="second index for figure 3")
    fp.add_argument("--crossing", choices=["opposite", "same"], default="opposite",
                    help="crossing type for figure 3 (default opposite)")
    fp.add_argument("--ze2", type=float, default=1.0, help="coupling Ze^2 (default 1)")
    _output_flags(fp)
    fp.set_defaults(handler=cmd_figure)

    cp = sub.add_parser("crossings", allow_abbrev=False, help="unavoided level crossings")
    cp.add_argument("--n-max", type=int, help="largest principal index")
    cp.add_argument("--ze2", type=float, default=1.0, help="coupling Ze^2 (default 1)")
    _output_flags(cp)
    cp.set_defaults(handler=cmd_crossings)
    return parser


def _subparser(parser: argparse.ArgumentParser, name: str) -> argparse.ArgumentParser:
    for action in parser._subparsers._group_actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[name]
    raise KeyError(name)


def parse_args(argv: Sequence[str] | None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except (OSError, ValueError) as exc:
            parser.error(f"--config: cannot read {args.config}: {exc}")
        if not isinstance(config, dict):
            parser.error("--config: expected a flat JSON object")
        sub = _subparser(parser, args.command)
        sub.set_defaults(**{k.replace("-", "_"): v for k, v in config.items()})
        args = parser.parse_args(argv)
    return args


def main(argv: Sequence[str] | None = None) -> int:
    args = parse_args(argv)
    command = args.command + (f" {args.model}" if args.command == "spectrum" else "")
    if args.command in ("verify", "figure"):
        command += f" {getattr(args, 'target', getattr(args, 'which', ''))}"
    try:
        rows, columns, code = args.handler(args)
    except UsageError as exc:
        print(f"pt-coulomb-lab: error: {exc}", file=sys.stderr)
        return 2
    except PTCoulombError as exc:
        print(f"pt-coulomb-lab: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_table(rows, columns, command, args.format, fh)
    else:
        write_table(rows, columns, command, args.format, sys.stdout)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
