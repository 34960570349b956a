"""Command-line front end: spectra, distribution functions, observables, checks.

Exit codes: 0 success, 1 usage error, 2 solver failure, 3 failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import verify
from .errors import NanoshellError
from .exact import find_level
from .model import BOHR_NM, RYDBERG_EV, QuantumNumbers, ShellParams
from .oracle import oracle_level
from .wavefunction import count_nodes, default_extent, distribution, normalize, observables
from .wkb import quantization_residual, wkb_level

EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_VERIFY = 0, 1, 2, 3
METHODS = ("exact", "wkb", "ode")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".10g")
    return str(x)


def _json_value(x):
    if isinstance(x, (float, np.floating)):
        return float(fmt(x))
    if isinstance(x, np.integer):
        return int(x)
    return x


def parse_range(text: str) -> list[int]:
    """``"2"`` or ``"0..3"`` (inclusive) to a list of non-negative integers."""
    try:
        if ".." in text:
            a, b = (int(t) for t in text.split("..", 1))
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or A..B") from None
    if a < 0 or b < a:
        raise UsageError(f"bad range {text!r}; need 0 <= A <= B")
    return list(range(a, b + 1))


def parse_floats(text: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None
    if not vals or any(not v > 0 for v in vals):
        raise UsageError(f"values must be positive, got {text!r}")
    return vals


def shell_list(args) -> list[ShellParams]:
    if args.eta is not None and args.radius_nm is not None:
        raise UsageError("give either --eta or --radius-nm, not both")
    if args.eta is not None:
        return [ShellParams(e) for e in parse_floats(args.eta)]
    if args.radius_nm is not None:
        return [ShellParams.from_radius_nm(r) for r in parse_floats(args.radius_nm)]
    raise UsageError("one of --eta or --radius-nm is required")


def emit(args, columns, rows, meta=None):
    if args.format == "json":
        doc = {"meta": meta or {}, "rows": [{c: _json_value(v) for c, v in zip(columns, r)} for r in rows]}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        for key, val in (meta or {}).items():
            buf.write(f"# {key}: {fmt(val)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(v) for v in r])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _solve(method, params, l, nr):
    """(xi, residual) for one level by one method."""
    if method == "exact":
        s = find_level(params, l, nr)
        return s.xi, s.residual
    if method == "wkb":
        qn = QuantumNumbers(l, nr)
        lv = wkb_level(params, qn)
        res = quantization_residual(params, qn, lv.xi) if lv.regime.value == "transcendental" else 0.0
        return lv.xi, abs(res)
    r = oracle_level(params, l, nr)
    return r.xi, abs(r.log_derivative_mismatch)


def cmd_spectrum(args) -> int:
    shells = shell_list(args)
    ls, nrs = parse_range(args.l), parse_range(args.nr)
    if args.method == "all":
        columns = ["eta", "l", "nr"]
        for m in METHODS:
            columns += [f"xi_{m}", f"residual_{m}"]
        columns += ["dev_wkb", "dev_ode"]
    else:
        columns = ["eta", "l", "nr", "method", "xi", "energy_ry", "residual"]
    if args.si:
        columns += ["radius_nm", "energy_ev"]
    rows = []
    for p in shells:
        for l in ls:
            for nr in nrs:
                if args.method == "all":
                    sols = {m: _solve(m, p, l, nr) for m in METHODS}
                    row = [p.eta, l, nr]
                    for m in METHODS:
                        row += list(sols[m])
                    xi = sols["exact"][0]
                    row += [abs(xi - sols["wkb"][0]), abs(xi - sols["ode"][0])]
                else:
                    xi, res = _solve(args.method, p, l, nr)
                    row = [p.eta, l, nr, args.method, xi, -xi * xi, res]
                if args.si:
                    row += [p.radius_nm, -xi * xi * RYDBERG_EV]
                rows.append(row)
    emit(args, columns, rows)
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    shells = shell_list(args)
    ls, nrs = parse_range(args.l), parse_range(args.nr)
    if len(shells) != 1 or len(ls) != 1 or len(nrs) != 1:
        raise UsageError("wavefunction needs a single eta, l and nr")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    p, l, nr = shells[0], ls[0], nrs[0]
    sol = find_level(p, l, nr)
    wf = normalize(sol, p)
    grid = np.linspace(1e-3, default_extent(sol, p), args.samples)
    table = distribution(wf, grid)
    meta = {"eta": p.eta, "l": l, "nr": nr, "xi": sol.xi, "norm_c": wf.norm_c, "nodes": count_nodes(wf)}
    columns = ["rho", "D"]
    rows = [list(r) for r in table]
    if args.si:
        columns.append("r_nm")
        rows = [r + [r[0] * BOHR_NM] for r in rows]
    emit(args, columns, rows, meta)
    return EXIT_OK


def cmd_observables(args) -> int:
    columns = ["eta", "xi_ground", "xi_excited", "delta_e_ry", "omega_thz", "r2_ground"]
    if args.si:
        columns += ["radius_nm", "delta_e_ev", "r2_nm2"]
    rows = []
    for p in shell_list(args):
        rep = observables(p)
        row = [p.eta, rep.states[0].xi, rep.states[1].xi, rep.delta_e_ry, rep.omega_thz, rep.r2_ground]
        if args.si:
            row += [p.radius_nm, rep.delta_e_ry * RYDBERG_EV, rep.r2_ground * BOHR_NM**2]
        rows.append(row)
    emit(args, columns, rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    only = [s for item in (args.only or []) for s in item.split(",") if s]
    try:
        names = verify.resolve(only)
    except KeyError as exc:
        raise UsageError(f"unknown check {exc.args[0]!r}; known: {', '.join(list(verify.CHECKS) + list(verify.GROUPS))}")
    results = verify.run_checks(names, xi_offset=args.perturb_xi)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{status} {r.name:15s} worst={fmt(r.worst)} tol={fmt(r.tolerance)} {r.detail}\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nanoshell", description="Bound states of an electron around a charged nanoshell.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, eta=True):
        if eta:
            sp.add_argument("--eta", help="comma-separated shell radii in Bohr radii")
            sp.add_argument("--radius-nm", help="comma-separated shell radii in nm")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--si", action="store_true", help="add eV / nm columns")

    sp = sub.add_parser("spectrum", help="levels xi(l, nr)")
    common(sp)
    sp.add_argument("--l", default="0..2", help="orbital range, e.g. 0..2")
    sp.add_argument("--nr", default="0..3", help="radial range, e.g. 0..3")
    sp.add_argument("--method", choices=METHODS + ("all",), default="exact")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("wavefunction", help="distribution function rho^2 Phi^2")
    common(sp)
    sp.add_argument("--l", default="0")
    sp.add_argument("--nr", default="0")
    sp.add_argument("--samples", type=int, default=2000)
    sp.set_defaults(func=cmd_wavefunction)

    sp = sub.add_parser("observables", help="excitation energy and ground-state <r^2>")
    common(sp)
    sp.set_defaults(func=cmd_observables)

    sp = sub.add_parser("verify", help="run the reference checks")
    sp.add_argument("--only", action="append", help="check or group name (repeatable, comma lists allowed)")
    sp.add_argument("--out")
    # test hook: shifts every exact level before the table comparison
    sp.add_argument("--perturb-xi", type=float, default=0.0, help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"nanoshell: error: {exc}\n")
        return EXIT_USAGE
    except NanoshellError as exc:
        sys.stderr.write(f"nanoshell: solver failure: {exc}\n")
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
