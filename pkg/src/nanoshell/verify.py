"""Named regression checks against the published numbers and internal limits."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from . import reference as ref
from .exact import find_level, find_well_roots, hydrogen_limit_check
from .model import QuantumNumbers, ShellParams, SquareWell
from .oracle import oracle_level
from .wavefunction import excitation_energy, r2_expectation, wavefunction
from .wkb import phase_level, quantization_residual, wkb_level


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str = ""


def _table_check(name, table, solve, tol, offset=0.0):
    worst, where = 0.0, None
    for eta, l, nr in ref.states():
        dev = abs(solve(ShellParams(eta), l, nr) + offset - table[eta][nr][l])
        if dev > worst:
            worst, where = dev, (eta, l, nr)
    return CheckResult(name, worst <= tol, worst, tol, f"worst at (eta, l, nr) = {where}")


def check_exact_table(xi_offset: float = 0.0) -> CheckResult:
    return _table_check("exact-table", ref.EXACT_XI, lambda p, l, nr: find_level(p, l, nr).xi, 1e-4, xi_offset)


def check_wkb_table() -> CheckResult:
    return _table_check("wkb-table", ref.WKB_XI, lambda p, l, nr: wkb_level(p, QuantumNumbers(l, nr)).xi, 1e-4)


def check_wkb_residual() -> CheckResult:
    """Solved levels satisfy the closed-form condition; the seed point is close."""
    at_solved = 0.0
    for eta, l, nr in ref.states():
        p, qn = ShellParams(eta), QuantumNumbers(l, nr)
        at_solved = max(at_solved, abs(quantization_residual(p, qn, wkb_level(p, qn).xi)))
    seed = quantization_residual(ShellParams(50), QuantumNumbers(0, 0), ref.WKB_XI[50][0][0])
    ok = at_solved < 1e-8 and abs(seed) < 1e-3
    return CheckResult("wkb-residual", ok, at_solved, 1e-8, f"residual at the printed (50, 0, 0) value {seed:.2e}")


def check_phase_integral() -> CheckResult:
    worst = 0.0
    for eta, l, nr in ref.states():
        p, qn = ShellParams(eta), QuantumNumbers(l, nr)
        worst = max(worst, abs(phase_level(p, qn) - wkb_level(p, qn).xi))
    return CheckResult("phase-integral", worst < 1e-6, worst, 1e-6)


def check_excitation() -> CheckResult:
    worst = 0.0
    for eta, (target, rel) in ref.EXCITATION_RY.items():
        dev = abs(excitation_energy(ShellParams(eta)) - target) / target
        worst = max(worst, dev / rel)
    return CheckResult("excitation", worst <= 1.0, worst, 1.0, "deviation as a fraction of the allowed relative error")


def check_r2() -> CheckResult:
    worst = 0.0
    for eta, target in ref.R2_GROUND.items():
        worst = max(worst, abs(r2_expectation(wavefunction(ShellParams(eta), 0, 0)) - target) / target)
    return CheckResult("r2", worst <= 5e-3, worst, 5e-3, "relative deviation")


def check_oracle() -> CheckResult:
    worst, bad_nodes = 0.0, []
    for eta, l, nr in ref.states():
        p = ShellParams(eta)
        shot = oracle_level(p, l, nr)
        worst = max(worst, abs(shot.xi - find_level(p, l, nr).xi))
        if shot.node_count != nr:
            bad_nodes.append((eta, l, nr, shot.node_count))
    return CheckResult("oracle", worst < 1e-6 and not bad_nodes, worst, 1e-6, f"node mismatches: {bad_nodes}")


def check_hydrogen() -> CheckResult:
    worst_coarse, shrinks = 0.0, True
    for l in (0, 1):
        for nr in (0, 1):
            coarse = abs(hydrogen_limit_check(l, nr, 1e-3))
            fine = abs(hydrogen_limit_check(l, nr, 1e-4))
            worst_coarse = max(worst_coarse, coarse)
            shrinks = shrinks and fine < coarse
    return CheckResult("hydrogen", worst_coarse < 1e-2 and shrinks, worst_coarse, 1e-2, f"shrinks at 1e-4: {shrinks}")


def check_well_limit() -> CheckResult:
    worst = 0.0
    for radius, depth, l in ((5.0, 1.0, 0), (5.0, 1.0, 1), (3.0, 2.0, 2)):
        well = SquareWell(radius, depth)
        confluent = find_well_roots(well, l)
        hankel = find_well_roots(well, l, form="hankel")
        if len(confluent) != len(hankel):
            return CheckResult("well-limit", False, math.inf, 1e-8, "root counts differ")
        for nr, (a, b) in enumerate(zip(confluent, hankel)):
            c = oracle_level(well, l, nr).xi
            worst = max(worst, abs(a - b), abs(a - c))
    # l = 0 binds only when sqrt(2 V0) R > pi/2
    r = 2.0
    critical = (math.pi / 2) ** 2 / (2 * r * r)
    threshold_ok = not find_well_roots(SquareWell(r, 0.95 * critical), 0) and len(
        find_well_roots(SquareWell(r, 1.05 * critical), 0)
    ) == 1
    return CheckResult("well-limit", worst < 1e-8 and threshold_ok, worst, 1e-8, f"threshold ok: {threshold_ok}")


def check_ordering() -> CheckResult:
    broken = []
    for eta in ref.ETAS:
        p = ShellParams(eta)
        for nr in range(4):
            seq = [find_level(p, l, nr).xi for l in range(3)]
            if nr < 3:
                seq.append(find_level(p, 0, nr + 1).xi)
            if any(a <= b for a, b in zip(seq, seq[1:])):
                broken.append((eta, nr))
    return CheckResult("ordering", not broken, float(len(broken)), 0.0, f"violations: {broken}")


def check_wkb_deviation() -> CheckResult:
    devs = []
    for eta, l, nr in ref.states():
        p = ShellParams(eta)
        devs.append(abs(find_level(p, l, nr).xi - wkb_level(p, QuantumNumbers(l, nr)).xi))
    worst, median = max(devs), statistics.median(devs)
    # "of order 1e-4": within half a decade either side
    ok = worst < 1.5e-3 and 10**-4.5 <= median <= 10**-3.5
    return CheckResult("wkb-deviation", ok, worst, 1.5e-3, f"median {median:.2e}")


CHECKS = {
    "exact-table": check_exact_table,
    "wkb-table": check_wkb_table,
    "wkb-residual": check_wkb_residual,
    "phase-integral": check_phase_integral,
    "excitation": check_excitation,
    "r2": check_r2,
    "oracle": check_oracle,
    "hydrogen": check_hydrogen,
    "well-limit": check_well_limit,
    "ordering": check_ordering,
    "wkb-deviation": check_wkb_deviation,
}

GROUPS = {
    "wkb": ("wkb-table", "wkb-residual"),
    "exact": ("exact-table", "excitation", "r2", "ordering"),
    "limits": ("hydrogen", "well-limit"),
}


def resolve(only: list[str] | None) -> list[str]:
    if not only:
        return list(CHECKS)
    names = []
    for item in only:
        if item in GROUPS:
            names.extend(GROUPS[item])
        elif item in CHECKS:
            names.append(item)
        else:
            raise KeyError(item)
    return list(dict.fromkeys(names))


def run_checks(only: list[str] | None = None, xi_offset: float = 0.0) -> list[CheckResult]:
    results = []
    for name in resolve(only):
        if name == "exact-table":
            results.append(check_exact_table(xi_offset))
        else:
            results.append(CHECKS[name]())
    return results
