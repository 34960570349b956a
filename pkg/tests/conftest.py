import functools

import pytest

from nanoshell import reference as ref
from nanoshell.exact import find_level
from nanoshell.model import ShellParams
from nanoshell.wavefunction import normalize


@functools.lru_cache(maxsize=None)
def level(eta, l, nr):
    return find_level(ShellParams(eta), l, nr)


@functools.lru_cache(maxsize=None)
def wavefunction(eta, l, nr):
    return normalize(level(eta, l, nr), ShellParams(eta))


@pytest.fixture(scope="session")
def table_states():
    return ref.states()


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def record(criterion: int, passed: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((bool(passed), detail))
    print(f"criterion {criterion}: {'PASS' if passed else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[criterion]
        ok = all(p for p, _ in parts)
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
