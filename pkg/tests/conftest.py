from fractions import Fraction

import pytest

from quasimod.qseries import QSeries


def product_delta(order: int) -> QSeries:
    """q * prod_{n>=1} (1 - q^n)^24, truncated; independent of the Eisenstein route."""
    c = [0] * (order + 1)
    if order >= 1:
        c[1] = 1
    for n in range(1, order + 1):
        for _ in range(24):
            for e in range(order, n - 1, -1):
                c[e] -= c[e - n]
    return QSeries(order, {e: x for e, x in enumerate(c)})


def brute_sigma(h: int, n: int) -> int:
    return sum(d**h for d in range(1, n + 1) if n % d == 0)


@pytest.fixture
def frac():
    return Fraction


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in name and rep.when == "call" or (
                "test_criterion_" in name and status == "error"
            ):
                crit = name.split("test_criterion_")[1]
                lines.append((crit, "PASS" if status == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, verdict in sorted(lines):
            num, _, label = crit.partition("_")
            terminalreporter.write_line(f"[{verdict}] criterion {int(num):2d}: {label.replace('_', ' ')}")
