from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from loopcharpoly.graph import Pseudograph
from loopcharpoly.polynomial import IntPolynomial


def path(n: int, loops=()) -> Pseudograph:
    return Pseudograph.from_lists(n, [(i, i + 1) for i in range(n - 1)], loops)


def cycle(n: int, loops=()) -> Pseudograph:
    return Pseudograph.from_lists(n, [(i, (i + 1) % n) for i in range(n)], loops)


def complete(n: int, loops=()) -> Pseudograph:
    return Pseudograph.from_lists(n, combinations(range(n), 2), loops)


def looped_path() -> Pseudograph:
    """Path v2 - v1 - v3 with loops at both ends (0-indexed: centre 0)."""
    return Pseudograph.from_lists(3, [(0, 1), (0, 2)], [1, 2])


def looped_diamond() -> Pseudograph:
    """Triangle 0-1-2, vertex 3 joined to 1 and 2, loop at 3."""
    return Pseudograph.from_lists(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], [3])


@pytest.fixture
def lpath() -> Pseudograph:
    return looped_path()


@pytest.fixture
def diamond() -> Pseudograph:
    return looped_diamond()


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_charpoly(g: Pseudograph) -> IntPolynomial:
    """det(xI - A) by the permutation expansion; independent of the package."""
    n = g.order
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    for v in g.loops:
        a[v][v] = 1
    total = IntPolynomial.zero()
    for perm in permutations(range(n)):
        term = IntPolynomial.constant(_perm_sign(perm))
        for i, j in enumerate(perm):
            entry = IntPolynomial((-a[i][j], 1 if i == j else 0))
            if entry.is_zero():
                break
            term = term * entry
        else:
            total = total + term
    return total


@st.composite
def pseudographs(draw, max_order: int = 7, min_order: int = 0):
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    loops = [v for v in range(n) if draw(st.booleans())]
    return Pseudograph.from_lists(n, edges, loops)


def P(*coeffs_high_first: int) -> IntPolynomial:
    """Polynomial from coefficients listed highest degree first."""
    return IntPolynomial(reversed(coeffs_high_first))


# -- acceptance reporting ---------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        verdict = "PASS" if report.passed else "FAIL"
        _CRITERIA[num] = (verdict, f"{title} ({report.duration:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        verdict, text = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {text}")
