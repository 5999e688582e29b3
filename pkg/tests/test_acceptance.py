"""One test per acceptance criterion; conftest prints a pass/fail line for each."""

from __future__ import annotations

import random
import time
from collections import defaultdict

import numpy as np
import pytest

from loopcharpoly.cayley import (
    build_anticirculant_graph,
    build_unitary_cayley,
    charpoly_anticirculant,
    charpoly_cayley_even,
    charpoly_cayley_odd,
    lambda_r,
    lambda_r_numeric,
    spectrum_report,
    totient,
)
from loopcharpoly.oracle import adjacency_matrix, charpoly_oracle, determinant_oracle
from loopcharpoly.recursions import charpoly_loops_removed, determinant_adjacency
from loopcharpoly.sachs import (
    _cycles_cached,
    _sachs_cached,
    charpoly_sachs,
    contribution_all_loops,
    contribution_loops_plus_cycle,
    contribution_loops_plus_edge,
    count_figures_by_order,
    enumerate_basic_figures,
)
from loopcharpoly.verify import METHODS, compute, random_suite, run_all

from conftest import P, looped_diamond, looped_path

SUITE_SEED = 20240917
SUITE_SIZE = 240
ORDERINGS = 3
LOOPED_PATH_POLY = P(1, -2, -1, 2)


@pytest.fixture(scope="module")
def suite():
    graphs = random_suite(SUITE_SIZE, SUITE_SEED, max_order=10,
                          densities=(0.2, 0.5, 0.8), loop_density=0.3)
    assert len(graphs) >= 200 and max(g.order for g in graphs) <= 10
    return graphs


def _cold():
    _sachs_cached.cache_clear()
    _cycles_cached.cache_clear()


@pytest.mark.criterion(1, "looped path: all five methods give x^3 - 2x^2 - x + 2")
def test_criterion_01_looped_path_all_methods():
    _cold()
    g = looped_path()
    start = time.perf_counter()
    polys = {m: compute(g, m) for m in METHODS}
    elapsed = time.perf_counter() - start
    assert all(p == LOOPED_PATH_POLY for p in polys.values()), polys
    assert elapsed < 1.0


@pytest.mark.criterion(2, "loops removed one at a time gives x^3 - 2x")
def test_criterion_02_loops_removed():
    _cold()
    g = looped_path()
    start = time.perf_counter()
    poly = charpoly_loops_removed(g, sorted(g.loops))
    elapsed = time.perf_counter() - start
    assert poly == P(1, 0, -2, 0)
    assert elapsed < 1.0


@pytest.mark.criterion(3, f"{SUITE_SIZE} random pseudographs: five methods agree, {ORDERINGS} orderings each")
def test_criterion_03_differential_suite(suite):
    rng = random.Random(SUITE_SEED)
    start = time.perf_counter()
    for g in suite:
        orders = [rng.sample(range(g.order), g.order) for _ in range(ORDERINGS)]
        report = run_all(g, vertex_orders=orders)
        assert len(report.polynomials) == len(METHODS) - 1 + ORDERINGS
        assert report.agree, (g.to_text(), report.first_disagreement())
    assert time.perf_counter() - start < 300


def _signed_by_shape(g):
    counts = defaultdict(int)
    for f in enumerate_basic_figures(g, max_nonloop=1):
        counts[f.shape[:2] + (f.order,)] += (-1) ** f.components
    return counts


@pytest.mark.criterion(4, "loop/edge/cycle closed forms match signed per-shape enumeration")
def test_criterion_04_closed_forms(suite):
    checked = 0
    for g in suite:
        signed = _signed_by_shape(g)
        m = g.loop_count()
        for k in range(g.order + 1):
            assert contribution_all_loops(m, k) == signed[(0, (), k)]
            if k >= 3:
                assert contribution_loops_plus_edge(g, k) == signed[(1, (), k)]
            for n in range(3, k + 1):
                assert contribution_loops_plus_cycle(g, k, n) == signed[(0, (n,), k)]
                checked += 1
    assert checked > 0


@pytest.mark.criterion(5, "determinant formula equals oracle determinant and signed constant term")
def test_criterion_05_determinant(suite):
    for g in suite:
        det = determinant_adjacency(g)
        assert det == determinant_oracle(g)
        assert det == (-1) ** g.order * charpoly_sachs(g).coefficient_of(0)


@pytest.mark.criterion(6, "even n <= 30 closed form equals oracle; spectrum within 1e-6 for n <= 20")
def test_criterion_06_cayley_even():
    for n in range(2, 31, 2):
        assert charpoly_cayley_even(n) == charpoly_oracle(build_unitary_cayley(n)), n
        if n <= 20:
            a = np.array(adjacency_matrix(build_unitary_cayley(n)), dtype=float)
            numeric = np.sort(np.linalg.eigvalsh(a))
            closed = np.array(spectrum_report(n).eigenvalues(), dtype=float)
            assert np.max(np.abs(numeric - closed)) < 1e-6, n


@pytest.mark.criterion(7, "odd n <= 15 closed form equals oracle; n = 3 gives x^3 - 2x")
def test_criterion_07_cayley_odd():
    assert charpoly_cayley_odd(3) == P(1, 0, -2, 0)
    for n in range(1, 16, 2):
        assert charpoly_cayley_odd(n) == charpoly_oracle(build_unitary_cayley(n)), n


@pytest.mark.criterion(8, "anti-circulant product equals Sachs polynomial for n <= 16")
def test_criterion_08_anticirculant():
    assert charpoly_anticirculant(3) == LOOPED_PATH_POLY
    for n in range(1, 17):
        assert charpoly_anticirculant(n) == charpoly_sachs(build_anticirculant_graph(n)), n


@pytest.mark.criterion(9, "Ramanujan closed form vs complex sum within 1e-9, n <= 200")
def test_criterion_09_lambda():
    worst = 0.0
    for n in range(1, 201):
        for r in range(n // 2 + 1):
            worst = max(worst, abs(lambda_r_numeric(n, r) - lambda_r(n, r)))
        assert lambda_r(n, 0) == totient(n)
        if n % 2 == 0:
            assert lambda_r(n, n // 2) == -totient(n)
    assert worst < 1e-9


@pytest.mark.criterion(10, "basic-figure counts of the four-vertex example are 1, 5, 5, 4")
def test_criterion_10_figure_counts():
    counts = count_figures_by_order(looped_diamond())
    assert [counts[k] for k in range(1, 5)] == [1, 5, 5, 4]
