from math import gcd

import numpy as np
import pytest

from loopcharpoly.cayley import (
    anticirculant_first_row,
    anticirculant_matrix,
    build_anticirculant_graph,
    build_unitary_cayley,
    charpoly_anticirculant,
    charpoly_cayley_even,
    charpoly_cayley_odd,
    lambda_r,
    lambda_r_numeric,
    mobius,
    spectrum_report,
    totient,
    units,
)
from loopcharpoly.graph import Pseudograph
from loopcharpoly.oracle import adjacency_matrix, charpoly_oracle
from loopcharpoly.sachs import charpoly_sachs

from conftest import P, cycle, looped_path, path


@pytest.mark.parametrize("n, us", [(4, [1, 3]), (1, [0]), (5, [1, 2, 3, 4]), (12, [1, 5, 7, 11])])
def test_units(n, us):
    assert units(n) == us
    assert totient(n) == len(us)


def test_bad_n():
    for fn in (units, totient, build_unitary_cayley, charpoly_anticirculant):
        with pytest.raises(ValueError):
            fn(0)


def test_mobius():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_build_unitary_cayley():
    assert build_unitary_cayley(4) == cycle(4)
    assert build_unitary_cayley(3) == Pseudograph.from_lists(3, [(0, 1), (0, 2)])
    assert build_unitary_cayley(2) == path(2)
    assert build_unitary_cayley(1) == Pseudograph(1)


def test_build_anticirculant_graph():
    assert build_anticirculant_graph(3) == looped_path()
    assert build_anticirculant_graph(4) == build_unitary_cayley(4)
    assert build_anticirculant_graph(1) == Pseudograph(1, loops={0})


@pytest.mark.parametrize("n", range(1, 31))
def test_isomorphism_by_adjacency(n):
    a = adjacency_matrix(build_anticirculant_graph(n))
    assert a == anticirculant_matrix(anticirculant_first_row(n))
    b = adjacency_matrix(build_unitary_cayley(n))
    if n % 2 == 0:
        assert a == b
    else:
        assert all(a[i][j] == b[i][j] for i in range(n) for j in range(n) if i != j)
        assert build_anticirculant_graph(n).loops == set(units(n))


def test_lambda_examples():
    assert lambda_r(7, 0) == totient(7)
    assert lambda_r(10, 5) == -totient(10)
    assert lambda_r(5, 1) == -1
    with pytest.raises(ValueError):
        lambda_r(5, 3)


@pytest.mark.parametrize("n", [1, 2, 6, 9, 30, 97, 120, 200])
def test_lambda_matches_sum(n):
    for r in range(n // 2 + 1):
        z = lambda_r_numeric(n, r)
        assert abs(z - lambda_r(n, r)) < 1e-9


@pytest.mark.parametrize(
    "n, expected",
    [(3, P(1, -2, -1, 2)), (4, P(1, 0, -4, 0, 0)), (1, P(1, -1))],
)
def test_charpoly_anticirculant(n, expected):
    assert charpoly_anticirculant(n) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_anticirculant_matches_sachs(n):
    assert charpoly_anticirculant(n) == charpoly_sachs(build_anticirculant_graph(n))


def test_even_examples():
    assert charpoly_cayley_even(4) == P(1, 0, -4, 0, 0)
    assert charpoly_cayley_even(2) == P(1, 0, -1)
    assert charpoly_cayley_even(6) == charpoly_oracle(build_unitary_cayley(6))
    with pytest.raises(ValueError):
        charpoly_cayley_even(5)


def test_odd_examples():
    assert charpoly_cayley_odd(3) == P(1, 0, -2, 0)
    assert charpoly_cayley_odd(1) == P(1, 0)
    assert charpoly_cayley_odd(5) == charpoly_oracle(build_unitary_cayley(5))
    assert charpoly_cayley_odd(9, leaf="oracle") == charpoly_oracle(build_unitary_cayley(9))
    with pytest.raises(ValueError):
        charpoly_cayley_odd(4)
    with pytest.raises(ValueError):
        charpoly_cayley_odd(5, leaf="nope")


def test_spectrum_report():
    r4 = spectrum_report(4)
    assert (r4.lambda_0, r4.lambda_half, r4.abs_lambdas) == (2, -2, (0,))
    r5 = spectrum_report(5)
    assert (r5.lambda_0, r5.lambda_half, r5.abs_lambdas) == (4, None, (1, 1))
    r2 = spectrum_report(2)
    assert (r2.lambda_0, r2.lambda_half, r2.abs_lambdas) == (1, -1, ())


@pytest.mark.parametrize("n", range(1, 21))
def test_report_matches_numeric_eigenvalues(n):
    m = np.array(anticirculant_matrix(anticirculant_first_row(n)), dtype=float)
    numeric = np.sort(np.linalg.eigvalsh(m))
    assert np.allclose(numeric, spectrum_report(n).eigenvalues(), atol=1e-6)


def test_loops_only_for_odd_n():
    for n in range(2, 40, 2):
        assert not build_anticirculant_graph(n).loops
    assert all(gcd(2 * t, 9) == 1 for t in build_anticirculant_graph(9).loops)
