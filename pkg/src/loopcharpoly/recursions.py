"""Loop and vertex deletion identities for characteristic polynomials.

Every function here returns the same polynomial as
:func:`loopcharpoly.sachs.charpoly_sachs` (or, for
:func:`charpoly_loops_removed`, that of the loop-stripped graph), but gets
there through a different decomposition.  The smaller characteristic
polynomials the identities need ("leaves") are computed by a selectable
backend: ``"sachs"`` (default) or ``"oracle"``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .graph import GraphError, Pseudograph, iter_bits
from .oracle import charpoly_oracle
from .polynomial import IntPolynomial, pow_x_minus_one
from .sachs import (
    Cycle,
    binom,
    charpoly_sachs,
    enumerate_cycles,
    sachs_coefficient,
    support_weights,
)

Phi = Callable[[Pseudograph], IntPolynomial]

X = IntPolynomial.x()


def _leaf(method: str) -> Phi:
    if method == "sachs":
        return charpoly_sachs
    if method == "oracle":
        return charpoly_oracle
    raise ValueError(f"unknown leaf method {method!r}")


def _distinct_in_range(g: Pseudograph, vs: Sequence[int]) -> None:
    if len(set(vs)) != len(vs):
        raise GraphError(f"repeated vertex in {list(vs)}")
    for v in vs:
        if not (isinstance(v, int) and 0 <= v < g.order):
            raise GraphError(f"vertex {v!r} out of range for order {g.order}")


# -- loop expansion ------------------------------------------------------

def charpoly_loop_expansion(
    g: Pseudograph, loops: Iterable[int] | None = None, leaf: str = "sachs"
) -> IntPolynomial:
    """Alternating sum over subsets ``X`` of the chosen loop vertices of
    ``phi(G' - X)``, where ``G'`` drops those loops.

    ``loops`` defaults to every loop of ``g``; loops outside the chosen set
    stay in the subgraphs.
    """
    chosen = sorted(g.loops if loops is None else set(loops))
    stripped = g.delete_loops(chosen)
    phi = _leaf(leaf)
    total = IntPolynomial.zero()
    for r in range(len(chosen) + 1):
        part = IntPolynomial.zero()
        for xs in combinations(chosen, r):
            part = part + phi(stripped.delete_vertices(xs))
        total = total + part if r % 2 == 0 else total - part
    return total


def charpoly_single_loop_removal(
    g: Pseudograph, v: int, leaf: str = "sachs"
) -> IntPolynomial:
    """``phi(G) = phi(G - loop at v) - phi(G - v)``, applied until loopless."""
    if not g.has_loop(v):
        raise GraphError(f"vertex {v} carries no loop")
    phi = _leaf(leaf)

    @lru_cache(maxsize=None)
    def strip(h: Pseudograph) -> IntPolynomial:
        if not h.loops:
            return phi(h)
        u = min(h.loops)
        return strip(h.delete_loops([u])) - strip(h.delete_vertices([u]))

    return strip(g.delete_loops([v])) - strip(g.delete_vertices([v]))


def coefficient_via_subsets(g: Pseudograph, i: int) -> int:
    """Coefficient of ``x**(p-i)`` from coefficients of loopless subgraphs.

    Each loopless coefficient is a signed count of basic figures of the
    matching order; no full polynomial is formed.
    """
    if not 0 <= i <= g.order:
        raise ValueError(f"index {i} outside 0..{g.order}")
    stripped = g.without_loops()
    loops = sorted(g.loops)
    total = 0
    for r in range(min(i, len(loops)) + 1):
        for xs in combinations(loops, r):
            total += (-1) ** r * sachs_coefficient(stripped.delete_vertices(xs), i - r)
    return total


# -- figure form ---------------------------------------------------------

def _stripped_weights(g: Pseudograph) -> tuple[list[int], int]:
    lmask = 0
    for v in g.loops:
        lmask |= 1 << v
    return support_weights(g.without_loops()), lmask


def charpoly_basic_figure_form(g: Pseudograph) -> IntPolynomial:
    """Sum over basic figures of the loopless graph, each weighted by
    ``x**(p - |V u L|) (x-1)**|L - V|``."""
    p = g.order
    w, lmask = _stripped_weights(g)
    grouped: dict[tuple[int, int], int] = {}
    for t, wt in enumerate(w):
        if wt:
            key = (bin(t | lmask).count("1"), bin(lmask & ~t).count("1"))
            grouped[key] = grouped.get(key, 0) + wt
    total = IntPolynomial.zero()
    for (union, free_loops), wt in sorted(grouped.items()):
        total = total + (pow_x_minus_one(free_loops).shift(p - union) * wt)
    return total


def coefficient_basic_figure_form(g: Pseudograph, i: int) -> int:
    if not 0 <= i <= g.order:
        raise ValueError(f"index {i} outside 0..{g.order}")
    w, lmask = _stripped_weights(g)
    total = 0
    for t, wt in enumerate(w):
        if not wt:
            continue
        size = bin(t).count("1")
        union = bin(t | lmask).count("1")
        if size <= i <= union:
            free_loops = bin(lmask & ~t).count("1")
            total += (-1) ** (i - size) * wt * binom(free_loops, union - i)
    return total


def determinant_adjacency(g: Pseudograph) -> int:
    """``det A(G)`` from figures of ``G'`` that cover every loopless vertex."""
    w, lmask = _stripped_weights(g)
    need = ((1 << g.order) - 1) & ~lmask
    return sum(
        (-1) ** bin(t).count("1") * wt
        for t, wt in enumerate(w)
        if wt and t & need == need
    )


# -- vertex deletion -----------------------------------------------------

def cycles_through_avoiding(
    g: Pseudograph, v: int, avoid: Iterable[int] = ()
) -> list[Cycle]:
    avoid = set(avoid)
    if v in avoid:
        raise GraphError(f"vertex {v} is in the avoided set")
    return [c for c in enumerate_cycles(g) if v in c and avoid.isdisjoint(c)]


@lru_cache(maxsize=4096)
def _charpoly_recursive(g: Pseudograph) -> IntPolynomial:
    if g.order == 0:
        return IntPolynomial.one()
    return _vertex_deletion(g, [0], _charpoly_recursive)


def _vertex_deletion(g: Pseudograph, vs: Sequence[int], phi: Phi) -> IntPolynomial:
    k = len(vs)
    full = (1 << g.order) - 1
    masks = g.adjacency_masks()
    memo: dict[int, IntPolynomial] = {}

    def phi_minus(drop: int) -> IntPolynomial:
        # phi(G - drop) with drop a vertex bitmask
        if drop not in memo:
            memo[drop] = phi(g.delete_vertices(iter_bits(drop)))
        return memo[drop]

    # A cycle belongs to step i when v_{i+1} is the first listed vertex on it.
    pos = {v: i for i, v in enumerate(vs)}
    by_step: list[dict[int, int]] = [{} for _ in range(k)]
    for c in enumerate_cycles(g):
        first = min((pos[u] for u in c if u in pos), default=None)
        if first is not None:
            cm = sum(1 << u for u in c)
            by_step[first][cm] = by_step[first].get(cm, 0) + 1

    xmask = 0
    total = IntPolynomial.zero()
    for i, v in enumerate(vs):
        nxt = xmask | 1 << v
        term = IntPolynomial.zero()
        for u in iter_bits(masks[v] & ~xmask):
            term = term + phi_minus(nxt | 1 << u)
        if g.has_loop(v):
            # closed-neighbourhood self term; only a loop at v produces it
            term = term + phi_minus(nxt)
        for cm, cnt in by_step[i].items():
            term = term + phi_minus(xmask | cm) * (2 * cnt)
        total = total - term.shift(i)
        xmask = nxt
    assert xmask & ~full == 0
    return total + phi_minus(xmask).shift(k)


def charpoly_vertex_deletion(
    g: Pseudograph, vs: Sequence[int], leaf: str = "sachs"
) -> IntPolynomial:
    """Expand ``phi(G)`` by deleting ``vs[0], vs[1], ...`` in turn.

    ``leaf="recursive"`` computes every smaller polynomial by the
    single-vertex expansion again (exponential, memoised per subgraph).
    """
    vs = list(vs)
    _distinct_in_range(g, vs)
    phi = _charpoly_recursive if leaf == "recursive" else _leaf(leaf)
    return _vertex_deletion(g, vs, phi)


def charpoly_single_vertex(g: Pseudograph, v: int, leaf: str = "sachs") -> IntPolynomial:
    return charpoly_vertex_deletion(g, [v], leaf)


# -- loop removal --------------------------------------------------------

def charpoly_loops_removed(
    g: Pseudograph, vs: Sequence[int], leaf: str = "sachs"
) -> IntPolynomial:
    """Characteristic polynomial of ``g`` without the loops at ``vs``,
    built from ``phi(g)`` plus one mixed deletion term per removed loop."""
    vs = list(vs)
    _distinct_in_range(g, vs)
    for v in vs:
        if not g.has_loop(v):
            raise GraphError(f"vertex {v} carries no loop")
    phi = _leaf(leaf)
    total = phi(g)
    for i, v in enumerate(vs):
        total = total + phi(g.delete_loops(vs[:i]).delete_vertices([v]))
    return total
