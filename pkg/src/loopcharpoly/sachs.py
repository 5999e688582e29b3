"""Basic figures and the Sachs coefficient formula for graphs with loops.

A basic figure is a vertex-disjoint union of components, each an edge, a
cycle of length >= 3, or a loop.  Its weight is ``(-1)**k * 2**c`` (k
components, c of them cycles) and it contributes that weight to the
coefficient of ``x**(p - |V|)``.

Two evaluation routes live here:

* :func:`enumerate_basic_figures` materialises every figure, one at a
  time, for inspection and per-shape counting.
* :func:`support_weights` sums the figure weights grouped by the vertex
  set they cover, without materialising figures; cycles enter through
  per-vertex-set cycle counts.  :func:`charpoly_sachs` is built on it.

Both are exponential.  Graphs above :data:`DEFAULT_ORDER_CAP` vertices are
refused unless ``force=True``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .graph import Pseudograph, iter_bits
from .polynomial import IntPolynomial

DEFAULT_ORDER_CAP = 24

Cycle = tuple[int, ...]


class SizeCapExceeded(ValueError):
    pass


def check_cap(g: Pseudograph, force: bool = False, cap: int = DEFAULT_ORDER_CAP) -> None:
    if g.order > cap and not force:
        raise SizeCapExceeded(
            f"graph has {g.order} vertices; enumeration is capped at {cap} (use force)"
        )


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# -- cycles -------------------------------------------------------------

def canonical_cycle(seq: list[int] | tuple[int, ...]) -> Cycle:
    """Rotate to start at the minimum vertex; orient so the 2nd vertex < last."""
    seq = list(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def _cycles_from(g: Pseudograph, s: int, masks: tuple[int, ...]) -> Iterator[Cycle]:
    higher = ~((1 << (s + 1)) - 1)
    path = [s]

    def dfs(v: int, used: int) -> Iterator[Cycle]:
        for u in iter_bits(masks[v] & higher & ~used):
            path.append(u)
            if len(path) >= 3 and masks[u] >> s & 1 and path[1] < u:
                yield tuple(path)
            yield from dfs(u, used | 1 << u)
            path.pop()

    yield from dfs(s, 1 << s)


def enumerate_cycles(g: Pseudograph) -> list[Cycle]:
    """All simple cycles of length >= 3, one canonical tuple each.

    Ordered by length, then lexicographically.
    """
    return list(_cycles_cached(g))


@lru_cache(maxsize=256)
def _cycles_cached(g: Pseudograph) -> tuple[Cycle, ...]:
    masks = g.adjacency_masks()
    found = [c for s in range(g.order) for c in _cycles_from(g, s, masks)]
    found.sort(key=lambda c: (len(c), c))
    return tuple(found)


def cycles_of_length(g: Pseudograph, n: int) -> list[Cycle]:
    return [c for c in _cycles_cached(g) if len(c) == n]


# -- explicit figures ---------------------------------------------------

@dataclass(frozen=True)
class BasicFigure:
    edge_components: tuple[tuple[int, int], ...] = ()
    cycle_components: tuple[Cycle, ...] = ()
    loop_components: tuple[int, ...] = ()

    @property
    def vertices(self) -> frozenset[int]:
        vs = set(self.loop_components)
        for e in self.edge_components:
            vs.update(e)
        for c in self.cycle_components:
            vs.update(c)
        return frozenset(vs)

    @property
    def order(self) -> int:
        return (
            2 * len(self.edge_components)
            + sum(len(c) for c in self.cycle_components)
            + len(self.loop_components)
        )

    @property
    def components(self) -> int:
        return len(self.edge_components) + len(self.cycle_components) + len(self.loop_components)

    @property
    def cycles(self) -> int:
        return len(self.cycle_components)

    @property
    def weight(self) -> int:
        return (-1) ** self.components * 2 ** self.cycles

    @property
    def shape(self) -> tuple[int, tuple[int, ...], int]:
        """(#edges, sorted cycle lengths, #loops)."""
        return (
            len(self.edge_components),
            tuple(sorted(len(c) for c in self.cycle_components)),
            len(self.loop_components),
        )

    def validate(self, g: Pseudograph) -> None:
        seen: set[int] = set()
        parts = (
            [set(e) for e in self.edge_components]
            + [set(c) for c in self.cycle_components]
            + [{v} for v in self.loop_components]
        )
        for part in parts:
            if seen & part:
                raise ValueError("components overlap")
            seen |= part
        for u, v in self.edge_components:
            if not g.has_edge(u, v):
                raise ValueError(f"{u}-{v} is not an edge")
        for c in self.cycle_components:
            if len(c) < 3:
                raise ValueError("cycle shorter than 3")
            for a, b in zip(c, c[1:] + c[:1]):
                if not g.has_edge(a, b):
                    raise ValueError(f"cycle {c} uses a non-edge")
        for v in self.loop_components:
            if not g.has_loop(v):
                raise ValueError(f"no loop at {v}")


def _cycles_by_min(g: Pseudograph) -> list[list[tuple[Cycle, int]]]:
    by_min: list[list[tuple[Cycle, int]]] = [[] for _ in range(g.order)]
    for c in _cycles_cached(g):
        m = 0
        for v in c:
            m |= 1 << v
        by_min[c[0]].append((c, m))
    return by_min


def enumerate_basic_figures(
    g: Pseudograph,
    max_order: int | None = None,
    max_nonloop: int | None = None,
    force: bool = False,
) -> Iterator[BasicFigure]:
    """Yield every basic figure with at most ``max_order`` vertices, once each.

    ``max_nonloop`` optionally bounds the number of edge + cycle components,
    which keeps per-shape checks cheap on dense graphs.  The empty figure is
    always produced first.
    """
    check_cap(g, force)
    p = g.order
    limit = p if max_order is None else min(max_order, p)
    nl_limit = p if max_nonloop is None else max_nonloop
    masks = g.adjacency_masks()
    by_min = _cycles_by_min(g)
    loops = g.loops
    edges: list[tuple[int, int]] = []
    cycles: list[Cycle] = []
    lps: list[int] = []

    def rec(v: int, used: int, size: int) -> Iterator[BasicFigure]:
        while v < p and used >> v & 1:
            v += 1
        if v >= p or size == limit:
            yield BasicFigure(tuple(edges), tuple(cycles), tuple(lps))
            return
        yield from rec(v + 1, used, size)
        if v in loops and size + 1 <= limit:
            lps.append(v)
            yield from rec(v + 1, used | 1 << v, size + 1)
            lps.pop()
        if len(edges) + len(cycles) >= nl_limit:
            return
        if size + 2 <= limit:
            for u in iter_bits(masks[v] & ~used & ~((1 << (v + 1)) - 1)):
                edges.append((v, u))
                yield from rec(v + 1, used | 1 << v | 1 << u, size + 2)
                edges.pop()
        for c, cm in by_min[v]:
            if size + len(c) <= limit and not cm & used:
                cycles.append(c)
                yield from rec(v + 1, used | cm, size + len(c))
                cycles.pop()

    yield from rec(0, 0, 0)


def count_figures_by_order(g: Pseudograph, max_order: int | None = None) -> dict[int, int]:
    counts = Counter(f.order for f in enumerate_basic_figures(g, max_order))
    return dict(sorted(counts.items()))


def count_figures_by_shape(
    g: Pseudograph, max_order: int | None = None
) -> dict[int, Counter]:
    """order -> Counter of shape (#edges, #cycles, #loops)."""
    out: dict[int, Counter] = defaultdict(Counter)
    for f in enumerate_basic_figures(g, max_order):
        out[f.order][(len(f.edge_components), f.cycles, len(f.loop_components))] += 1
    return dict(sorted(out.items()))


def signed_sum_by_order(figures) -> dict[int, int]:
    acc: dict[int, int] = defaultdict(int)
    for f in figures:
        acc[f.order] += f.weight
    return dict(acc)


def charpoly_from_figures(g: Pseudograph, force: bool = False) -> IntPolynomial:
    """Sachs sum taken literally, one figure at a time (slow)."""
    p = g.order
    c = [0] * (p + 1)
    for f in enumerate_basic_figures(g, force=force):
        c[p - f.order] += f.weight
    return IntPolynomial(c)


def sachs_coefficient(g: Pseudograph, i: int) -> int:
    """Coefficient of ``x**(p-i)``: signed sum over figures of exactly order ``i``."""
    if not 0 <= i <= g.order:
        raise ValueError(f"index {i} outside 0..{g.order}")
    return sum(f.weight for f in enumerate_basic_figures(g, max_order=i) if f.order == i)


# -- support-grouped evaluation -----------------------------------------

def cycle_counts_by_support(g: Pseudograph) -> list[dict[int, int]]:
    """For each vertex s: {vertex mask: number of cycles on exactly that set, min s}.

    Counts come from a dynamic programme over directed paths that start at
    the smallest vertex of the set; each cycle is closed twice (once per
    direction) and halved at the end.
    """
    masks = g.adjacency_masks()
    out: list[dict[int, int]] = []
    for s in range(g.order):
        higher = ~((1 << (s + 1)) - 1)
        closed: dict[int, int] = defaultdict(int)
        layer: dict[tuple[int, int], int] = {(1 << s, s): 1}
        length = 1
        while layer:
            nxt: dict[tuple[int, int], int] = defaultdict(int)
            for (m, e), cnt in layer.items():
                if length >= 3 and masks[e] >> s & 1:
                    closed[m] += cnt
                for u in iter_bits(masks[e] & higher & ~m):
                    nxt[(m | 1 << u, u)] += cnt
            layer = nxt
            length += 1
        out.append({m: c // 2 for m, c in closed.items()})
    return out


def support_weights(g: Pseudograph) -> list[int]:
    """``w[T]`` = sum of ``(-1)**k 2**c`` over basic figures covering exactly ``T``.

    The component holding the smallest vertex of ``T`` is split off: a loop,
    an edge to another vertex of ``T``, or a cycle inside ``T``.
    """
    p = g.order
    masks = g.adjacency_masks()
    loopmask = 0
    for v in g.loops:
        loopmask |= 1 << v
    cyc = cycle_counts_by_support(g)
    cyc_items = [list(d.items()) for d in cyc]
    w = [0] * (1 << p)
    w[0] = 1
    for t in range(1, 1 << p):
        v = (t & -t).bit_length() - 1
        rest = t ^ (1 << v)
        total = 0
        if loopmask >> v & 1:
            total -= w[rest]
        nb = masks[v] & rest
        while nb:
            low = nb & -nb
            total -= w[rest ^ low]
            nb ^= low
        hv = cyc[v]
        if hv:
            if len(hv) <= 1 << bin(rest).count("1"):
                for cm, cnt in cyc_items[v]:
                    if cm & t == cm:
                        total -= 2 * cnt * w[t ^ cm]
            else:
                sub = rest
                while sub:
                    cnt = hv.get(sub | 1 << v)
                    if cnt:
                        total -= 2 * cnt * w[rest ^ sub]
                    sub = (sub - 1) & rest
        w[t] = total
    return w


@lru_cache(maxsize=4096)
def _sachs_cached(g: Pseudograph) -> IntPolynomial:
    p = g.order
    c = [0] * (p + 1)
    for t, wt in enumerate(support_weights(g)):
        if wt:
            c[p - bin(t).count("1")] += wt
    return IntPolynomial(c)


def charpoly_sachs(g: Pseudograph, force: bool = False) -> IntPolynomial:
    """Characteristic polynomial of ``g`` from its basic figures (loops allowed)."""
    check_cap(g, force)
    return _sachs_cached(g)


# -- closed-form contributions -----------------------------------------

def contribution_all_loops(m: int, k: int) -> int:
    """Signed count of order-``k`` figures made of ``k`` loops, given ``m`` loops."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return (-1) ** k * binom(m, k)


def contribution_loops_plus_edge(g: Pseudograph, k: int) -> int:
    """Signed count of order-``k`` figures made of ``k-2`` loops and one edge."""
    if k < 3:
        raise ValueError("k must be at least 3")
    m = g.loop_count()
    q = g.edge_count()
    nsum = sum(g.degree(v) for v in g.loops)
    inner = g.induced_subgraph(g.loops).edge_count()
    return (-1) ** (k - 1) * (
        binom(m, k - 2) * q + binom(m - 2, k - 4) * inner - binom(m - 1, k - 3) * nsum
    )


def contribution_loops_plus_cycle(g: Pseudograph, k: int, n: int) -> int:
    """Signed count of order-``k`` figures made of ``k-n`` loops and one ``n``-cycle.

    This is ``(-1)**(k-n+1)`` times the number of such figures.  Their share
    of the coefficient of ``x**(p-k)`` is twice this, since the cycle
    contributes a factor 2 to each figure's weight.
    """
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    if k < n:
        raise ValueError("k must be at least n")
    loops = sorted(g.loops)
    total = 0
    cyc_sets = [frozenset(c) for c in cycles_of_length(g, n)]
    for chosen in combinations(loops, k - n):
        total += sum(1 for cs in cyc_sets if cs.isdisjoint(chosen))
    return (-1) ** (k - n + 1) * total


def contribution_loops_plus_cycle_fast(g: Pseudograph, k: int, n: int) -> int:
    """Same value as :func:`contribution_loops_plus_cycle`, counted per cycle."""
    if n < 3 or k < n:
        raise ValueError("need n >= 3 and k >= n")
    m = g.loop_count()
    total = sum(
        binom(m - len(g.loops.intersection(c)), k - n) for c in cycles_of_length(g, n)
    )
    return (-1) ** (k - n + 1) * total
