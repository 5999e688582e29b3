"""Pseudographs: simple graphs that may carry loops (never multi-edges).

Vertices are ``0..order-1``.  A :class:`Pseudograph` is a frozen value;
build one with :class:`GraphBuilder` or :meth:`Pseudograph.from_lists`.
Loops are kept apart from the edge set, so ``edge_count`` never counts
them and a loop never puts a vertex in its own open neighbourhood.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO


class GraphError(ValueError):
    """Malformed graph input (bad vertex, duplicate edge, missing loop...)."""


class GraphParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Pseudograph:
    order: int
    edges: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()
    _adj: tuple[frozenset[int], ...] = field(
        default=(), init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.order < 0:
            raise GraphError("order must be non-negative")
        edges = frozenset(_edge(u, v) for u, v in self.edges)
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"edge {{{u},{v}}} is a loop; use loops")
            self._check(u)
            self._check(v)
            adj[u].add(v)
            adj[v].add(u)
        loops = frozenset(self.loops)
        for v in loops:
            self._check(v)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "loops", loops)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.order):
            raise GraphError(f"vertex {v!r} out of range for order {self.order}")

    @classmethod
    def from_lists(
        cls, order: int, edges: Iterable[tuple[int, int]] = (), loops: Iterable[int] = ()
    ) -> Pseudograph:
        b = GraphBuilder(order)
        for u, v in edges:
            b.add_edge(u, v)
        for v in loops:
            b.add_loop(v)
        return b.freeze()

    @classmethod
    def empty(cls, order: int) -> Pseudograph:
        return cls(order)

    # -- queries ------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.order)

    def edge_count(self) -> int:
        return len(self.edges)

    def loop_set(self) -> frozenset[int]:
        return self.loops

    def loop_count(self) -> int:
        return len(self.loops)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def has_loop(self, v: int) -> bool:
        return v in self.loops

    def open_neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        """Number of non-loop edges at ``v``."""
        return len(self.open_neighborhood(v))

    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbours per vertex (loops excluded)."""
        return tuple(sum(1 << u for u in a) for a in self._adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    # -- derived graphs ------------------------------------------------

    def delete_vertices_mapped(
        self, xs: Iterable[int]
    ) -> tuple[Pseudograph, dict[int, int]]:
        """Induced subgraph on the complement of ``xs`` plus the old->new label map.

        Survivors keep their relative order and are relabelled ``0..``.
        """
        drop = set(xs)
        for v in drop:
            self._check(v)
        keep = [v for v in range(self.order) if v not in drop]
        return self._restrict(keep)

    def delete_vertices(self, xs: Iterable[int]) -> Pseudograph:
        return self.delete_vertices_mapped(xs)[0]

    def induced_subgraph(self, xs: Iterable[int]) -> Pseudograph:
        keep = set(xs)
        for v in keep:
            self._check(v)
        return self._restrict(sorted(keep))[0]

    def _restrict(self, keep: list[int]) -> tuple[Pseudograph, dict[int, int]]:
        if len(keep) == self.order:
            return self, {v: v for v in keep}
        relabel = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (relabel[u], relabel[v])
            for u, v in self.edges
            if u in relabel and v in relabel
        )
        loops = frozenset(relabel[v] for v in self.loops if v in relabel)
        return Pseudograph(len(keep), edges, loops), relabel

    def delete_loops(self, vs: Iterable[int]) -> Pseudograph:
        vs = set(vs)
        for v in vs:
            self._check(v)
            if v not in self.loops:
                raise GraphError(f"vertex {v} carries no loop")
        if not vs:
            return self
        return Pseudograph(self.order, self.edges, self.loops - vs)

    def without_loops(self) -> Pseudograph:
        return self.delete_loops(self.loops)

    def with_loops(self, vs: Iterable[int]) -> Pseudograph:
        return Pseudograph(self.order, self.edges, self.loops | frozenset(vs))

    def relabel(self, perm: list[int]) -> Pseudograph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("not a permutation of the vertex set")
        return Pseudograph(
            self.order,
            frozenset(_edge(perm[u], perm[v]) for u, v in self.edges),
            frozenset(perm[v] for v in self.loops),
        )

    # -- text format ---------------------------------------------------

    def to_text(self) -> str:
        lines = [f"p {self.order}"]
        lines += [f"e {u} {v}" for u, v in self.sorted_edges()]
        lines += [f"l {v}" for v in sorted(self.loops)]
        return "\n".join(lines) + "\n"


class GraphBuilder:
    """Mutable, single-owner accumulator for a :class:`Pseudograph`."""

    def __init__(self, order: int):
        if order < 0:
            raise GraphError("order must be non-negative")
        self.order = order
        self._edges: set[tuple[int, int]] = set()
        self._loops: set[int] = set()

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.order):
            raise GraphError(f"vertex {v!r} out of range for order {self.order}")

    def add_edge(self, u: int, v: int) -> GraphBuilder:
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"edge {{{u},{v}}} is a loop; use add_loop")
        e = _edge(u, v)
        if e in self._edges:
            raise GraphError(f"multiple edge {{{u},{v}}}")
        self._edges.add(e)
        return self

    def add_loop(self, v: int) -> GraphBuilder:
        self._check(v)
        if v in self._loops:
            raise GraphError(f"multiple loop at {v}")
        self._loops.add(v)
        return self

    def freeze(self) -> Pseudograph:
        return Pseudograph(self.order, frozenset(self._edges), frozenset(self._loops))


def mask_to_set(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def parse_graph(lines: Iterable[str]) -> Pseudograph:
    """Parse the line format: ``p <order>`` then ``e u v`` / ``l v`` lines."""
    builder: GraphBuilder | None = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            nums = [int(t) for t in tok[1:]]
        except ValueError:
            raise GraphParseError(lineno, f"non-integer field in {line!r}") from None
        if builder is None:
            if tok[0] != "p" or len(nums) != 1 or nums[0] < 0:
                raise GraphParseError(lineno, "expected 'p <order>' first")
            builder = GraphBuilder(nums[0])
            continue
        try:
            if tok[0] == "e" and len(nums) == 2:
                builder.add_edge(*nums)
            elif tok[0] == "l" and len(nums) == 1:
                builder.add_loop(nums[0])
            else:
                raise GraphParseError(lineno, f"unrecognised line {line!r}")
        except GraphParseError:
            raise
        except GraphError as exc:
            raise GraphParseError(lineno, str(exc)) from None
    if builder is None:
        raise GraphParseError(0, "missing 'p <order>' line")
    return builder.freeze()


def read_graph(fh: TextIO) -> Pseudograph:
    return parse_graph(fh)


def loads_graph(text: str) -> Pseudograph:
    return parse_graph(text.splitlines())


# Free-function spellings of the methods above.

def delete_vertices(g: Pseudograph, xs: Iterable[int]) -> Pseudograph:
    return g.delete_vertices(xs)


def delete_loops(g: Pseudograph, vs: Iterable[int]) -> Pseudograph:
    return g.delete_loops(vs)


def open_neighborhood(g: Pseudograph, v: int) -> frozenset[int]:
    return g.open_neighborhood(v)


def edge_count(g: Pseudograph) -> int:
    return g.edge_count()


def loop_set(g: Pseudograph) -> frozenset[int]:
    return g.loop_set()


def induced_subgraph(g: Pseudograph, xs: Iterable[int]) -> Pseudograph:
    return g.induced_subgraph(xs)
