"""Run every characteristic-polynomial method on one graph and compare."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import Pseudograph
from .oracle import charpoly_oracle
from .polynomial import IntPolynomial, first_difference
from .recursions import (
    charpoly_basic_figure_form,
    charpoly_loop_expansion,
    charpoly_vertex_deletion,
)
from .sachs import charpoly_sachs, check_cap

METHODS = ("sachs", "loop-expansion", "figure-form", "vertex-deletion", "oracle")


def compute(g: Pseudograph, method: str, vertex_order: Sequence[int] | None = None,
            force: bool = False) -> IntPolynomial:
    if method == "oracle":
        return charpoly_oracle(g)
    check_cap(g, force)
    if method == "sachs":
        return charpoly_sachs(g, force=True)
    if method == "loop-expansion":
        return charpoly_loop_expansion(g)
    if method == "figure-form":
        return charpoly_basic_figure_form(g)
    if method == "vertex-deletion":
        vs = list(range(g.order)) if vertex_order is None else list(vertex_order)
        return charpoly_vertex_deletion(g, vs)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


@dataclass
class MethodReport:
    order: int
    polynomials: dict[str, IntPolynomial] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.polynomials.values())) <= 1

    def first_disagreement(self) -> tuple[str, str, int] | None:
        """(method, method, lowest differing degree) for the first mismatched pair."""
        for a, b in combinations(self.polynomials, 2):
            d = first_difference(self.polynomials[a], self.polynomials[b])
            if d is not None:
                return a, b, d
        return None

    def as_dict(self) -> dict:
        bad = self.first_disagreement()
        return {
            "n": self.order,
            "agree": self.agree,
            "methods": {k: p.to_json_coeffs() for k, p in self.polynomials.items()},
            "disagreement": None
            if bad is None
            else {"methods": [bad[0], bad[1]], "degree": bad[2]},
        }


def run_all(g: Pseudograph, vertex_orders: Sequence[Sequence[int]] = (),
            force: bool = False) -> MethodReport:
    """Every method once; vertex deletion once per entry of ``vertex_orders``
    (default: the natural order)."""
    report = MethodReport(g.order)
    for m in METHODS:
        if m == "vertex-deletion":
            orders = list(vertex_orders) or [list(range(g.order))]
            for j, vs in enumerate(orders):
                key = m if len(orders) == 1 else f"{m}[{j}]"
                report.polynomials[key] = compute(g, m, vs, force=force)
        else:
            report.polynomials[m] = compute(g, m, force=force)
    return report


def random_pseudograph(
    order: int, edge_density: float, loop_density: float, rng: random.Random
) -> Pseudograph:
    edges = [
        (u, v) for u in range(order) for v in range(u + 1, order)
        if rng.random() < edge_density
    ]
    loops = [v for v in range(order) if rng.random() < loop_density]
    return Pseudograph.from_lists(order, edges, loops)


def random_suite(
    count: int,
    seed: int,
    max_order: int = 10,
    densities: Sequence[float] = (0.2, 0.5, 0.8),
    loop_density: float = 0.3,
) -> list[Pseudograph]:
    """Seeded batch cycling through the edge densities; orders 1..max_order."""
    rng = random.Random(seed)
    return [
        random_pseudograph(rng.randint(1, max_order), densities[i % len(densities)],
                           loop_density, rng)
        for i in range(count)
    ]
