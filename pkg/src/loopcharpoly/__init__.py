"""Exact characteristic polynomials of graphs with loops, computed several
independent ways, with unitary addition Cayley graphs as the showcase."""

from .graph import GraphBuilder, GraphError, Pseudograph, loads_graph, parse_graph
from .modular import charpoly_hessenberg
from .oracle import adjacency_matrix, charpoly_exact, charpoly_oracle, determinant_exact
from .polynomial import IntPolynomial, pow_x_minus_one, render
from .recursions import (
    charpoly_basic_figure_form,
    charpoly_loop_expansion,
    charpoly_loops_removed,
    charpoly_single_loop_removal,
    charpoly_single_vertex,
    charpoly_vertex_deletion,
    coefficient_basic_figure_form,
    coefficient_via_subsets,
    cycles_through_avoiding,
    determinant_adjacency,
)
from .sachs import (
    BasicFigure,
    charpoly_sachs,
    contribution_all_loops,
    contribution_loops_plus_cycle,
    contribution_loops_plus_edge,
    enumerate_basic_figures,
    enumerate_cycles,
)

__version__ = "0.1.0"
