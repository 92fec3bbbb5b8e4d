"""Classify finite directed graphs by properties of their Leavitt path algebras."""

from __future__ import annotations

from .closures import hsat_closure, hsat_lattice, is_hereditary_saturated, minimal_hsat_sets, order_ideal_vertices
from .cycles import enumerate_cycles, gk_dimension, gk_profile, has_disjoint_cycles, is_comet, is_no_exit
from .graph import Edge, Graph, GraphError, GraphParseError, load_graph, parse_graph, quotient_graph, restriction
from .lie import (
    is_balloon,
    is_balloon_monoid,
    is_lie_nilpotent,
    is_lie_simple,
    is_lie_solvable,
    is_lie_solvable_monoid,
    is_simple_lpa,
    one_in_commutator,
)
from .monoid import Element, TriState, bounded_equal, bounded_leq, composition_series
from .randgraph import RandomGraphSpec, random_graph
from .report import classify

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoized cycle, lattice and GK results (needed after patching internals)."""
    from . import closures, cycles

    cycles.enumerate_cycles.cache_clear()
    cycles.gk_profile.cache_clear()
    closures._lattice_cached.cache_clear()
