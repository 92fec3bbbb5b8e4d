"""Cycles, structural graph classes, and the GK-dimension of L_K(E).

The GK-dimension is evaluated combinatorially as max(2*d1 - 1, 2*d2), where
d1 is the longest chain of cycles and d2 the longest chain whose last cycle
has an exit.  Graphs whose cycles are not pairwise disjoint have infinite
GK-dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import networkx as nx

from .graph import Edge, Graph, GraphError

INF = math.inf


@dataclass(frozen=True)
class Cycle:
    edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(e.src for e in self.edges)

    @property
    def is_loop(self) -> bool:
        return len(self.edges) == 1

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def has_exit(self, g: Graph) -> bool:
        own = set(self.edge_ids)
        return any(f.id not in own for v in self.vertices for f in g.out_edges[v])


def _canonical(g: Graph, edges: list[Edge]) -> tuple[Edge, ...]:
    idx = g.index
    start = min(range(len(edges)), key=lambda k: idx[edges[k].src])
    return tuple(edges[start:] + edges[:start])


@lru_cache(maxsize=4096)
def enumerate_cycles(g: Graph) -> tuple[Cycle, ...]:
    """All cycles up to rotation, each starting at its earliest-declared vertex.

    Vertex cycles come from Johnson's algorithm on the simple digraph; each is
    then expanded over the choices of parallel edges.
    """
    parallel: dict[tuple[str, str], list[Edge]] = {}
    for e in g.edges:
        parallel.setdefault((e.src, e.dst), []).append(e)
    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    dg.add_edges_from(parallel)
    found = []
    for vcycle in nx.simple_cycles(dg):
        hops = [(vcycle[k], vcycle[(k + 1) % len(vcycle)]) for k in range(len(vcycle))]
        for choice in product(*(parallel[h] for h in hops)):
            found.append(Cycle(_canonical(g, list(choice))))
    idx, eidx = g.index, g.edge_index
    found.sort(key=lambda c: (c.length, [idx[e.src] for e in c.edges], [eidx[e.id] for e in c.edges]))
    return tuple(found)


def has_disjoint_cycles(g: Graph) -> bool:
    owner: dict[str, int] = {}
    for k, c in enumerate(enumerate_cycles(g)):
        for v in c.vertices:
            if owner.setdefault(v, k) != k:
                return False
    return True


def is_no_exit(g: Graph) -> bool:
    return not any(c.has_exit(g) for c in enumerate_cycles(g))


def is_disjoint_vertices_and_loops(g: Graph) -> bool:
    for v in g.vertices:
        out, inc = g.out_edges[v], g.in_edges[v]
        if not out and not inc:
            continue
        if len(out) == 1 and len(inc) == 1 and out[0] == inc[0] and out[0].dst == v:
            continue
        return False
    return True


def _reaches_cycle(g: Graph, v: str, cycle_mask: int) -> bool:
    return bool(g.reach_masks[g.index[v]] & cycle_mask)


def is_comet(g: Graph) -> bool:
    """Exactly one cycle, reached from every vertex, and without exits."""
    if not g.vertices:
        raise GraphError("comet test is undefined for the empty graph")
    cycles = enumerate_cycles(g)
    if len(cycles) != 1 or cycles[0].has_exit(g):
        return False
    cm = g.mask(cycles[0].vertices)
    return all(_reaches_cycle(g, v, cm) for v in g.vertices)


def is_multiheaded_comet(g: Graph) -> bool:
    """Disjoint cycles, no exits, and every vertex reaches some cycle."""
    if not g.vertices:
        raise GraphError("comet test is undefined for the empty graph")
    cycles = enumerate_cycles(g)
    if not cycles or not has_disjoint_cycles(g) or not is_no_exit(g):
        return False
    cm = 0
    for c in cycles:
        cm |= g.mask(c.vertices)
    return all(_reaches_cycle(g, v, cm) for v in g.vertices)


# -- chains of cycles and GK-dimension ---------------------------------------------


@dataclass(frozen=True)
class CycleChainDag:
    cycles: tuple[Cycle, ...]
    arcs: frozenset  # pairs (i, j): cycle j reachable from cycle i
    has_exit: tuple[bool, ...]

    def longest_chains(self) -> tuple[int, int]:
        """(d1, d2): longest chain, and longest chain ending in a cycle with an exit."""
        n = len(self.cycles)
        pred = {j: [i for (i, b) in self.arcs if b == j] for j in range(n)}

        @lru_cache(maxsize=None)
        def ending_at(j: int) -> int:
            return 1 + max((ending_at(i) for i in pred[j]), default=0)

        d1 = max((ending_at(j) for j in range(n)), default=0)
        d2 = max((ending_at(j) for j in range(n) if self.has_exit[j]), default=0)
        return d1, d2


def cycle_chain_dag(g: Graph) -> CycleChainDag:
    cycles = enumerate_cycles(g)
    reach = g.reach_masks
    masks = [g.mask(c.vertices) for c in cycles]
    arcs = set()
    for i, c in enumerate(cycles):
        from_c = 0
        for v in c.vertices:
            from_c |= reach[g.index[v]]
        for j, dm in enumerate(masks):
            if i != j and masks[i] != dm and from_c & dm:
                arcs.add((i, j))
    return CycleChainDag(cycles, frozenset(arcs), tuple(c.has_exit(g) for c in cycles))


@dataclass(frozen=True)
class GkProfile:
    gk: float | int
    d1: int | None
    d2: int | None
    disjoint_cycles: bool
    no_exit: bool

    def to_json(self) -> dict:
        return {
            "d1": self.d1,
            "d2": self.d2,
            "gk": gk_to_json(self.gk),
            "disjoint_cycles": self.disjoint_cycles,
            "no_exit": self.no_exit,
        }


def gk_to_json(gk) -> int | str:
    return "inf" if gk == INF else int(gk)


@lru_cache(maxsize=4096)
def gk_profile(g: Graph) -> GkProfile:
    disjoint = has_disjoint_cycles(g)
    no_exit = is_no_exit(g)
    if not disjoint:
        return GkProfile(INF, None, None, False, no_exit)
    d1, d2 = cycle_chain_dag(g).longest_chains()
    return GkProfile(max(2 * d1 - 1, 2 * d2, 0), d1, d2, True, no_exit)


def gk_dimension(g: Graph) -> float | int:
    """GK-dimension of L_K(E): a non-negative int, or ``math.inf``."""
    return gk_profile(g).gk
