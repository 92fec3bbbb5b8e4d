"""Lie-theoretic verdicts for L_K(E) and its Lie bracket algebra [L_K(E), L_K(E)].

Each verdict is computed from graph data; where a talented-monoid
characterization exists it is implemented separately so the two can be
compared.  The field K enters only through its characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .closures import minimal_hsat_sets, order_ideal_vertices
from .cycles import (
    enumerate_cycles,
    gk_dimension,
    gk_to_json,
    is_comet,
    is_disjoint_vertices_and_loops,
    is_multiheaded_comet,
    is_no_exit,
)
from .graph import Graph, GraphError, edges_between, is_connected, restriction
from .linalg import check_char, in_span
from .monoid import is_T_simple, quotient_monoid_vertices


class InconsistencyError(RuntimeError):
    """Two characterizations that must agree gave different answers."""


@dataclass
class LieVerdict:
    verdict: bool
    branch: str
    witnesses: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict


# -- simplicity of L_K(E) ------------------------------------------------------------


def is_simple_lpa(g: Graph) -> LieVerdict:
    """L_K(E) is simple iff every vertex reaches every sink and every cycle, and every cycle has an exit."""
    if not g.vertices:
        raise GraphError("simplicity is undefined for the empty graph")
    reach = g.reach_masks
    sinks = [v for v in g.vertices if g.is_sink(v)]
    cycles = enumerate_cycles(g)
    for c in cycles:
        if not c.has_exit(g):
            return LieVerdict(False, "cycle-without-exit", {"cycle": list(c.edge_ids)})
    for v in g.vertices:
        rv = reach[g.index[v]]
        for s in sinks:
            if not rv >> g.index[s] & 1:
                return LieVerdict(False, "misses-sink", {"vertex": v, "sink": s})
        for c in cycles:
            if not rv & g.mask(c.vertices):
                return LieVerdict(False, "misses-cycle", {"vertex": v, "cycle": list(c.edge_ids)})
    return LieVerdict(True, "all-conditions")


def is_graded_simple(g: Graph) -> bool:
    return is_T_simple(g)


def commutator_zero(g: Graph) -> bool:
    """[L, L] = 0 iff E is a disjoint union of isolated vertices and loops."""
    return is_disjoint_vertices_and_loops(g)


# -- commutator subspace membership --------------------------------------------------


def relation_vectors(g: Graph) -> list[list[int]]:
    """delta_v - sum_{e in s^-1(v)} delta_{r(e)} for each regular vertex v."""
    rows = []
    for v in g.vertices:
        if g.is_sink(v):
            continue
        row = [0] * len(g.vertices)
        row[g.index[v]] += 1
        for e in g.out_edges[v]:
            row[g.index[e.dst]] -= 1
        rows.append(row)
    return rows


def commutator_span_membership(g: Graph, weights: Mapping[str, int | Fraction], p: int) -> bool:
    """Whether sum_v weights[v] * v lies in [L_K(E), L_K(E)]."""
    check_char(p)
    extra = set(weights) - set(g.vertices)
    if extra:
        raise GraphError(f"weights on unknown vertices {sorted(extra)}")
    target = [weights.get(v, 0) for v in g.vertices]
    return in_span(target, relation_vectors(g), p)


def one_in_commutator(g: Graph, p: int) -> bool:
    return commutator_span_membership(g, {v: 1 for v in g.vertices}, p)


# -- solvability and nilpotency -----------------------------------------------------------


def private_target(g: Graph, e) -> bool:
    """r(e) is a sink entered only by e, or carries a loop f with r^-1(r(e)) = {e, f}."""
    x = e.dst
    incoming = {f.id for f in g.in_edges[x]}
    if g.is_sink(x):
        return incoming == {e.id}
    return any(incoming == {e.id, f.id} for f in g.loops_at(x))


def all_targets_private(g: Graph, v: str) -> bool:
    return all(private_target(g, e) for e in g.out_edges[v])


def _short_cycle_vertices(g: Graph) -> set[str]:
    return {v for c in enumerate_cycles(g) if c.length <= 2 for v in c.vertices}


def is_lie_solvable(g: Graph, p: int) -> LieVerdict:
    """Graph-level criterion, split on whether char K = 2."""
    check_char(p)
    if p != 2:
        ok = is_disjoint_vertices_and_loops(g)
        return LieVerdict(ok, "char!=2:vertices-and-loops")
    if not is_no_exit(g):
        return LieVerdict(False, "char=2:has-exit")
    short = _short_cycle_vertices(g)
    for v in g.vertices:
        if g.is_sink(v) or v in short or all_targets_private(g, v):
            continue
        return LieVerdict(False, "char=2:vertex-condition", {"vertex": v})
    return LieVerdict(True, "char=2:no-exit-and-vertex-condition")


def _minimal_noncomparable_at(g: Graph, v: str, ideal: frozenset, minimal: list[frozenset]) -> bool:
    # sinks correspond one-to-one to minimal non-comparable ideals; v must be the matched sink
    if ideal not in minimal or not g.is_sink(v):
        return False
    return not enumerate_cycles(restriction(g, ideal))


def _short_cyclic_at(g: Graph, v: str, ideal: frozenset) -> tuple[bool, int | None]:
    sub = restriction(g, ideal)
    if not is_multiheaded_comet(sub):
        return False, None
    lengths = [c.length for c in enumerate_cycles(sub) if v in c.vertices]
    if not lengths:
        return False, None
    return min(lengths) <= 2, min(lengths)


def is_lie_solvable_monoid(g: Graph, p: int) -> LieVerdict:
    """Talented-monoid criterion: GK-dimension at most 1 plus a condition on each <v>."""
    check_char(p)
    gk = gk_dimension(g)
    if gk > 1:
        return LieVerdict(False, "gk>1", {"gk": gk_to_json(gk)})
    if p != 2:
        for v in g.vertices:
            ideal = order_ideal_vertices(g, v)
            if ideal != {v}:
                return LieVerdict(False, "char!=2:ideal-not-singleton", {"vertex": v, "ideal": g.ordered(ideal)})
        return LieVerdict(True, "char!=2:gk<=1-and-singleton-ideals")
    minimal = minimal_hsat_sets(g)
    for v in g.vertices:
        ideal = order_ideal_vertices(g, v)
        if _minimal_noncomparable_at(g, v, ideal, minimal):
            continue
        short, cycle_len = _short_cyclic_at(g, v, ideal)
        if short:
            continue
        if all_targets_private(g, v):
            continue
        return LieVerdict(
            False,
            "char=2:ideal-condition",
            {"vertex": v, "ideal_size": len(ideal), "cycle_length": cycle_len},
        )
    return LieVerdict(True, "char=2:gk<=1-and-ideal-condition")


def is_lie_nilpotent(g: Graph) -> LieVerdict:
    """Lie nilpotency, computed both at graph level and via GK-dimension and <v>."""
    by_graph = is_disjoint_vertices_and_loops(g)
    by_monoid = gk_dimension(g) <= 1 and all(order_ideal_vertices(g, v) == {v} for v in g.vertices)
    if by_graph != by_monoid:
        raise InconsistencyError(f"nilpotency: graph={by_graph} monoid={by_monoid} on {g.name or g}")
    return LieVerdict(by_graph, "vertices-and-loops")


def commutator_nilpotent(g: Graph, p: int) -> bool:
    """Lie nilpotency of [L, L], which coincides with Lie solvability of L."""
    return is_lie_solvable(g, p).verdict


# -- balloons -----------------------------------------------------------------------------


def _balloon_args(g: Graph, v: str, ws: Iterable[str]) -> frozenset:
    ws = g.check_subset(ws)
    if v not in g.index:
        raise GraphError(f"unknown vertex {v}")
    if not is_connected(g):
        raise GraphError("balloons are defined for connected graphs")
    if not ws:
        raise GraphError("balloon base W must be nonempty")
    if v in ws:
        raise GraphError("balloon vertex must lie outside W")
    return ws


def is_balloon(g: Graph, v: str, ws: Iterable[str]) -> bool:
    ws = _balloon_args(g, v, ws)
    loops = g.loops_at(v)
    if not loops:
        return False
    into_w = edges_between(g, {v}, ws)
    if not into_w:
        return False
    out = {e.id for e in g.out_edges[v]}
    inc = {e.id for e in g.in_edges[v]}
    return any(out == {c.id} | into_w and inc == {c.id} for c in loops)


def is_balloon_monoid(g: Graph, v: str, ws: Iterable[str]) -> bool:
    from .closures import is_hereditary_saturated

    ws = _balloon_args(g, v, ws)
    rest = g.all - {v}
    if not is_hereditary_saturated(g, rest):
        return False
    if {e.dst for e in g.out_edges[v]} - ws != {v}:
        return False
    q = quotient_monoid_vertices(g, rest)
    return is_T_simple(q) and is_comet(q)


# -- Lie simplicity ---------------------------------------------------------------------------


def simple_core(g: Graph) -> frozenset | None:
    """Intersection of all nonempty hsat sets, or None when it is empty."""
    if not g.vertices or not is_connected(g):
        raise GraphError("simple core is defined for nonempty connected graphs")
    minimal = minimal_hsat_sets(g)
    return minimal[0] if len(minimal) == 1 else None


def is_lie_simple(g: Graph, p: int) -> LieVerdict:
    """Simplicity of [L_K(E), L_K(E)] for a finite connected graph.

    Branch A: L_K(E) simple, decided by whether 1 lies in [L, L].
    Branch B: otherwise, every vertex outside the simple core W must be a
    balloon over W with the weight of its W-targets inside [L_K(W), L_K(W)].
    The zero Lie algebra is not counted as simple.
    """
    check_char(p)
    if not g.vertices or not is_connected(g):
        raise GraphError("Lie simplicity needs a nonempty connected graph; classify components separately")
    zero = commutator_zero(g)
    if is_simple_lpa(g):
        one_in = one_in_commutator(g, p)
        wit = {"one_in_commutator": one_in}
        if zero:
            wit["zero_algebra"] = True
        return LieVerdict(not one_in and not zero, "A", wit)

    core = simple_core(g)
    wit: dict = {"W": g.ordered(core) if core else None}
    if zero:
        wit["zero_algebra"] = True
        return LieVerdict(False, "B", wit)
    if core is None:
        wit["failed"] = "no-simple-core"
        return LieVerdict(False, "B", wit)
    sub = restriction(g, core)
    sub_simple = is_simple_lpa(sub).verdict
    wit["W_simple"] = sub_simple
    outside = [v for v in g.vertices if v not in core]
    balloons = {v: is_balloon(g, v, core) for v in outside}
    wit["balloons"] = balloons
    members = {}
    for v in outside:
        targets = {e.dst for e in g.out_edges[v] if e.dst in core}
        members[v] = commutator_span_membership(sub, {w: 1 for w in targets}, p)
    wit["targets_in_commutator"] = members
    verdict = sub_simple and all(balloons.values()) and all(members.values())
    if verdict and is_comet(sub):
        # <W> must then be a minimal non-cyclic ideal
        wit["core_cyclic_violation"] = True
    return LieVerdict(verdict, "B", wit)


def cross_check_simplicity(g: Graph, p: int) -> list[dict]:
    """Check the implications tying Lie simplicity, graded simplicity and simplicity together."""
    simple = is_simple_lpa(g).verdict
    graded = is_graded_simple(g)
    try:
        lie = is_lie_simple(g, p).verdict
    except GraphError:
        return [{"check": name, "status": "skipped: disconnected"} for name in ("a", "b", "c")]
    one_in = one_in_commutator(g, p)
    out = [
        {"check": "a", "status": "ok" if not (lie and graded) or simple else "violated"},
        {"check": "b", "status": "ok" if not lie or graded == simple else "violated"},
    ]
    if commutator_zero(g):
        out.append({"check": "c", "status": "vacuous: zero commutator"})
    else:
        holds = (lie and graded) == (simple and not one_in)
        out.append({"check": "c", "status": "ok" if holds else "violated"})
    return out
