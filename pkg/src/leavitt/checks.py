"""Paired-characterization cross-checks, run over corpus and random graphs.

Each check returns a list of failure messages for one graph (empty when the
check passes).  ``property_suite`` runs every check over a seeded sample and
collects counterexamples.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from itertools import chain, combinations
from pathlib import Path
from typing import Callable, Sequence

from . import closures, cycles, lie, monoid
from .graph import Graph, dump_graph, is_connected
from .randgraph import RandomGraphSpec, random_graph

BALLOON_MAX_VERTICES = 6
SERIES_MAX_VERTICES = 6


def _fail(cond: bool, msg: str) -> list[str]:
    return [] if cond else [msg]


def _singleton_ideals(g: Graph) -> bool:
    return all(closures.order_ideal_vertices(g, v) == {v} for v in g.vertices)


def _no_edge_between_distinct(g: Graph) -> bool:
    return all(e.src == e.dst for e in g.edges)


def check_solvable_pair(g: Graph, chars: Sequence[int]) -> list[str]:
    out = []
    for p in chars:
        a = lie.is_lie_solvable(g, p).verdict
        b = lie.is_lie_solvable_monoid(g, p).verdict
        out += _fail(a == b, f"p={p}: graph={a} monoid={b}")
    return out


def check_no_exit_gk(g: Graph, chars=()) -> list[str]:
    a, gk = cycles.is_no_exit(g), cycles.gk_dimension(g)
    return _fail(a == (gk <= 1), f"no_exit={a} gk={gk}")


def check_singleton_ideals(g: Graph, chars=()) -> list[str]:
    a, b = _singleton_ideals(g), _no_edge_between_distinct(g)
    return _fail(a == b, f"singleton_ideals={a} no_edges_between_distinct={b}")


def check_vertices_and_loops(g: Graph, chars=()) -> list[str]:
    a = cycles.is_disjoint_vertices_and_loops(g)
    b = cycles.gk_dimension(g) <= 1 and _singleton_ideals(g)
    return _fail(a == b, f"vertices_and_loops={a} gk<=1&singletons={b}")


def check_nilpotent_pair(g: Graph, chars=()) -> list[str]:
    a = lie.commutator_zero(g)
    b = cycles.gk_dimension(g) <= 1 and _singleton_ideals(g)
    return _fail(a == b, f"nilpotent graph={a} monoid={b}")


def _nonempty_subsets(items):
    return chain.from_iterable(combinations(items, k) for k in range(1, len(items) + 1))


def check_balloon_pair(g: Graph, chars=()) -> list[str]:
    if len(g.vertices) > BALLOON_MAX_VERTICES or not g.vertices or not is_connected(g):
        return []
    out = []
    for v in g.vertices:
        others = [w for w in g.vertices if w != v]
        for ws in _nonempty_subsets(others):
            a = lie.is_balloon(g, v, ws)
            b = lie.is_balloon_monoid(g, v, ws)
            if a != b:
                out.append(f"v={v} W={list(ws)}: graph={a} monoid={b}")
    return out


def check_disjoint_series_gk(g: Graph, chars=()) -> list[str]:
    if not g.vertices:
        return []
    a = cycles.has_disjoint_cycles(g)
    b = set(monoid.composition_series(g).types) <= {monoid.CYCLIC, monoid.NON_COMPARABLE}
    c = cycles.gk_dimension(g) < math.inf
    return _fail(a == b == c, f"disjoint={a} series_cyclic_or_noncomparable={b} gk_finite={c}")


def check_cyclic_series(g: Graph, chars=()) -> list[str]:
    if not g.vertices:
        return []
    sinks = any(g.is_sink(v) for v in g.vertices)
    a = cycles.has_disjoint_cycles(g) and not sinks
    b = all(t == monoid.CYCLIC for t in monoid.composition_series(g).types)
    return _fail(a == b, f"disjoint&no_sinks={a} all_cyclic={b}")


def check_sink_correspondence(g: Graph, chars=()) -> list[str]:
    sinks = sum(1 for v in g.vertices if g.is_sink(v))
    lat = closures.hsat_lattice(g)
    acyclic_min = sum(
        1 for h in lat.minimal_nonempty if not cycles.enumerate_cycles(_restrict(g, h))
    )
    return _fail(sinks == acyclic_min, f"sinks={sinks} minimal_acyclic_ideals={acyclic_min}")


def _restrict(g: Graph, hs) -> Graph:
    from .graph import restriction

    return restriction(g, hs)


def check_simplicity_implications(g: Graph, chars: Sequence[int]) -> list[str]:
    if not g.vertices or not is_connected(g):
        return []
    out = []
    for p in chars:
        for entry in lie.cross_check_simplicity(g, p):
            if entry["status"] == "violated":
                out.append(f"p={p}: implication {entry['check']} violated")
    return out


def check_lattice_methods(g: Graph, chars=()) -> list[str]:
    a = closures.lattice_brute_force(g, bound=max(16, len(g.vertices)))
    b = closures.lattice_generated(g)
    return _fail(set(a) == set(b), f"brute={len(a)} generated={len(b)} elements differ")


def check_solvable_gk(g: Graph, chars: Sequence[int]) -> list[str]:
    out = []
    for p in chars:
        if lie.is_lie_solvable(g, p).verdict:
            out += _fail(cycles.gk_dimension(g) <= 1, f"p={p}: solvable but gk>1")
    return out


def check_solvable_commutator_zero(g: Graph, chars: Sequence[int]) -> list[str]:
    out = []
    for p in chars:
        if p != 2:
            a, b = lie.is_lie_solvable(g, p).verdict, lie.commutator_zero(g)
            out += _fail(a == b, f"p={p}: solvable={a} commutator_zero={b}")
    return out


def check_nilpotent_solvable(g: Graph, chars: Sequence[int]) -> list[str]:
    out = []
    nil = lie.is_lie_nilpotent(g).verdict
    for p in chars:
        solv = lie.is_lie_solvable(g, p).verdict
        out += _fail(not nil or solv, f"p={p}: nilpotent but not solvable")
        if p != 2:
            out += _fail(nil == solv, f"p={p}: nilpotent={nil} solvable={solv}")
            bracket = lie.commutator_nilpotent(g, p)
            monoid_side = cycles.gk_dimension(g) <= 1 and _singleton_ideals(g)
            out += _fail(bracket == monoid_side, f"p={p}: [L,L] nilpotent={bracket} gk<=1&singletons={monoid_side}")
        if lie.commutator_nilpotent(g, p):
            out += _fail(cycles.gk_dimension(g) <= 1, f"p={p}: [L,L] nilpotent but gk>1")
    return out


def check_gk_shape(g: Graph, chars=()) -> list[str]:
    prof = cycles.gk_profile(g)
    out = []
    if cycles.is_no_exit(g):
        out += _fail(prof.disjoint_cycles, "no-exit graph with overlapping cycles")
    out += _fail((prof.gk < math.inf) == prof.disjoint_cycles, "gk finiteness differs from disjoint cycles")
    if prof.disjoint_cycles:
        out += _fail(prof.d2 <= prof.d1, f"d2={prof.d2} > d1={prof.d1}")
        if prof.d1 or prof.d2:
            out += _fail((prof.gk % 2 == 1) == (2 * prof.d1 - 1 > 2 * prof.d2), "gk parity")
    return out


def check_series_invariance(g: Graph, chars=()) -> list[str]:
    if not g.vertices or len(g.vertices) > SERIES_MAX_VERTICES:
        return []
    lengths = monoid.all_series_lengths(g)
    return _fail(len(lengths) == 1, f"series lengths vary with tie-breaking: {sorted(lengths)}")


def check_private_targets(g: Graph, chars=()) -> list[str]:
    """Structural private-target test against bounded incomparability in M_E.

    Compared only where the two are meant to agree: no-exit graphs without
    parallel edges, at source vertices lying on no cycle.
    """
    if not cycles.is_no_exit(g):
        return []
    if len({(e.src, e.dst) for e in g.edges}) != len(g.edges):
        return []
    on_cycle = {v for c in cycles.enumerate_cycles(g) for v in c.vertices}
    out = []
    for v in g.vertices:
        if g.in_edges[v] or v in on_cycle or not g.out_edges[v]:
            continue
        structural = lie.all_targets_private(g, v)
        bounded = True
        for e in g.out_edges[v]:
            for w in g.vertices:
                if w in (v, e.dst):
                    continue
                r = monoid.comparable_in_ME(g, e.dst, w, depth=12)
                if r is monoid.TriState.TRUE:
                    bounded = False
                elif r is monoid.TriState.UNKNOWN:
                    bounded = None
                    break
            if bounded is None:
                break
        if bounded is not None and bounded != structural:
            out.append(f"v={v}: structural={structural} bounded={bounded}")
    return out


CHECKS: dict[str, Callable[[Graph, Sequence[int]], list[str]]] = {
    "solvable-graph-vs-monoid": check_solvable_pair,
    "no-exit-iff-gk-at-most-1": check_no_exit_gk,
    "singleton-ideals-iff-no-edges-between": check_singleton_ideals,
    "vertices-and-loops-iff-gk-and-singletons": check_vertices_and_loops,
    "nilpotent-graph-vs-monoid": check_nilpotent_pair,
    "balloon-graph-vs-monoid": check_balloon_pair,
    "disjoint-iff-series-iff-finite-gk": check_disjoint_series_gk,
    "cyclic-series-iff-disjoint-no-sinks": check_cyclic_series,
    "sinks-match-minimal-acyclic-ideals": check_sink_correspondence,
    "simplicity-implications": check_simplicity_implications,
    "lattice-brute-vs-generated": check_lattice_methods,
    "solvable-implies-gk-at-most-1": check_solvable_gk,
    "solvable-iff-commutator-zero-odd-char": check_solvable_commutator_zero,
    "nilpotent-vs-solvable": check_nilpotent_solvable,
    "gk-shape": check_gk_shape,
    "series-length-invariance": check_series_invariance,
    "private-targets-vs-incomparability": check_private_targets,
}


def run_checks(g: Graph, chars: Sequence[int] = (0, 2, 3), names: Sequence[str] | None = None) -> dict[str, list[str]]:
    names = list(CHECKS) if names is None else names
    out = {}
    for name in names:
        try:
            out[name] = CHECKS[name](g, chars)
        except Exception as exc:  # a crash inside a check is a finding too
            out[name] = [f"raised {type(exc).__name__}: {exc}"]
    return out


def _graph_for(spec: RandomGraphSpec, i: int) -> Graph:
    return random_graph(replace(spec, seed=spec.seed * 1_000_003 + i))


def _run_one(args) -> tuple[int, str, dict[str, list[str]]]:
    spec, i, chars, names = args
    g = _graph_for(spec, i)
    return i, dump_graph(g), run_checks(g, chars, names)


def property_suite(
    n: int,
    spec: RandomGraphSpec,
    chars: Sequence[int] = (0, 2, 3),
    names: Sequence[str] | None = None,
    out_dir: str | Path | None = None,
    jobs: int = 1,
) -> dict:
    """Run the cross-checks over ``n`` seeded random graphs.

    Counterexamples are returned (and written to ``out_dir`` when given) as
    graph files in the line format.
    """
    if n < 1:
        raise ValueError("need at least one graph")
    names = list(CHECKS) if names is None else list(names)
    tasks = [(spec, i, tuple(chars), names) for i in range(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=16))
    else:
        results = [_run_one(t) for t in tasks]

    counts = {name: 0 for name in names}
    counterexamples = []
    for i, text, res in sorted(results):
        for name, failures in res.items():
            if failures:
                counts[name] += 1
                counterexamples.append({"check": name, "graph_index": i, "failures": failures, "graph": text})
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for cx in counterexamples:
            (out / f"{cx['check']}-{cx['graph_index']}.graph").write_text(cx["graph"], encoding="utf-8")
    return {
        "graphs": n,
        "seed": spec.seed,
        "chars": list(chars),
        "failures": counts,
        "counterexamples": counterexamples,
        "ok": not counterexamples,
    }
