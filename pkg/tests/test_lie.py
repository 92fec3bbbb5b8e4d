from __future__ import annotations

import pytest
from conftest import G, graphs, union
from hypothesis import given, settings

from leavitt.closures import order_ideal_vertices
from leavitt.cycles import gk_dimension, is_no_exit
from leavitt.graph import Graph, GraphError, is_connected
from leavitt.lie import (
    InconsistencyError,
    all_targets_private,
    commutator_span_membership,
    commutator_zero,
    cross_check_simplicity,
    is_balloon,
    is_balloon_monoid,
    is_graded_simple,
    is_lie_nilpotent,
    is_lie_simple,
    is_lie_solvable,
    is_lie_solvable_monoid,
    is_simple_lpa,
    one_in_commutator,
    relation_vectors,
    simple_core,
)


def test_simple_lpa_examples():
    assert is_simple_lpa(G("G_rose2"))
    assert not is_simple_lpa(G("G_loop"))
    v = is_simple_lpa(G("G_toep"))
    assert not v and v.branch == "misses-cycle" and v.witnesses["vertex"] == "w"
    assert is_simple_lpa(G("G_pt"))
    with pytest.raises(GraphError):
        is_simple_lpa(Graph((), ()))


def test_graded_simple_examples():
    assert is_graded_simple(G("G_rose2"))
    assert is_graded_simple(G("G_loop"))
    assert not is_graded_simple(G("G_toep"))


def test_commutator_zero_examples():
    assert commutator_zero(G("G_pt"))
    assert commutator_zero(G("G_loop"))
    assert not commutator_zero(G("G_2cycle"))


def test_relation_vectors():
    assert relation_vectors(G("G_rose3")) == [[-2]]
    assert relation_vectors(G("G_toep")) == [[0, -1]]
    assert relation_vectors(G("G_pt")) == []


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_rose_commutator(n, p):
    # the only relation vector is (1 - n) delta_u
    expected = (n - 1) % p != 0 if p else True
    assert one_in_commutator(G(f"G_rose{n}"), p) == expected


def test_span_membership_edge_cases():
    g = G("G_rose3")
    assert commutator_span_membership(g, {}, 2)
    assert not commutator_span_membership(G("G_pt"), {"u": 1}, 3)
    with pytest.raises(GraphError):
        commutator_span_membership(g, {"zz": 1}, 0)
    with pytest.raises(ValueError):
        commutator_span_membership(g, {"u": 1}, 4)


def test_solvable_examples():
    assert is_lie_solvable(G("G_2cycle"), 2)
    assert not is_lie_solvable(G("G_2cycle"), 3)
    assert is_lie_solvable(G("G_sinkfan"), 2)
    assert not is_lie_solvable(G("G_sinkfan"), 0)
    for p in (0, 2, 3):
        assert not is_lie_solvable(G("G_toep"), p)


def test_solvable_monoid_examples():
    v = is_lie_solvable_monoid(G("G_2cycle"), 2)
    assert v and v.branch.startswith("char=2")
    assert is_lie_solvable_monoid(union("G_loop", "G_pt"), 5)
    v = is_lie_solvable_monoid(G("G_2chain"), 0)
    assert not v and v.branch == "gk>1"


def test_solvable_monoid_counterexamples_to_literal_reading():
    # v -> s <- x: <v> is not minimal, and v's target is not private
    g = Graph.build(["v", "s", "x"], [("a", "v", "s"), ("b", "x", "s")])
    assert is_lie_solvable(g, 2).verdict == is_lie_solvable_monoid(g, 2).verdict == False  # noqa: E712
    # v => w with a loop at w: <v> has two vertices but the cycle through v does not exist
    g = Graph.build(["v", "w"], [("a", "v", "w"), ("b", "v", "w"), ("c", "w", "w")])
    assert is_lie_solvable(g, 2).verdict == is_lie_solvable_monoid(g, 2).verdict == False  # noqa: E712


def test_private_targets():
    assert all_targets_private(G("G_sinkfan"), "v")
    assert all_targets_private(G("G_2sink"), "v")
    g = Graph.build(["v", "s", "x"], [("a", "v", "s"), ("b", "x", "s")])
    assert not all_targets_private(g, "v")


def test_nilpotent_examples():
    assert is_lie_nilpotent(G("G_loop"))
    assert not is_lie_nilpotent(G("G_2cycle"))
    assert is_lie_nilpotent(G("G_pt"))


def test_nilpotent_detects_disagreement(monkeypatch):
    import leavitt.lie as lie

    monkeypatch.setattr(lie, "is_disjoint_vertices_and_loops", lambda g: False)
    with pytest.raises(InconsistencyError):
        lie.is_lie_nilpotent(G("G_loop"))


def test_balloon_examples():
    assert is_balloon(G("G_balloon"), "v", {"u"})
    assert is_balloon(G("G_toep"), "u", {"w"})
    with pytest.raises(GraphError):
        is_balloon(G("G_balloon"), "v", {"v"})
    with pytest.raises(GraphError):
        is_balloon(G("G_balloon"), "v", set())
    with pytest.raises(GraphError):
        is_balloon(union("G_loop", "G_loop"), "0.u", {"1.u"})


def test_balloon_monoid_examples():
    assert is_balloon_monoid(G("G_balloon"), "v", {"u"})
    assert is_balloon_monoid(G("G_toep"), "u", {"w"})
    assert not is_balloon_monoid(G("G_2cycle"), "u", {"v"})


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=5, max_edges=8))
def test_balloon_characterizations_agree(g):
    from itertools import combinations

    if not is_connected(g):
        return
    for v in g.vertices:
        rest = [w for w in g.vertices if w != v]
        for k in range(1, len(rest) + 1):
            for ws in combinations(rest, k):
                assert is_balloon(g, v, ws) == is_balloon_monoid(g, v, ws)


def test_simple_core_examples():
    assert simple_core(G("G_balloon")) == {"u"}
    assert simple_core(G("G_2sink")) is None
    assert simple_core(G("G_rose2")) == {"u"}


def test_lie_simple_examples():
    assert is_lie_simple(G("G_rose3"), 2)
    assert not is_lie_simple(G("G_rose2"), 0)
    for p in (0, 2, 3):
        v = is_lie_simple(G("G_balloon"), p)
        assert v and v.branch == "B" and v.witnesses["W"] == ["u"]
    for p in (0, 2, 3, 5):
        v = is_lie_simple(G("G_loop"), p)
        assert not v and v.witnesses["zero_algebra"]
    with pytest.raises(GraphError):
        is_lie_simple(union("G_loop", "G_pt"), 0)


def test_cross_check_examples():
    assert all(c["status"] == "ok" for c in cross_check_simplicity(G("G_rose3"), 2))
    assert all(c["status"] == "ok" for c in cross_check_simplicity(G("G_balloon"), 0))
    statuses = {c["check"]: c["status"] for c in cross_check_simplicity(G("G_loop"), 3)}
    assert statuses["c"].startswith("vacuous")


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=6, max_edges=10))
def test_paired_verdicts_agree(g):
    singletons = all(order_ideal_vertices(g, v) == {v} for v in g.vertices)
    for p in (0, 2, 3):
        solv = is_lie_solvable(g, p).verdict
        assert solv == is_lie_solvable_monoid(g, p).verdict
        if solv:
            assert gk_dimension(g) <= 1 and is_no_exit(g)
        if p != 2:
            assert solv == commutator_zero(g)
    assert is_lie_nilpotent(g).verdict == (gk_dimension(g) <= 1 and singletons)


@settings(max_examples=150, deadline=None)
@given(graphs(max_vertices=6, max_edges=10))
def test_simplicity_implications(g):
    if not is_connected(g):
        return
    for p in (0, 2, 3):
        for entry in cross_check_simplicity(g, p):
            assert entry["status"] != "violated", (entry, p)
