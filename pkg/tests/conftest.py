from __future__ import annotations

import sys

import pytest
from hypothesis import strategies as st

from leavitt import Graph
from leavitt.corpus import load_builtin
from leavitt.graph import Edge, disjoint_union


def G(name: str) -> Graph:
    return load_builtin(name)


def union(*names: str) -> Graph:
    return disjoint_union(*(G(n) for n in names))


@st.composite
def graphs(draw, max_vertices: int = 6, max_edges: int = 10, min_vertices: int = 1) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    edges = tuple(Edge(f"e{k}", verts[a], verts[b]) for k, (a, b) in enumerate(pairs))
    return Graph(tuple(verts), edges)


@pytest.fixture
def corpus_graphs():
    from leavitt.corpus import builtin_names

    return [G(n) for n in builtin_names()]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.pytest_terminal_summary_lines():
        terminalreporter.write_line(line)
