"""Seeded random multigraphs for the property suite."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Edge, Graph


@dataclass(frozen=True)
class RandomGraphSpec:
    seed: int
    max_vertices: int = 8
    max_edges: int = 16
    connected: bool | None = False  # None: decide per graph from the seed


def random_graph(spec: RandomGraphSpec) -> Graph:
    """A reproducible graph within the bounds; loops and parallel edges allowed.

    With ``connected`` the vertices are first joined by a randomly oriented
    spanning tree, so the vertex count is capped at ``max_edges + 1``.
    """
    if spec.max_vertices < 1 or spec.max_edges < 0:
        raise ValueError("need at least one vertex and a non-negative edge bound")
    rng = random.Random(spec.seed)
    connected = rng.random() < 0.5 if spec.connected is None else spec.connected
    top = min(spec.max_vertices, spec.max_edges + 1) if connected else spec.max_vertices
    n = rng.randint(1, top)
    verts = [f"v{i}" for i in range(n)]
    pairs: list[tuple[str, str]] = []
    if connected:
        order = verts[:]
        rng.shuffle(order)
        for k in range(1, n):
            a, b = order[k], order[rng.randrange(k)]
            pairs.append((a, b) if rng.random() < 0.5 else (b, a))
    m = rng.randint(len(pairs), max(len(pairs), spec.max_edges))
    while len(pairs) < m:
        pairs.append((rng.choice(verts), rng.choice(verts)))
    rng.shuffle(pairs)
    edges = tuple(Edge(f"e{k}", s, d) for k, (s, d) in enumerate(pairs))
    return Graph(tuple(verts), edges, name=f"rand-{spec.seed}")
