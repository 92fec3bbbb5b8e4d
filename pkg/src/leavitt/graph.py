"""Finite directed multigraphs and the elementary constructions on them.

Vertex sets are plain ``frozenset`` objects of vertex ids.  Wherever a set is
emitted to a user it is ordered by declaration order (``Graph.ordered``).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph, or an invalid vertex set passed to a graph operation."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class Edge(NamedTuple):
    id: str
    src: str
    dst: str


class VertexClassification(NamedTuple):
    sinks: frozenset
    sources: frozenset
    regular: frozenset
    isolated: frozenset


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex id")
        if len({e.id for e in self.edges}) != len(self.edges):
            raise GraphError("duplicate edge id")
        known = set(self.vertices)
        for e in self.edges:
            for end in (e.src, e.dst):
                if end not in known:
                    raise GraphError(f"edge {e.id} references undeclared vertex {end}")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]] = (), name: str = "") -> "Graph":
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges), name)

    # -- indices ------------------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Bitmask of r(s^-1(v)) for each vertex, by declaration index."""
        masks = [0] * len(self.vertices)
        idx = self.index
        for e in self.edges:
            masks[idx[e.src]] |= 1 << idx[e.dst]
        return tuple(masks)

    @cached_property
    def reach_masks(self) -> tuple[int, ...]:
        """Reflexive reachability: bit j of entry i is set iff vertex j is in T(v_i)."""
        n = len(self.vertices)
        out = self.out_masks
        result = []
        for i in range(n):
            seen = 1 << i
            todo = [i]
            while todo:
                k = todo.pop()
                new = out[k] & ~seen
                seen |= new
                while new:
                    low = new & -new
                    todo.append(low.bit_length() - 1)
                    new ^= low
            result.append(seen)
        return tuple(result)

    # -- set helpers ----------------------------------------------------------

    @property
    def all(self) -> frozenset:
        return frozenset(self.vertices)

    def ordered(self, vs: Iterable[str]) -> list[str]:
        idx = self.index
        return sorted(vs, key=idx.__getitem__)

    def mask(self, vs: Iterable[str]) -> int:
        idx = self.index
        m = 0
        for v in vs:
            m |= 1 << idx[v]
        return m

    def unmask(self, m: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.vertices) if m >> i & 1)

    def check_subset(self, vs: Iterable[str]) -> frozenset:
        vs = frozenset(vs)
        unknown = vs - set(self.vertices)
        if unknown:
            raise GraphError(f"not vertices of the graph: {sorted(unknown)}")
        return vs

    def is_sink(self, v: str) -> bool:
        return not self.out_edges[v]

    def loops_at(self, v: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.out_edges[v] if e.dst == v)

    def __len__(self) -> int:
        return len(self.vertices)


# -- parsing and serialization ------------------------------------------------


def parse_graph(text: str, name: str = "") -> Graph:
    """Parse the line format (``vertex <id>`` / ``edge <id> <src> <dst>``) or its JSON form."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text, name)
    vertices: list[str] = []
    edges: list[Edge] = []
    seen_v: set[str] = set()
    seen_e: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex" and len(parts) == 2:
            v = parts[1]
            if v in seen_v:
                raise GraphParseError(f"duplicate vertex id {v}", lineno)
            seen_v.add(v)
            vertices.append(v)
        elif kind == "edge" and len(parts) == 4:
            eid, src, dst = parts[1:]
            if eid in seen_e:
                raise GraphParseError(f"duplicate edge id {eid}", lineno)
            for end in (src, dst):
                if end not in seen_v:
                    raise GraphParseError(f"undeclared vertex {end}", lineno)
            seen_e.add(eid)
            edges.append(Edge(eid, src, dst))
        else:
            raise GraphParseError(f"malformed line: {raw.strip()!r}", lineno)
    return Graph(tuple(vertices), tuple(edges), name)


def parse_graph_json(text: str, name: str = "") -> Graph:
    try:
        data = json.loads(text)
        vertices = [str(v) for v in data["vertices"]]
        edges = [Edge(str(e["id"]), str(e["src"]), str(e["dst"])) for e in data.get("edges", [])]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise GraphParseError(f"bad JSON graph: {exc}") from exc
    return Graph(tuple(vertices), tuple(edges), name)


def dump_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.id} {e.src} {e.dst}" for e in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in g.edges],
    }


def load_graph(path) -> Graph:
    from pathlib import Path

    path = Path(path)
    return parse_graph(path.read_text(encoding="utf-8"), name=path.stem)


# -- elementary operations ------------------------------------------------------


def classify_vertices(g: Graph) -> VertexClassification:
    sinks = frozenset(v for v in g.vertices if not g.out_edges[v])
    sources = frozenset(v for v in g.vertices if not g.in_edges[v])
    return VertexClassification(sinks, sources, g.all - sinks, sinks & sources)


def edges_between(g: Graph, xs: Iterable[str], ys: Iterable[str]) -> frozenset:
    """E(X, Y): ids of edges with source in X and range in Y."""
    xs, ys = frozenset(xs), frozenset(ys)
    return frozenset(e.id for e in g.edges if e.src in xs and e.dst in ys)


def tree(g: Graph, v: str) -> frozenset:
    """T(v), taken reflexively: v together with everything reachable from it."""
    return g.unmask(g.reach_masks[g.index[v]])


def is_connected(g: Graph) -> bool:
    if not g.vertices:
        raise GraphError("connectivity is undefined for the empty graph")
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for e in g.edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    start = g.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def quotient_graph(g: Graph, upper: Iterable[str], lower: Iterable[str]) -> Graph:
    """The quotient graph upper/lower of two nested hereditary saturated sets."""
    from .closures import is_hereditary_saturated

    upper, lower = g.check_subset(upper), g.check_subset(lower)
    if not lower <= upper:
        raise GraphError("lower set is not contained in upper set")
    for label, hs in (("upper", upper), ("lower", lower)):
        if not is_hereditary_saturated(g, hs):
            raise GraphError(f"{label} set is not hereditary saturated")
    verts = tuple(v for v in g.vertices if v in upper and v not in lower)
    edges = tuple(e for e in g.edges if e.src in upper and e.dst not in lower)
    return Graph(verts, edges, g.name)


def restriction(g: Graph, hs: Iterable[str]) -> Graph:
    """Subgraph on a hereditary set H, keeping every edge emitted from H."""
    from .closures import is_hereditary

    hs = g.check_subset(hs)
    if not is_hereditary(g, hs):
        raise GraphError("restriction requires a hereditary set")
    verts = tuple(v for v in g.vertices if v in hs)
    edges = tuple(e for e in g.edges if e.src in hs)
    return Graph(verts, edges, g.name)


def covering_graph(g: Graph, lo: int, hi: int) -> Graph:
    """Window [lo, hi] of the Z-covering graph; copies are named ``v@n`` and ``e@n``."""
    if lo > hi:
        raise GraphError(f"empty window [{lo}, {hi}]")
    verts = tuple(f"{v}@{n}" for n in range(lo, hi + 1) for v in g.vertices)
    edges = tuple(
        Edge(f"{e.id}@{n}", f"{e.src}@{n}", f"{e.dst}@{n + 1}")
        for n in range(lo, hi)
        for e in g.edges
    )
    return Graph(verts, edges, g.name)


def disjoint_union(*graphs: Graph, name: str = "") -> Graph:
    """Disjoint union, prefixing ids with ``<k>.`` when components clash."""
    ids = [v for h in graphs for v in h.vertices] + [e.id for h in graphs for e in h.edges]
    clash = len(ids) != len(set(ids))
    verts, edges = [], []
    for k, h in enumerate(graphs):
        pre = f"{k}." if clash else ""
        verts += [pre + v for v in h.vertices]
        edges += [Edge(pre + e.id, pre + e.src, pre + e.dst) for e in h.edges]
    return Graph(tuple(verts), tuple(edges), name)
