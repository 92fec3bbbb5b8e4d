"""Talented monoid T_E (and graph monoid M_E), its Z-order-ideals and composition series.

Elements of T_E are finite multisets of generators v(i).  Equality and the
algebraic pre-order are decided by bounded forward rewriting along the
defining relations v(i) = sum_{e in s^-1(v)} r(e)(i+1).  Forward closure is
enough because graph monoids are confluent: a = b exactly when a and b have
a common refinement.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .closures import hsat_closure, is_hereditary_saturated, minimal_hsat_sets
from .cycles import enumerate_cycles, is_comet
from .graph import Graph, GraphError, quotient_graph

MAX_STATES = 20_000
MAX_CANDIDATES = 4


class TriState(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "TriState":
        return cls.TRUE if flag else cls.FALSE


class Element:
    """A multiset of generators ``(vertex, shift)``; the empty multiset is 0."""

    __slots__ = ("_items", "_hash")

    def __init__(self, terms: Iterable[tuple[str, int]] | Counter = ()):
        counts = terms if isinstance(terms, Counter) else Counter(terms)
        self._items = tuple(sorted((k, c) for k, c in counts.items() if c > 0))
        self._hash = hash(self._items)

    @classmethod
    def parse(cls, text: str) -> "Element":
        """Parse ``u@0+w@1`` (``2*u@0`` repeats a term; ``0`` is the identity)."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        terms = Counter()
        for part in text.split("+"):
            m = re.fullmatch(r"\s*(?:(\d+)\*)?([^@\s+*]+)@(-?\d+)\s*", part)
            if not m:
                raise ValueError(f"bad monoid term {part!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            terms[(m.group(2), int(m.group(3)))] += mult
        return cls(terms)

    @property
    def counts(self) -> Counter:
        return Counter(dict(self._items))

    def terms(self) -> Iterator[tuple[str, int]]:
        for key, c in self._items:
            for _ in range(c):
                yield key

    def shift(self, n: int) -> "Element":
        return Element(Counter({(v, i + n): c for (v, i), c in self._items}))

    def forget_shift(self) -> "Element":
        return Element((v, 0) for v, _ in self.terms())

    def __add__(self, other: "Element") -> "Element":
        return Element(self.counts + other.counts)

    def __le__(self, other: "Element") -> bool:
        """Sub-multiset containment (not the monoid order)."""
        oc = dict(other._items)
        return all(oc.get(k, 0) >= c for k, c in self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return sum(c for _, c in self._items)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        return "+".join(
            (f"{c}*" if c > 1 else "") + f"{v}@{i}" for (v, i), c in self._items
        )

    __repr__ = __str__


def shift(a: Element, n: int) -> Element:
    return a.shift(n)


def expand_once(g: Graph, a: Element, graded: bool = True) -> set[Element]:
    """Every element obtained by rewriting one non-sink generator of ``a``.

    With ``graded=False`` shifts are ignored, giving the rewriting of M_E.
    """
    out = set()
    base = a.counts
    step = 1 if graded else 0
    for (v, i) in base:
        edges = g.out_edges[v]
        if not edges:
            continue
        c = base.copy()
        c[(v, i)] -= 1
        for e in edges:
            c[(e.dst, i + step)] += 1
        out.add(Element(c))
    return out


class _Search:
    """Breadth-first forward rewriting from one element, grown a level at a time."""

    def __init__(self, g: Graph, start: Element, graded: bool):
        self.g, self.graded = g, graded
        self.seen = {start}
        self.frontier = {start}
        self.complete = False  # every element's rewrites are already in seen
        self.capped = False

    def step(self) -> set:
        if self.complete or self.capped:
            return set()
        nxt = set()
        for x in self.frontier:
            nxt |= expand_once(self.g, x, self.graded)
        nxt -= self.seen
        self.seen |= nxt
        self.frontier = nxt
        self.complete = not nxt
        self.capped = len(self.seen) > MAX_STATES
        return nxt


class _SupersetIndex:
    """Answers "is x a sub-multiset of some indexed element" with bitsets."""

    def __init__(self):
        self.bits: dict = {}
        self.n = 0

    def add(self, y: Element) -> None:
        bit = 1 << self.n
        self.n += 1
        for key, c in y._items:
            for t in range(1, c + 1):
                self.bits[(key, t)] = self.bits.get((key, t), 0) | bit

    def covers(self, x: Element) -> bool:
        m = (1 << self.n) - 1
        for key, c in x._items:
            m &= self.bits.get((key, c), 0)
            if not m:
                return False
        return bool(m)


def _graded(a: Element, graded: bool) -> Element:
    return a if graded else a.forget_shift()


def _verdict(sa: _Search, sb: _Search) -> TriState:
    # one extra level only to learn whether both searches are exhausted
    sa.step()
    sb.step()
    return TriState.FALSE if sa.complete and sb.complete else TriState.UNKNOWN


def bounded_equal(g: Graph, a: Element, b: Element, depth: int, graded: bool = True) -> TriState:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    sa = _Search(g, _graded(a, graded), graded)
    sb = _Search(g, _graded(b, graded), graded)
    for level in range(depth + 1):
        if sa.seen & sb.seen:
            return TriState.TRUE
        if level < depth:
            sa.step()
            sb.step()
    return _verdict(sa, sb)


def bounded_leq(g: Graph, a: Element, b: Element, depth: int, graded: bool = True) -> TriState:
    """a <= b in the algebraic pre-order, i.e. b = a + c for some c."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    sa = _Search(g, _graded(a, graded), graded)
    sb = _Search(g, _graded(b, graded), graded)
    index = _SupersetIndex()
    index.add(_graded(b, graded))

    def found() -> bool:
        return any(index.covers(x) for x in sa.seen)

    for level in range(depth + 1):
        if found():
            return TriState.TRUE
        if level < depth:
            sa.step()
            for y in sb.step():
                index.add(y)
    return _verdict(sa, sb)


def comparable_in_ME(g: Graph, v: str, w: str, depth: int) -> TriState:
    """Whether v <= w or w <= v in the graph monoid M_E."""
    if v == w:
        raise GraphError("comparability needs two distinct vertices")
    a, b = Element([(v, 0)]), Element([(w, 0)])
    results = (bounded_leq(g, a, b, depth, graded=False), bounded_leq(g, b, a, depth, graded=False))
    if TriState.TRUE in results:
        return TriState.TRUE
    if all(r is TriState.FALSE for r in results):
        return TriState.FALSE
    return TriState.UNKNOWN


def _distances_from(g: Graph, v: str) -> dict[str, int]:
    dist = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for e in g.out_edges[x]:
                if e.dst not in dist:
                    dist[e.dst] = dist[x] + 1
                    nxt.append(e.dst)
        frontier = nxt
    return dist


def bounded_in_ideal(g: Graph, u: str, v: str, depth: int) -> TriState:
    """Whether u(0) <= a finite sum of shifts of v, by bounded search.

    Looks for a refinement of u(0) all of whose generators x(i) are reachable
    from v, builds the dominating sum of v(i - dist(v, x)) from it, and
    confirms the inequality with ``bounded_leq``.
    """
    dist = _distances_from(g, v)
    start = Element([(u, 0)])
    cu = _Search(g, start, True)
    tried = 0
    for level in range(depth + 1):
        layer = cu.seen if level == 0 else cu.step()
        for a in sorted(layer, key=lambda x: (len(x), str(x))):
            if all(x in dist for x, _ in a.terms()):
                b = Element((v, i - dist[x]) for x, i in a.terms())
                if bounded_leq(g, start, b, depth) is TriState.TRUE:
                    return TriState.TRUE
                tried += 1
                if tried >= MAX_CANDIDATES:
                    return TriState.UNKNOWN
    return TriState.UNKNOWN


# -- simplicity, quotients and composition series ------------------------------------


def is_T_simple(g: Graph) -> bool:
    """T_E is simple iff the only hsat sets are the empty set and E^0."""
    if not g.vertices:
        raise GraphError("simplicity is undefined for the empty graph")
    return all(hsat_closure(g, {v}) == g.all for v in g.vertices)


def quotient_monoid_vertices(g: Graph, hs: Iterable[str]) -> Graph:
    """The graph E/H, whose talented monoid is T_E / <H>."""
    hs = frozenset(hs)
    if not is_hereditary_saturated(g, hs):
        raise GraphError("quotient requires a hereditary saturated set")
    return quotient_graph(g, g.all, hs)


CYCLIC = "cyclic"
NON_COMPARABLE = "non-comparable"
COMPARABLE = "comparable"


def simple_quotient_type(g: Graph, lower: Iterable[str], upper: Iterable[str]) -> str:
    q = quotient_graph(g, upper, lower)
    if not q.vertices or not is_T_simple(q):
        raise GraphError("quotient is not a simple Z-monoid")
    if is_comet(q):
        return CYCLIC
    if not enumerate_cycles(q):
        return NON_COMPARABLE
    return COMPARABLE


@dataclass(frozen=True)
class CompositionSeries:
    graph: Graph
    chain: tuple[frozenset, ...]
    types: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.types)

    def to_json(self) -> dict:
        return {
            "chain": [self.graph.ordered(h) for h in self.chain],
            "types": list(self.types),
        }


Chooser = Callable[[list[frozenset]], frozenset]


def _lex_least(cands: list[frozenset]) -> frozenset:
    return min(cands, key=lambda s: sorted(s))


def composition_series(g: Graph, choose: Chooser = _lex_least) -> CompositionSeries:
    """Lift minimal hsat sets of successive quotient graphs until E^0 is reached."""
    if not g.vertices:
        raise GraphError("composition series of the empty graph")
    chain = [frozenset()]
    types = []
    current = frozenset()
    while current != g.all:
        q = quotient_graph(g, g.all, current)
        step = choose(minimal_hsat_sets(q))
        nxt = current | step
        if not is_hereditary_saturated(g, nxt):
            raise GraphError("lifted set is not hereditary saturated")
        types.append(simple_quotient_type(g, current, nxt))
        chain.append(nxt)
        current = nxt
    return CompositionSeries(g, tuple(chain), tuple(types))


def all_series_lengths(g: Graph) -> set[int]:
    """Lengths of every composition series reachable by some tie-breaking order."""
    lengths = set()

    def walk(current: frozenset, depth: int) -> None:
        if current == g.all:
            lengths.add(depth)
            return
        q = quotient_graph(g, g.all, current)
        for step in minimal_hsat_sets(q):
            walk(current | step, depth + 1)

    walk(frozenset(), 0)
    return lengths

