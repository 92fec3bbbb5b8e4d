"""Hereditary and saturated sets, hsat-closure and the lattice L(E).

Internally sets are bitmasks over declaration indices; the public functions
take and return frozensets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .graph import Graph, GraphError

DEFAULT_BRUTE_FORCE_BOUND = 16
BOUND_ENV_VAR = "LEAVITT_BRUTE_FORCE_BOUND"


class LatticeTooLarge(GraphError):
    pass


def brute_force_bound() -> int:
    raw = os.environ.get(BOUND_ENV_VAR)
    return int(raw) if raw else DEFAULT_BRUTE_FORCE_BOUND


# -- bitmask kernels -----------------------------------------------------------


def _hereditary_mask(g: Graph, m: int) -> bool:
    out = g.out_masks
    rest = m
    while rest:
        low = rest & -rest
        if out[low.bit_length() - 1] & ~m:
            return False
        rest ^= low
    return True


def _saturated_mask(g: Graph, m: int) -> bool:
    for i, om in enumerate(g.out_masks):
        if om and not (m >> i & 1) and not (om & ~m):
            return False
    return True


def _closure_mask(g: Graph, m: int) -> int:
    out = g.out_masks
    n = len(out)
    while True:
        prev = m
        # hereditary step
        for i in range(n):
            if m >> i & 1:
                m |= out[i]
        # saturation step
        for i in range(n):
            if out[i] and not (m >> i & 1) and not (out[i] & ~m):
                m |= 1 << i
        if m == prev:
            return m


# -- public predicates -----------------------------------------------------------


def is_hereditary(g: Graph, hs: Iterable[str]) -> bool:
    return _hereditary_mask(g, g.mask(g.check_subset(hs)))


def is_saturated(g: Graph, hs: Iterable[str]) -> bool:
    return _saturated_mask(g, g.mask(g.check_subset(hs)))


def is_hereditary_saturated(g: Graph, hs: Iterable[str]) -> bool:
    m = g.mask(g.check_subset(hs))
    return _hereditary_mask(g, m) and _saturated_mask(g, m)


def hsat_closure(g: Graph, xs: Iterable[str]) -> frozenset:
    """Smallest hereditary saturated set containing X."""
    return g.unmask(_closure_mask(g, g.mask(g.check_subset(xs))))


def order_ideal_vertices(g: Graph, v: str) -> frozenset:
    """Vertices of the Z-order-ideal <v>, i.e. hsat_closure({v})."""
    return hsat_closure(g, {v})


def singleton_closures(g: Graph) -> dict[str, frozenset]:
    return {v: hsat_closure(g, {v}) for v in g.vertices}


def minimal_hsat_sets(g: Graph) -> list[frozenset]:
    """Minimal nonempty hereditary saturated sets.

    Every nonempty hsat set contains the closure of each of its vertices, so
    the minimal ones are found among the singleton closures.
    """
    cands = {hsat_closure(g, {v}) for v in g.vertices}
    minimal = [c for c in cands if not any(d < c for d in cands)]
    return sorted(minimal, key=lambda s: _sort_key(g, s))


def _sort_key(g: Graph, s: frozenset):
    return (len(s), sorted(s))


# -- the lattice -------------------------------------------------------------------


@dataclass(frozen=True)
class HsatLattice:
    graph: Graph
    masks: tuple[int, ...]
    method: str

    @cached_property
    def elements(self) -> list[frozenset]:
        return [self.graph.unmask(m) for m in self.masks]

    @cached_property
    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs (i, j): element i is covered by element j."""
        ms = self.masks
        pairs = []
        for i, a in enumerate(ms):
            uppers = [j for j, b in enumerate(ms) if b != a and a & b == a]
            for j in uppers:
                b = ms[j]
                if not any(ms[k] != b and ms[k] & b == ms[k] for k in uppers if k != j):
                    pairs.append((i, j))
        return pairs

    @cached_property
    def minimal(self) -> list[int]:
        """Indices of the minimal nonempty elements."""
        ms = self.masks
        return [
            i
            for i, a in enumerate(ms)
            if a and not any(b and b != a and a & b == b for b in ms)
        ]

    @property
    def minimal_nonempty(self) -> list[frozenset]:
        return [self.elements[i] for i in self.minimal]

    def as_sets(self) -> set[frozenset]:
        return set(self.elements)

    def is_trivial(self) -> bool:
        return len(self.masks) == 2

    def to_json(self) -> dict:
        g = self.graph
        return {
            "elements": [g.ordered(s) for s in self.elements],
            "hasse": [list(p) for p in self.hasse],
            "minimal": [g.ordered(self.elements[i]) for i in self.minimal],
        }


def _sorted_masks(g: Graph, masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: _sort_key(g, g.unmask(m))))


def lattice_brute_force(g: Graph, bound: int | None = None) -> tuple[int, ...]:
    n = len(g.vertices)
    bound = brute_force_bound() if bound is None else bound
    if n > bound:
        raise LatticeTooLarge(f"{n} vertices exceeds brute-force bound {bound}")
    found = [m for m in range(1 << n) if _hereditary_mask(g, m) and _saturated_mask(g, m)]
    return _sorted_masks(g, found)


def lattice_generated(g: Graph) -> tuple[int, ...]:
    """Close {0} and the singleton closures under meets and closure-of-joins."""
    n = len(g.vertices)
    found = {0} | {_closure_mask(g, 1 << i) for i in range(n)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                for c in (a & b, _closure_mask(g, a | b)):
                    if c not in found:
                        new.add(c)
        found |= new
        frontier = new
    return _sorted_masks(g, found)


@lru_cache(maxsize=4096)
def _lattice_cached(g: Graph, method: str, bound: int) -> HsatLattice:
    if method == "brute":
        masks = lattice_brute_force(g, bound)
    elif method == "generated":
        masks = lattice_generated(g)
    else:
        raise ValueError(f"unknown lattice method {method!r}")
    assert masks[0] == 0 and masks[-1] == (1 << len(g.vertices)) - 1
    return HsatLattice(g, masks, method)


def hsat_lattice(g: Graph, method: str = "auto", bound: int | None = None) -> HsatLattice:
    """All hereditary saturated subsets of g.

    ``method`` is "brute" (exhaustive, refuses graphs above the bound),
    "generated", or "auto" (brute force up to the bound, generated above it).
    """
    bound = brute_force_bound() if bound is None else bound
    if method == "auto":
        method = "brute" if len(g.vertices) <= bound else "generated"
    return _lattice_cached(g, method, bound)
