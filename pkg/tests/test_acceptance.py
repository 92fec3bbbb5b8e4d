"""The ten acceptance criteria, one test each, at their stated tolerances.

Each test records a PASS/FAIL line; the lines are printed at the end of the
pytest run and also when this file is executed directly.
"""

from __future__ import annotations

import os
import subprocess
import sys
import time

import pytest
from conftest import G

import leavitt
from leavitt import checks, closures, cycles, monoid
from leavitt.corpus import builtin_names
from leavitt.lie import is_lie_simple, one_in_commutator
from leavitt.randgraph import RandomGraphSpec

RESULTS: dict[int, str] = {}

SAMPLE_N = 1000
SAMPLE_SPEC = RandomGraphSpec(seed=2024, max_vertices=8, max_edges=16, connected=None)
CHARS = (0, 2, 3)


def record(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[k] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def sample():
    t = time.perf_counter()
    res = checks.property_suite(SAMPLE_N, SAMPLE_SPEC, CHARS, jobs=min(4, os.cpu_count() or 1))
    return res, time.perf_counter() - t


def test_criterion_01_gk_values():
    expected = {"G_pt": 0, "G_2sink": 0, "G_loop": 1, "G_toep": 2, "G_2chain": 3, "G_rose2": cycles.INF}
    wrong, slow = [], []
    for name, want in expected.items():
        g = G(name)
        leavitt.clear_caches()
        t = time.perf_counter()
        got = cycles.gk_dimension(g)
        dt = time.perf_counter() - t
        if got != want:
            wrong.append(f"{name}={got}")
        if dt >= 0.010:
            slow.append(f"{name} {dt * 1e3:.1f}ms")
        # no-exit members must also satisfy gk <= 1
        if cycles.is_no_exit(g) != (got <= 1):
            wrong.append(f"{name} no-exit mismatch")
    record(1, not wrong and not slow, f"gk values wrong={wrong} slow={slow}")


PAIRED = [
    "solvable-graph-vs-monoid",
    "no-exit-iff-gk-at-most-1",
    "singleton-ideals-iff-no-edges-between",
    "vertices-and-loops-iff-gk-and-singletons",
    "nilpotent-graph-vs-monoid",
    "balloon-graph-vs-monoid",
    "disjoint-iff-series-iff-finite-gk",
    "cyclic-series-iff-disjoint-no-sinks",
]


def test_criterion_02_paired_equivalences(sample):
    res, elapsed = sample
    bad = {k: res["failures"][k] for k in PAIRED if res["failures"][k]}
    ok = not bad and elapsed <= 300 and res["graphs"] >= 1000
    record(2, ok, f"{res['graphs']} graphs, chars {list(CHARS)}, failures={bad}, {elapsed:.0f}s (limit 300s)")


def test_criterion_03_lattice_oracle():
    spec = RandomGraphSpec(seed=3, max_vertices=10, max_edges=20, connected=None)
    res = checks.property_suite(500, spec, (0,), names=["lattice-brute-vs-generated"])
    n = res["failures"]["lattice-brute-vs-generated"]
    record(3, n == 0, f"500 graphs with <=10 vertices, brute/generated mismatches={n}")


def test_criterion_04_sink_correspondence(sample):
    res, _ = sample
    corpus_bad = [n for n in builtin_names() if checks.check_sink_correspondence(G(n))]
    n = res["failures"]["sinks-match-minimal-acyclic-ideals"]
    record(4, not corpus_bad and n == 0, f"corpus mismatches={corpus_bad}, random mismatches={n}/{res['graphs']}")


def test_criterion_05_commutator_membership():
    correct = 0
    for n in range(2, 7):
        for p in (0, 2, 3, 5):
            expected = (n - 1) % p != 0 if p else True
            correct += one_in_commutator(G(f"G_rose{n}"), p) == expected
    record(5, correct == 20, f"{correct}/20 rose cases correct")


def test_criterion_06_lie_simplicity():
    cases = [(("G_rose3", 2), True), (("G_rose2", 0), False)]
    cases += [(("G_balloon", p), True) for p in (0, 2, 3)]
    cases += [(("G_loop", p), False) for p in (0, 2, 3, 5, 7)]
    wrong = [f"{n}@{p}" for (n, p), want in cases if is_lie_simple(G(n), p).verdict != want]
    record(6, not wrong, f"{len(cases) - len(wrong)}/{len(cases)} verdicts correct {wrong or ''}".rstrip())


def test_criterion_07_simplicity_cross_checks(sample):
    res, _ = sample
    n = res["failures"]["simplicity-implications"]
    record(7, n == 0, f"graphs with violated implications={n}/{res['graphs']} at chars {list(CHARS)}")


def test_criterion_08_monoid_containment():
    contradictions, inexact = [], []
    for name in builtin_names():
        g = G(name)
        for v in g.vertices:
            found = {u for u in g.vertices if monoid.bounded_in_ideal(g, u, v, 10) is monoid.TriState.TRUE}
            ideal = closures.order_ideal_vertices(g, v)
            if not found <= ideal:
                contradictions.append(f"{name}:{v}")
            elif len(g.vertices) <= 6 and found != ideal:
                inexact.append(f"{name}:{v}")
    record(8, not contradictions and not inexact,
           f"depth 10 on {len(builtin_names())} corpus graphs: contradictions={contradictions} inexact={inexact}")


def test_criterion_09_composition_series(sample):
    tags = {
        "G_2chain": ["cyclic", "cyclic"],
        "G_toep": ["non-comparable", "cyclic"],
        "G_rose2": ["comparable"],
    }
    wrong = [n for n, t in tags.items() if list(monoid.composition_series(G(n)).types) != t]
    res, _ = sample
    varying = res["failures"]["series-length-invariance"]
    corpus_varying = [n for n in builtin_names() if len(monoid.all_series_lengths(G(n))) != 1]
    record(9, not wrong and not varying and not corpus_varying,
           f"tag mismatches={wrong}; order-dependent series lengths: random={varying}, corpus={corpus_varying}")


def _cli(*args: str, hashseed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    return subprocess.run(
        [sys.executable, "-m", "leavitt.cli", *args], capture_output=True, env=env, check=False
    ).stdout


def test_criterion_10_determinism():
    same = []
    for args in (("classify", "--char", "2", "G_balloon"), ("classify", "--char", "0", "G_2sink"),
                 ("prop", "--n", "40", "--seed", "9")):
        a, b = _cli(*args, hashseed="1"), _cli(*args, hashseed="2")
        same.append(bool(a) and a == b)
    record(10, all(same), f"byte-identical reruns: classify x2, prop x1 -> {same}")


def pytest_terminal_summary_lines() -> list[str]:
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
