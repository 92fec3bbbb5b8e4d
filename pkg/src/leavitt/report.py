"""Full classification report for one graph at one characteristic."""

from __future__ import annotations

from .closures import hsat_lattice
from .cycles import gk_profile, gk_to_json
from .graph import Graph, GraphError
from .lie import (
    InconsistencyError,
    commutator_zero,
    cross_check_simplicity,
    is_graded_simple,
    is_lie_nilpotent,
    is_lie_simple,
    is_lie_solvable,
    is_lie_solvable_monoid,
    is_simple_lpa,
)
from .linalg import check_char
from .monoid import composition_series


def _basis(op: str, branch: str) -> dict:
    return {"op": op, "branch": branch}


def classify(g: Graph, p: int) -> dict:
    """Every verdict for ``g`` over a field of characteristic ``p``, as a JSON-ready dict."""
    check_char(p)
    if not g.vertices:
        raise GraphError("cannot classify the empty graph")
    consistency = []
    basis = {}

    simple = is_simple_lpa(g)
    basis["simple"] = _basis("is_simple_lpa", simple.branch)
    graded = is_graded_simple(g)
    basis["graded_simple"] = _basis("is_graded_simple", "hsat-lattice-trivial")

    solv = is_lie_solvable(g, p)
    solv_m = is_lie_solvable_monoid(g, p)
    basis["lie_solvable"] = _basis("is_lie_solvable", solv.branch)
    consistency.append({
        "check": "solvable:graph==monoid",
        "status": "ok" if solv.verdict == solv_m.verdict else "violated",
    })

    try:
        nil = is_lie_nilpotent(g)
        nilpotent = nil.verdict
        basis["lie_nilpotent"] = _basis("is_lie_nilpotent", nil.branch)
        consistency.append({"check": "nilpotent:graph==monoid", "status": "ok"})
    except InconsistencyError:
        nilpotent = None
        consistency.append({"check": "nilpotent:graph==monoid", "status": "violated"})

    zero = commutator_zero(g)
    basis["commutator_zero"] = _basis("commutator_zero", "vertices-and-loops")

    try:
        ls = is_lie_simple(g, p)
        lie_simple = {"verdict": ls.verdict, "branch": ls.branch, "W": ls.witnesses.get("W")}
        basis["lie_simple"] = _basis("is_lie_simple", ls.branch)
        if ls.witnesses.get("core_cyclic_violation"):
            consistency.append({"check": "core-not-cyclic", "status": "violated"})
    except GraphError as exc:
        lie_simple = {"verdict": None, "branch": None, "W": None, "error": str(exc)}

    consistency += [
        {"check": f"simplicity:{c['check']}", "status": c["status"]}
        for c in cross_check_simplicity(g, p)
    ]

    prof = gk_profile(g)
    series = composition_series(g)
    lattice = hsat_lattice(g)

    return {
        "graph": g.name,
        "char": p,
        "simple": simple.verdict,
        "graded_simple": graded,
        "lie_solvable": solv.verdict,
        "lie_nilpotent": nilpotent,
        "commutator_zero": zero,
        "lie_simple": lie_simple,
        "gk": gk_to_json(prof.gk),
        "d1": prof.d1,
        "d2": prof.d2,
        "series": [g.ordered(h) for h in series.chain],
        "series_types": list(series.types),
        "lattice_size": len(lattice.masks),
        "consistency": consistency,
        "basis": basis,
        "witnesses": {
            "simple": simple.witnesses,
            "lie_solvable": solv.witnesses,
            "lie_solvable_monoid": solv_m.witnesses,
        },
    }


def has_violation(report: dict) -> bool:
    return any(c["status"] == "violated" for c in report["consistency"])


def render_text(report: dict) -> str:
    ls = report["lie_simple"]
    lines = [
        f"graph           {report['graph']}  (char {report['char']})",
        f"simple          {report['simple']}",
        f"graded simple   {report['graded_simple']}",
        f"Lie solvable    {report['lie_solvable']}",
        f"Lie nilpotent   {report['lie_nilpotent']}",
        f"[L,L] = 0       {report['commutator_zero']}",
        f"Lie simple      {ls['verdict']}  (branch {ls['branch']}, W={ls['W']})",
        f"GK-dimension    {report['gk']}",
        f"series types    {', '.join(report['series_types'])}",
    ]
    bad = [c["check"] for c in report["consistency"] if c["status"] == "violated"]
    lines.append("consistency     " + ("ok" if not bad else "VIOLATED: " + ", ".join(bad)))
    return "\n".join(lines) + "\n"
