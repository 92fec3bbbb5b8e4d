"""Builtin graph corpus and golden-report comparison."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .graph import GraphError, load_graph
from .report import classify

GOLDEN_CHARS = (0, 2, 3)
GOLDEN_SUFFIX = ".expected.json"


def builtin_dir() -> Path:
    return Path(str(resources.files("leavitt") / "corpus"))


def builtin_names() -> list[str]:
    return sorted(p.stem for p in builtin_dir().glob("*.graph"))


def builtin_path(name: str) -> Path:
    path = builtin_dir() / f"{name}.graph"
    if not path.is_file():
        raise FileNotFoundError(f"no builtin graph named {name!r}")
    return path


def load_builtin(name: str):
    return load_graph(builtin_path(name))


def golden_for(graph_path: Path) -> Path:
    return graph_path.with_name(graph_path.stem + GOLDEN_SUFFIX)


def golden_reports(graph_path, chars=GOLDEN_CHARS) -> dict[str, dict]:
    g = load_graph(graph_path)
    return {str(p): classify(g, p) for p in chars}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _diff(expected, actual, path="") -> list[str]:
    if isinstance(expected, dict) and isinstance(actual, dict):
        out = []
        for k in sorted(set(expected) | set(actual), key=str):
            sub = f"{path}.{k}" if path else str(k)
            if k not in actual:
                out.append(f"{sub}: missing")
            elif k not in expected:
                out.append(f"{sub}: unexpected")
            else:
                out += _diff(expected[k], actual[k], sub)
        return out
    if expected != actual:
        return [f"{path}: expected {expected!r}, got {actual!r}"]
    return []


@dataclass
class CorpusSummary:
    passed: list[str] = field(default_factory=list)
    failed: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {
            "cases": len(self.passed) + len(self.failed),
            "passed": len(self.passed),
            "failed": self.failed,
        }


def run_corpus(directory) -> CorpusSummary:
    """Classify every ``*.graph`` in ``directory`` and compare with its golden file."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    summary = CorpusSummary()
    for path in sorted(directory.glob("*.graph")):
        name = path.stem
        golden = golden_for(path)
        if not golden.is_file():
            summary.failed[name] = ["missing golden file"]
            continue
        try:
            expected = json.loads(golden.read_text(encoding="utf-8"))
            chars = sorted(int(p) for p in expected)
            actual = json.loads(json.dumps(golden_reports(path, chars)))
        except (GraphError, ValueError) as exc:
            summary.failed[name] = [f"error: {exc}"]
            continue
        diffs = _diff(expected, actual)
        if diffs:
            summary.failed[name] = diffs
        else:
            summary.passed.append(name)
    return summary
