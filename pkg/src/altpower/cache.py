"""JSON records for built graphs, and an on-disk cache keyed by kind, n and code version.

A record looks like::

    {"format": "altpower-graph", "version": "1", "kind": "ptype", "n": 8,
     "labels": ["[1^4,2^2]", ...], "edges": [[0, 3], ...]}

Labels use the canonical text forms: cycle notation for permutations and
for class representatives, ``[1^4,2^2]`` for types, decimal for orders.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

import numpy as np

from .graphs import GRAPH_KINDS, UndirectedGraph, _edge_array, build_graph
from .partitions import PartitionType
from .perm import Permutation, cycle_type, cyclic_class_of

log = logging.getLogger(__name__)

RECORD_FORMAT = "altpower-graph"
CODE_VERSION = "1"
CACHE_ENV = "ALTPOWER_CACHE_DIR"


def _label_text(kind: str, label: Any) -> str:
    if kind == "quotient":
        return str(label.representative)
    return str(label)


def _parse_label(kind: str, text: str, n: int) -> Any:
    if kind == "power":
        return Permutation.parse(text, n)
    if kind == "quotient":
        return cyclic_class_of(Permutation.parse(text, n))
    if kind == "ptype":
        return PartitionType.parse(text)
    return int(text)


def graph_to_record(g: UndirectedGraph) -> dict[str, Any]:
    return {
        "format": RECORD_FORMAT,
        "version": CODE_VERSION,
        "kind": g.kind,
        "n": g.n,
        "labels": [_label_text(g.kind, lab) for lab in g.labels],
        "edges": g.edges.tolist(),
    }


def record_to_graph(rec: dict[str, Any]) -> UndirectedGraph:
    if rec.get("format") != RECORD_FORMAT:
        raise ValueError(f"not a graph record: format={rec.get('format')!r}")
    kind, n = rec["kind"], int(rec["n"])
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    labels = [_parse_label(kind, t, n) for t in rec["labels"]]
    edges = _edge_array(np.asarray(rec["edges"], dtype=np.int64).reshape(-1, 2))
    if edges.size and (edges.min() < 0 or edges.max() >= len(labels)):
        raise ValueError("edge index out of range")
    types = None
    if kind == "power":
        types = [cycle_type(x) for x in labels]
    elif kind == "quotient":
        types = [c.cycle_type for c in labels]
    elif kind == "ptype":
        types = list(labels)
    return UndirectedGraph(kind, n, labels, edges, types)


def dumps(g: UndirectedGraph) -> str:
    return json.dumps(graph_to_record(g), separators=(",", ":"))


def loads(text: str) -> UndirectedGraph:
    return record_to_graph(json.loads(text))


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    """The flag wins over the environment; None disables caching."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def cache_path(directory: Path, kind: str, n: int) -> Path:
    return directory / f"{kind}-n{n}-v{CODE_VERSION}.json"


def load_cached(directory: Path, kind: str, n: int) -> UndirectedGraph | None:
    path = cache_path(directory, kind, n)
    if not path.exists():
        return None
    try:
        rec = json.loads(path.read_text())
        if rec.get("version") != CODE_VERSION or rec.get("kind") != kind or rec.get("n") != n:
            log.info("ignoring stale cache entry %s", path)
            return None
        return record_to_graph(rec)
    except (ValueError, KeyError, OSError) as exc:
        log.warning("ignoring unreadable cache entry %s: %s", path, exc)
        return None


def store(directory: Path, g: UndirectedGraph) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = cache_path(directory, g.kind, g.n)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps(g))
    tmp.replace(path)
    return path


def get_graph(
    kind: str, n: int, directory: Path | None = None, ceiling: int | None = None
) -> UndirectedGraph:
    """Build a graph, going through the cache when a directory is given."""
    if directory is not None:
        cached = load_cached(directory, kind, n)
        if cached is not None:
            return cached
    g = build_graph(kind, n, ceiling)
    if directory is not None:
        store(directory, g)
    return g
