"""The four proper graphs of A_n and their connected components.

Only proper edges are stored.  The loops of the reflexive graphs never
change a component or an isolation statement, so they are left implicit;
a vertex is isolated when it has no proper edge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Any, Hashable, Sequence

import numpy as np

from .errors import CapacityError
from .partitions import (
    PartitionType,
    divisors,
    enumerate_types,
    order,
    proper_powers,
)
from .perm import (
    DEFAULT_BRUTE_FORCE_CEILING,
    CyclicClass,
    Permutation,
    _cycle_lengths_type,
    _cycles,
    _generators,
    _power_from_cycles,
    alternating_tables,
)
from .unionfind import DisjointSet

__all__ = [
    "GRAPH_KINDS",
    "ELEMENT_GRAPH_CEILING",
    "PARTITION_CEILING",
    "UndirectedGraph",
    "ComponentCensus",
    "build_graph",
    "build_proper_power_graph",
    "build_quotient_power_graph",
    "build_power_type_graph",
    "build_order_graph",
    "components",
    "isolated_vertices",
    "component_of",
]

GRAPH_KINDS = ("power", "quotient", "ptype", "order")
ELEMENT_GRAPH_CEILING = 9
PARTITION_CEILING = 64


@dataclass(eq=False)
class UndirectedGraph:
    """Labeled vertices plus proper edges as sorted, unique index pairs ``i < j``."""

    kind: str
    n: int
    labels: list[Any]
    edges: np.ndarray
    vertex_types: list[PartitionType] | None = None
    _index: dict[Hashable, int] | None = field(default=None, repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def index_of(self, label: Hashable) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!s} in {self.kind} graph of A_{self.n}") from None

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.num_vertices)

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for i, j in self.edges.tolist():
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        a, b = min(i, j), max(i, j)
        row = np.searchsorted(self.edges[:, 0], a, side="left")
        end = np.searchsorted(self.edges[:, 0], a, side="right")
        return bool(np.any(self.edges[row:end, 1] == b))


def _edge_array(pairs: Sequence[tuple[int, int]] | np.ndarray) -> np.ndarray:
    arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if arr.size == 0:
        return arr
    arr = np.sort(arr, axis=1)
    if np.any(arr[:, 0] == arr[:, 1]):
        raise ValueError("self-pairs are not proper edges")
    return np.unique(arr, axis=0)


@dataclass
class ComponentCensus:
    component_id: list[int]
    component_count: int
    sizes: list[int]
    multiplicity: dict[tuple[int, PartitionType], int]

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return out


def _check_range(what: str, n: int, ceiling: int) -> None:
    if n < 3:
        raise ValueError(f"{what} needs n >= 3, got {n}")
    if n > ceiling:
        raise CapacityError(what, n, ceiling)


def build_proper_power_graph(n: int, ceiling: int = ELEMENT_GRAPH_CEILING) -> UndirectedGraph:
    """Element-level graph on A_n minus the identity.

    ``x ~ y`` iff one of them lies in the cyclic subgroup of the other.  For
    each ``x`` we walk ``x**m`` for ``2 <= m < o(x)``; a generator of ``<x>``
    is reached from both ends, so it is kept only from the lower index.
    """
    _check_range("proper power graph", n, ceiling)
    tables = list(alternating_tables(n, max(ceiling, DEFAULT_BRUTE_FORCE_CEILING)))
    identity = tuple(range(n))
    tables.remove(identity)
    index = {t: i for i, t in enumerate(tables)}
    src: list[int] = []
    dst: list[int] = []
    types = []
    for i, x in enumerate(tables):
        cycles = _cycles(x)
        types.append(_cycle_lengths_type(cycles))
        o = lcm(*(len(c) for c in cycles))
        step = x.__getitem__
        y = x
        for m in range(2, o):
            y = tuple(map(step, y))
            j = index[y]
            if gcd(m, o) != 1 or i < j:
                src.append(i)
                dst.append(j)
    edges = _edge_array(np.column_stack([np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)]))
    labels = [Permutation._wrap(t) for t in tables]
    return UndirectedGraph("power", n, labels, edges, types)


def build_quotient_power_graph(n: int, ceiling: int = DEFAULT_BRUTE_FORCE_CEILING) -> UndirectedGraph:
    """Graph on the cyclic classes ``[x]`` of A_n minus the identity.

    The subgroups of ``<x>`` are the ``<x**d>`` with ``d | o(x)``, so each
    class is linked to the classes of ``x**d`` for the proper divisors ``d``.
    """
    _check_range("proper quotient power graph", n, ceiling)
    identity = tuple(range(n))
    class_of: dict[tuple[int, ...], int] = {}
    reps: list[tuple[int, ...]] = []
    orders: list[int] = []
    types: list[PartitionType] = []
    pending: list[tuple[int, tuple[int, ...]]] = []
    for x in alternating_tables(n, ceiling):
        if x in class_of or x == identity:
            continue
        cycles = _cycles(x)
        o = lcm(*(len(c) for c in cycles))
        c = len(reps)
        gens = _generators(cycles, n, o)
        for g in gens:
            class_of[g] = c
        reps.append(min(gens))
        orders.append(o)
        types.append(_cycle_lengths_type(cycles))
        for d in divisors(o)[1:-1]:
            pending.append((c, _power_from_cycles(cycles, n, d)))
    pairs = [(c, class_of[y]) for c, y in pending]
    del class_of
    labels = [CyclicClass(Permutation._wrap(r), o, T) for r, o, T in zip(reps, orders, types)]
    return UndirectedGraph("quotient", n, labels, _edge_array(pairs), types)


def build_power_type_graph(n: int, ceiling: int = PARTITION_CEILING) -> UndirectedGraph:
    """Graph on the non-trivial cycle types of A_n; edge when one is a proper power of the other."""
    _check_range("proper power type graph", n, ceiling)
    types = enumerate_types(n, alternating_only=True, exclude_trivial=True)
    index = {T: i for i, T in enumerate(types)}
    pairs = [(index[T], index[P]) for T in types for P in proper_powers(T)]
    return UndirectedGraph("ptype", n, list(types), _edge_array(pairs), list(types))


def build_order_graph(n: int, ceiling: int = PARTITION_CEILING) -> UndirectedGraph:
    """Graph on the element orders of A_n other than 1; edge on divisibility."""
    _check_range("proper order graph", n, ceiling)
    orders = sorted({order(T) for T in enumerate_types(n, alternating_only=True, exclude_trivial=True)})
    pairs = [
        (i, j)
        for i, a in enumerate(orders)
        for j in range(i + 1, len(orders))
        if orders[j] % a == 0
    ]
    return UndirectedGraph("order", n, orders, _edge_array(pairs))


def build_graph(kind: str, n: int, ceiling: int | None = None) -> UndirectedGraph:
    builders = {
        "power": build_proper_power_graph,
        "quotient": build_quotient_power_graph,
        "ptype": build_power_type_graph,
        "order": build_order_graph,
    }
    if kind not in builders:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {GRAPH_KINDS}")
    if ceiling is None:
        return builders[kind](n)
    return builders[kind](n, ceiling)


def components(g: UndirectedGraph) -> ComponentCensus:
    dsu = DisjointSet(g.num_vertices)
    for i, j in g.edges.tolist():
        dsu.union(i, j)
    ids = dsu.labels()
    count = max(ids) + 1 if ids else 0
    sizes = [0] * count
    for c in ids:
        sizes[c] += 1
    mult: dict[tuple[int, PartitionType], int] = {}
    if g.vertex_types is not None:
        mult = dict(Counter(zip(ids, g.vertex_types)))
    return ComponentCensus(ids, count, sizes, mult)


def isolated_vertices(g: UndirectedGraph) -> list[Any]:
    deg = g.degrees()
    return [g.labels[i] for i in np.flatnonzero(deg == 0).tolist()]


def component_of(g: UndirectedGraph, label: Hashable, census: ComponentCensus | None = None) -> set[Any]:
    v = g.index_of(label)
    if census is None:
        census = components(g)
    c = census.component_id[v]
    return {g.labels[i] for i, cid in enumerate(census.component_id) if cid == c}
