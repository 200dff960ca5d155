"""Exact component counts for the proper graphs of A_n.

Everything here is integer arithmetic.  Counts are plain Python ints,
which are already arbitrary precision; ``BigCount`` is only a name for
them in signatures.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .errors import FormulaError, TheoremViolation
from .graphs import (
    PARTITION_CEILING,
    ComponentCensus,
    UndirectedGraph,
    build_order_graph,
    build_power_type_graph,
    components,
)
from .partitions import PartitionType, enumerate_types, is_alternating_type, order

BigCount = int

__all__ = [
    "BigCount",
    "SMALL_N_COUNTS",
    "Row",
    "RowClassification",
    "CensusRow",
    "StructureReport",
    "ProcedureResult",
    "is_prime",
    "totient",
    "mu_elements",
    "mu_classes",
    "in_set_A",
    "critical_primes",
    "classify_row",
    "closed_form_counts",
    "procedure_count",
    "edge_count_formula",
    "structure_report",
    "c_p_components",
    "two_connected",
    "order_graph_verdict",
    "expected_isolated_types",
    "direct_small_counts",
]

# (c0 = quotient count, power-type count, order-graph count) for 3 <= n <= 10
SMALL_N_COUNTS: dict[int, tuple[int, int, int]] = {
    3: (1, 1, 1),
    4: (7, 2, 2),
    5: (31, 3, 3),
    6: (121, 4, 3),
    7: (421, 4, 3),
    8: (962, 3, 2),
    9: (5442, 4, 2),
    10: (29345, 3, 1),
}


@lru_cache(maxsize=None)
def _fact(m: int) -> int:
    return factorial(m)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise FormulaError(f"{what}: {num} is not divisible by {den}")
    return q


def is_prime(m: int) -> bool:
    """Deterministic trial division."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("totient needs m >= 1")
    result = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def mu_elements(T: PartitionType) -> BigCount:
    """Number of permutations of type ``T`` in A_n (same as in S_n)."""
    if not is_alternating_type(T):
        raise ValueError(f"{T} is not a cycle type of A_{T.n}")
    den = 1
    for m, t in T.parts:
        den *= m**t * _fact(t)
    return _exact_div(_fact(T.n), den, f"element count of {T}")


def mu_classes(T: PartitionType) -> BigCount:
    """Number of cyclic classes ``[x]`` of type ``T`` in A_n."""
    return _exact_div(mu_elements(T), totient(order(T)), f"class count of {T}")


def in_set_A(n: int) -> bool:
    """Whether one of n, n-1, n-2, n/2, (n-1)/2 is prime."""
    if is_prime(n) or is_prime(n - 1) or is_prime(n - 2):
        return True
    half = n // 2 if n % 2 == 0 else (n - 1) // 2
    return is_prime(half)


def critical_primes(n: int) -> frozenset[int]:
    if n < 11:
        raise ValueError(f"critical primes are defined for n >= 11, got {n}")
    cands = [n, n - 1, n - 2, n // 2 if n % 2 == 0 else (n - 1) // 2]
    return frozenset(p for p in cands if is_prime(p))


class Row(enum.Enum):
    """Rows of the n >= 11 table, top to bottom; values are the row labels."""

    N2_AND_HALF_ODD = "n-2, (n-1)/2 in P"
    N_AND_HALF_ODD = "n, (n-1)/2 in P"
    N_AND_N2 = "n, n-2 in P"
    N2_ONLY = "n-2 in P, n not in P, (n-1)/2 not in P"
    HALF_ODD_ONLY = "(n-1)/2 in P, n not in P, n-2 not in P"
    N_ONLY = "n in P, n-2 not in P, (n-1)/2 not in P"
    N1_ONLY = "n-1 in P, n/2 not in P"
    N1_AND_HALF_EVEN = "n-1, n/2 in P"
    HALF_EVEN_ONLY = "n/2 in P, n-1 not in P"
    NOT_IN_A = "n not in A"


# (c0_ptype, c0_order) per row
_ROW_SMALL_COUNTS = {
    Row.N2_AND_HALF_ODD: (3, 2),
    Row.N_AND_HALF_ODD: (3, 2),
    Row.N_AND_N2: (3, 3),
    Row.N2_ONLY: (2, 2),
    Row.HALF_ODD_ONLY: (2, 1),
    Row.N_ONLY: (2, 2),
    Row.N1_ONLY: (2, 2),
    Row.N1_AND_HALF_EVEN: (3, 2),
    Row.HALF_EVEN_ONLY: (2, 1),
    Row.NOT_IN_A: (1, 1),
}


@dataclass(frozen=True)
class RowClassification:
    n: int
    row: Row
    critical_primes: frozenset[int]


def classify_row(n: int) -> RowClassification:
    if n < 11:
        raise ValueError(f"row classification is defined for n >= 11, got {n}")
    odd = n % 2 == 1
    p_n = is_prime(n)
    p_n1 = is_prime(n - 1)
    p_n2 = is_prime(n - 2)
    p_ho = odd and is_prime((n - 1) // 2)
    p_he = not odd and is_prime(n // 2)
    predicates = [
        (Row.N2_AND_HALF_ODD, p_n2 and p_ho),
        (Row.N_AND_HALF_ODD, p_n and p_ho),
        (Row.N_AND_N2, p_n and p_n2),
        (Row.N2_ONLY, p_n2 and not p_n and not p_ho),
        (Row.HALF_ODD_ONLY, p_ho and not p_n and not p_n2),
        (Row.N_ONLY, p_n and not p_n2 and not p_ho),
        (Row.N1_ONLY, p_n1 and not p_he),
        (Row.N1_AND_HALF_EVEN, p_n1 and p_he),
        (Row.HALF_EVEN_ONLY, p_he and not p_n1),
        (Row.NOT_IN_A, not in_set_A(n)),
    ]
    matched = [row for row, holds in predicates if holds]
    if len(matched) != 1:
        raise TheoremViolation(f"n={n} matches {len(matched)} table rows: {matched}")
    return RowClassification(n, matched[0], critical_primes(n))


def _term_n2(n: int) -> int:
    # classes of type [1^2, n-2]
    return _exact_div(n * (n - 1) * _fact(n - 4), 2, "n(n-1)(n-4)!/2")


def _term_half_odd(n: int) -> int:
    # classes of type [1, ((n-1)/2)^2]
    return _exact_div(4 * n * (n - 2) * _fact(n - 4), n - 1, "4n(n-2)(n-4)!/(n-1)")


def _term_n(n: int) -> int:
    # classes of type [n]
    return _fact(n - 2)


def _term_n1(n: int) -> int:
    # classes of type [1, n-1]
    return n * _fact(n - 3)


def _term_half_even(n: int) -> int:
    # classes of type [(n/2)^2]
    return _exact_div(4 * (n - 1) * _fact(n - 3), n, "4(n-1)(n-3)!/n")


_ROW_TERMS = {
    Row.N2_AND_HALF_ODD: (_term_n2, _term_half_odd),
    Row.N_AND_HALF_ODD: (_term_n, _term_half_odd),
    Row.N_AND_N2: (_term_n, _term_n2),
    Row.N2_ONLY: (_term_n2,),
    Row.HALF_ODD_ONLY: (_term_half_odd,),
    Row.N_ONLY: (_term_n,),
    Row.N1_ONLY: (_term_n1,),
    Row.N1_AND_HALF_EVEN: (_term_half_even, _term_n1),
    Row.HALF_EVEN_ONLY: (_term_half_even,),
    Row.NOT_IN_A: (),
}

_TERM_TEXT = {
    _term_n2: lambda n: f"{n}*{(n - 1) // 2}*{n - 4}!",
    _term_half_odd: lambda n: f"4*{n}*{n - 2}*{n - 4}!/{n - 1}",
    _term_n: lambda n: f"{n - 2}!",
    _term_n1: lambda n: f"{n}*{n - 3}!",
    _term_half_even: lambda n: f"4*{n - 1}*{n - 3}!/{n}",
}


@dataclass(frozen=True)
class CensusRow:
    n: int
    c0: BigCount
    c0_ptype: int
    c0_order: int
    two_connected: bool
    source: str
    row: Row | None = None
    expression: str | None = None

    def __post_init__(self):
        if not self.c0_order <= self.c0_ptype <= self.c0:
            raise TheoremViolation(f"count inequalities fail at n={self.n}: {self}")
        if self.two_connected != (self.c0 == 1):
            raise TheoremViolation(f"2-connectivity flag disagrees with c0 at n={self.n}")


def closed_form_counts(n: int) -> CensusRow:
    if n < 3:
        raise ValueError(f"closed forms start at n = 3, got {n}")
    if n <= 10:
        c0, ct, co = SMALL_N_COUNTS[n]
        return CensusRow(n, c0, ct, co, c0 == 1, "closed-form")
    cls = classify_row(n)
    terms = _ROW_TERMS[cls.row]
    c0 = sum(f(n) for f in terms) + 1
    ct, co = _ROW_SMALL_COUNTS[cls.row]
    expr = "+".join([_TERM_TEXT[f](n) for f in terms] + ["1"])
    return CensusRow(n, c0, ct, co, c0 == 1, "closed-form", cls.row, expr)


@dataclass
class ProcedureResult:
    total: BigCount
    steps: int
    picks: list[tuple[PartitionType, int]] = field(default_factory=list)


def procedure_count(
    n: int,
    quotient: UndirectedGraph,
    census: ComponentCensus | None = None,
    rng: random.Random | None = None,
) -> ProcedureResult:
    """Count components of the quotient graph by visiting one type per step.

    At each step an uncovered type ``T`` is chosen, a class of that type
    fixes a component ``C``, and ``mu_classes(T) / k_C(T)`` components are
    added; every type admissible for ``C`` is then covered.  Without ``rng``
    the least uncovered type and the first class of that type are used;
    with ``rng`` both choices are random.  ``picks`` records ``(T, k_C(T))``.
    """
    if quotient.kind != "quotient" or quotient.n != n or quotient.vertex_types is None:
        raise ValueError("procedure_count needs the proper quotient power graph of A_n")
    if census is None:
        census = components(quotient)
    by_type: dict[PartitionType, list[int]] = {}
    for v, T in enumerate(quotient.vertex_types):
        by_type.setdefault(T, []).append(v)
    types_of_component: dict[int, set[PartitionType]] = {}
    for c, T in census.multiplicity:
        types_of_component.setdefault(c, set()).add(T)

    remaining = set(by_type)
    total = 0
    picks = []
    while remaining:
        if rng is None:
            T = min(remaining)
            v = by_type[T][0]
        else:
            T = rng.choice(sorted(remaining))
            v = rng.choice(by_type[T])
        c = census.component_id[v]
        k = census.multiplicity[(c, T)]
        num, rem = divmod(mu_classes(T), k)
        if rem:
            raise TheoremViolation(f"component of {quotient.labels[v]} is not equitable for {T}: k={k}")
        total += num
        picks.append((T, k))
        remaining -= types_of_component[c]
    return ProcedureResult(total, len(picks), picks)


def edge_count_formula(n: int) -> BigCount:
    """Proper edge count of the power graph from element-order statistics."""
    if n < 3:
        raise ValueError("n must be >= 3")
    s: dict[int, int] = {}
    for T in enumerate_types(n, alternating_only=True, exclude_trivial=True):
        m = order(T)
        s[m] = s.get(m, 0) + mu_elements(T)
    twice = sum(sm * (2 * m - totient(m) - 3) for m, sm in s.items())
    return _exact_div(twice, 2, "edge count")


@dataclass
class StructureReport:
    n: int
    main_component_types: frozenset[PartitionType]
    isolated_types: frozenset[PartitionType]
    isolated_primes: frozenset[int]
    main_is_complete: bool
    component_count: int
    non_adjacent_witness: tuple[PartitionType, PartitionType] | None = None


def expected_isolated_types(n: int) -> frozenset[PartitionType]:
    """Isolated cycle types predicted by the critical primes, for n >= 11."""
    out = set()
    if is_prime(n):
        out.add(PartitionType.from_terms([n]))
    if is_prime(n - 1):
        out.add(PartitionType.from_terms([1, n - 1]))
    if is_prime(n - 2):
        out.add(PartitionType.from_terms([1, 1, n - 2]))
    if n % 2 == 0 and is_prime(n // 2):
        out.add(PartitionType.from_terms([n // 2, n // 2]))
    if n % 2 == 1 and is_prime((n - 1) // 2):
        p = (n - 1) // 2
        out.add(PartitionType.from_terms([1, p, p]))
    return frozenset(out)


def structure_report(n: int, ceiling: int = PARTITION_CEILING) -> StructureReport:
    """Build the power-type graph and check the main-component-plus-isolated shape."""
    if n < 11:
        raise ValueError(f"structure report is defined for n >= 11, got {n}")
    g = build_power_type_graph(n, ceiling)
    census = components(g)
    big = [c for c, size in enumerate(census.sizes) if size > 1]
    if len(big) != 1:
        raise TheoremViolation(f"A_{n}: expected one non-singleton type component, found {len(big)}")
    main = big[0]
    main_types = frozenset(g.labels[v] for v, c in enumerate(census.component_id) if c == main)
    isolated = frozenset(g.labels[v] for v, c in enumerate(census.component_id) if c != main)
    if isolated != expected_isolated_types(n):
        raise TheoremViolation(
            f"A_{n}: isolated types {sorted(map(str, isolated))} differ from "
            f"{sorted(map(str, expected_isolated_types(n)))}"
        )
    primes = frozenset(order(T) for T in isolated)
    if not all(is_prime(p) for p in primes) or not primes <= critical_primes(n):
        raise TheoremViolation(f"A_{n}: isolated orders {sorted(primes)} are not critical primes")
    if len(primes) > 2:
        raise TheoremViolation(f"A_{n}: more than two primes among isolated types")

    witness = None
    t2 = PartitionType.from_terms([1] * (n - 4) + [2, 2])
    t3 = PartitionType.from_terms([1] * (n - 3) + [3])
    if t2 in main_types and t3 in main_types and not g.has_edge(g.index_of(t2), g.index_of(t3)):
        witness = (t2, t3)
    if witness is None:
        raise TheoremViolation(f"A_{n}: no non-adjacent order-2/order-3 pair in the main component")
    return StructureReport(
        n,
        main_types,
        isolated,
        primes,
        main_is_complete=False,
        component_count=census.component_count,
        non_adjacent_witness=witness,
    )


def c_p_components(n: int, p: int) -> BigCount:
    """Number of quotient components holding elements of prime order ``p``
    when ``n`` is ``p``, ``p + 1`` or ``p + 2``."""
    if not is_prime(p) or n < 4 or n not in (p, p + 1, p + 2):
        raise ValueError(f"c_p needs a prime p with n in {{p, p+1, p+2}} and n >= 4; got n={n}, p={p}")
    if n == 4 and p == 2:
        return 3
    if n == p:
        return _fact(p - 2)
    if n == p + 1:
        return (p + 1) * _fact(p - 2)
    if p % 2 == 0:
        raise ValueError("n = p + 2 needs p odd (or n = 4)")
    return _exact_div((p + 2) * (p + 1) * _fact(p - 2), 2, "c_p for n = p + 2")


def two_connected(n: int) -> bool:
    """Whether the power graph of A_n stays connected after removing any vertex."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return n == 3 or not in_set_A(n)


def order_graph_verdict(n: int) -> int:
    """Number of components of the proper order graph of A_n."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if n == 3:
        return 1
    if n == 6:
        return 3
    p_n, p_n1, p_n2 = is_prime(n), is_prime(n - 1), is_prime(n - 2)
    if p_n and p_n2:
        return 3
    if p_n or p_n1 or p_n2:
        return 2
    return 1


def direct_small_counts(n: int, ceiling: int = PARTITION_CEILING) -> tuple[int, int]:
    """Component counts of the power-type and order graphs, built directly."""
    return (
        components(build_power_type_graph(n, ceiling)).component_count,
        components(build_order_graph(n, ceiling)).component_count,
    )
