"""Named invariant suites driven by ``altpower verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import factorial, gcd
from pathlib import Path
from typing import Callable, Iterator

from .cache import get_graph
from .census import (
    SMALL_N_COUNTS,
    closed_form_counts,
    direct_small_counts,
    edge_count_formula,
    mu_elements,
    order_graph_verdict,
    procedure_count,
    structure_report,
)
from .errors import TheoremViolation
from .graphs import components
from .partitions import (
    enumerate_types,
    is_alternating_type,
    order,
    type_power,
)
from .perm import alternating_tables, cycle_type, is_even, order_of, power, Permutation

SUITES = ("table1", "crosscheck-ptype", "structure", "edges", "algebra")

DEFAULT_MAX_N = {
    "table1": 10,
    "crosscheck-ptype": 40,
    "structure": 40,
    "edges": 8,
    "algebra": 12,
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except TheoremViolation as exc:
        ok, detail = False, str(exc)
    return Check(name, ok, detail, time.perf_counter() - start)


def table1_checks(max_n: int, seed: int, trials: int = 10, cache_dir: Path | None = None) -> Iterator[Check]:
    """Brute-force rows of the small-n table, plus the procedure in fixed and random order."""
    rng = random.Random(seed)
    for n in range(3, min(max_n, 10) + 1):

        def row(n=n) -> tuple[bool, str]:
            q = get_graph("quotient", n, cache_dir)
            census = components(q)
            ptype, order_count = direct_small_counts(n)
            got = (census.component_count, ptype, order_count)
            proc = procedure_count(n, q, census)
            rand_ok = all(
                procedure_count(n, q, census, random.Random(rng.getrandbits(64))).total == got[0]
                for _ in range(trials)
            )
            ok = got == SMALL_N_COUNTS[n] and proc.total == got[0] and proc.steps == ptype and rand_ok
            return ok, f"brute {got} table {SMALL_N_COUNTS[n]} procedure {proc.total} in {proc.steps} steps"

        yield _timed(f"table1 n={n}", row)


def crosscheck_checks(max_n: int) -> Iterator[Check]:
    for n in range(11, max_n + 1):

        def row(n=n) -> tuple[bool, str]:
            cf = closed_form_counts(n)
            direct = direct_small_counts(n)
            ok = direct == (cf.c0_ptype, cf.c0_order) and order_graph_verdict(n) == cf.c0_order
            return ok, f"direct {direct} closed form {(cf.c0_ptype, cf.c0_order)} row {cf.row.value}"

        yield _timed(f"crosscheck n={n}", row)


def structure_checks(max_n: int) -> Iterator[Check]:
    for n in range(11, max_n + 1):

        def row(n=n) -> tuple[bool, str]:
            rep = structure_report(n)
            isolated = ",".join(sorted(map(str, rep.isolated_types))) or "-"
            return not rep.main_is_complete, f"isolated {isolated}; primes {sorted(rep.isolated_primes)}"

        yield _timed(f"structure n={n}", row)


def edge_checks(max_n: int, cache_dir: Path | None = None) -> Iterator[Check]:
    for n in range(4, max_n + 1):

        def row(n=n) -> tuple[bool, str]:
            built = get_graph("power", n, cache_dir).num_edges
            formula = edge_count_formula(n)
            return built == formula, f"built {built} formula {formula}"

        yield _timed(f"edges n={n}", row)


def algebra_checks(max_n: int, perm_max_n: int = 7) -> Iterator[Check]:
    def gcd_reduction() -> tuple[bool, str]:
        count = 0
        for n in range(1, max_n + 1):
            for T in enumerate_types(n):
                o = order(T)
                for a in range(1, 2 * o + 1):
                    P = type_power(T, a)
                    if P != type_power(T, gcd(a, o)) or P.n != n or order(P) != o // gcd(a, o):
                        return False, f"{T}^{a} = {P}"
                    count += 1
        return True, f"{count} (type, exponent) pairs"

    def mu_sum() -> tuple[bool, str]:
        for n in range(2, 21):
            total = sum(mu_elements(T) for T in enumerate_types(n, alternating_only=True))
            if total != factorial(n) // 2:
                return False, f"n={n}: {total}"
        return True, "n = 2..20"

    def permutation_level() -> tuple[bool, str]:
        count = 0
        for n in range(1, perm_max_n + 1):
            for img in alternating_tables(n, even_only=False):
                x = Permutation._wrap(img)
                T = cycle_type(x)
                if is_even(x) != is_alternating_type(T):
                    return False, f"parity of {x}"
                o = order_of(x)
                for a in range(1, o + 1):
                    if cycle_type(power(x, a)) != type_power(T, a):
                        return False, f"type of {x}^{a}"
                count += 1
        return True, f"{count} permutations"

    yield _timed(f"gcd reduction and order law n<={max_n}", gcd_reduction)
    yield _timed("sum of element counts = n!/2", mu_sum)
    yield _timed(f"commuting square and parity n<={perm_max_n}", permutation_level)


def run_suite(suite: str, max_n: int | None = None, seed: int = 0, cache_dir: Path | None = None) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if max_n is None:
        max_n = DEFAULT_MAX_N[suite]
    if suite == "table1":
        return list(table1_checks(max_n, seed, cache_dir=cache_dir))
    if suite == "crosscheck-ptype":
        return list(crosscheck_checks(max_n))
    if suite == "structure":
        return list(structure_checks(max_n))
    if suite == "edges":
        return list(edge_checks(max_n, cache_dir))
    return list(algebra_checks(max_n))
