import random
from fractions import Fraction
from math import factorial, gcd

import pytest

from altpower.census import (
    SMALL_N_COUNTS,
    CensusRow,
    Row,
    c_p_components,
    classify_row,
    closed_form_counts,
    critical_primes,
    direct_small_counts,
    edge_count_formula,
    expected_isolated_types,
    in_set_A,
    is_prime,
    mu_classes,
    mu_elements,
    order_graph_verdict,
    procedure_count,
    structure_report,
    totient,
    two_connected,
)
from altpower.errors import TheoremViolation
from altpower.graphs import build_power_type_graph, components, isolated_vertices
from altpower.partitions import PartitionType, enumerate_types
from altpower.perm import cycle_type, enumerate_alternating

T = PartitionType.parse


def sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p::p] = [False] * len(flags[p * p::p])
    return flags


PRIME = sieve(20000)


def in_A_oracle(n):
    cands = [n, n - 1, n - 2] + ([n // 2] if n % 2 == 0 else [(n - 1) // 2])
    return any(c >= 0 and PRIME[c] for c in cands)


# --- arithmetic -----------------------------------------------------------------

def test_is_prime_against_sieve():
    assert [m for m in range(2000) if is_prime(m)] == [m for m in range(2000) if PRIME[m]]


@pytest.mark.parametrize("m", [1, 5, 12, 36, 97, 360, 1001])
def test_totient_against_coprime_count(m):
    assert totient(m) == sum(1 for r in range(1, m + 1) if gcd(r, m) == 1)


def test_totient_examples():
    assert totient(1) == 1 and totient(5) == 4 and totient(12) == 4


def test_mu_examples():
    assert mu_elements(T("[1^2,2^2]")) == 45
    assert mu_classes(T("[1^2,2^2]")) == 45
    assert mu_elements(T("[5]")) == 24
    assert mu_elements(T("[1^7]")) == 1
    assert mu_classes(T("[3^3]")) == 1120
    assert mu_classes(T("[5^2]")) == 18144
    assert mu_classes(T("[1,3^3]")) == 11200


def test_mu_rejects_odd_types():
    with pytest.raises(ValueError):
        mu_elements(T("[1,2]"))


@pytest.mark.parametrize("n", range(3, 8))
def test_mu_against_enumeration(n):
    counts = {}
    for x in enumerate_alternating(n):
        t = cycle_type(x)
        counts[t] = counts.get(t, 0) + 1
    assert counts == {t: mu_elements(t) for t in enumerate_types(n, alternating_only=True)}


@pytest.mark.parametrize("n", range(2, 21))
def test_mu_sums_to_group_order(n):
    assert sum(mu_elements(t) for t in enumerate_types(n, alternating_only=True)) == factorial(n) // 2


def test_in_set_A_examples():
    assert not in_set_A(16)
    assert not in_set_A(51)
    for k in range(2, 9):
        assert not in_set_A(4 * k * k)
    assert in_set_A(15) and in_set_A(12)


def test_in_set_A_against_sieve():
    for n in range(3, 10001):
        assert in_set_A(n) == in_A_oracle(n), n


def test_critical_primes():
    assert critical_primes(11) == {11, 5}
    assert critical_primes(16) == frozenset()
    assert critical_primes(13) == {13, 11}
    with pytest.raises(ValueError):
        critical_primes(10)


def test_at_most_two_critical_primes():
    for n in range(11, 10001):
        assert len(critical_primes(n)) <= 2, n


# --- classifier and closed forms ----------------------------------------------

def test_classify_examples():
    assert classify_row(21).row is Row.N2_ONLY
    assert classify_row(12).row is Row.N1_ONLY
    assert classify_row(16).row is Row.NOT_IN_A
    assert classify_row(11).row is Row.N_AND_HALF_ODD
    assert classify_row(13).row is Row.N_AND_N2
    with pytest.raises(ValueError):
        classify_row(10)


def test_every_row_is_reached():
    assert {classify_row(n).row for n in range(11, 400)} == set(Row)


def test_closed_form_small_n_is_table():
    for n, triple in SMALL_N_COUNTS.items():
        cf = closed_form_counts(n)
        assert (cf.c0, cf.c0_ptype, cf.c0_order) == triple
    assert closed_form_counts(10).c0 == 29345


def test_closed_form_examples():
    assert closed_form_counts(21).c0 == 21 * 10 * factorial(17) + 1
    assert closed_form_counts(21).expression == "21*10*17!+1"
    assert closed_form_counts(11).c0 == factorial(9) + 4 * 11 * 9 * factorial(7) // 10 + 1 == 562465
    assert closed_form_counts(16).c0 == 1 and closed_form_counts(16).two_connected


@pytest.mark.parametrize("n", range(11, 41))
def test_closed_form_counts_isolated_classes(n):
    # c0 = one main component + one component per isolated class
    iso = isolated_vertices(build_power_type_graph(n))
    assert closed_form_counts(n).c0 == 1 + sum(mu_classes(t) for t in iso)


def test_closed_forms_exact_up_to_10000():
    for n in range(11, 10001):
        cf = closed_form_counts(n)
        assert cf.c0 >= 1 and isinstance(cf.c0, int)


def test_half_odd_term_identity():
    for n in range(5, 1001):
        lhs = Fraction(4 * factorial(n), (n - 1) ** 2 * (n - 3))
        rhs = Fraction(4 * n * (n - 2) * factorial(n - 4), n - 1)
        assert lhs == rhs


def test_half_odd_term_identity_exact_rows():
    for n in range(11, 1001):
        if n % 2 and PRIME[(n - 1) // 2]:
            assert 4 * factorial(n) // ((n - 1) ** 2 * (n - 3)) == 4 * n * (n - 2) * factorial(n - 4) // (n - 1)
            assert 4 * factorial(n) % ((n - 1) ** 2 * (n - 3)) == 0


def test_census_row_checks_inequalities():
    with pytest.raises(TheoremViolation):
        CensusRow(12, 5, 3, 4, False, "closed-form")
    with pytest.raises(TheoremViolation):
        CensusRow(12, 1, 1, 1, False, "closed-form")


@pytest.mark.parametrize("n", range(11, 41))
def test_crosscheck_partition_level(n):
    cf = closed_form_counts(n)
    assert direct_small_counts(n) == (cf.c0_ptype, cf.c0_order)
    assert order_graph_verdict(n) == cf.c0_order


# --- procedure ------------------------------------------------------------------

@pytest.mark.parametrize("n,total,steps", [(3, 1, 1), (6, 121, 4), (9, 5442, 4)])
def test_procedure_examples(graphs, n, total, steps):
    res = procedure_count(n, graphs.graph("quotient", n), graphs.census("quotient", n))
    assert (res.total, res.steps) == (total, steps)


def test_procedure_random_orders_agree(graphs):
    q, c = graphs.graph("quotient", 7), graphs.census("quotient", 7)
    rng = random.Random(7)
    totals = {procedure_count(7, q, c, random.Random(rng.getrandbits(32))).total for _ in range(20)}
    assert totals == {421}


def test_procedure_rejects_other_graphs(graphs):
    with pytest.raises(ValueError):
        procedure_count(5, graphs.graph("ptype", 5))


def test_edge_formula(graphs):
    for n in range(4, 8):
        assert edge_count_formula(n) == graphs.graph("power", n).num_edges


def test_c_p_components(graphs):
    assert c_p_components(4, 2) == 3
    assert c_p_components(7, 7) == 120
    assert c_p_components(9, 7) == 4320
    for n, p in [(5, 5), (6, 5), (7, 5), (7, 7), (8, 7), (9, 7)]:
        g, census = graphs.graph("quotient", n), graphs.census("quotient", n)
        comps = {census.component_id[i] for i, c in enumerate(g.labels) if c.order % p == 0}
        assert len(comps) == c_p_components(n, p), (n, p)
    with pytest.raises(ValueError):
        c_p_components(10, 7)


def test_two_connected():
    assert two_connected(3)
    assert two_connected(16)
    assert not two_connected(15)
    assert two_connected(51)
    assert min(n for n in range(4, 1000) if two_connected(n)) == 16
    assert all(two_connected(4 * k * k) for k in range(2, 9))


def test_order_graph_verdict():
    assert order_graph_verdict(6) == 3
    assert order_graph_verdict(13) == 3
    assert order_graph_verdict(10) == 1
    assert max(order_graph_verdict(n) for n in range(3, 2000)) == 3


@pytest.mark.parametrize("n", range(3, 41))
def test_order_graph_verdict_against_direct_build(n):
    assert order_graph_verdict(n) == direct_small_counts(n)[1]


# --- structure ------------------------------------------------------------------

@pytest.mark.parametrize("n,isolated,count", [
    (12, {"[1,11]"}, 2),
    (13, {"[13]", "[1^2,11]"}, 3),
    (16, set(), 1),
])
def test_structure_examples(n, isolated, count):
    rep = structure_report(n)
    assert {str(t) for t in rep.isolated_types} == isolated
    assert rep.component_count == count
    assert not rep.main_is_complete
    assert rep.non_adjacent_witness is not None


def test_expected_isolated_types():
    assert expected_isolated_types(11) == {T("[11]"), T("[1,5^2]")}
    assert expected_isolated_types(14) == {T("[1,13]"), T("[7^2]")}


def test_structure_report_range():
    with pytest.raises(ValueError):
        structure_report(10)


def test_structure_main_component_size():
    rep = structure_report(20)
    g = build_power_type_graph(20)
    assert len(rep.main_component_types) + len(rep.isolated_types) == g.num_vertices
    assert components(g).component_count == rep.component_count
