from itertools import permutations
from math import factorial, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altpower.census import mu_classes, totient
from altpower.errors import CapacityError
from altpower.partitions import PartitionType, enumerate_types, type_power
from altpower.perm import (
    CyclicClass,
    Permutation,
    compose,
    cycle_type,
    cyclic_class_of,
    enumerate_alternating,
    is_even,
    order_of,
    power,
)


def P(text, n):
    return Permutation.parse(text, n)


def naive_power(x, k):
    # repeated composition on plain 1-based tuples
    n = x.n
    cur = tuple(range(1, n + 1))
    img = x.images
    for _ in range(k):
        cur = tuple(img[c - 1] for c in cur)
    return Permutation(cur)


def inversion_parity_even(images):
    inv = sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])
    return inv % 2 == 0


def transposition_parity_even(x):
    # sort by swaps and count them
    arr = list(x.images)
    swaps = 0
    for i in range(len(arr)):
        while arr[i] != i + 1:
            j = arr[i] - 1
            arr[i], arr[j] = arr[j], arr[i]
            swaps += 1
    return swaps % 2 == 0


perm_strategy = st.integers(1, 12).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)


def test_construction_and_text_round_trip():
    x = P("(1 2)(3 4)", 5)
    assert x.images == (2, 1, 4, 3, 5)
    assert str(x) == "(1 2)(3 4)"
    assert str(Permutation.identity(4)) == "id"
    assert P("id", 3) == Permutation.identity(3)
    assert P("(3 1 2)", 3) == P("(1 2 3)", 3)
    assert str(P("( 4 6 5 )(2 1)", 6)) == "(1 2)(4 6 5)"


@pytest.mark.parametrize("bad", ["(1 2", "(1 1)", "(0 1)", "(1 9)", "1 2", "(1 2)x"])
def test_parse_rejects_bad_notation(bad):
    with pytest.raises(ValueError):
        P(bad, 4)


def test_constructor_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([])


def test_compose_examples():
    x = P("(1 2 3)(4 5)", 5)
    assert compose(Permutation.identity(5), x) == x
    assert compose(P("(1 2)", 2), P("(1 2)", 2)) == Permutation.identity(2)
    assert compose(P("(1 2 3)", 3), P("(1 2 3)", 3)) == P("(1 3 2)", 3)
    a, b = P("(1 2)", 3), P("(2 3)", 3)
    # i -> a(b(i)): 2 -> 3 -> 3, 3 -> 2 -> 1
    assert compose(a, b) == P("(1 2 3)", 3)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_power_examples():
    assert power(P("(1 2 3 4)(5 6)", 6), 2) == P("(1 3)(2 4)", 6)
    x = P("(1 2 3 4 5 6 7 8 9)", 9)
    expected = naive_power(x, 3)
    assert expected == P("(1 4 7)(2 5 8)(3 6 9)", 9)
    assert power(x, 3) == expected
    assert power(x, 0) == Permutation.identity(9)
    assert power(x, order_of(x)) == Permutation.identity(9)


@settings(max_examples=200, deadline=None)
@given(perm_strategy, st.integers(0, 40))
def test_power_matches_repeated_composition(x, k):
    assert power(x, k) == naive_power(x, k)


@settings(max_examples=100, deadline=None)
@given(perm_strategy, st.integers(0, 15), st.integers(0, 15))
def test_power_is_homomorphic(x, a, b):
    assert power(x, a + b) == compose(power(x, a), power(x, b))


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(5)) == PartitionType.parse("[1^5]")
    assert cycle_type(P("(1 2)(3 4)", 8)) == PartitionType.parse("[1^4,2^2]")
    assert cycle_type(P("(1 2 3 4)(5 6 7 8)", 8)) == PartitionType.parse("[4^2]")


def test_order_examples():
    assert order_of(Permutation.identity(4)) == 1
    assert order_of(P("(1 2)(3 4 5)", 5)) == 6


def test_order_is_minimal_annihilating_exponent_in_A6():
    ident = Permutation.identity(6)
    for x in enumerate_alternating(6):
        k, y = 1, x
        while y != ident:
            y = compose(x, y)
            k += 1
        assert order_of(x) == k


def test_is_even_examples():
    assert is_even(Permutation.identity(3))
    assert not is_even(P("(1 2)", 2))
    assert is_even(P("(1 2)(3 4)", 4))


@pytest.mark.parametrize("n", range(1, 7))
def test_parity_against_transposition_count(n):
    for img in permutations(range(1, n + 1)):
        x = Permutation(img)
        assert is_even(x) == transposition_parity_even(x)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (5, 60), (9, 181440)])
def test_enumerate_alternating_counts(n, count):
    assert sum(1 for _ in enumerate_alternating(n)) == count


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_alternating_against_inversion_filter(n):
    expected = [Permutation(p) for p in permutations(range(1, n + 1)) if inversion_parity_even(p)]
    got = list(enumerate_alternating(n))
    assert got == expected
    assert len(set(got)) == max(1, factorial(n) // 2)


def test_enumerate_alternating_ceiling():
    with pytest.raises(CapacityError, match="ceiling 10"):
        next(enumerate_alternating(11))
    with pytest.raises(CapacityError, match="ceiling 5"):
        next(enumerate_alternating(6, ceiling=5))
    assert sum(1 for _ in enumerate_alternating(4, ceiling=4)) == 12


def test_cyclic_class_examples():
    assert cyclic_class_of(P("(1 2 3)", 3)) == cyclic_class_of(P("(1 3 2)", 3))
    c = cyclic_class_of(P("(1 3 2 4 5)", 5))
    assert isinstance(c, CyclicClass)
    assert c.order == 5 and c.size == 4 == totient(5)
    assert c.cycle_type == PartitionType.parse("[5]")


@settings(max_examples=100, deadline=None)
@given(perm_strategy, st.integers(1, 60))
def test_cyclic_class_invariant_under_coprime_powers(x, k):
    o = order_of(x)
    c = cyclic_class_of(x)
    assert c.order == o
    if gcd(k, o) == 1:
        assert cyclic_class_of(power(x, k)) == c
    # the representative is the least generator
    gens = [power(x, j) for j in range(1, o + 1) if gcd(j, o) == 1]
    assert c.representative == min(gens)


def test_five_cycle_classes_in_A5():
    classes = {cyclic_class_of(x) for x in enumerate_alternating(5) if order_of(x) == 5}
    assert len(classes) == 6


@pytest.mark.parametrize("n", range(3, 10))
def test_class_count_matches_type_formula(n, graphs):
    # quotient graph vertices are exactly the non-identity classes
    formula = sum(mu_classes(T) for T in enumerate_types(n, alternating_only=True, exclude_trivial=True))
    assert graphs.graph("quotient", n).num_vertices == formula


@pytest.mark.parametrize("n", range(1, 8))
def test_cycle_type_commutes_with_power(n):
    for x in enumerate_alternating(n):
        T = cycle_type(x)
        for a in range(1, order_of(x) + 1):
            assert cycle_type(power(x, a)) == type_power(T, a)
