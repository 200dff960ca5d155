"""Partitions of n viewed as cycle types.

A :class:`PartitionType` is stored canonically as a tuple of
``(part, multiplicity)`` pairs with strictly increasing parts, so equality
is structural.  The text form mirrors the usual exponent notation, e.g.
``[1^4,2^2]`` or ``[2,5,6]``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Iterator

__all__ = [
    "PartitionType",
    "order",
    "gcd_parts",
    "type_power",
    "is_proper_power_exponent",
    "proper_powers",
    "is_alternating_type",
    "enumerate_types",
    "divisors",
]


@dataclass(frozen=True, order=False)
class PartitionType:
    n: int
    parts: tuple[tuple[int, int], ...]
    _key: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a partition needs at least one part")
        prev = 0
        total = 0
        for m, t in self.parts:
            if m <= prev or t < 1:
                raise ValueError(f"non-canonical parts {self.parts!r}")
            prev = m
            total += m * t
        if total != self.n:
            raise ValueError(f"parts {self.parts!r} sum to {total}, not {self.n}")
        if not self._key:
            object.__setattr__(self, "_key", tuple(m for m, t in self.parts for _ in range(t)))

    @classmethod
    def from_terms(cls, terms: Iterable[int]) -> PartitionType:
        """Build from an unordered list of terms, e.g. ``[6, 2, 5]``."""
        return _from_sorted(tuple(sorted(terms)))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> PartitionType:
        return _from_parts(tuple(sorted((m, t) for m, t in counts.items() if t)))

    @classmethod
    def trivial(cls, n: int) -> PartitionType:
        return _from_sorted((1,) * n)

    @classmethod
    def parse(cls, text: str) -> PartitionType:
        """Parse ``[1^4,2^2]``-style text.  Parts must be strictly ascending
        and explicit multiplicities must be at least 2."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"partition text must be bracketed: {text!r}")
        items = [s.strip() for s in body[1:-1].split(",")]
        pairs = []
        for item in items:
            match = _TERM_RE.fullmatch(item)
            if match is None:
                raise ValueError(f"bad term {item!r} in {text!r}")
            m = int(match.group(1))
            t = int(match.group(2)) if match.group(2) is not None else 1
            if match.group(2) is not None and t < 2:
                raise ValueError(f"multiplicity must be omitted or >= 2 in {text!r}")
            pairs.append((m, t))
        if any(a[0] >= b[0] for a, b in zip(pairs, pairs[1:])):
            raise ValueError(f"parts must be strictly ascending in {text!r}")
        return cls(sum(m * t for m, t in pairs), tuple(pairs))

    @property
    def terms(self) -> tuple[int, ...]:
        """All terms in ascending order, repeated by multiplicity."""
        return self._key

    @property
    def num_terms(self) -> int:
        return len(self._key)

    def multiplicity(self, m: int) -> int:
        for part, t in self.parts:
            if part == m:
                return t
        return 0

    def is_trivial(self) -> bool:
        return self.parts == ((1, self.n),)

    def __lt__(self, other: PartitionType) -> bool:
        return (self.n, self._key) < (other.n, other._key)

    def __str__(self) -> str:
        return "[" + ",".join(str(m) if t == 1 else f"{m}^{t}" for m, t in self.parts) + "]"

    def __repr__(self) -> str:
        return f"PartitionType({self})"


_TERM_RE = re.compile(r"([1-9][0-9]*)(?:\^([0-9]+))?")


@lru_cache(maxsize=None)
def _from_parts(parts: tuple[tuple[int, int], ...]) -> PartitionType:
    return PartitionType(sum(m * t for m, t in parts), parts)


def _from_sorted(terms: tuple[int, ...]) -> PartitionType:
    return _from_parts(tuple(sorted(Counter(terms).items())))


def order(T: PartitionType) -> int:
    """lcm of the parts; the common order of every permutation of type ``T``."""
    return lcm(*(m for m, _ in T.parts))


def gcd_parts(T: PartitionType) -> int:
    return gcd(*(m for m, _ in T.parts))


def type_power(T: PartitionType, a: int) -> PartitionType:
    """Cycle type of ``x**a`` for any ``x`` of type ``T``.

    Each part ``x`` splits into ``gcd(a, x)`` parts of size ``x / gcd(a, x)``.
    """
    if a < 1:
        raise ValueError("exponent must be positive")
    counts: dict[int, int] = {}
    for m, t in T.parts:
        g = gcd(a, m)
        counts[m // g] = counts.get(m // g, 0) + t * g
    return _from_parts(tuple(sorted(counts.items())))


def is_proper_power_exponent(T: PartitionType, a: int) -> bool:
    o = order(T)
    g = gcd(a, o)
    return g != 1 and g != o


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of ``m`` by trial division."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def proper_powers(T: PartitionType) -> frozenset[PartitionType]:
    # T**a == T**gcd(a, o(T)), so only proper divisors of the order matter
    o = order(T)
    return frozenset(type_power(T, d) for d in divisors(o)[1:-1])


def is_alternating_type(T: PartitionType) -> bool:
    return (T.n - T.num_terms) % 2 == 0


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_types(n: int) -> tuple[PartitionType, ...]:
    return tuple(sorted(_from_sorted(tuple(reversed(p))) for p in _descending(n, n)))


def enumerate_types(
    n: int, alternating_only: bool = False, exclude_trivial: bool = False
) -> list[PartitionType]:
    """Partitions of ``n`` in lexicographic order of their ascending terms."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for T in _all_types(n):
        if alternating_only and not is_alternating_type(T):
            continue
        if exclude_trivial and T.is_trivial():
            continue
        out.append(T)
    return out
