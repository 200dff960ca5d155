"""Permutations of {1..n}, their cyclic classes, and enumeration of A_n.

Points are 1-based at every public boundary (constructor, ``images``,
cycle notation).  Internally the image table is a 0-based tuple, which
is what the brute-force graph builders work on directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import compress, islice, permutations
from math import gcd, lcm
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError
from .partitions import PartitionType

__all__ = [
    "Permutation",
    "CyclicClass",
    "DEFAULT_BRUTE_FORCE_CEILING",
    "compose",
    "power",
    "cycle_type",
    "order_of",
    "is_even",
    "enumerate_alternating",
    "alternating_tables",
    "cyclic_class_of",
]

DEFAULT_BRUTE_FORCE_CEILING = 10


class Permutation:
    """A bijection of {1..n}; ``images[i]`` is the image of point ``i + 1``."""

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        img = tuple(int(v) - 1 for v in images)
        if not img:
            raise ValueError("degree must be at least 1")
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection of 1..{len(img)}: {tuple(images)!r}")
        self._img = img

    @classmethod
    def _wrap(cls, img: tuple[int, ...]) -> Permutation:
        # trusted 0-based table, no validation
        obj = cls.__new__(cls)
        obj._img = img
        return obj

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._wrap(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} outside 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} repeated in cycle notation")
                seen.add(p)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._wrap(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"`` or ``"id"``."""
        s = text.strip()
        if s == "id":
            return cls.identity(n)
        if not _CYCLES_RE.fullmatch(s):
            raise ValueError(f"bad cycle notation {text!r}")
        cycles = [[int(tok) for tok in body.split()] for body in re.findall(r"\(([^()]*)\)", s)]
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point, ordered by that point."""
        return [tuple(p + 1 for p in c) for c in _cycles(self._img) if len(c) > 1]

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.n})"


_CYCLES_RE = re.compile(r"(\(\s*[0-9]+(\s+[0-9]+)*\s*\)\s*)+")


def _cycles(img: tuple[int, ...]) -> list[list[int]]:
    """All orbits of a 0-based table, fixed points included."""
    n = len(img)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = img[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = img[j]
        out.append(cyc)
    return out


def _power_from_cycles(cycles: list[list[int]], n: int, k: int) -> tuple[int, ...]:
    img = [0] * n
    for cyc in cycles:
        length = len(cyc)
        shift = k % length
        for i, p in enumerate(cyc):
            img[p] = cyc[(i + shift) % length]
    return tuple(img)


def _cycle_lengths_type(cycles: list[list[int]]) -> PartitionType:
    return PartitionType.from_terms(len(c) for c in cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation ``i -> a(b(i))``."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    ai = a._img
    return Permutation._wrap(tuple(ai[j] for j in b._img))


def power(x: Permutation, k: int) -> Permutation:
    """``x`` composed with itself ``k`` times, by index shifts along each cycle."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return Permutation._wrap(_power_from_cycles(_cycles(x._img), x.n, k))


def cycle_type(x: Permutation) -> PartitionType:
    return _cycle_lengths_type(_cycles(x._img))


def order_of(x: Permutation) -> int:
    return lcm(*(len(c) for c in _cycles(x._img)))


def is_even(x: Permutation) -> bool:
    return (x.n - len(_cycles(x._img))) % 2 == 0


def _even_mask(block: list[tuple[int, ...]], n: int) -> np.ndarray:
    arr = np.array(block, dtype=np.int8)
    inversions = np.zeros(len(block), dtype=np.int64)
    for i in range(n - 1):
        inversions += (arr[:, i : i + 1] > arr[:, i + 1 :]).sum(axis=1)
    return inversions % 2 == 0


def alternating_tables(
    n: int, ceiling: int = DEFAULT_BRUTE_FORCE_CEILING, even_only: bool = True
) -> Iterator[tuple[int, ...]]:
    """0-based image tables of A_n in lexicographic order.

    Parity is decided in numpy blocks by counting inversions.  ``even_only``
    set to False yields all of S_n (oracle cross-checks only).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ceiling:
        raise CapacityError("enumeration of A_n", n, ceiling)
    source = permutations(range(n))
    if not even_only:
        yield from source
        return
    while True:
        block = list(islice(source, 1 << 15))
        if not block:
            return
        yield from compress(block, _even_mask(block, n).tolist())


def enumerate_alternating(
    n: int, ceiling: int = DEFAULT_BRUTE_FORCE_CEILING, even_only: bool = True
) -> Iterator[Permutation]:
    """Stream every element of A_n exactly once, lexicographically by image table."""
    for img in alternating_tables(n, ceiling, even_only):
        yield Permutation._wrap(img)


@dataclass(frozen=True)
class CyclicClass:
    """The set of generators of the cyclic subgroup ``<x>``.

    Identified by its representative, the lexicographically least generator.
    """

    representative: Permutation
    order: int = field(compare=False)
    cycle_type: PartitionType = field(compare=False)

    @property
    def size(self) -> int:
        # number of generators of <x>; Euler's phi of the order
        return sum(1 for k in range(1, self.order + 1) if gcd(k, self.order) == 1)

    def __lt__(self, other: CyclicClass) -> bool:
        return self.representative < other.representative

    def __str__(self) -> str:
        return f"[{self.representative}]"


def _generators(cycles: list[list[int]], n: int, o: int) -> list[tuple[int, ...]]:
    return [_power_from_cycles(cycles, n, k) for k in range(1, o + 1) if gcd(k, o) == 1]


def cyclic_class_of(x: Permutation) -> CyclicClass:
    cycles = _cycles(x._img)
    o = lcm(*(len(c) for c in cycles))
    rep = min(_generators(cycles, x.n, o))
    return CyclicClass(Permutation._wrap(rep), o, _cycle_lengths_type(cycles))
