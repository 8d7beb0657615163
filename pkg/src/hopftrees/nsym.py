"""Coloured non-commutative symmetric functions NSym_n in the H (bunch) basis.

``H_I`` for a multisequence ``I = (I_1, ..., I_k)`` is the bunch of flowers
``H_{I_1} . ... . H_{I_k}``.  Products juxtapose multisequences; the coproduct
deconcatenates every row independently.
"""
from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import DEFAULT_CAP, Bialgebra, GradedBasis, LinComb, ResourceLimitError
from .roctree import TRIVIAL, ColourRangeError, RocTree, plant


class MultiSeq:
    """Finite sequence of nonempty colour sequences, e.g. ``((1, 2), (2,))``.

    Canonical code: rows joined by ``;``, entries by ``,`` (``"1,2;2"``);
    the empty multisequence has code ``""``.
    """

    __slots__ = ("rows", "code", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        rows = tuple(tuple(int(c) for c in row) for row in rows)
        for row in rows:
            if not row:
                raise ValueError("multisequence rows must be nonempty")
            if min(row) < 1:
                raise ColourRangeError(f"colour {min(row)} < 1")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "code", ";".join(",".join(map(str, r)) for r in rows))
        object.__setattr__(self, "_hash", hash(rows))

    def __setattr__(self, name, value):
        raise AttributeError("MultiSeq is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiSeq) and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MultiSeq({self.code!r})" if self.rows else "MultiSeq('∅')"

    def __len__(self) -> int:
        return len(self.rows)

    def sort_key(self) -> tuple[int, str]:
        return (len(self.code), self.code)

    @property
    def weight(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def max_colour(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    def composition(self) -> Composition:
        """Row lengths: the image in the monochromatic case."""
        return Composition(tuple(len(r) for r in self.rows))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> MultiSeq:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> MultiSeq:
        """Accepts ``[[1,2],[2]]`` or ``1,2;2``; ``""``, ``[]`` and ``∅`` give the unit."""
        text = text.strip()
        if text.startswith("["):
            return cls.from_json(text)
        if text in ("", "∅"):
            return EMPTY
        return cls(tuple(int(c) for c in row.split(",")) for row in text.split(";"))


EMPTY = MultiSeq()


@dataclass(frozen=True)
class Composition:
    """Finite sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def sort_key(self) -> tuple[int, str]:
        code = ",".join(map(str, self.parts))
        return (len(code), code)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.parts}"


@dataclass(frozen=True, repr=False)
class Partition(Composition):
    """Weakly decreasing composition."""

    def __post_init__(self):
        super().__post_init__()
        p = self.parts
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {p}")


def reorder_to_partition(alpha: Iterable[int]) -> Partition:
    return Partition(tuple(sorted(alpha, reverse=True)))


def compositions(m: int) -> list[Composition]:
    """All compositions of ``m`` (just ``()`` for ``m = 0``)."""
    if m == 0:
        return [Composition()]
    return [subset_to_composition(s, m)
            for r in range(m) for s in itertools.combinations(range(1, m), r)]


def partitions(m: int, largest: int | None = None) -> list[Partition]:
    if largest is None:
        largest = m
    if m == 0:
        return [Partition()]
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


def composition_to_subset(alpha: Sequence[int]) -> frozenset[int]:
    """Partial sums ``{a1, a1+a2, ...}`` excluding the total."""
    sums = list(itertools.accumulate(alpha))
    return frozenset(sums[:-1])


def subset_to_composition(subset: Iterable[int], m: int) -> Composition:
    cuts = sorted(subset)
    if cuts and (cuts[0] < 1 or cuts[-1] > m - 1):
        raise ValueError(f"subset {cuts} not inside 1..{m - 1}")
    bounds = [0] + cuts + [m]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def h_product(i: MultiSeq, j: MultiSeq) -> MultiSeq:
    return MultiSeq(i.rows + j.rows)


def row_factors(i: MultiSeq) -> tuple[MultiSeq, ...]:
    """Single-row multisequences whose product is ``i``."""
    return tuple(MultiSeq((r,)) for r in i.rows)


def h_coproduct(i: MultiSeq) -> LinComb:
    """Per-row deconcatenation, multiplied across the rows."""
    splits = [[(row[:j], row[j:]) for j in range(len(row) + 1)] for row in i.rows]
    terms: dict = {}
    for choice in itertools.product(*splits):
        left = MultiSeq(a for a, _ in choice if a)
        right = MultiSeq(b for _, b in choice if b)
        terms[(left, right)] = terms.get((left, right), 0) + 1
    return LinComb(terms)


def counit(i: MultiSeq) -> Fraction:
    return Fraction(1) if not i.rows else Fraction(0)


def flower(row: Sequence[int], n: int | None = None) -> RocTree:
    """``B+_{i_l} o ... o B+_{i_1}(•)``: ``i_1`` on top, ``i_l`` next to the root."""
    t = TRIVIAL
    for colour in row:
        t = plant(t, colour, n)
    return t


def embed_as_bunch(i: MultiSeq, n: int | None = None) -> RocTree:
    if n is not None and i.max_colour > n:
        raise ColourRangeError(f"{i.code} uses colour {i.max_colour} > n = {n}")
    return RocTree(tuple(child for row in i.rows for child in flower(row, n).children))


def multiseq_count(n: int, m: int) -> int:
    return 1 if m == 0 else n ** m * 2 ** (m - 1)


@lru_cache(maxsize=64)
def _enumerate(n: int, m: int) -> tuple[MultiSeq, ...]:
    out = []
    for alpha in compositions(m):
        for colours in itertools.product(range(1, n + 1), repeat=m):
            rows, pos = [], 0
            for part in alpha:
                rows.append(colours[pos:pos + part])
                pos += part
            out.append(MultiSeq(rows))
    return tuple(sorted(out, key=MultiSeq.sort_key))


def enumerate_multiseqs(n: int, m: int, cap: int = DEFAULT_CAP) -> list[MultiSeq]:
    """All multisequences of weight ``m`` over ``n`` colours, canonical order."""
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    size = multiseq_count(n, m)
    if size > cap:
        raise ResourceLimitError(f"{size} multisequences with n={n}, m={m} exceed cap {cap}")
    return list(_enumerate(n, m))


def nsym_algebra(n: int) -> Bialgebra:
    return Bialgebra(
        name=f"NSym_{n}",
        basis=GradedBasis(weight=lambda i: i.weight, unit=EMPTY,
                          enumerate=lambda m: enumerate_multiseqs(n, m)),
        product=lambda i, j: LinComb.basis(h_product(i, j)),
        coproduct=h_coproduct,
        counit=counit,
    )
