"""Polynomials in partially commutative variables ``x_{a,i}``.

``x_{a,i}`` and ``x_{b,j}`` commute whenever ``i != j``; at a common position
the colour order matters.  A monomial therefore has a unique normal form: its
letters stably sorted by position, i.e. a list of ``(position, colours)``
blocks.  Polynomials are truncated at a position bound ``N`` (variables with
position > N are zero), which is a ring quotient, so identities checked here
are exact.
"""
from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .core import LinComb, Report
from .nsym import MultiSeq, enumerate_multiseqs
from .qsym import deconcat_coproduct_m, quasi_shuffle


class BoundMismatchError(ValueError):
    """Binary operation on polynomials with different position bounds."""


class BoundTooSmallError(ValueError):
    """A position exceeds the polynomial's bound."""


class RecognitionError(ValueError):
    """A polynomial is not a combination of monomial quasi-symmetric expansions."""


class PCVariable(NamedTuple):
    colour: int
    position: int


class PCMonomial:
    """Normal-form word: blocks ``(position, colours)`` with increasing positions."""

    __slots__ = ("blocks", "code", "_hash")

    def __init__(self, blocks: Iterable[tuple[int, Sequence[int]]] = ()):
        blocks = tuple((int(p), tuple(int(c) for c in cols)) for p, cols in blocks)
        for (p, cols), nxt in itertools.zip_longest(blocks, blocks[1:]):
            if p < 1 or not cols:
                raise ValueError(f"bad block {(p, cols)}")
            if nxt is not None and nxt[0] <= p:
                raise ValueError("block positions must be strictly increasing")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "code", "|".join(
            f"{p}:" + ",".join(map(str, cols)) for p, cols in blocks))
        object.__setattr__(self, "_hash", hash(blocks))

    def __setattr__(self, name, value):
        raise AttributeError("PCMonomial is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PCMonomial) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PCMonomial({self.code!r})"

    def sort_key(self) -> tuple[int, str]:
        return (len(self.code), self.code)

    @property
    def degree(self) -> int:
        return sum(len(cols) for _, cols in self.blocks)

    @property
    def max_position(self) -> int:
        return self.blocks[-1][0] if self.blocks else 0

    def word(self) -> list[PCVariable]:
        return [PCVariable(c, p) for p, cols in self.blocks for c in cols]

    def pattern(self) -> MultiSeq:
        """Colour rows with positions forgotten: the similarity class."""
        return MultiSeq(cols for _, cols in self.blocks)

    def __mul__(self, other: PCMonomial) -> PCMonomial:
        return normalize(self.word() + other.word())

    def to_json(self) -> list:
        return [[p, list(cols)] for p, cols in self.blocks]

    @classmethod
    def from_json(cls, data) -> PCMonomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls((p, cols) for p, cols in data)


ONE = PCMonomial()


def normalize(word: Iterable[tuple[int, int]]) -> PCMonomial:
    """Stable sort of ``(colour, position)`` letters by position."""
    blocks: dict[int, list[int]] = {}
    for colour, position in word:
        blocks.setdefault(position, []).append(colour)
    return PCMonomial((p, blocks[p]) for p in sorted(blocks))


def similar(m1: PCMonomial, m2: PCMonomial) -> bool:
    return m1.pattern() == m2.pattern()


class PCPolynomial:
    """Element of the truncated ring: LinComb of monomials plus position bound."""

    __slots__ = ("terms", "bound")

    def __init__(self, terms: LinComb | dict | None, bound: int):
        terms = terms if isinstance(terms, LinComb) else LinComb(terms or {})
        for mono in terms:
            if mono.max_position > bound:
                raise BoundTooSmallError(f"{mono} exceeds position bound {bound}")
        self.terms = terms
        self.bound = bound

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PCPolynomial):
            return NotImplemented
        return self.bound == other.bound and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PCPolynomial({len(self.terms)} terms, N={self.bound})"

    def _check(self, other: PCPolynomial) -> None:
        if self.bound != other.bound:
            raise BoundMismatchError(f"bounds {self.bound} and {other.bound} differ")

    def __add__(self, other: PCPolynomial) -> PCPolynomial:
        self._check(other)
        return PCPolynomial(self.terms + other.terms, self.bound)

    def __sub__(self, other: PCPolynomial) -> PCPolynomial:
        self._check(other)
        return PCPolynomial(self.terms - other.terms, self.bound)

    def __mul__(self, other):
        if isinstance(other, PCPolynomial):
            return pc_multiply(self, other)
        return PCPolynomial(self.terms * other, self.bound)

    __rmul__ = __mul__

    @classmethod
    def one(cls, bound: int) -> PCPolynomial:
        return cls({ONE: 1}, bound)

    def to_json(self) -> list[dict]:
        return self.terms.to_json()


def pc_multiply(p: PCPolynomial, q: PCPolynomial) -> PCPolynomial:
    p._check(q)
    acc: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = m1 * m2
            acc[m] = acc.get(m, 0) + c1 * c2
    return PCPolynomial(LinComb(acc), p.bound)


def expand_m(i: MultiSeq, bound: int) -> PCPolynomial:
    """``M_i`` truncated to positions ``1..bound``: one monomial per increasing position tuple.

    With more rows than positions no tuple exists and the result is zero.
    """
    positions = range(1, bound + 1)
    return PCPolynomial(
        {PCMonomial(zip(pos, i.rows)): 1 for pos in itertools.combinations(positions, len(i.rows))},
        bound)


def expand_lincomb(x: LinComb, bound: int) -> PCPolynomial:
    acc = PCPolynomial({}, bound)
    for key, c in x.items():
        acc = acc + expand_m(key, bound) * c
    return acc


def recognize(p: PCPolynomial) -> LinComb:
    """Write ``p`` as ``sum c_I M_I`` (truncated); raise if it is not of that form."""
    return _recognize(p.terms, p.bound)


def _recognize(terms: LinComb, bound: int) -> LinComb:
    classes: dict[MultiSeq, dict[PCMonomial, Fraction]] = {}
    for mono, c in terms.items():
        classes.setdefault(mono.pattern(), {})[mono] = c
    out = {}
    for pattern, members in classes.items():
        coeffs = set(members.values())
        expected = comb(bound, len(pattern))
        if len(coeffs) != 1 or len(members) != expected:
            raise RecognitionError(
                f"class {pattern.code!r}: {len(members)} of {expected} similar monomials, "
                f"coefficients {sorted(coeffs)}")
        out[pattern] = coeffs.pop()
    return LinComb(out)


def doubling_coproduct_oracle(i: MultiSeq, bound: int) -> LinComb:
    """Coproduct of ``M_i`` by doubling the alphabet.

    ``M_i`` is expanded over positions ``1..2N``; positions ``1..N`` are the
    x-variables and ``N+1..2N`` the y-variables, which come after all x's.
    Each monomial splits into an x-part and a (shifted) y-part, and the pairs
    of similarity classes are read off as ``M' (x) M''``.
    """
    if len(i.rows) > 2 * bound:
        raise BoundTooSmallError(f"{len(i.rows)} rows need more than 2N = {2 * bound} positions")
    big = expand_m(i, 2 * bound)
    groups: dict[tuple[MultiSeq, MultiSeq], dict] = {}
    for mono, c in big.terms.items():
        xs = [(p, cols) for p, cols in mono.blocks if p <= bound]
        ys = [(p - bound, cols) for p, cols in mono.blocks if p > bound]
        x_mono, y_mono = PCMonomial(xs), PCMonomial(ys)
        groups.setdefault((x_mono.pattern(), y_mono.pattern()), {})[(x_mono, y_mono)] = c
    out = {}
    for (px, py), members in groups.items():
        coeffs = set(members.values())
        expected = comb(bound, len(px)) * comb(bound, len(py))
        if len(coeffs) != 1 or len(members) != expected:
            raise RecognitionError(
                f"pair ({px.code!r}, {py.code!r}): {len(members)} of {expected} monomials")
        out[(px, py)] = coeffs.pop()
    return LinComb(out)


def check_product_oracle(n: int, max_weight: int) -> Report:
    """Series product of ``M_I`` and ``M_J`` against the quasi-shuffle, total weight <= max_weight.

    Uses ``N = rows(I) + rows(J) + 1`` so that no quasi-shuffle term is truncated away.
    """
    rep = Report(f"series product oracle, n={n}, total weight <= {max_weight}")
    keys = {w: enumerate_multiseqs(n, w) for w in range(max_weight + 1)}
    for total in range(max_weight + 1):
        for wi in range(total + 1):
            for i in keys[wi]:
                for j in keys[total - wi]:
                    bound = len(i) + len(j) + 1
                    rep.count("product")
                    lhs = pc_multiply(expand_m(i, bound), expand_m(j, bound))
                    rhs = expand_lincomb(quasi_shuffle(i, j), bound)
                    if lhs != rhs:
                        rep.fail("product", f"M_{i.code!r} M_{j.code!r} with N={bound}")
                        return rep
    return rep


def check_coproduct_oracle(n: int, max_weight: int) -> Report:
    """Doubled-alphabet coproduct against row deconcatenation, weight <= max_weight."""
    rep = Report(f"doubling coproduct oracle, n={n}, weight <= {max_weight}")
    for w in range(max_weight + 1):
        for i in enumerate_multiseqs(n, w):
            rep.count("coproduct")
            bound = max(len(i), 1)
            if doubling_coproduct_oracle(i, bound) != deconcat_coproduct_m(i):
                rep.fail("coproduct", f"delta(M_{i.code!r}) with N={bound}")
                return rep
    return rep
