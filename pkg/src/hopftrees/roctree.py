"""Rooted ordered coloured (ROC) trees and their two dual Hopf structures.

A tree is stored as the ordered tuple of its root's children, each child a
``(colour, subtree)`` pair.  Its canonical encoding is the coloured
parenthesis word of a depth-first walk: ``"(c"`` on descending along an edge
of colour ``c`` and ``")"`` on the way back up.  The trivial tree is ``""``.

Structure 1: concatenation product (identify roots) and pruning coproduct.
Structure 2 (its graded dual): grafting product and deconcatenation coproduct.
"""
from __future__ import annotations

import itertools
import json
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb

from .core import DEFAULT_CAP, Bialgebra, GradedBasis, LinComb, ResourceLimitError


class ColourRangeError(ValueError):
    """A colour lies outside ``1..n``."""


class RocTree:
    """Immutable ROC tree; equality and hashing go through the canonical code."""

    __slots__ = ("children", "weight", "code", "_hash")

    def __init__(self, children: Sequence[tuple[int, RocTree]] = ()):
        kids = []
        for colour, sub in children:
            if not isinstance(sub, RocTree):
                sub = RocTree.from_json(sub)
            colour = int(colour)
            if colour < 1:
                raise ColourRangeError(f"colour {colour} < 1")
            kids.append((colour, sub))
        object.__setattr__(self, "children", tuple(kids))
        object.__setattr__(self, "weight", sum(1 + s.weight for _, s in kids))
        object.__setattr__(self, "code", "".join(f"({c}{s.code})" for c, s in kids))
        object.__setattr__(self, "_hash", hash(self.code))

    def __setattr__(self, name, value):
        raise AttributeError("RocTree is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RocTree) and self.code == other.code

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RocTree({self.code!r})" if self.code else "RocTree('•')"

    def sort_key(self) -> tuple[int, str]:
        return (len(self.code), self.code)

    def __lt__(self, other: RocTree) -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def is_trivial(self) -> bool:
        return not self.children

    @property
    def max_colour(self) -> int:
        return max((max(c, s.max_colour) for c, s in self.children), default=0)

    def edges(self) -> Iterator[int]:
        """Edge colours in depth-first order."""
        for c, s in self.children:
            yield c
            yield from s.edges()

    # serialisation
    def to_json(self) -> list:
        return [[c, s.to_json()] for c, s in self.children]

    @classmethod
    def from_json(cls, data) -> RocTree:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple((c, cls.from_json(s)) for c, s in data))

    @classmethod
    def parse(cls, text: str) -> RocTree:
        """Read a tree from its JSON form or its canonical parenthesis code."""
        text = text.strip()
        if text.startswith("["):
            return cls.from_json(text)
        if text in ("", "•", "."):
            return TRIVIAL
        pos = 0

        def forest() -> list:
            nonlocal pos
            kids = []
            while pos < len(text) and text[pos] == "(":
                pos += 1
                start = pos
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise ValueError(f"missing colour at offset {start} in {text!r}")
                colour = int(text[start:pos])
                sub = forest()
                if pos >= len(text) or text[pos] != ")":
                    raise ValueError(f"unbalanced tree code {text!r}")
                pos += 1
                kids.append((colour, cls(sub)))
            return kids

        kids = forest()
        if pos != len(text):
            raise ValueError(f"trailing characters in tree code {text!r}")
        return cls(kids)


TRIVIAL = RocTree()


def _check_colours(t: RocTree, n: int | None) -> None:
    if n is not None and t.max_colour > n:
        raise ColourRangeError(f"tree {t.code} uses colour {t.max_colour} > n = {n}")


def concat(t: RocTree, u: RocTree, n: int | None = None) -> RocTree:
    """Identify the roots: children of ``t`` followed by children of ``u``."""
    _check_colours(t, n)
    _check_colours(u, n)
    return RocTree(t.children + u.children)


def plant(t: RocTree, colour: int, n: int | None = None) -> RocTree:
    """B+_colour: hang ``t`` on a new root through an edge of the given colour."""
    if colour < 1 or (n is not None and colour > n):
        raise ColourRangeError(f"colour {colour} outside 1..{n}")
    return RocTree(((colour, t),))


def planted_factorization(t: RocTree) -> tuple[RocTree, ...]:
    return tuple(RocTree((child,)) for child in t.children)


def counit(t: RocTree) -> Fraction:
    return Fraction(1) if t.is_trivial else Fraction(0)


@lru_cache(maxsize=None)
def _admissible(t: RocTree) -> tuple[tuple[tuple, RocTree], ...]:
    """All ``(pruned branches, admissible subtree)`` of ``t``.

    Pruned branches are ``(colour, subtree)`` pairs in depth-first order.
    """
    per_child = []
    for colour, sub in t.children:
        options = [(((colour, sub),), None)]
        for pruned, kept in _admissible(sub):
            options.append((pruned, (colour, kept)))
        per_child.append(options)
    out = []
    for choice in itertools.product(*per_child):
        pruned = tuple(b for p, _ in choice for b in p)
        kept = tuple(k for _, k in choice if k is not None)
        out.append((pruned, RocTree(kept)))
    return tuple(out)


def admissible_cuts(t: RocTree) -> list[tuple[RocTree, RocTree]]:
    """Pairs ``(t_c, t_s)``: complementary tree and admissible subtree, one per subtree."""
    return [(RocTree(pruned), kept) for pruned, kept in _admissible(t)]


def pruning_coproduct(t: RocTree) -> LinComb:
    return LinComb((pair, 1) for pair in admissible_cuts(t))


def deconcat_coproduct(t: RocTree) -> LinComb:
    kids = t.children
    return LinComb(((RocTree(kids[:i]), RocTree(kids[i:])), 1) for i in range(len(kids) + 1))


def _graft_prefix(u: RocTree, factors: tuple) -> Iterator[tuple[RocTree, int]]:
    """Graft a prefix of ``factors`` onto ``u``; yields ``(tree, prefix length)``.

    Slots are visited in depth-first order (gap before each child, the child's
    own subtree, ..., final gap), so the factors keep their relative order.
    """
    kids = u.children

    def walk(i: int, used: int) -> Iterator[tuple[tuple, int]]:
        # gap before child i (or the final gap when i == len(kids))
        for extra in range(len(factors) - used + 1):
            gap = factors[used:used + extra]
            if i == len(kids):
                yield gap, used + extra
                continue
            colour, sub = kids[i]
            for new_sub, used2 in _graft_prefix(sub, factors[used + extra:]):
                for rest, used3 in walk(i + 1, used + extra + used2):
                    yield gap + ((colour, new_sub),) + rest, used3

    for new_kids, used in walk(0, 0):
        yield RocTree(new_kids), used


def graftings(t: RocTree, u: RocTree) -> list[RocTree]:
    """Every order-preserving grafting of the planted factors of ``t`` onto ``u``.

    One entry per grafting, so a tree reached in several ways repeats.
    """
    factors = t.children
    return [tree for tree, used in _graft_prefix(u, factors) if used == len(factors)]


def prune_count(v: RocTree, t: RocTree, u: RocTree) -> int:
    """Number of admissible subtrees ``s`` of ``v`` with ``v_s = u`` and ``v_c = t``."""
    if v.weight != t.weight + u.weight:
        return 0
    return sum(1 for pruned, kept in _admissible(v) if kept == u and RocTree(pruned) == t)


def grafting_product(t: RocTree, u: RocTree, n: int | None = None) -> LinComb:
    """The product dual to pruning.

    Candidates come from :func:`graftings`; each distinct candidate then gets
    the pruning count as its coefficient.
    """
    _check_colours(t, n)
    _check_colours(u, n)
    candidates = dict.fromkeys(graftings(t, u))
    return LinComb((v, prune_count(v, t, u)) for v in candidates)


def tree_count(n: int, k: int) -> int:
    """``n**k * C_k``."""
    return n ** k * comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _forests(n: int, k: int) -> tuple[tuple, ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(1, k + 1):
        subs = _forests(n, first - 1)
        rests = _forests(n, k - first)
        for colour in range(1, n + 1):
            for sub in subs:
                head = (colour, RocTree(sub))
                for rest in rests:
                    out.append((head,) + rest)
    return tuple(out)


@lru_cache(maxsize=64)
def _enumerate(n: int, k: int) -> tuple[RocTree, ...]:
    return tuple(sorted((RocTree(f) for f in _forests(n, k)), key=RocTree.sort_key))


def enumerate_trees(n: int, k: int, cap: int = DEFAULT_CAP) -> list[RocTree]:
    """All ROC trees with ``n`` colours and ``k`` edges, in canonical order."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    size = tree_count(n, k)
    if size > cap:
        raise ResourceLimitError(f"{size} trees with n={n}, k={k} exceed cap {cap}")
    return list(_enumerate(n, k))


# Decorated forests: a vertex-coloured ordered tree is ``(colour, children)``.

def to_decorated_forest(t: RocTree) -> tuple:
    """Delete the root; each vertex takes the colour of the edge below it."""
    return tuple((c, to_decorated_forest(s)) for c, s in t.children)


def from_decorated_forest(forest: Sequence) -> RocTree:
    return RocTree(tuple((c, from_decorated_forest(kids)) for c, kids in forest))


def tree_algebra(n: int) -> Bialgebra:
    """(concatenation, pruning) on ROC trees with ``n`` colours."""
    return Bialgebra(
        name=f"T_{n} (concat, pruning)",
        basis=GradedBasis(weight=lambda t: t.weight, unit=TRIVIAL,
                          enumerate=lambda k: enumerate_trees(n, k)),
        product=lambda t, u: LinComb.basis(concat(t, u)),
        coproduct=pruning_coproduct,
        counit=counit,
    )


def dual_tree_algebra(n: int) -> Bialgebra:
    """(grafting, deconcatenation) on ROC trees with ``n`` colours."""
    return Bialgebra(
        name=f"T_{n} (grafting, deconcat)",
        basis=GradedBasis(weight=lambda t: t.weight, unit=TRIVIAL,
                          enumerate=lambda k: enumerate_trees(n, k)),
        product=grafting_product,
        coproduct=deconcat_coproduct,
        counit=counit,
    )
