"""QSym_n, the graded dual of NSym_n, in the monomial basis M_I.

Basis keys are the same :class:`MultiSeq` objects as in :mod:`nsym`; the
pairing <M_I, H_J> is the Kronecker delta.  The product is the quasi-shuffle
of rows (merged rows concatenate left row first), the coproduct is
deconcatenation of the row sequence.

The monochromatic Sym specialisation (m_lambda, h_lambda, Hall pairing) lives
here as well, expressed through QSym_1 / NSym_1.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterator
from fractions import Fraction
from typing import NamedTuple

from .core import Bialgebra, GradedBasis, LinComb, pairing
from .nsym import (EMPTY, Composition, MultiSeq, Partition, counit, enumerate_multiseqs,
                   reorder_to_partition)

MBasisKey = MultiSeq

LEFT, RIGHT, BOTH = "L", "R", "B"


class QuasiShuffleTerm(NamedTuple):
    merged: MultiSeq
    provenance: tuple[str, ...]  # one of "L", "R", "B" per output row


def _qsh(left: tuple, right: tuple) -> Iterator[tuple[tuple, tuple]]:
    if not left:
        yield right, (RIGHT,) * len(right)
        return
    if not right:
        yield left, (LEFT,) * len(left)
        return
    a, b = left[0], right[0]
    for rows, prov in _qsh(left[1:], right):
        yield (a,) + rows, (LEFT,) + prov
    for rows, prov in _qsh(left, right[1:]):
        yield (b,) + rows, (RIGHT,) + prov
    for rows, prov in _qsh(left[1:], right[1:]):
        yield (a + b,) + rows, (BOTH,) + prov


def quasi_shuffle_terms(i: MultiSeq, j: MultiSeq) -> list[QuasiShuffleTerm]:
    """Every quasi-shuffle of ``i`` and ``j`` with its interleaving pattern."""
    return [QuasiShuffleTerm(MultiSeq(rows), prov) for rows, prov in _qsh(i.rows, j.rows)]


def quasi_shuffle(i: MultiSeq, j: MultiSeq) -> LinComb:
    """``M_i M_j``: quasi-shuffles counted with multiplicity."""
    counts: dict = {}
    for rows, _ in _qsh(i.rows, j.rows):
        counts[rows] = counts.get(rows, 0) + 1
    return LinComb((MultiSeq(rows), c) for rows, c in counts.items())


def deconcat_coproduct_m(i: MultiSeq) -> LinComb:
    rows = i.rows
    return LinComb(((MultiSeq(rows[:j]), MultiSeq(rows[j:])), 1) for j in range(len(rows) + 1))


def duality_pairing(m_side: LinComb, h_side: LinComb) -> Fraction:
    """``<sum a_I M_I, sum b_J H_J> = sum a_I b_I``."""
    return pairing(m_side, h_side)


def qsym_algebra(n: int) -> Bialgebra:
    return Bialgebra(
        name=f"QSym_{n}",
        basis=GradedBasis(weight=lambda i: i.weight, unit=EMPTY,
                          enumerate=lambda m: enumerate_multiseqs(n, m)),
        product=quasi_shuffle,
        coproduct=deconcat_coproduct_m,
        counit=counit,
    )


# Monochromatic specialisations --------------------------------------------

def from_composition(alpha) -> MultiSeq:
    """The n = 1 multisequence whose row lengths are ``alpha``."""
    return MultiSeq((1,) * p for p in alpha)


def composition_quasi_shuffle(alpha, beta) -> LinComb:
    """Classical ``M_alpha M_beta`` on compositions (merged parts add)."""
    counts: dict = {}

    def rec(a: tuple, b: tuple) -> Iterator[tuple]:
        if not a or not b:
            yield a + b
            return
        for rest in rec(a[1:], b):
            yield (a[0],) + rest
        for rest in rec(a, b[1:]):
            yield (b[0],) + rest
        for rest in rec(a[1:], b[1:]):
            yield (a[0] + b[0],) + rest

    for gamma in rec(tuple(alpha), tuple(beta)):
        counts[gamma] = counts.get(gamma, 0) + 1
    return LinComb((Composition(g), c) for g, c in counts.items())


def monomial_sym(lam) -> LinComb:
    """``m_lambda`` as the sum of ``M_alpha`` over rearrangements ``alpha`` of ``lambda``."""
    lam = Partition(tuple(lam))
    return LinComb((from_composition(alpha), 1) for alpha in set(itertools.permutations(lam.parts)))


def complete_hom_sym(lam) -> LinComb:
    """``h_lambda = H_{lambda_1} ... H_{lambda_k}`` inside NSym_1."""
    lam = Partition(tuple(lam))
    return LinComb.basis(from_composition(lam.parts))


def h_sym_product(lam, mu) -> Partition:
    """Index of ``h_lambda h_mu``: the reordered multiset union."""
    return reorder_to_partition(tuple(lam) + tuple(mu))


def sym_coproduct_m(lam) -> LinComb:
    """``Delta(m_lambda)`` as a LinComb of partition pairs ``(mu, nu)``."""
    lam = Partition(tuple(lam))
    pairs = set()
    for mask in itertools.product((0, 1), repeat=len(lam)):
        mu = Partition(tuple(p for p, side in zip(lam.parts, mask) if side == 0))
        nu = Partition(tuple(p for p, side in zip(lam.parts, mask) if side == 1))
        pairs.add((mu, nu))
    return LinComb((pair, 1) for pair in pairs)


def hall_pairing(lam, mu) -> Fraction:
    return duality_pairing(monomial_sym(lam), complete_hom_sym(mu))
