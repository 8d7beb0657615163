"""Exact checks of the 2x2 generator-matrix identities for Weyl pairs.

Everything happens over the cyclotomic field Q(zeta_m), represented as
polynomials in zeta of degree < phi(m) reduced modulo the m-th cyclotomic
polynomial.  Weyl pairs are clock/shift matrices of size d with q = zeta_d;
the two tensor factors are ``X (x) I`` and ``I (x) X`` etc.
"""
from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

PRIMES = (7, 11, 13, 17, 19, 23, 29, 31)
DEFAULT_SCALES = (1, 2, 3, 5)


class ConventionError(ArithmeticError):
    """Neither clock/shift orientation satisfies y x = q x y."""


class SingularMatrixError(ArithmeticError):
    pass


class SingularAfterRetriesError(SingularMatrixError):
    pass


class NotScalarError(ArithmeticError):
    pass


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials (low degree first) by a monic divisor."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    rem = num[:len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first: x^m - 1 divided by Phi_d for d | m, d < m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_poly(d)))
            assert not rem
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class CyclotomicField:
    """Q(zeta_m).  Elements are :class:`CycScalar`."""

    _cache: dict[int, CyclotomicField] = {}

    def __new__(cls, m: int):
        if m not in cls._cache:
            self = super().__new__(cls)
            self.m = m
            self.modulus = cyclotomic_poly(m)
            self.degree = len(self.modulus) - 1
            cls._cache[m] = self
        return cls._cache[m]

    def __repr__(self) -> str:
        return f"CyclotomicField({self.m})"

    def __call__(self, value) -> CycScalar:
        if isinstance(value, CycScalar):
            return value
        value = Fraction(value)
        return CycScalar(self, (value.numerator,) + (0,) * (self.degree - 1), value.denominator)

    def zero(self) -> CycScalar:
        return self(0)

    def one(self) -> CycScalar:
        return self(1)

    def zeta(self) -> CycScalar:
        if self.degree == 1:
            # Phi_1 = x - 1, Phi_2 = x + 1
            return self(-self.modulus[0])
        return CycScalar(self, (0, 1) + (0,) * (self.degree - 2), 1)


class CycScalar:
    """``(n_0 + n_1 z + ... ) / den`` with integer n_i, reduced to lowest terms."""

    __slots__ = ("field", "num", "den")

    def __init__(self, fld: CyclotomicField, num: Sequence[int], den: int = 1):
        if den < 0:
            num, den = [-c for c in num], -den
        g = reduce(gcd, num, den)
        if g != 1:
            num, den = [c // g for c in num], den // g
        self.field = fld
        self.num = tuple(num)
        self.den = den

    def _coerce(self, other) -> CycScalar:
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return self.field(other)

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.field.m, self.num, self.den))

    def __add__(self, other) -> CycScalar:
        other = self._coerce(other)
        a, b = self.den, other.den
        return CycScalar(self.field, [x * b + y * a for x, y in zip(self.num, other.num)], a * b)

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(self.field, [-x for x in self.num], self.den)

    def __sub__(self, other) -> CycScalar:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CycScalar:
        return self._coerce(other) - self

    def __mul__(self, other) -> CycScalar:
        other = self._coerce(other)
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(self.num):
            if x:
                for j, y in enumerate(other.num):
                    if y:
                        prod[i + j] += x * y
        phi = self.field.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                for j in range(d):
                    if phi[j]:
                        prod[k - d + j] -= c * phi[j]
        return CycScalar(self.field, prod[:d], self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        d = self.field.degree
        # columns: self * zeta^j in the power basis
        cols = []
        basis = [CycScalar(self.field, [int(i == j) for i in range(d)], 1) for j in range(d)]
        for e in basis:
            p = self * e
            cols.append([Fraction(c, p.den) for c in p.num])
        mat = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if mat[r][c])
            mat[c], mat[piv] = mat[piv], mat[c]
            inv = 1 / mat[c][c]
            mat[c] = [v * inv for v in mat[c]]
            for r in range(d):
                if r != c and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [v - f * w for v, w in zip(mat[r], mat[c])]
        sol = [mat[i][d] for i in range(d)]
        den = reduce(lambda a, b: a * b // gcd(a, b), (s.denominator for s in sol), 1)
        return CycScalar(self.field, [int(s * den) for s in sol], den)

    def __truediv__(self, other) -> CycScalar:
        return self * self._coerce(other).inverse()

    def __pow__(self, k: int) -> CycScalar:
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.num):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        body = " + ".join(terms) or "0"
        return f"({body})/{self.den}" if self.den != 1 else f"({body})"

    def to_json(self) -> dict:
        return {"m": self.field.m, "num": list(self.num), "den": self.den}


class CycMatrix:
    """Dense square matrix over a cyclotomic field; zero entries are skipped in products."""

    __slots__ = ("field", "rows")

    def __init__(self, fld: CyclotomicField, rows: Sequence[Sequence]):
        self.field = fld
        self.rows = [[fld(v) for v in row] for row in rows]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, fld: CyclotomicField, d: int) -> CycMatrix:
        one, zero = fld.one(), fld.zero()
        return cls._raw(fld, [[one if i == j else zero for j in range(d)] for i in range(d)])

    @classmethod
    def zeros(cls, fld: CyclotomicField, d: int) -> CycMatrix:
        zero = fld.zero()
        return cls._raw(fld, [[zero] * d for _ in range(d)])

    @classmethod
    def _raw(cls, fld: CyclotomicField, rows: list[list[CycScalar]]) -> CycMatrix:
        out = cls.__new__(cls)
        out.field = fld
        out.rows = rows
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, CycMatrix) and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: CycMatrix) -> CycMatrix:
        return CycMatrix._raw(self.field, [[a + b for a, b in zip(r, s)]
                                           for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> CycMatrix:
        return CycMatrix._raw(self.field, [[-a for a in r] for r in self.rows])

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        return CycMatrix._raw(self.field, [[a - b for a, b in zip(r, s)]
                                           for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other) -> CycMatrix:
        if not isinstance(other, CycMatrix):
            c = self.field(other)
            return CycMatrix._raw(self.field, [[c * a if a else a for a in r] for r in self.rows])
        n = other.dim
        zero = self.field.zero()
        sparse_other = [[(j, b) for j, b in enumerate(row) if b] for row in other.rows]
        out = []
        for row in self.rows:
            acc = [zero] * n
            for k, a in enumerate(row):
                if a:
                    for j, b in sparse_other[k]:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return CycMatrix._raw(self.field, out)

    def __rmul__(self, scalar) -> CycMatrix:
        return self * scalar

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        return self * other

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def scalar_value(self) -> CycScalar | None:
        """``c`` if this matrix equals ``c * I``, else ``None``."""
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a != (c if i == j else 0):
                    return None
        return c

    def kron(self, other: CycMatrix) -> CycMatrix:
        n = other.dim
        zero = self.field.zero()
        out = [[zero] * (self.dim * n) for _ in range(self.dim * n)]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a:
                    for k, s in enumerate(other.rows):
                        for l, b in enumerate(s):
                            if b:
                                out[i * n + k][j * n + l] = a * b
        return CycMatrix._raw(self.field, out)

    def block(self, i: int, j: int, size: int) -> CycMatrix:
        return CycMatrix._raw(self.field, [r[j * size:(j + 1) * size]
                                           for r in self.rows[i * size:(i + 1) * size]])

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[CycMatrix]]) -> CycMatrix:
        fld = blocks[0][0].field
        rows = []
        for brow in blocks:
            for k in range(brow[0].dim):
                rows.append([a for b in brow for a in b.rows[k]])
        return cls._raw(fld, rows)

    def inverse(self) -> CycMatrix:
        """Gauss-Jordan elimination; raises :class:`SingularMatrixError`."""
        n = self.dim
        one, zero = self.field.one(), self.field.zero()
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise SingularMatrixError(f"matrix of size {n} is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = aug[c][c].inverse()
            prow = [a * inv if a else a for a in aug[c]]
            aug[c] = prow
            nz = [(j, a) for j, a in enumerate(prow) if a]
            for r in range(n):
                f = aug[r][c]
                if r != c and f:
                    row = aug[r]
                    for j, a in nz:
                        row[j] = row[j] - f * a
        return CycMatrix._raw(self.field, [r[n:] for r in aug])

    def __repr__(self) -> str:
        return f"CycMatrix(dim={self.dim}, field={self.field!r})"


def shift_matrix(fld: CyclotomicField, d: int) -> CycMatrix:
    """``e_j -> e_{j+1 mod d}``."""
    m = CycMatrix.zeros(fld, d)
    for j in range(d):
        m.rows[(j + 1) % d][j] = fld.one()
    return m


def clock_matrix(fld: CyclotomicField, d: int, q: CycScalar) -> CycMatrix:
    m = CycMatrix.zeros(fld, d)
    for j in range(d):
        m.rows[j][j] = q ** j
    return m


def build_weyl_pair(d: int) -> tuple[CycMatrix, CycMatrix, CycScalar]:
    """Clock/shift pair ``(X, Y)`` of size ``d`` with ``Y X = q X Y``, ``q = zeta_d``."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    fld = CyclotomicField(d)
    q = fld.zeta()
    shift, clock = shift_matrix(fld, d), clock_matrix(fld, d, q)
    for x, y in ((shift, clock), (shift.inverse(), clock.inverse())):
        if y * x == (x * y) * q:
            return x, y, q
    raise ConventionError(f"no clock/shift orientation satisfies YX = qXY for d = {d}")


@dataclass
class Quadruple:
    """``x1, y1, x2, y2`` acting on ``C^d (x) C^d`` (size ``d*d``), with scale factors.

    ``q`` is set for Weyl quadruples; ``None`` for merely ultralocal ones.
    """

    x1: CycMatrix
    y1: CycMatrix
    x2: CycMatrix
    y2: CycMatrix
    d: int
    scales: tuple[Fraction, ...]
    q: CycScalar | None = None

    @property
    def field(self) -> CyclotomicField:
        return self.x1.field


WeylQuadruple = Quadruple


def build_quadruple(d: int, scales: Sequence = (1, 1, 1, 1)) -> Quadruple:
    """``x1 = a1 X(x)I, y1 = b1 Y(x)I, x2 = a2 I(x)X, y2 = b2 I(x)Y``; scales ``(a1, b1, a2, b2)``."""
    scales = tuple(Fraction(s) for s in scales)
    if len(scales) != 4 or not all(scales):
        raise ValueError(f"need four nonzero scales, got {scales}")
    x, y, q = build_weyl_pair(d)
    ident = CycMatrix.identity(x.field, d)
    a1, b1, a2, b2 = scales
    quad = Quadruple(x.kron(ident) * a1, y.kron(ident) * b1,
                     ident.kron(x) * a2, ident.kron(y) * b2, d, scales, q)
    bad = [c.relation for c in check_relations(quad) if not c.residual_is_zero]
    if bad:
        raise ConventionError(f"constructed quadruple violates {bad}")
    return quad


def build_ultralocal_quadruple(d: int, seed: int = 0, entries: int = 5) -> Quadruple:
    """Random rational ``x1, y1`` on the first factor and ``x2, y2`` on the second.

    These satisfy the four ultralocality relations but (generically) no Weyl relation.
    """
    rng = random.Random(seed)
    fld = CyclotomicField(1)
    ident = CycMatrix.identity(fld, d)

    def rand() -> CycMatrix:
        while True:
            m = CycMatrix(fld, [[rng.randint(-entries, entries) for _ in range(d)] for _ in range(d)])
            try:
                m.inverse()
                return m
            except SingularMatrixError:
                continue

    x1, y1, x2, y2 = rand(), rand(), rand(), rand()
    return Quadruple(x1.kron(ident), y1.kron(ident), ident.kron(x2), ident.kron(y2),
                     d, (Fraction(1),) * 4, None)


@dataclass
class RelationCheck:
    relation: str
    residual_is_zero: bool
    dimension: int
    scales: tuple[Fraction, ...]
    residual: CycMatrix | None = field(default=None, repr=False, compare=False)

    def to_json(self) -> dict:
        return {"relation": self.relation, "residual_is_zero": self.residual_is_zero,
                "dimension": self.dimension, "scales": [str(s) for s in self.scales]}


def _check(quad: Quadruple, relation: str, residual: CycMatrix) -> RelationCheck:
    return RelationCheck(relation, residual.is_zero(), quad.d, quad.scales, residual)


def check_relations(quad: Quadruple) -> list[RelationCheck]:
    """The four ultralocality relations and, if ``quad.q`` is set, ``y_i x_i = q x_i y_i``."""
    x1, y1, x2, y2 = quad.x1, quad.y1, quad.x2, quad.y2
    out = [
        _check(quad, "x1 x2 = x2 x1", x1 * x2 - x2 * x1),
        _check(quad, "y1 y2 = y2 y1", y1 * y2 - y2 * y1),
        _check(quad, "x1 y2 = y2 x1", x1 * y2 - y2 * x1),
        _check(quad, "y1 x2 = x2 y1", y1 * x2 - x2 * y1),
    ]
    if quad.q is not None:
        out.append(_check(quad, "y1 x1 = q x1 y1", y1 * x1 - (x1 * y1) * quad.q))
        out.append(_check(quad, "y2 x2 = q x2 y2", y2 * x2 - (x2 * y2) * quad.q))
    return out


def matrix_A(quad: Quadruple) -> CycMatrix:
    """``[[y1, x2], [x1, y2]]``."""
    return CycMatrix.from_blocks([[quad.y1, quad.x2], [quad.x1, quad.y2]])


def closed_form_blocks(quad: Quadruple) -> dict[str, CycMatrix]:
    """Schur-complement formulas for the blocks of ``A^{-1}``.

    Raises :class:`SingularMatrixError` when one of them is not invertible.
    """
    x1, y1, x2, y2 = quad.x1, quad.y1, quad.x2, quad.y2
    return {
        "ybar1": (y1 - x2 * y2.inverse() * x1).inverse(),
        "xbar2": (x1 - y2 * x2.inverse() * y1).inverse(),
        "xbar1": (x2 - y1 * x1.inverse() * y2).inverse(),
        "ybar2": (y2 - x1 * y1.inverse() * x2).inverse(),
    }


@dataclass
class InverseA:
    """Blocks of ``A^{-1} = [[ybar1, xbar2], [xbar1, ybar2]]`` and the quadruple used."""

    quad: Quadruple
    ybar1: CycMatrix
    xbar2: CycMatrix
    xbar1: CycMatrix
    ybar2: CycMatrix
    closed: dict[str, CycMatrix] = field(repr=False, default_factory=dict)

    def blocks(self) -> dict[str, CycMatrix]:
        return {"ybar1": self.ybar1, "xbar2": self.xbar2, "xbar1": self.xbar1, "ybar2": self.ybar2}

    def full(self) -> CycMatrix:
        return CycMatrix.from_blocks([[self.ybar1, self.xbar2], [self.xbar1, self.ybar2]])


def invert_A(quad: Quadruple, retries: int = 3) -> InverseA:
    """Invert ``A`` by exact elimination.

    If a Schur-type combination is singular and ``quad`` is a Weyl quadruple,
    the first scale is multiplied by successive primes and the quadruple
    rebuilt, up to ``retries`` times.
    """
    attempt = 0
    while True:
        try:
            closed = closed_form_blocks(quad)
            inv = matrix_A(quad).inverse()
            break
        except SingularMatrixError:
            if quad.q is None or attempt >= retries:
                raise SingularAfterRetriesError(
                    f"A singular for d={quad.d}, scales={[str(s) for s in quad.scales]} "
                    f"after {attempt} retries") from None
            scales = (quad.scales[0] * PRIMES[attempt],) + quad.scales[1:]
            quad = build_quadruple(quad.d, scales)
            attempt += 1
    s = quad.x1.dim
    return InverseA(quad, inv.block(0, 0, s), inv.block(0, 1, s), inv.block(1, 0, s),
                    inv.block(1, 1, s), closed)


def check_inverse_formula(inv: InverseA, closed: dict[str, CycMatrix] | None = None) -> list[RelationCheck]:
    """Compare each block of the eliminated inverse with its Schur-complement formula."""
    closed = closed or inv.closed or closed_form_blocks(inv.quad)
    formulas = {
        "ybar1": "ybar1 = (y1 - x2 y2^-1 x1)^-1",
        "xbar2": "xbar2 = (x1 - y2 x2^-1 y1)^-1",
        "xbar1": "xbar1 = (x2 - y1 x1^-1 y2)^-1",
        "ybar2": "ybar2 = (y2 - x1 y1^-1 x2)^-1",
    }
    return [_check(inv.quad, formulas[name], block - closed[name])
            for name, block in inv.blocks().items()]


def check_dual_relations(inv: InverseA) -> list[RelationCheck]:
    """Ultralocality of the blocks of ``A^{-1}`` and, for Weyl quadruples, the q^-1 relations."""
    xb1, yb1, xb2, yb2 = inv.xbar1, inv.ybar1, inv.xbar2, inv.ybar2
    quad = inv.quad
    out = [
        _check(quad, "xbar1 xbar2 = xbar2 xbar1", xb1 * xb2 - xb2 * xb1),
        _check(quad, "ybar1 ybar2 = ybar2 ybar1", yb1 * yb2 - yb2 * yb1),
        _check(quad, "xbar1 ybar2 = ybar2 xbar1", xb1 * yb2 - yb2 * xb1),
        _check(quad, "ybar1 xbar2 = xbar2 ybar1", yb1 * xb2 - xb2 * yb1),
    ]
    if quad.q is not None:
        qinv = quad.q.inverse()
        out.append(_check(quad, "ybar1 xbar1 = q^-1 xbar1 ybar1", yb1 * xb1 - (xb1 * yb1) * qinv))
        out.append(_check(quad, "ybar2 xbar2 = q^-1 xbar2 ybar2", yb2 * xb2 - (xb2 * yb2) * qinv))
    return out


def check_mixed_relations(inv: InverseA) -> list[RelationCheck]:
    """The two relations that follow from ultralocality alone."""
    return [c for c in check_dual_relations(inv)
            if c.relation in ("xbar1 ybar2 = ybar2 xbar1", "ybar1 xbar2 = xbar2 ybar1")]


def commutator_sides(inv: InverseA) -> dict[str, CycMatrix]:
    """Both sides of the two commutator identities, plus their last factors."""
    quad = inv.quad
    x1, y1, x2, y2 = quad.x1, quad.y1, quad.x2, quad.y2
    x1i, y1i, x2i, y2i = x1.inverse(), y1.inverse(), x2.inverse(), y2.inverse()
    xb1, yb1, xb2, yb2 = inv.xbar1, inv.ybar1, inv.xbar2, inv.ybar2

    x_last = y1 * x1i * x2i * y2 - x1i * y1 * y2 * x2i
    y_last = x1 * y1i * y2i * x2 - y1i * x1 * x2 * y2i
    return {
        "x_lhs": (xb1 * xb2).inverse() - (xb2 * xb1).inverse(),
        "x_rhs": (y2 - x1 * y1i * x2) * y1 * x_last,
        "x_last": x_last,
        "y_lhs": (yb1 * yb2).inverse() - (yb2 * yb1).inverse(),
        "y_rhs": (y1 - x2 * y2i * x1) * y2 * y_last,
        "y_last": y_last,
    }


def check_barxx_identity(inv: InverseA) -> list[RelationCheck]:
    sides = commutator_sides(inv)
    quad = inv.quad
    out = [
        _check(quad, "(xbar1 xbar2)^-1 - (xbar2 xbar1)^-1 = (y2 - x1 y1^-1 x2) y1 "
                     "(y1 x1^-1 x2^-1 y2 - x1^-1 y1 y2 x2^-1)", sides["x_lhs"] - sides["x_rhs"]),
        _check(quad, "(ybar1 ybar2)^-1 - (ybar2 ybar1)^-1 = (y1 - x2 y2^-1 x1) y2 "
                     "(x1 y1^-1 y2^-1 x2 - y1^-1 x1 x2 y2^-1)", sides["y_lhs"] - sides["y_rhs"]),
    ]
    if quad.q is not None:
        out.append(_check(quad, "y1 x1^-1 x2^-1 y2 - x1^-1 y1 y2 x2^-1 = 0", sides["x_last"]))
        out.append(_check(quad, "x1 y1^-1 y2^-1 x2 - y1^-1 x1 x2 y2^-1 = 0", sides["y_last"]))
    return out


def extract_q(quad: Quadruple) -> CycScalar:
    """Common scalar value of ``x1^-1 y1 x1 y1^-1`` and ``x2 y2^-1 x2^-1 y2``."""
    x1, y1, x2, y2 = quad.x1, quad.y1, quad.x2, quad.y2
    left = (x1.inverse() * y1 * x1 * y1.inverse()).scalar_value()
    right = (x2 * y2.inverse() * x2.inverse() * y2).scalar_value()
    if left is None or right is None:
        raise NotScalarError("x1^-1 y1 x1 y1^-1 or x2 y2^-1 x2^-1 y2 is not a scalar matrix")
    if left != right:
        raise NotScalarError(f"the two expressions give different scalars {left} and {right}")
    return left


@dataclass
class WeylReport:
    dimension: int
    scales: tuple[Fraction, ...]
    checks: list[RelationCheck]
    q: CycScalar | None = None

    @property
    def passed(self) -> bool:
        return all(c.residual_is_zero for c in self.checks)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "scales": [str(s) for s in self.scales],
                "q": self.q.to_json() if self.q is not None else None,
                "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def verify(d: int, scales: Sequence = DEFAULT_SCALES, retries: int = 3) -> WeylReport:
    """Run every check for one dimension; the scales may be bumped by `invert_A`."""
    quad = build_quadruple(d, scales)
    inv = invert_A(quad, retries)
    quad = inv.quad
    checks = check_relations(quad)
    checks.append(_check(quad, "A A^-1 = I", matrix_A(quad) * inv.full()
                         - CycMatrix.identity(quad.field, 2 * d * d)))
    checks += check_inverse_formula(inv)
    checks += check_dual_relations(inv)
    checks += check_barxx_identity(inv)
    q = None
    try:
        q = extract_q(quad)
        ok = q == quad.q
    except NotScalarError:
        ok = False
    checks.append(RelationCheck("x1^-1 y1 x1 y1^-1 = x2 y2^-1 x2^-1 y2 = q", ok, d, quad.scales))
    return WeylReport(d, quad.scales, checks, q)
