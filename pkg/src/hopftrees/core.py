"""Scaffolding shared by the three Hopf algebras.

Elements are finite linear combinations of hashable basis keys with exact
``Fraction`` coefficients.  A basis key must provide ``sort_key()`` (its
canonical ordering) and ``to_json()``; tensor keys are plain tuples of basis
keys.  A :class:`Bialgebra` bundles the structure maps on basis keys, and the
functions below (convolution, antipode, axiom checks, duality checks) only
ever talk to that bundle.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any


class NonConnectedError(ValueError):
    """A weight-0 basis key other than the unit turned up."""


class ResourceLimitError(ValueError):
    """An enumeration would exceed the configured size cap."""


DEFAULT_CAP = 200_000


def order_key(key: Any) -> Any:
    if isinstance(key, tuple):
        return tuple(order_key(k) for k in key)
    return key.sort_key()


def as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class LinComb(Mapping):
    """Finite formal linear combination ``sum c_k * k`` over ``Fraction``.

    Zero coefficients are never stored.  Iteration follows the canonical
    order of the keys, so printing and serialisation are deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple[Any, Any]] | None = None):
        data: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = as_fraction(c)
                if c:
                    c = data.get(key, 0) + c
                    if c:
                        data[key] = c
                    else:
                        del data[key]
        self._terms = data

    @classmethod
    def basis(cls, key: Any, coeff: Any = 1) -> LinComb:
        return cls({key: coeff})

    @classmethod
    def _raw(cls, data: dict) -> LinComb:
        out = cls.__new__(cls)
        out._terms = data
        return out

    # Mapping protocol
    def __getitem__(self, key: Any) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms, key=order_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def coeff(self, key: Any) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    # vector space structure
    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            c = data.get(key, 0) + c
            if c:
                data[key] = c
            else:
                data.pop(key, None)
        return LinComb._raw(data)

    def __neg__(self) -> LinComb:
        return LinComb._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Any) -> LinComb:
        if isinstance(scalar, LinComb):
            return NotImplemented
        scalar = as_fraction(scalar)
        if not scalar:
            return LinComb()
        return LinComb._raw({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb({})"
        parts = ", ".join(f"{k!r}: {self._terms[k]}" for k in self)
        return f"LinComb({{{parts}}})"

    def map(self, f: Callable[[Any], LinComb]) -> LinComb:
        """Extend ``f`` (basis key -> LinComb) linearly."""
        acc: dict = {}
        for key, c in self._terms.items():
            for k2, c2 in f(key)._terms.items():
                v = acc.get(k2, 0) + c * c2
                if v:
                    acc[k2] = v
                else:
                    acc.pop(k2, None)
        return LinComb._raw(acc)

    def map_keys(self, f: Callable[[Any], Any]) -> LinComb:
        """Relabel keys (not necessarily injectively)."""
        return LinComb((f(k), c) for k, c in self._terms.items())

    def to_json(self) -> list[dict]:
        out = []
        for key in self:
            c = format_fraction(self._terms[key])
            if isinstance(key, tuple) and len(key) == 2:
                out.append({"coeff": c, "left": key[0].to_json(), "right": key[1].to_json()})
            elif isinstance(key, tuple) and len(key) == 3:
                out.append({"coeff": c, "left": key[0].to_json(),
                            "middle": key[1].to_json(), "right": key[2].to_json()})
            else:
                out.append({"coeff": c, "key": key.to_json()})
        return out

    @classmethod
    def from_json(cls, data: Sequence[Mapping], key_from_json: Callable[[Any], Any]) -> LinComb:
        terms = []
        for item in data:
            if "key" in item:
                key = key_from_json(item["key"])
            elif "middle" in item:
                key = (key_from_json(item["left"]), key_from_json(item["middle"]),
                       key_from_json(item["right"]))
            else:
                key = (key_from_json(item["left"]), key_from_json(item["right"]))
            terms.append((key, as_fraction(item["coeff"])))
        return cls(terms)


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """Bilinear ``a (x) b``; keys become pairs (flattened if already tuples)."""
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = (ka if isinstance(ka, tuple) else (ka,)) + (kb if isinstance(kb, tuple) else (kb,))
            out[key] = out.get(key, 0) + ca * cb
    return LinComb(out)


def pairing(dual: LinComb, primal: LinComb) -> Fraction:
    """Kronecker pairing of a basis with its dual basis, extended bilinearly."""
    if len(dual) > len(primal):
        dual, primal = primal, dual
    total = Fraction(0)
    for key, c in dual.items():
        if key in primal:
            total += c * primal[key]
    return total


@dataclass(frozen=True)
class GradedBasis:
    weight: Callable[[Any], int]
    unit: Any
    enumerate: Callable[[int], Sequence[Any]]


@dataclass(frozen=True, eq=False)
class Bialgebra:
    """Structure maps of a graded bialgebra given on basis keys.

    ``product(a, b)`` returns a LinComb of keys, ``coproduct(a)`` a LinComb of
    key pairs and ``counit(a)`` a scalar.
    """

    name: str
    basis: GradedBasis
    product: Callable[[Any, Any], LinComb]
    coproduct: Callable[[Any], LinComb]
    counit: Callable[[Any], Any]

    @property
    def unit(self) -> Any:
        return self.basis.unit

    def one(self) -> LinComb:
        return LinComb.basis(self.basis.unit)

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        acc = LinComb()
        for kx, cx in x.items():
            for ky, cy in y.items():
                acc = acc + self.product(kx, ky) * (cx * cy)
        return acc

    def comul(self, x: LinComb) -> LinComb:
        return x.map(self.coproduct)

    def eps(self, x: LinComb) -> Fraction:
        return sum((c * as_fraction(self.counit(k)) for k, c in x.items()), Fraction(0))

    def tensor_mul(self, x: LinComb, y: LinComb) -> LinComb:
        """Componentwise product on A (x) A (or higher tensor powers)."""
        acc: dict = {}
        for kx, cx in x.items():
            for ky, cy in y.items():
                factors = [self.product(a, b) for a, b in zip(kx, ky)]
                for combo in itertools.product(*(f.items() for f in factors)):
                    key = tuple(k for k, _ in combo)
                    c = cx * cy
                    for _, cc in combo:
                        c *= cc
                    acc[key] = acc.get(key, 0) + c
        return LinComb(acc)


def apply_tensor(f: Callable[[Any], LinComb], g: Callable[[Any], LinComb], x: LinComb) -> LinComb:
    """``(f (x) g)`` on a LinComb of key pairs."""
    acc = LinComb()
    for (a, b), c in x.items():
        acc = acc + tensor(f(a), g(b)) * c
    return acc


def mu(alg: Bialgebra, x: LinComb) -> LinComb:
    acc = LinComb()
    for (a, b), c in x.items():
        acc = acc + alg.product(a, b) * c
    return acc


def identity_map(key: Any) -> LinComb:
    return LinComb.basis(key)


def unit_counit(alg: Bialgebra) -> Callable[[Any], LinComb]:
    """``eta o epsilon`` as a map on basis keys."""
    def f(key):
        return alg.one() * as_fraction(alg.counit(key))
    return f


def convolution(f: Callable[[Any], LinComb], g: Callable[[Any], LinComb],
                alg: Bialgebra) -> Callable[[Any], LinComb]:
    """``f * g = mu o (f (x) g) o Delta`` on basis keys."""
    def h(key):
        return mu(alg, apply_tensor(f, g, alg.coproduct(key)))
    return h


def _reduced(alg: Bialgebra, key: Any) -> list[tuple[Any, Any, Fraction]]:
    unit, weight = alg.unit, alg.basis.weight
    out = []
    for (a, b), c in alg.coproduct(key).items():
        for part in (a, b):
            if part != unit and weight(part) == 0:
                raise NonConnectedError(f"weight-0 key {part!r} is not the unit")
        if a != unit and b != unit:
            out.append((a, b, c))
    return out


def make_antipode(alg: Bialgebra, side: str = "left") -> Callable[[Any], LinComb]:
    """Antipode on basis keys via the Takeuchi recursion.

    ``side="left"`` solves ``S * id = eta o eps``:  S(u) = -u - sum S(u') u''.
    ``side="right"`` solves ``id * S = eta o eps``: S(u) = -u - sum u' S(u'').
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    @lru_cache(maxsize=None)
    def s(key):
        if key == alg.unit:
            return alg.one()
        if alg.basis.weight(key) == 0:
            raise NonConnectedError(f"weight-0 key {key!r} is not the unit")
        acc = -LinComb.basis(key)
        for a, b, c in _reduced(alg, key):
            if side == "left":
                acc = acc - alg.mul(s(a), LinComb.basis(b)) * c
            else:
                acc = acc - alg.mul(LinComb.basis(a), s(b)) * c
        return acc

    return s


def antipode(x: LinComb, alg: Bialgebra, side: str = "left") -> LinComb:
    return x.map(make_antipode(alg, side))


@dataclass
class Report:
    """Outcome of an exhaustive check; ``failure`` names the first counterexample."""

    name: str
    passed: bool = True
    checked: dict[str, int] = field(default_factory=dict)
    failure: str | None = None

    def count(self, law: str) -> None:
        self.checked[law] = self.checked.get(law, 0) + 1

    def fail(self, law: str, detail: str) -> None:
        if self.passed:
            self.passed = False
            self.failure = f"{law}: {detail}"

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "checked": dict(sorted(self.checked.items())), "failure": self.failure}

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        total = sum(self.checked.values())
        msg = f"{status} {self.name} ({total} checks)"
        return msg if self.passed else f"{msg}: {self.failure}"


def _keys_upto(alg: Bialgebra, max_weight: int) -> dict[int, list]:
    return {w: list(alg.basis.enumerate(w)) for w in range(max_weight + 1)}


def _weight_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weight_compositions(total - first, parts - 1):
            yield (first,) + rest


def _tuples_upto(by_weight: dict[int, list], parts: int, max_weight: int) -> Iterator[tuple]:
    for total in range(max_weight + 1):
        for ws in _weight_compositions(total, parts):
            yield from itertools.product(*(by_weight[w] for w in ws))


def check_bialgebra(alg: Bialgebra, max_weight: int) -> Report:
    """Exhaustively verify the graded bialgebra axioms up to ``max_weight``.

    Checks run in a fixed order and stop at the first failing law; the
    report then names the offending key(s).
    """
    rep = Report(f"bialgebra axioms of {alg.name} up to weight {max_weight}")
    weight, unit = alg.basis.weight, alg.unit
    by_weight = _keys_upto(alg, max_weight)
    one = alg.one()

    if [unit] != by_weight[0] or weight(unit) != 0:
        rep.fail("connected", f"weight-0 component is {by_weight[0]!r}")
        return rep
    if alg.coproduct(unit) != LinComb.basis((unit, unit)) or as_fraction(alg.counit(unit)) != 1:
        rep.fail("unit", "unit is not grouplike")
        return rep

    # grading, counit laws, coassociativity
    for w, keys in by_weight.items():
        for u in keys:
            rep.count("grading")
            if weight(u) != w:
                rep.fail("grading", f"{u!r} enumerated at weight {w} has weight {weight(u)}")
                return rep
            cop = alg.coproduct(u)
            if any(weight(a) + weight(b) != w for a, b in cop):
                rep.fail("grading", f"coproduct of {u!r} is not homogeneous")
                return rep
            rep.count("counit")
            left = LinComb((b, c * as_fraction(alg.counit(a))) for (a, b), c in cop.items())
            right = LinComb((a, c * as_fraction(alg.counit(b))) for (a, b), c in cop.items())
            if left != LinComb.basis(u) or right != LinComb.basis(u):
                rep.fail("counit", f"(eps (x) id) Delta or (id (x) eps) Delta differs from id on {u!r}")
                return rep
            rep.count("coassociativity")
            lhs = apply_tensor(alg.coproduct, identity_map, cop)
            rhs = apply_tensor(identity_map, alg.coproduct, cop)
            if lhs != rhs:
                rep.fail("coassociativity", f"fails on {u!r}")
                return rep

    # unit laws, grading of product, compatibility
    for u, v in _tuples_upto(by_weight, 2, max_weight):
        uv = alg.product(u, v)
        rep.count("unit")
        if u == unit and uv != LinComb.basis(v) or v == unit and uv != LinComb.basis(u):
            rep.fail("unit", f"unit law fails on {u!r}, {v!r}")
            return rep
        rep.count("grading")
        if any(weight(k) != weight(u) + weight(v) for k in uv):
            rep.fail("grading", f"product of {u!r}, {v!r} is not homogeneous")
            return rep
        rep.count("coproduct morphism")
        if alg.comul(uv) != alg.tensor_mul(alg.coproduct(u), alg.coproduct(v)):
            rep.fail("coproduct morphism", f"Delta(u v) != Delta(u) Delta(v) for {u!r}, {v!r}")
            return rep
        rep.count("counit morphism")
        if alg.eps(uv) != as_fraction(alg.counit(u)) * as_fraction(alg.counit(v)):
            rep.fail("counit morphism", f"eps(u v) != eps(u) eps(v) for {u!r}, {v!r}")
            return rep

    for u, v, w in _tuples_upto(by_weight, 3, max_weight):
        rep.count("associativity")
        lhs = alg.mul(alg.product(u, v), LinComb.basis(w))
        rhs = alg.mul(LinComb.basis(u), alg.product(v, w))
        if lhs != rhs:
            rep.fail("associativity", f"(u v) w != u (v w) for {u!r}, {v!r}, {w!r}")
            return rep
    assert alg.mul(one, one) == one
    return rep


def check_antipode(alg: Bialgebra, max_weight: int) -> Report:
    """``id * S = S * id = eta o eps`` on every key, plus left/right agreement."""
    rep = Report(f"antipode of {alg.name} up to weight {max_weight}")
    s_left = make_antipode(alg, "left")
    s_right = make_antipode(alg, "right")
    ee = unit_counit(alg)
    id_s = convolution(identity_map, s_left, alg)
    s_id = convolution(s_left, identity_map, alg)
    for w in range(max_weight + 1):
        for u in alg.basis.enumerate(w):
            rep.count("left = right recursion")
            if s_left(u) != s_right(u):
                rep.fail("left = right recursion", f"recursions disagree on {u!r}")
                return rep
            rep.count("id * S")
            if id_s(u) != ee(u):
                rep.fail("id * S", f"fails on {u!r}")
                return rep
            rep.count("S * id")
            if s_id(u) != ee(u):
                rep.fail("S * id", f"fails on {u!r}")
                return rep
    return rep


def check_duality(dual: Bialgebra, primal: Bialgebra, max_weight: int) -> Report:
    """Adjointness of two bialgebras on a common key set under the Kronecker pairing.

    Verifies <x y, z> = <x (x) y, Delta z> and <Delta z, x (x) y> = <z, x y>
    for all basis keys with |x| + |y| = |z| up to ``max_weight``, plus the
    unit/counit adjunctions.
    """
    rep = Report(f"duality {dual.name} <-> {primal.name} up to weight {max_weight}")
    by_weight = _keys_upto(primal, max_weight)
    for w in range(max_weight + 1):
        cop_p = {z: primal.coproduct(z) for z in by_weight[w]}
        cop_d = {z: dual.coproduct(z) for z in by_weight[w]}
        for z in by_weight[w]:
            rep.count("unit/counit")
            if as_fraction(primal.counit(z)) != pairing(dual.one(), LinComb.basis(z)) or \
                    as_fraction(dual.counit(z)) != pairing(LinComb.basis(z), primal.one()):
                rep.fail("unit/counit", f"fails on {z!r}")
                return rep
        for a in range(w + 1):
            for x in by_weight[a]:
                for y in by_weight[w - a]:
                    dprod = dual.product(x, y)
                    pprod = primal.product(x, y)
                    for z in by_weight[w]:
                        rep.count("dual product vs primal coproduct")
                        if dprod.coeff(z) != cop_p[z].coeff((x, y)):
                            rep.fail("dual product vs primal coproduct",
                                     f"<{x!r} . {y!r}, {z!r}> != <{x!r} (x) {y!r}, Delta {z!r}>")
                            return rep
                        rep.count("dual coproduct vs primal product")
                        if cop_d[z].coeff((x, y)) != pprod.coeff(z):
                            rep.fail("dual coproduct vs primal product",
                                     f"<Delta {z!r}, {x!r} (x) {y!r}> != <{z!r}, {x!r} . {y!r}>")
                            return rep
    return rep
