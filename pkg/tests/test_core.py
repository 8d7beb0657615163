from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopftrees.core import (Bialgebra, GradedBasis, LinComb, NonConnectedError, Report, antipode,
                            check_antipode, check_bialgebra, check_duality, make_antipode,
                            pairing, tensor)
from hopftrees.nsym import EMPTY, MultiSeq, counit, enumerate_multiseqs, h_coproduct, nsym_algebra
from hopftrees.qsym import qsym_algebra

from conftest import multiseqs

A, B, C = MultiSeq.parse("1"), MultiSeq.parse("2"), MultiSeq.parse("1,2")


def lincombs():
    return st.dictionaries(multiseqs(max_rows=2, max_len=2),
                           st.fractions(max_denominator=5), max_size=4).map(LinComb)


def test_zero_coefficients_are_dropped():
    x = LinComb({A: 1, B: 0})
    assert list(x) == [A]
    assert (x - x).is_zero()
    assert x - x == 0
    assert LinComb([(A, 1), (A, -1)]) == LinComb()


def test_iteration_is_canonical():
    x = LinComb({C: 1, B: 2, A: 3, EMPTY: 4})
    assert list(x) == [EMPTY, A, B, C]


def test_coefficients_are_fractions():
    x = LinComb({A: "1/3"}) * 3
    assert x.coeff(A) == 1 and isinstance(x.coeff(A), Fraction)
    assert x.coeff(B) == 0


@given(lincombs(), lincombs(), lincombs())
def test_vector_space_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x * 2 == x + x
    assert -(-x) == x


@given(lincombs())
def test_json_round_trip(x):
    assert LinComb.from_json(x.to_json(), MultiSeq.from_json) == x


def test_tensor_json_round_trip():
    x = tensor(LinComb({A: 2}), LinComb({B: 1, C: "1/2"}))
    assert x.to_json()[0] == {"coeff": "2/1", "left": [[1]], "right": [[2]]}
    assert LinComb.from_json(x.to_json(), MultiSeq.from_json) == x


def test_pairing_is_kronecker():
    assert pairing(LinComb({A: 2, B: 3}), LinComb({B: 5, C: 7})) == 15


def _broken(alg, **changes):
    fields = dict(name="broken", basis=alg.basis, product=alg.product,
                  coproduct=alg.coproduct, counit=alg.counit)
    fields.update(changes)
    return Bialgebra(**fields)


def test_axiom_check_catches_bad_coproduct():
    alg = nsym_algebra(1)

    def cop(i):
        return h_coproduct(i) - LinComb.basis((EMPTY, i)) if i.rows else h_coproduct(i)

    rep = check_bialgebra(_broken(alg, coproduct=cop), 2)
    assert not rep
    assert rep.failure.startswith("counit")


def test_axiom_check_catches_nonassociative_product():
    alg = nsym_algebra(2)

    def prod(i, j):
        # reverse juxtaposition unless a factor is the unit: a (b c) != (a b) c
        if not i.rows or not j.rows:
            return LinComb.basis(MultiSeq(i.rows + j.rows))
        return LinComb.basis(MultiSeq(j.rows + i.rows[::-1]))

    rep = check_bialgebra(_broken(alg, product=prod), 3)
    assert not rep
    assert rep.summary().startswith("FAIL")


def test_duality_check_catches_non_dual_pair():
    rep = check_duality(nsym_algebra(2), nsym_algebra(2), 2)
    assert not rep


def test_antipode_rejects_non_connected():
    alg = nsym_algebra(1)
    weird = MultiSeq.parse("7")
    fake = _broken(alg, basis=GradedBasis(weight=lambda i: 0 if i == weird else i.weight,
                                          unit=EMPTY, enumerate=alg.basis.enumerate),
                   coproduct=lambda i: LinComb({(weird, i): 1}) if i == A else h_coproduct(i))
    with pytest.raises(NonConnectedError):
        make_antipode(fake)(A)


def test_antipode_side_validation():
    with pytest.raises(ValueError):
        make_antipode(nsym_algebra(1), side="middle")


@pytest.mark.parametrize("alg", [nsym_algebra(1), qsym_algebra(1)], ids=lambda a: a.name)
def test_antipode_is_involutive_in_commutative_or_cocommutative_case(alg):
    # n = 1: NSym is cocommutative, QSym commutative, so S^2 = id
    for w in range(5):
        for i in enumerate_multiseqs(1, w):
            x = LinComb.basis(i)
            assert antipode(antipode(x, alg), alg) == x


def test_report_records_first_failure_only():
    rep = Report("demo")
    rep.count("a")
    rep.fail("a", "first")
    rep.fail("b", "second")
    assert rep.failure == "a: first"
    assert rep.to_json() == {"name": "demo", "passed": False, "checked": {"a": 1},
                             "failure": "a: first"}


def test_counit_helper():
    assert counit(EMPTY) == 1 and counit(A) == 0
    assert check_antipode(nsym_algebra(1), 3)
