import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopftrees.weyl import (ConventionError, CycMatrix, CyclotomicField, CycScalar, NotScalarError,
                            SingularAfterRetriesError, SingularMatrixError, commutator_sides,
                            build_quadruple, build_ultralocal_quadruple, build_weyl_pair,
                            check_barxx_identity, check_dual_relations, check_inverse_formula,
                            check_mixed_relations, check_relations, closed_form_blocks,
                            cyclotomic_poly, extract_q, invert_A, matrix_A, verify)


def to_complex(a):
    z = cmath.exp(2j * cmath.pi / a.field.m)
    return sum(c * z ** k for k, c in enumerate(a.num)) / a.den


def scalars(m):
    fld = CyclotomicField(m)
    coeffs = st.lists(st.integers(-5, 5), min_size=fld.degree, max_size=fld.degree)
    return st.builds(lambda num, den: CycScalar(fld, num, den), coeffs, st.integers(1, 4))


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12])
def test_zeta_has_exact_order(m):
    z = CyclotomicField(m).zeta()
    assert z ** m == 1
    assert all(z ** k != 1 for k in range(1, m))


@pytest.mark.parametrize("m", [3, 5, 12])
@given(data=st.data())
def test_field_arithmetic_matches_complex_embedding(m, data):
    a, b = data.draw(scalars(m)), data.draw(scalars(m))
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
    assert abs(to_complex(a + b) - (to_complex(a) + to_complex(b))) < 1e-9
    if a:
        assert a * a.inverse() == 1
        assert abs(to_complex(a.inverse()) * to_complex(a) - 1) < 1e-9


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CyclotomicField(3).zero().inverse()


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_weyl_pair(d):
    x, y, q = build_weyl_pair(d)
    assert y * x == (x * y) * q
    ident = CycMatrix.identity(x.field, d)
    px, py = ident, ident
    for _ in range(d):
        px, py = px * x, py * y
    assert px == ident and py == ident


def test_anticommuting_pair():
    x, y, q = build_weyl_pair(2)
    assert q == -1
    assert y * x == -(x * y)


def test_pair_needs_dimension_two():
    with pytest.raises(ValueError):
        build_weyl_pair(1)
    assert issubclass(ConventionError, ArithmeticError)


@pytest.mark.parametrize("d", [2, 3, 5])
@pytest.mark.parametrize("scales", [(1, 1, 1, 1), (1, 2, 3, 5), ("-1/2", 3, 7, "2/3")])
def test_quadruple_relations(d, scales):
    quad = build_quadruple(d, scales)
    checks = check_relations(quad)
    assert len(checks) == 6
    assert all(c.residual_is_zero for c in checks)


def test_quadruple_scales_must_be_nonzero():
    with pytest.raises(ValueError):
        build_quadruple(2, (1, 0, 1, 1))


def test_matrix_inverse_and_singularity():
    fld = CyclotomicField(3)
    m = CycMatrix(fld, [[1, 2], [3, 4]])
    assert m * m.inverse() == CycMatrix.identity(fld, 2)
    with pytest.raises(SingularMatrixError):
        CycMatrix(fld, [[1, 2], [2, 4]]).inverse()


@pytest.mark.parametrize("d", [2, 3])
def test_inverse_of_A(d):
    inv = invert_A(build_quadruple(d, (1, 2, 3, 5)))
    ident = CycMatrix.identity(inv.quad.field, 2 * d * d)
    a = matrix_A(inv.quad)
    assert a * inv.full() == ident and inv.full() * a == ident
    assert inv.quad.scales == tuple(Fraction(s) for s in (1, 2, 3, 5))


def test_unit_scales_are_singular_and_retried():
    quad = build_quadruple(3, (1, 1, 1, 1))
    with pytest.raises(SingularMatrixError):
        matrix_A(quad).inverse()
    with pytest.raises(SingularMatrixError):
        closed_form_blocks(quad)
    inv = invert_A(quad)
    assert inv.quad.scales[0] == 7
    with pytest.raises(SingularAfterRetriesError):
        invert_A(quad, retries=0)


@pytest.mark.parametrize("d", [2, 3])
def test_inverse_formula(d):
    inv = invert_A(build_quadruple(d, (1, 2, 3, 5)))
    assert all(c.residual_is_zero for c in check_inverse_formula(inv))


def test_inverse_formula_fault_injection():
    inv = invert_A(build_quadruple(3, (1, 2, 3, 5)))
    closed = closed_form_blocks(inv.quad)
    permuted = dict(zip(closed, list(closed.values())[1:] + list(closed.values())[:1]))
    results = check_inverse_formula(inv, permuted)
    assert not any(c.residual_is_zero for c in results)


@pytest.mark.parametrize("d", [2, 3])
def test_dual_relations(d):
    inv = invert_A(build_quadruple(d, (1, 2, 3, 5)))
    assert all(c.residual_is_zero for c in check_dual_relations(inv))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_generic_ultralocal_case(seed):
    # no Weyl relation: only the mixed relations survive, and the commutator identities
    # hold with nonzero sides
    inv = invert_A(build_ultralocal_quadruple(3, seed))
    assert all(c.residual_is_zero for c in check_relations(inv.quad))
    assert all(c.residual_is_zero for c in check_inverse_formula(inv))
    assert all(c.residual_is_zero for c in check_mixed_relations(inv))
    assert all(c.residual_is_zero for c in check_barxx_identity(inv))
    sides = commutator_sides(inv)
    assert not sides["x_lhs"].is_zero() and not sides["y_lhs"].is_zero()
    with pytest.raises(NotScalarError):
        extract_q(inv.quad)


@pytest.mark.parametrize("d", [2, 3])
def test_commutator_identities_in_weyl_case(d):
    inv = invert_A(build_quadruple(d, (1, 2, 3, 5)))
    assert all(c.residual_is_zero for c in check_barxx_identity(inv))
    sides = commutator_sides(inv)
    assert sides["x_lhs"].is_zero() and sides["x_last"].is_zero() and sides["y_last"].is_zero()


@pytest.mark.parametrize("d", [2, 3, 5])
@pytest.mark.parametrize("scales", [(1, 1, 1, 1), (1, 2, 3, 5), (4, "1/3", -2, 9)])
def test_extract_q_is_independent_of_scales(d, scales):
    quad = build_quadruple(d, scales)
    assert extract_q(quad) == CyclotomicField(d).zeta() == quad.q


def test_extract_q_for_two():
    assert extract_q(build_quadruple(2)) == -1


def test_report_json():
    rep = verify(2)
    assert rep.passed
    first = rep.checks[0].to_json()
    assert first == {"relation": "x1 x2 = x2 x1", "residual_is_zero": True, "dimension": 2,
                     "scales": ["1", "2", "3", "5"]}
    assert rep.to_json()["q"] == {"m": 2, "num": [-1], "den": 1}
