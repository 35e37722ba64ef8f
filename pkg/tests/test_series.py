from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planocc.counting import F_ell, M_bivariate, m_count
from planocc.errors import NonzeroRemainder, NotASquareConstant
from planocc.series import UPoly, ZSeries, differentiate, divide_exact, ring_op, sqrt_series

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
series = st.lists(rationals, min_size=1, max_size=8).map(lambda c: ZSeries(c, 7))
polys = st.lists(rationals, max_size=6).map(UPoly)


def test_difference_of_squares():
    assert ZSeries([1, 1], 2) * ZSeries([1, -1], 2) == ZSeries([1, 0, -1], 2)


def test_additive_identity():
    f = ZSeries([1, 2, 3], 4)
    assert f + ZSeries([], 4) == f


def test_cauchy_product_of_counts():
    m = ZSeries([m_count(n) for n in range(3)], 2)
    # m0 m2 + m1 m1 + m2 m0 with (m0, m1, m2) = (1, 2, 9)
    assert (m * m)[2] == 1 * 9 + 2 * 2 + 9 * 1 == 22


def test_ring_op_dispatch():
    a, b = ZSeries([1, 2], 3), ZSeries([3, 4], 3)
    assert ring_op(a, b, "add") == a + b
    assert ring_op(a, b, "mul") == a * b
    assert ring_op(a, 3, "scale") == ZSeries([3, 6], 3)
    with pytest.raises(ValueError):
        ring_op(a, b, "pow")


def test_mixed_orders_truncate_to_minimum():
    assert (ZSeries([1], 2) + ZSeries([1], 5)).order == 2


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZSeries([], 7)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_poly_division_recovers_factor(p, q):
    if not q:
        return
    assert divide_exact(p * q, q) == p


@settings(max_examples=60, deadline=None)
@given(series, st.lists(rationals, min_size=1, max_size=8))
def test_series_division_recovers_factor(a, bc):
    if bc[0] == 0:
        bc[0] = Fraction(1)
    b = ZSeries(bc, 7)
    assert divide_exact(a * b, b) == a


def test_discrete_derivative_has_no_remainder():
    row = M_bivariate(1)[1]
    q = divide_exact(UPoly([row(1)]) - row.shift(1), UPoly([1, -1]))
    assert q * UPoly([1, -1]) == UPoly([row(1)]) - row.shift(1)


def test_monomial_shift_division():
    f3 = F_ell(3, 12)
    assert divide_exact(f3.shift(3), ZSeries.monomial(3, 15)) == f3


def test_factorization_division():
    assert divide_exact(UPoly([1, 0, -1]), UPoly([1, -1])) == UPoly([1, 1])


def test_nonzero_remainder_raises():
    with pytest.raises(NonzeroRemainder):
        divide_exact(UPoly([1, 0, 1]), UPoly([1, -1]))
    with pytest.raises(NonzeroRemainder):
        divide_exact(ZSeries([1, 2], 4), ZSeries.monomial(1, 4))


def test_sqrt_one_minus_12z():
    assert sqrt_series(ZSeries([1, -12], 2)) == ZSeries([1, -6, -18], 2)


def test_sqrt_of_square_constant_is_rational():
    r = sqrt_series(ZSeries([9, 1, -2, 5], 6))
    assert r[0] == 3 and all(isinstance(c, Fraction) for c in r)
    assert r * r == ZSeries([9, 1, -2, 5], 6)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6))
def test_sqrt_inverts_square(c):
    c[0] = abs(c[0]) + 1
    g = ZSeries(c, 6)
    assert sqrt_series(g * g) == g


def test_sqrt_rejects_non_square_constant():
    with pytest.raises(NotASquareConstant):
        sqrt_series(ZSeries([2, 1], 3))
    with pytest.raises(NotASquareConstant):
        sqrt_series(ZSeries([-1, 1], 3))


def test_derivatives():
    assert differentiate(UPoly([0, 0, 0, 1])) == UPoly([0, 0, 3])
    c0, c1 = Fraction(5), Fraction(7)
    p = UPoly([0, 0, 0, c0, c1])
    for _ in range(3):
        p = differentiate(p)
    assert p(1) == 6 * c0 + 24 * c1
    assert differentiate(ZSeries([1, 2, 3], 2)) == ZSeries([2, 6], 1)


def test_euler_operator_reproduces_marked_pattern_series():
    zf4 = F_ell(4, 12).shift(1)
    z = ZSeries.monomial(1, 12)
    got = (z * differentiate(zf4) * 2 - zf4.truncate(11) * 6) * Fraction(1, 2)
    assert list(got.coefficients[5:9]) == [2, 42, 632, 8380]


def test_uz_differentiation():
    M = M_bivariate(4)
    du = differentiate(M, "u")
    assert du[1] == UPoly([1, 2])
    dz = differentiate(M, "z")
    assert dz[0] == UPoly([0, 1, 1])
