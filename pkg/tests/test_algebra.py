from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from chiy.algebra import USeries, YPoly, exp_neg_x, useries_mul, useries_recip, ypoly_eval

from conftest import small_rat, useries, ypolys

y = YPoly.y()


def S(*coeffs, order=None):
    return USeries(list(coeffs), order)


class TestUSeriesMul:
    def test_difference_of_squares(self):
        assert useries_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)

    def test_identity(self):
        a = S(F(1, 3), y, 2 * y * y, 5)
        assert useries_mul(a, USeries.one(3)) == a

    def test_binomial_square(self):
        a = S(1, y, 0)
        assert useries_mul(a, a) == S(1, 2 * y, y * y)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            useries_mul(S(1, 1), S(1, 1, 1))

    def test_truncates_at_order(self):
        assert useries_mul(S(0, 1), S(0, 1)) == S(0, 0)


class TestRecip:
    def test_geometric(self):
        assert useries_recip(S(1, -1, 0, 0)) == S(1, 1, 1, 1)

    def test_involution(self):
        a = S(1, F(1, 2), F(1, 12))
        assert useries_recip(useries_recip(a)) == a

    def test_one_plus_half_x(self):
        r = useries_recip(S(1, F(1, 2), 0))
        assert r == S(1, F(-1, 2), F(1, 4))
        assert useries_mul(r, S(1, F(1, 2), 0)) == USeries.one(2)

    @pytest.mark.parametrize("c0", [YPoly(), y, 1 + y])
    def test_rejects_non_units(self, c0):
        with pytest.raises(ValueError):
            useries_recip(S(c0, 1, 1))

    def test_non_unit_rational_constant(self):
        r = useries_recip(S(3, y))
        assert useries_mul(r, S(3, y)) == USeries.one(1)


class TestExpNegX:
    def test_order_zero(self):
        assert exp_neg_x(0) == S(1)

    def test_order_three(self):
        assert exp_neg_x(3) == S(1, -1, F(1, 2), F(-1, 6))

    def test_times_exp_plus_x(self):
        e = exp_neg_x(6)
        e_plus = USeries([c * (-1) ** k for k, c in enumerate(e.coeffs)], 6)
        assert useries_mul(e, e_plus) == USeries.one(6)


class TestYPolyEval:
    def test_root(self):
        assert ypoly_eval(YPoly([1, -1]), F(1)) == 0

    def test_substitution(self):
        assert ypoly_eval(YPoly([1, -1]), F(-1)) == 2

    def test_k3_euler(self):
        assert ypoly_eval(YPoly([2, -20, 2]), F(-1)) == 24

    def test_complex_point(self):
        assert ypoly_eval(YPoly([1, 1]), 1j) == pytest.approx(1 + 1j)

    def test_trailing_zeros_trimmed(self):
        assert YPoly([1, 0, 0]).coeffs == (1,)
        assert YPoly([0, 0]).degree == -1


@given(useries(3), useries(3), useries(3))
def test_ring_axioms(a, b, c):
    assert useries_mul(a, b) == useries_mul(b, a)
    assert useries_mul(useries_mul(a, b), c) == useries_mul(a, useries_mul(b, c))
    assert useries_mul(a, b + c) == useries_mul(a, b) + useries_mul(a, c)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda q: q != 0), useries(4))
def test_recip_two_sided_inverse(c0, a):
    a = USeries([YPoly.const(c0)] + list(a.coeffs[1:]), 4)
    r = useries_recip(a)
    assert useries_mul(a, r) == USeries.one(4) == useries_mul(r, a)


@given(ypolys, ypolys)
def test_coefficients_stay_canonical(p, q):
    for c in (p * q + p).coeffs:
        assert isinstance(c, F)
        assert c.denominator > 0
