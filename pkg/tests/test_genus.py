from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings

from chiy.algebra import USeries, YPoly
from chiy.genus import (
    ChernData, GenusPoly, HodgeTable, chi_factor, chi_from_hodge, chi_y, genus_class,
    serre_symmetry_defect, specialize,
)
from chiy.symfunc import GradedPoly, brute_force_class

from conftest import chern_data

y = YPoly.y()
one_plus_y = YPoly([1, 1])


def sympy_factor_coeffs(order):
    """Taylor coefficients of x(1 + y e^{-x})/(1 - e^{-x}) computed by sympy."""
    x, yy = sympy.symbols("x y")
    expr = x * (1 + yy * sympy.exp(-x)) / (1 - sympy.exp(-x))
    ser = sympy.series(expr, x, 0, order + 1).removeO()
    out = []
    for k in range(order + 1):
        ck = sympy.Poly(sympy.expand(ser.coeff(x, k)), yy)
        out.append(YPoly(F(int(sympy.fraction(cf)[0]), int(sympy.fraction(cf)[1]))
                         for cf in reversed(ck.all_coeffs())))
    return out


class TestChiFactor:
    def test_order_two(self):
        assert chi_factor(2) == USeries([one_plus_y, YPoly([F(1, 2), F(-1, 2)]), YPoly([F(1, 12), F(1, 12)])])

    def test_todd_specialization(self):
        assert chi_factor(2).substitute_y(0) == USeries([1, F(1, 2), F(1, 12)])

    @pytest.mark.parametrize("order", [0, 1, 4, 7])
    def test_euler_specialization_is_x(self, order):
        expected = USeries([0, 1], order) if order else USeries([0], 0)
        assert chi_factor(order).substitute_y(-1) == expected

    def test_matches_sympy_series(self):
        assert list(chi_factor(6).coeffs) == sympy_factor_coeffs(6)

    def test_odd_coefficients_beyond_one_vanish(self):
        q = chi_factor(7)
        assert all(q[k].is_zero() for k in (3, 5, 7))


class TestGenusClass:
    def test_d0(self):
        assert genus_class(0) == GradedPoly.one(0)

    def test_d1(self):
        assert genus_class(1) == GradedPoly(1, {(): one_plus_y, (1,): YPoly([F(1, 2), F(-1, 2)])})

    def test_d2_weight_two(self):
        top = genus_class(2).component(2)
        assert top.coeff((1, 1)) == one_plus_y ** 2 / 12
        assert top.coeff((2,)) == YPoly([1, -10, 1]) / 12

    def test_d2_todd(self):
        top = genus_class(2).component(2)
        assert top.coeff((1, 1))(F(0)) == F(1, 12) == top.coeff((2,))(F(0))

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
    def test_brute_force_oracle(self, d):
        assert genus_class(d) == brute_force_class(chi_factor(d), d)

    def test_y_coefficients_are_polynomials_of_bounded_degree(self):
        for d in range(7):
            assert all(c.degree <= d for c in genus_class(d).terms.values())


class TestChiY:
    def test_cp2(self):
        assert chi_y(ChernData(2, {(1, 1): 9, (2,): 3})) == GenusPoly(2, [1, -1, 1])

    def test_k3(self):
        assert chi_y(ChernData(2, {(1, 1): 0, (2,): 24})) == GenusPoly(2, [2, -20, 2])

    def test_point(self):
        assert chi_y(ChernData(0, {(): 1})) == GenusPoly(0, [1])

    def test_rejects_wrong_weight(self):
        with pytest.raises(ValueError):
            ChernData(2, {(3,): 1})


class TestHodge:
    def test_cp1(self):
        assert chi_from_hodge(HodgeTable(1, {(0, 0): 1, (1, 1): 1})) == GenusPoly(1, [1, -1])

    def test_k3_diamond(self):
        h = HodgeTable(2, {(0, 0): 1, (2, 0): 1, (0, 2): 1, (2, 2): 1, (1, 1): 20})
        assert h.is_kahler_symmetric()
        assert chi_from_hodge(h) == GenusPoly(2, [2, -20, 2])

    def test_empty(self):
        assert chi_from_hodge(HodgeTable(2)) == GenusPoly(2, [])

    def test_symmetry_flag(self):
        assert not HodgeTable(1, {(1, 0): 1}).is_kahler_symmetric()


class TestSpecialize:
    k3 = GenusPoly(2, [2, -20, 2])

    def test_k3(self):
        assert [specialize(self.k3, w) for w in ("euler", "signature", "todd")] == [24, -16, 2]

    def test_cp3_euler(self):
        assert specialize(GenusPoly(3, [1, -1, 1, -1]), "euler") == 4

    def test_zero(self):
        z = GenusPoly(2, [])
        assert all(specialize(z, w) == 0 for w in ("euler", "signature", "todd", F(3, 7)))

    def test_at_rational(self):
        assert specialize(self.k3, F(1, 2)) == 2 - 10 + F(1, 2)

    def test_unknown(self):
        with pytest.raises(ValueError):
            specialize(self.k3, "genus")


class TestSerre:
    def test_palindromic(self):
        assert not any(serre_symmetry_defect(GenusPoly(2, [2, -20, 2])).coeffs)

    def test_antipalindromic(self):
        assert not any(serre_symmetry_defect(GenusPoly(3, [1, -1, 1, -1])).coeffs)

    def test_counterexamples(self):
        assert not any(serre_symmetry_defect(GenusPoly(2, [1, 0, 1])).coeffs)
        assert serre_symmetry_defect(GenusPoly(2, [1, 0, 2])).coeffs == (-1, 0, 1)


@settings(max_examples=60, deadline=None)
@given(chern_data())
def test_polynomial_identities(data):
    g = chi_y(data)
    assert specialize(g, "euler") == data.top_chern_number
    assert not any(serre_symmetry_defect(g).coeffs)
    assert len(g.coeffs) == data.dim + 1
