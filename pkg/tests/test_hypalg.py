import math

import pytest
from hypothesis import given, settings, strategies as st

from ararps.hypalg import HypExpr, Kind, hyp_add, hyp_diff, hyp_eval, hyp_mul


def _coeffs(e: HypExpr) -> dict:
    return {(k, round(f, 9)): c for k, f, c in e.terms}


coeff_st = st.floats(-3.0, 3.0).filter(lambda c: abs(c) > 1e-6)
freq_st = st.sampled_from([0.5, 1.0, 1.5, 2.0, 1.0 / 3.0])


@st.composite
def hyp_exprs(draw):
    n = draw(st.integers(0, 4))
    terms = []
    for _ in range(n):
        kind = draw(st.sampled_from([Kind.CONST, Kind.COSH, Kind.SINH]))
        freq = 0.0 if kind is Kind.CONST else draw(freq_st)
        terms.append((kind, freq, draw(coeff_st)))
    return HypExpr.of(terms)


class TestCanonicalForm:
    def test_zero(self):
        assert HypExpr.zero().is_zero()
        assert HypExpr.const(0.0).is_zero()

    def test_negative_freq_folded(self):
        assert HypExpr.cosh(-2.0, 3.0) == HypExpr.cosh(2.0, 3.0)
        assert HypExpr.sinh(-2.0, 3.0) == HypExpr.sinh(2.0, -3.0)

    def test_sinh_zero_freq_vanishes(self):
        assert HypExpr.sinh(0.0, 5.0).is_zero()

    def test_merge_of_close_frequencies(self):
        e = HypExpr.of([(Kind.COSH, 1.0, 1.0), (Kind.COSH, 1.0 + 1e-14, 2.0)])
        assert len(e.terms) == 1
        assert e.terms[0][2] == pytest.approx(3.0)

    def test_cancellation_residue_pruned(self):
        e = HypExpr.cosh(1.0, 1.0) + HypExpr.cosh(1.0, -1.0) + HypExpr.const(5.0)
        assert _coeffs(e) == {(Kind.CONST, 0.0): 5.0}

    def test_terms_sorted(self):
        e = HypExpr.sinh(1.0) + HypExpr.const(1.0) + HypExpr.cosh(2.0) + HypExpr.cosh(1.0)
        kinds = [t[0] for t in e.terms]
        assert kinds == sorted(kinds)


class TestAlgebra:
    def test_product_to_sum_cosh_cosh(self):
        e = HypExpr.cosh(2.0) * HypExpr.cosh(1.0)
        assert _coeffs(e) == pytest.approx({(Kind.COSH, 3.0): 0.5, (Kind.COSH, 1.0): 0.5})

    def test_product_to_sum_sinh_sinh(self):
        e = HypExpr.sinh(2.0) * HypExpr.sinh(1.0)
        assert _coeffs(e) == pytest.approx({(Kind.COSH, 3.0): 0.5, (Kind.COSH, 1.0): -0.5})

    def test_sinh_squared(self):
        # sinh^2(x) = (cosh(2x) - 1)/2
        e = HypExpr.sinh(1.0) * HypExpr.sinh(1.0)
        assert _coeffs(e) == pytest.approx({(Kind.COSH, 2.0): 0.5, (Kind.CONST, 0.0): -0.5})

    def test_diff_cycle(self):
        e = HypExpr.cosh(3.0, 2.0)
        assert e.diff(2) == HypExpr.cosh(3.0, 18.0)
        assert e.diff(1) == HypExpr.sinh(3.0, 6.0)

    def test_diff_kills_constants(self):
        assert HypExpr.const(4.0).diff().is_zero()

    @given(e1=hyp_exprs(), e2=hyp_exprs())
    def test_add_commutes(self, e1, e2):
        a, b = _coeffs(e1 + e2), _coeffs(e2 + e1)
        assert set(a) == set(b)
        for key in a:
            assert a[key] == pytest.approx(b[key], rel=1e-13, abs=1e-13)

    @given(e1=hyp_exprs(), e2=hyp_exprs())
    def test_mul_commutes(self, e1, e2):
        a, b = _coeffs(e1 * e2), _coeffs(e2 * e1)
        assert set(a) == set(b)
        for key in a:
            assert a[key] == pytest.approx(b[key], rel=1e-13, abs=1e-13)

    @settings(max_examples=50)
    @given(e1=hyp_exprs(), e2=hyp_exprs(), e3=hyp_exprs(), x=st.floats(-2.0, 2.0))
    def test_mul_associates_pointwise(self, e1, e2, e3, x):
        lhs = ((e1 * e2) * e3)(x)
        rhs = (e1 * (e2 * e3))(x)
        assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-11)

    @given(e1=hyp_exprs(), e2=hyp_exprs(), x=st.floats(-2.0, 2.0))
    def test_eval_is_ring_homomorphism(self, e1, e2, x):
        assert (e1 + e2)(x) == pytest.approx(e1(x) + e2(x), rel=1e-11, abs=1e-11)
        assert (e1 * e2)(x) == pytest.approx(e1(x) * e2(x), rel=1e-11, abs=1e-11)

    @settings(max_examples=50)
    @given(e1=hyp_exprs(), e2=hyp_exprs(), x=st.floats(-1.0, 1.0))
    def test_leibniz_rule(self, e1, e2, x):
        lhs = (e1 * e2).diff()(x)
        rhs = (e1.diff() * e2)(x) + (e1 * e2.diff())(x)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)

    @settings(max_examples=50)
    @given(e=hyp_exprs(), x=st.floats(-1.0, 1.0))
    def test_diff_matches_finite_difference(self, e, x):
        h = 1e-6
        fd = (e(x + h) - e(x - h)) / (2 * h)
        assert e.diff()(x) == pytest.approx(fd, rel=1e-7, abs=1e-6)


class TestQueries:
    def test_eval(self):
        e = HypExpr.const(1.0) + HypExpr.cosh(2.0, 3.0) + HypExpr.sinh(0.5, -1.0)
        x = 0.7
        assert e(x) == pytest.approx(
            1.0 + 3.0 * math.cosh(1.4) - math.sinh(0.35), rel=1e-15
        )

    def test_max_abs_coeff(self):
        e = HypExpr.cosh(1.0, -4.0) + HypExpr.const(2.0)
        assert e.max_abs_coeff() == 4.0
        assert HypExpr.zero().max_abs_coeff() == 0.0

    def test_render(self):
        assert HypExpr.zero().render() == "0"
        e = HypExpr.const(-2.0 / 3.0) + HypExpr.cosh(0.5, 2.0 / 3.0)
        assert e.render() == "-0.666667 + 0.666667*cosh(0.5*x)"
        assert HypExpr.cosh(1.0).render() == "1*cosh(x)"

    def test_module_level_wrappers(self):
        e1, e2 = HypExpr.cosh(1.0), HypExpr.sinh(1.0)
        assert hyp_add(e1, e2) == e1 + e2
        assert hyp_mul(e1, e2) == e1 * e2
        assert hyp_diff(e1) == e1.diff()
        assert hyp_eval(e1, 0.3) == e1(0.3)
