import math
import random

import pytest

from ararps.fpseries import (
    FracSeries,
    conv_weight,
    series_caputo,
    series_eval,
    series_mul,
    series_pow,
    series_rl_integral,
    series_spatial_diff,
)
from ararps.hypalg import HypExpr, Kind
from ararps.special import gamma


def _random_series(rng, alpha, K):
    coeffs = []
    for _ in range(K + 1):
        terms = []
        for _ in range(rng.randint(0, 3)):
            kind = rng.choice([Kind.CONST, Kind.COSH, Kind.SINH])
            freq = 0.0 if kind is Kind.CONST else rng.choice([0.5, 1.0, 2.0])
            terms.append((kind, freq, rng.uniform(-1.0, 1.0)))
        coeffs.append(HypExpr.of(terms))
    return FracSeries(alpha, tuple(coeffs))


class TestConvWeight:
    def test_classical_is_binomial(self):
        for m in range(8):
            for j in range(8):
                assert conv_weight(1.0, m, j) == float(math.comb(m + j, m))

    def test_symmetry(self):
        for alpha in (0.25, 0.6, 0.9):
            assert conv_weight(alpha, 2, 5) == conv_weight(alpha, 5, 2)

    def test_against_gamma_definition(self):
        for alpha in (0.3, 0.5, 0.75):
            for m in range(5):
                for j in range(5):
                    ref = gamma((m + j) * alpha + 1.0) / (
                        gamma(m * alpha + 1.0) * gamma(j * alpha + 1.0)
                    )
                    assert conv_weight(alpha, m, j) == pytest.approx(ref, rel=1e-14)

    def test_edge_cases(self):
        assert conv_weight(0.5, 0, 0) == 1.0
        assert conv_weight(0.5, 0, 7) == 1.0


class TestFracSeries:
    def test_validation(self):
        with pytest.raises(ValueError):
            FracSeries(1.5, (HypExpr.const(1.0),))
        with pytest.raises(ValueError):
            FracSeries(0.5, ())

    def test_order(self):
        s = FracSeries.zero(0.5, 4)
        assert s.order == 4

    def test_truncate(self):
        s = FracSeries.constant(0.5, 2.0, 5)
        assert s.truncate(2).order == 2
        assert s.truncate(10) is s

    def test_add_truncates_to_min_order(self):
        s1 = FracSeries.constant(0.5, 1.0, 5)
        s2 = FracSeries.constant(0.5, 2.0, 3)
        assert (s1 + s2).order == 3
        assert (s1 + s2).coeffs[0] == HypExpr.const(3.0)

    def test_alpha_mismatch(self):
        s1 = FracSeries.constant(0.5, 1.0, 2)
        s2 = FracSeries.constant(0.6, 1.0, 2)
        with pytest.raises(ValueError, match="alpha mismatch"):
            s1 + s2


class TestShifts:
    def test_caputo_is_left_shift(self):
        s = _random_series(random.Random(0), 0.5, 4)
        d = series_caputo(s)
        assert d.order == 3
        assert d.coeffs == s.coeffs[1:]

    def test_caputo_rejects_order_zero(self):
        with pytest.raises(ValueError):
            series_caputo(FracSeries.constant(0.5, 1.0, 0))

    def test_integral_then_caputo_roundtrip(self):
        s = _random_series(random.Random(1), 0.7, 4)
        assert series_caputo(series_rl_integral(s)) == s

    def test_caputo_then_integral_loses_head(self):
        s = _random_series(random.Random(2), 0.7, 4)
        back = series_rl_integral(series_caputo(s))
        assert back.coeffs[0].is_zero()
        assert back.coeffs[1:] == s.coeffs[1:]


class TestMul:
    def test_classical_factorial_convolution(self):
        # exp-like series: c_n = 1 for all n at alpha = 1 gives
        # (e^t)^2 = e^(2t), i.e. product coefficients 2^n
        K = 6
        ones = FracSeries(1.0, (HypExpr.const(1.0),) * (K + 1))
        prod = series_mul(ones, ones)
        for n, c in enumerate(prod.coeffs):
            assert c == HypExpr.const(float(2 ** n))

    def test_truncation_to_min_order(self):
        s1 = FracSeries.constant(0.5, 1.0, 5)
        s2 = FracSeries.constant(0.5, 1.0, 2)
        assert series_mul(s1, s2).order == 2

    def test_mul_commutes(self):
        rng = random.Random(3)
        s1 = _random_series(rng, 0.6, 4)
        s2 = _random_series(rng, 0.6, 4)
        p1, p2 = series_mul(s1, s2), series_mul(s2, s1)
        for c1, c2 in zip(p1.coeffs, p2.coeffs):
            assert len(c1.terms) == len(c2.terms)
            for (k1, f1, v1), (k2, f2, v2) in zip(c1.terms, c2.terms):
                assert (k1, f1) == (k2, f2)
                assert v1 == pytest.approx(v2, rel=1e-13, abs=1e-13)

    def test_pointwise_agreement_with_tail_bound(self):
        rng = random.Random(4)
        for _ in range(25):
            alpha = rng.uniform(0.3, 1.0)
            K = rng.randint(1, 4)
            s1 = _random_series(rng, alpha, K)
            s2 = _random_series(rng, alpha, K)
            pad = (HypExpr.zero(),) * K
            full = series_mul(
                FracSeries(alpha, s1.coeffs + pad), FracSeries(alpha, s2.coeffs + pad)
            )
            trunc = series_mul(s1, s2)
            # truncated product must be the head of the full product
            for a, b in zip(trunc.coeffs, full.coeffs):
                assert a(0.5) == pytest.approx(b(0.5), rel=1e-11, abs=1e-11)
            x, t = rng.uniform(-1, 1), rng.uniform(0, 0.1)
            pointwise = series_eval(s1, x, t) * series_eval(s2, x, t)
            tail = sum(
                abs(full.coeffs[m](x)) * t ** (m * alpha) / gamma(m * alpha + 1.0)
                for m in range(K + 1, 2 * K + 1)
            )
            assert abs(pointwise - series_eval(trunc, x, t)) <= 1.01 * tail + 1e-11

    def test_pow(self):
        s = FracSeries(1.0, (HypExpr.const(1.0),) * 4)
        cube = series_pow(s, 3)
        for n, c in enumerate(cube.coeffs):
            assert c == HypExpr.const(float(3 ** n))
        with pytest.raises(ValueError):
            series_pow(s, 1)


class TestSpatialDiffAndEval:
    def test_diff_termwise(self):
        s = FracSeries(0.5, (HypExpr.cosh(2.0), HypExpr.sinh(1.0)))
        d = series_spatial_diff(s, 1)
        assert d.coeffs[0] == HypExpr.sinh(2.0, 2.0)
        assert d.coeffs[1] == HypExpr.cosh(1.0)

    def test_eval_classical_exponential(self):
        K = 30
        ones = FracSeries(1.0, (HypExpr.const(1.0),) * (K + 1))
        assert series_eval(ones, 0.0, 0.5) == pytest.approx(math.exp(0.5), rel=1e-14)

    def test_eval_at_t0_is_ic(self):
        s = _random_series(random.Random(5), 0.4, 5)
        assert series_eval(s, 0.3, 0.0) == pytest.approx(s.coeffs[0](0.3), rel=1e-15)

    def test_eval_rejects_negative_t(self):
        with pytest.raises(ValueError):
            series_eval(FracSeries.constant(0.5, 1.0, 1), 0.0, -0.1)
