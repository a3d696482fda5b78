"""Truncated fractional power series in t^alpha with HypExpr coefficients.

A ``FracSeries`` stores c_0..c_K where c_n(x) is the n-fold sequential
Caputo derivative of the represented function at t = 0, so the function is

    y(x, t) = sum_n c_n(x) * t^(n*alpha) / Gamma(n*alpha + 1).

Storing the derivatives themselves (rather than the Taylor coefficients
c_n / Gamma(n*alpha + 1)) makes Caputo differentiation an exact index shift
and matches the transform-space coefficients h_n = (n*alpha + 1) c_n.

Products use the convolution weights Gamma(n*alpha+1) / (Gamma(m*alpha+1)
Gamma(j*alpha+1)); the weights are correctly rounded (computed once in
extended precision and cached) and each output coefficient is accumulated
in 80-bit arithmetic so that deep solver recursions stay at a few ulp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .hypalg import HypExpr, Kind, _canonical
from .special import gamma, tpow

__all__ = [
    "FracSeries",
    "series_caputo",
    "series_mul",
    "series_pow",
    "series_spatial_diff",
    "series_eval",
    "conv_weight",
]

_ALPHA_TOL = 1e-12


@lru_cache(maxsize=None)
def _conv_weight_str(alpha: float, m: int, j: int) -> str:
    with mpmath.workdps(40):
        n = m + j
        w = mpmath.gamma(n * alpha + 1) / (
            mpmath.gamma(m * alpha + 1) * mpmath.gamma(j * alpha + 1)
        )
        return mpmath.nstr(w, 25)


@lru_cache(maxsize=None)
def conv_weight(alpha: float, m: int, j: int) -> float:
    """Gamma((m+j)a+1) / (Gamma(ma+1) Gamma(ja+1)), correctly rounded."""
    if abs(alpha - round(alpha)) < _ALPHA_TOL:
        return float(math.comb(m + j, m))  # classical binomial, exact
    return float(_conv_weight_str(alpha, m, j))


@lru_cache(maxsize=None)
def _conv_weight_ld(alpha: float, m: int, j: int) -> np.longdouble:
    if abs(alpha - round(alpha)) < _ALPHA_TOL:
        return np.longdouble(math.comb(m + j, m))
    return np.longdouble(_conv_weight_str(alpha, m, j))


@dataclass(frozen=True)
class FracSeries:
    """Truncated series sum_n c_n(x) t^(n*alpha)/Gamma(n*alpha+1)."""

    alpha: float
    coeffs: tuple[HypExpr, ...]

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha!r}")
        if not self.coeffs:
            raise ValueError("series needs at least the order-0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def zero(alpha: float, order: int) -> "FracSeries":
        return FracSeries(alpha, (HypExpr.zero(),) * (order + 1))

    @staticmethod
    def constant(alpha: float, value: float, order: int) -> "FracSeries":
        return FracSeries(
            alpha, (HypExpr.const(value),) + (HypExpr.zero(),) * order
        )

    def truncate(self, order: int) -> "FracSeries":
        if order >= self.order:
            return self
        return FracSeries(self.alpha, self.coeffs[: order + 1])

    def __add__(self, other: "FracSeries") -> "FracSeries":
        _check_alpha(self, other)
        k = min(self.order, other.order)
        return FracSeries(
            self.alpha,
            tuple(self.coeffs[n] + other.coeffs[n] for n in range(k + 1)),
        )

    def scale(self, factor: float) -> "FracSeries":
        return FracSeries(self.alpha, tuple(c.scale(factor) for c in self.coeffs))


def _check_alpha(s1: FracSeries, s2: FracSeries) -> None:
    if abs(s1.alpha - s2.alpha) > _ALPHA_TOL:
        raise ValueError(
            f"alpha mismatch: {s1.alpha!r} vs {s2.alpha!r}"
        )


def series_caputo(s: FracSeries) -> FracSeries:
    """Sequential Caputo derivative of order alpha: an exact left shift."""
    if s.order < 1:
        raise ValueError("series_caputo: order-0 series cannot be shifted")
    return FracSeries(s.alpha, s.coeffs[1:])


def series_rl_integral(s: FracSeries) -> FracSeries:
    """Riemann-Liouville integral of order alpha: right shift with zero head."""
    return FracSeries(s.alpha, (HypExpr.zero(),) + s.coeffs)


def series_mul(s1: FracSeries, s2: FracSeries) -> FracSeries:
    """Cauchy product in the t^alpha monomial basis, truncated to min order."""
    _check_alpha(s1, s2)
    k = min(s1.order, s2.order)
    alpha = s1.alpha
    half = np.longdouble(0.5)
    out: list[HypExpr] = []
    for n in range(k + 1):
        # bucket raw basis contributions and accumulate each in longdouble
        buckets: list[tuple[Kind, float, list[np.longdouble]]] = []

        def _push(kind: Kind, freq: float, val: np.longdouble) -> None:
            if freq < 0.0:
                freq = -freq
                if kind is Kind.SINH:
                    val = -val
            if freq < 1e-12 and kind is Kind.SINH:
                return
            if freq < 1e-12:
                kind, freq = Kind.CONST, 0.0
            for bk, bf, vals in buckets:
                if bk is kind and abs(bf - freq) < 1e-12:
                    vals.append(val)
                    return
            buckets.append((kind, freq, [val]))

        for m in range(n + 1):
            w = _conv_weight_ld(alpha, m, n - m)
            for k1, f1, c1 in s1.coeffs[m].terms:
                wc1 = w * np.longdouble(c1)
                for k2, f2, c2 in s2.coeffs[n - m].terms:
                    c = wc1 * np.longdouble(c2)
                    if k1 is Kind.CONST:
                        _push(k2, f2, c)
                    elif k2 is Kind.CONST:
                        _push(k1, f1, c)
                    elif k1 is Kind.COSH and k2 is Kind.COSH:
                        _push(Kind.COSH, f1 + f2, half * c)
                        _push(Kind.COSH, f1 - f2, half * c)
                    elif k1 is Kind.SINH and k2 is Kind.SINH:
                        _push(Kind.COSH, f1 + f2, half * c)
                        _push(Kind.COSH, f1 - f2, -half * c)
                    elif k1 is Kind.SINH:
                        _push(Kind.SINH, f1 + f2, half * c)
                        _push(Kind.SINH, f1 - f2, half * c)
                    else:
                        _push(Kind.SINH, f2 + f1, half * c)
                        _push(Kind.SINH, f2 - f1, half * c)
        raw = [
            (kind, freq, float(np.sum(np.array(vals, dtype=np.longdouble))))
            for kind, freq, vals in buckets
        ]
        out.append(HypExpr(_canonical(raw)))
    return FracSeries(alpha, tuple(out))


def series_pow(s: FracSeries, p: int) -> FracSeries:
    """p-th power by repeated multiplication; order is preserved."""
    if p < 2:
        raise ValueError("series_pow: exponent must be >= 2")
    acc = s
    for _ in range(p - 1):
        acc = series_mul(acc, s)
    return acc


def series_spatial_diff(s: FracSeries, m: int = 1) -> FracSeries:
    if m < 1:
        raise ValueError("series_spatial_diff: order must be >= 1")
    return FracSeries(s.alpha, tuple(c.diff(m) for c in s.coeffs))


def series_eval(s: FracSeries, x: float, t: float) -> float:
    if t < 0.0:
        raise ValueError("series_eval: t must be >= 0")
    a = s.alpha
    terms = [
        c(x) * tpow(t, n * a) / gamma(n * a + 1.0)
        for n, c in enumerate(s.coeffs)
    ]
    return math.fsum(terms)
