"""The ARA integral transform: formal series maps plus numerical quadrature.

The order-n transform of y(t) is  G_n[y](s) = s * int_0^inf t^(n-1) e^(-st) y dt.
For the solver only the exact series-level maps matter (h_n = (n*alpha+1) c_n
between a FracSeries and its order-two image); the quadrature routines exist
to verify the transform identities independently of the formal algebra.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import scipy.integrate

from .caputo import CaputoConfig, ConvergenceError, caputo_numeric
from .fpseries import FracSeries
from .hypalg import HypExpr
from .special import gamma

__all__ = [
    "AraSeries",
    "to_ara",
    "from_ara",
    "ara_numeric",
    "ara_monomial",
    "PropertyReport",
    "verify_property",
]


@dataclass(frozen=True)
class AraSeries:
    """Order-two image sum_n h_n(x) / s^(n*alpha+1) of a fractional series.

    The order-one image is a derived view (divide term n by (n*alpha+1) and
    drop one power of s), never stored.
    """

    alpha: float
    coeffs: tuple[HypExpr, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def eval_order2(self, x: float, s: float) -> float:
        """Numeric value of the order-two image at (x, s)."""
        a = self.alpha
        return math.fsum(
            h(x) / s ** (n * a + 1.0) for n, h in enumerate(self.coeffs)
        )

    def eval_order1(self, x: float, s: float) -> float:
        a = self.alpha
        return math.fsum(
            h(x) / ((n * a + 1.0) * s ** (n * a)) for n, h in enumerate(self.coeffs)
        )


def to_ara(s: FracSeries) -> AraSeries:
    """h_n = (n*alpha + 1) c_n."""
    a = s.alpha
    return AraSeries(a, tuple(c.scale(n * a + 1.0) for n, c in enumerate(s.coeffs)))


def from_ara(a: AraSeries) -> FracSeries:
    """c_n = h_n / (n*alpha + 1); exact inverse of :func:`to_ara`."""
    al = a.alpha
    return FracSeries(
        al, tuple(h.scale(1.0 / (n * al + 1.0)) for n, h in enumerate(a.coeffs))
    )


def ara_numeric(
    f: Callable[[float], float],
    n: int,
    s: float,
    T: float | None = None,
    tol: float = 1e-10,
    max_panels: int = 300,
) -> float:
    """Adaptive quadrature of s * int_0^T t^(n-1) e^(-st) f(t) dt.

    T defaults to a horizon where the exponential tail is negligible; a
    warning is emitted when the estimated tail bound exceeds ``tol``.
    """
    if n not in (1, 2):
        raise ValueError("ara_numeric: transform order must be 1 or 2")
    if s <= 0.0:
        raise ValueError("ara_numeric: s must be positive")

    def integrand(t: float) -> float:
        return t ** (n - 1) * math.exp(-s * t) * f(t)

    if T is None:
        T = 60.0 / s
        while abs(integrand(T)) > 1e-16 and T < 1400.0 / s:
            T *= 1.5
    tail = abs(integrand(T)) / s  # crude e^(-sT)-scale bound
    if s * tail > tol:
        warnings.warn(
            f"ara_numeric: tail bound {s * tail:.3e} at T={T:.3g} exceeds tol",
            stacklevel=2,
        )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.integrate.IntegrationWarning)
        val, err = scipy.integrate.quad(
            integrand,
            0.0,
            T,
            epsabs=0.1 * tol,
            epsrel=1e-11,
            limit=max_panels,
            points=[1.0 / s] if 1.0 / s < T else None,
        )
    if err > 1e4 * tol * (1.0 + abs(val)):
        raise ConvergenceError(f"ara_numeric: error estimate {err:.3e} too large")
    return s * val


def ara_monomial(p: float, n: int, s: float) -> float:
    """Closed form G_n[t^p] = Gamma(p + n) / s^(p + n - 1)."""
    if p < 0.0:
        raise ValueError("ara_monomial: exponent must be >= 0")
    if n not in (1, 2):
        raise ValueError("ara_monomial: transform order must be 1 or 2")
    if s <= 0.0:
        raise ValueError("ara_monomial: s must be positive")
    return gamma(p + n) / s ** (p + n - 1.0)


@dataclass(frozen=True)
class PropertyReport:
    property_id: int
    discrepancies: tuple[float, ...]
    max_discrepancy: float


def _richardson_limit(values: Sequence[float], s_values: Sequence[float], alpha: float) -> float:
    """Extrapolate v(s) -> L assuming an expansion in powers of 1/s^alpha.

    Requires geometrically spaced s values; eliminates the 1/s^alpha,
    1/s^(2 alpha), ... terms successively.
    """
    if len(values) < 2:
        return values[0]
    r = s_values[1] / s_values[0]
    vals = list(values)
    for level in range(1, len(vals)):
        fac = r ** (level * alpha)
        vals = [
            (fac * vals[i + 1] - vals[i]) / (fac - 1.0)
            for i in range(len(vals) - 1)
        ]
    return vals[0]


def verify_property(
    property_id: int,
    f: Callable[[float], float],
    s_values: Sequence[float],
    alpha: float = 1.0,
    g: Callable[[float], float] | None = None,
    a: float = 2.0,
    b: float = 3.0,
    dalpha_f: Callable[[float], float] | None = None,
    d2alpha_f: Callable[[float], float] | None = None,
    dalpha_f0: float | None = None,
    caputo_config: CaputoConfig | None = None,
) -> PropertyReport:
    """Numerically check one of the seven transform identities on ``f``.

    Fractional derivatives default to the quadrature Caputo oracle; closed
    forms can be supplied via ``dalpha_f``/``d2alpha_f`` (the latter is the
    sequential derivative of order 2*alpha and is required for property 6).
    Limit-type properties (2 and 7) extrapolate over the given s values,
    which must be geometrically spaced.
    """
    cfg = caputo_config or CaputoConfig()
    f0 = f(0.0)
    if dalpha_f is None:
        dalpha_f = lambda t: caputo_numeric(f, alpha, t, cfg)

    disc: list[float] = []
    if property_id == 1:
        if g is None:
            g = lambda t: f(t) ** 2
        for s in s_values:
            combo = ara_numeric(lambda t: a * f(t) + b * g(t), 2, s)
            parts = a * ara_numeric(f, 2, s) + b * ara_numeric(g, 2, s)
            disc.append(abs(combo - parts))
    elif property_id == 2:
        vals = [ara_numeric(f, 1, s) for s in s_values]
        disc.append(abs(_richardson_limit(vals, s_values, alpha) - f0))
    elif property_id == 3:
        for s in s_values:
            lhs = ara_numeric(dalpha_f, 1, s)
            rhs = s ** alpha * ara_numeric(f, 1, s) - s ** alpha * f0
            disc.append(abs(lhs - rhs))
    elif property_id == 4:
        for s in s_values:
            lhs = ara_numeric(lambda t: t ** alpha, 2, s)
            disc.append(abs(lhs - ara_monomial(alpha, 2, s)))
    elif property_id == 5:
        for s in s_values:
            lhs = ara_numeric(dalpha_f, 2, s)
            rhs = (
                s ** alpha * ara_numeric(f, 2, s)
                - alpha * s ** (alpha - 1.0) * ara_numeric(f, 1, s)
                + (alpha - 1.0) * s ** (alpha - 1.0) * f0
            )
            disc.append(abs(lhs - rhs))
    elif property_id == 6:
        if d2alpha_f is None:
            inner = dalpha_f
            d2alpha_f = lambda t: caputo_numeric(inner, alpha, t, cfg)
        # D^alpha f at 0+; supply dalpha_f0 when the limit is known exactly
        b0 = dalpha_f(1e-12) if dalpha_f0 is None else dalpha_f0
        for s in s_values:
            lhs = ara_numeric(d2alpha_f, 2, s)
            rhs = (
                s ** (2 * alpha) * ara_numeric(f, 2, s)
                - 2 * alpha * s ** (2 * alpha - 1.0) * ara_numeric(f, 1, s)
                + (2 * alpha - 1.0) * s ** (2 * alpha - 1.0) * f0
                + (alpha - 1.0) * s ** (alpha - 1.0) * b0
            )
            disc.append(abs(lhs - rhs))
    elif property_id == 7:
        vals = [s * ara_numeric(f, 2, s) for s in s_values]
        disc.append(abs(_richardson_limit(vals, s_values, alpha) - f0))
    else:
        raise ValueError(f"unknown property id {property_id!r}")
    return PropertyReport(property_id, tuple(disc), max(disc))
