"""Numerical Caputo derivative and Riemann-Liouville integral.

These quadrature-based operators are validation oracles for the exact
series machinery; they never sit on the solver path, so their tolerances
are deliberately looser (1e-5-ish, capped by the finite-difference inner
derivative) than the exact-arithmetic 1e-12 elsewhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import scipy.integrate

from .special import gamma

__all__ = ["CaputoConfig", "ConvergenceError", "rl_integral_numeric", "caputo_numeric"]


class ConvergenceError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


@dataclass(frozen=True)
class CaputoConfig:
    quadrature_tol: float = 1e-9
    derivative_step: float = 1e-5
    max_panels: int = 200

    def __post_init__(self) -> None:
        if self.quadrature_tol <= 0.0:
            raise ValueError("quadrature_tol must be positive")
        if not 1e-7 <= self.derivative_step <= 1e-3:
            raise ValueError("derivative_step must lie in [1e-7, 1e-3]")


DEFAULT_CONFIG = CaputoConfig()


def rl_integral_numeric(
    f: Callable[[float], float],
    alpha: float,
    t: float,
    config: CaputoConfig = DEFAULT_CONFIG,
) -> float:
    """J^alpha f at time t for alpha > 0.

    The substitution tau = t (1 - u^(1/alpha)) absorbs the weakly singular
    kernel (t - tau)^(alpha-1), leaving

        J^alpha f(t) = t^alpha / Gamma(alpha+1) * int_0^1 f(t(1-u^(1/alpha))) du.
    """
    if t <= 0.0:
        raise ValueError("rl_integral_numeric: t must be positive")
    if alpha <= 0.0:
        raise ValueError("rl_integral_numeric: alpha must be positive")
    inv = 1.0 / alpha

    def integrand(u: float) -> float:
        return f(t * (1.0 - u ** inv))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.integrate.IntegrationWarning)
        val, err = scipy.integrate.quad(
            integrand,
            0.0,
            1.0,
            epsabs=config.quadrature_tol,
            epsrel=config.quadrature_tol,
            limit=config.max_panels,
        )
    scale = t ** alpha / gamma(alpha + 1.0)
    if err > 1e3 * config.quadrature_tol * (1.0 + abs(val)):
        raise ConvergenceError(
            f"rl_integral_numeric: error estimate {err:.3e} exceeds budget"
        )
    return scale * val


def _derivative(f: Callable[[float], float], tau: float, step: float) -> float:
    # relative step keeps the finite difference stable near an algebraic
    # singularity of f' at tau = 0
    h = step * max(abs(tau), step)
    if tau - h >= 0.0:
        return (f(tau + h) - f(tau - h)) / (2.0 * h)
    return (f(tau + h) - f(tau)) / h


def caputo_numeric(
    f: Callable[[float], float],
    alpha: float,
    t: float,
    config: CaputoConfig = DEFAULT_CONFIG,
) -> float:
    """Caputo derivative of order alpha in (0, 1] at time t > 0.

    Computed as J^(1-alpha) applied to a finite-difference derivative of f;
    for alpha = 1 it reduces to the plain numerical derivative.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError("caputo_numeric: alpha must be in (0, 1]")
    if t <= 0.0:
        raise ValueError("caputo_numeric: t must be positive")
    if alpha > 1.0 - 1e-12:
        return _derivative(f, t, config.derivative_step)
    fprime = lambda tau: _derivative(f, tau, config.derivative_step)
    return rl_integral_numeric(fprime, 1.0 - alpha, t, config)
