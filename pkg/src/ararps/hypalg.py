"""Closed algebra of finite combinations of 1, cosh(k*x) and sinh(k*x).

Every spatial coefficient produced by the solver lives in this basis, so
addition, multiplication (via product-to-sum identities), differentiation
and pointwise evaluation are exact up to floating-point rounding.
Expressions are kept in a canonical form: terms sorted by (kind, frequency),
frequencies within 1e-12 merged, and coefficients below 1e-15 of the largest
one pruned as cancellation residue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator

__all__ = ["Kind", "HypExpr", "hyp_add", "hyp_mul", "hyp_diff", "hyp_eval"]

FREQ_MERGE_TOL = 1e-12
PRUNE_REL = 1e-15


class Kind(IntEnum):
    CONST = 0
    COSH = 1
    SINH = 2


def _canonical(raw: Iterable[tuple[Kind, float, float]]) -> tuple[tuple[Kind, float, float], ...]:
    """Fold signs, merge near-equal frequencies, prune residue, sort."""
    buckets: list[tuple[Kind, float, list[float]]] = []
    for kind, freq, coeff in raw:
        if coeff == 0.0:
            continue
        if freq < 0.0:
            # cosh is even, sinh is odd
            freq = -freq
            if kind is Kind.SINH:
                coeff = -coeff
        if freq < FREQ_MERGE_TOL:
            if kind is Kind.SINH:
                continue  # sinh(0) == 0
            kind, freq = Kind.CONST, 0.0
        elif kind is Kind.CONST:
            raise ValueError("CONST term with nonzero frequency")
        for bk, bf, vals in buckets:
            if bk is kind and abs(bf - freq) < FREQ_MERGE_TOL:
                vals.append(coeff)
                break
        else:
            buckets.append((kind, freq, [coeff]))
    merged = [(k, f, math.fsum(v)) for k, f, v in buckets]
    if not merged:
        return ()
    cutoff = PRUNE_REL * max(abs(c) for _, _, c in merged)
    kept = [(k, f, c) for k, f, c in merged if abs(c) > cutoff]
    kept.sort(key=lambda t: (int(t[0]), t[1]))
    return tuple(kept)


@dataclass(frozen=True)
class HypExpr:
    """Immutable canonical combination of CONST/COSH/SINH terms."""

    terms: tuple[tuple[Kind, float, float], ...] = ()

    @staticmethod
    def of(raw: Iterable[tuple[Kind, float, float]]) -> "HypExpr":
        return HypExpr(_canonical(raw))

    @staticmethod
    def zero() -> "HypExpr":
        return HypExpr()

    @staticmethod
    def const(c: float) -> "HypExpr":
        return HypExpr.of([(Kind.CONST, 0.0, float(c))])

    @staticmethod
    def cosh(freq: float, coeff: float = 1.0) -> "HypExpr":
        return HypExpr.of([(Kind.COSH, float(freq), float(coeff))])

    @staticmethod
    def sinh(freq: float, coeff: float = 1.0) -> "HypExpr":
        return HypExpr.of([(Kind.SINH, float(freq), float(coeff))])

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "HypExpr") -> "HypExpr":
        return HypExpr.of(list(self.terms) + list(other.terms))

    def __sub__(self, other: "HypExpr") -> "HypExpr":
        return self + (-other)

    def __neg__(self) -> "HypExpr":
        return HypExpr(tuple((k, f, -c) for k, f, c in self.terms))

    def scale(self, factor: float) -> "HypExpr":
        if factor == 0.0:
            return HypExpr()
        return HypExpr(tuple((k, f, c * factor) for k, f, c in self.terms))

    def __mul__(self, other: "HypExpr") -> "HypExpr":
        return HypExpr.of(_product_terms(self.terms, other.terms, 1.0))

    def diff(self, m: int = 1) -> "HypExpr":
        if m < 1:
            raise ValueError("diff order must be >= 1")
        e = self
        for _ in range(m):
            out = []
            for kind, freq, coeff in e.terms:
                if kind is Kind.COSH:
                    out.append((Kind.SINH, freq, coeff * freq))
                elif kind is Kind.SINH:
                    out.append((Kind.COSH, freq, coeff * freq))
            e = HypExpr.of(out)
        return e

    # -- queries ---------------------------------------------------------

    def __call__(self, x: float) -> float:
        vals = []
        for kind, freq, coeff in self.terms:
            if kind is Kind.CONST:
                vals.append(coeff)
            elif kind is Kind.COSH:
                vals.append(coeff * math.cosh(freq * x))
            else:
                vals.append(coeff * math.sinh(freq * x))
        return math.fsum(vals)

    def is_zero(self) -> bool:
        return not self.terms

    def max_abs_coeff(self) -> float:
        return max((abs(c) for _, _, c in self.terms), default=0.0)

    def render(self) -> str:
        """Text form like ``-0.666667 + 0.666667*cosh(0.5*x)``."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for kind, freq, coeff in self.terms:
            if kind is Kind.CONST:
                body = f"{abs(coeff):.6g}"
            else:
                name = "cosh" if kind is Kind.COSH else "sinh"
                arg = "x" if freq == 1.0 else f"{freq:.6g}*x"
                body = f"{abs(coeff):.6g}*{name}({arg})"
            if not parts:
                parts.append(body if coeff >= 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff >= 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _product_terms(
    t1: Iterable[tuple[Kind, float, float]],
    t2: Iterable[tuple[Kind, float, float]],
    weight: float,
) -> Iterator[tuple[Kind, float, float]]:
    """Raw product-to-sum expansion of (t1 * t2) scaled by ``weight``.

    cosh a cosh b = (cosh(a+b) + cosh(a-b))/2
    sinh a sinh b = (cosh(a+b) - cosh(a-b))/2
    sinh a cosh b = (sinh(a+b) + sinh(a-b))/2
    """
    for k1, f1, c1 in t1:
        for k2, f2, c2 in t2:
            c = weight * c1 * c2
            if k1 is Kind.CONST:
                yield (k2, f2, c)
            elif k2 is Kind.CONST:
                yield (k1, f1, c)
            elif k1 is Kind.COSH and k2 is Kind.COSH:
                yield (Kind.COSH, f1 + f2, 0.5 * c)
                yield (Kind.COSH, f1 - f2, 0.5 * c)
            elif k1 is Kind.SINH and k2 is Kind.SINH:
                yield (Kind.COSH, f1 + f2, 0.5 * c)
                yield (Kind.COSH, f1 - f2, -0.5 * c)
            elif k1 is Kind.SINH:  # sinh * cosh
                yield (Kind.SINH, f1 + f2, 0.5 * c)
                yield (Kind.SINH, f1 - f2, 0.5 * c)
            else:  # cosh * sinh
                yield (Kind.SINH, f2 + f1, 0.5 * c)
                yield (Kind.SINH, f2 - f1, 0.5 * c)


def hyp_add(e1: HypExpr, e2: HypExpr) -> HypExpr:
    return e1 + e2


def hyp_mul(e1: HypExpr, e2: HypExpr) -> HypExpr:
    return e1 * e2


def hyp_diff(e: HypExpr, m: int = 1) -> HypExpr:
    return e.diff(m)


def hyp_eval(e: HypExpr, x: float) -> float:
    return e(x)
