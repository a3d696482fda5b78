"""ARA residual power series solver for D_t^{k*alpha} y = N_x[y].

The engine runs the t-space coefficient recursion

    c_{n+k} = [coefficient n of N_x applied to the series truncated at n]

which is what the transform-space limit extraction lim s^{k*alpha+1} G2 Res_k = 0
isolates order by order.  ``residual_check`` rebuilds the transform-space
residual coefficients from the finished series as the verification path.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Union

from .ara import to_ara
from .fpseries import (
    FracSeries,
    series_eval,
    series_mul,
    series_pow,
    series_spatial_diff,
)
from .hypalg import HypExpr, Kind
from .special import frac_cosh_series, frac_sinh_series, tpow

__all__ = [
    "Solution",
    "Const",
    "Add",
    "Scale",
    "Mul",
    "PowInt",
    "Dx",
    "OperatorAst",
    "PdeSpec",
    "ExampleParams",
    "SolveResult",
    "apply_operator",
    "solve",
    "residual_check",
    "builtin_example",
    "exact_solution",
    "pde_spec_to_json",
    "pde_spec_from_json",
]


# --------------------------------------------------------------------------
# operator AST


@dataclass(frozen=True)
class Solution:
    pass


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Add:
    terms: tuple["OperatorAst", ...]


@dataclass(frozen=True)
class Scale:
    factor: float
    child: "OperatorAst"


@dataclass(frozen=True)
class Mul:
    left: "OperatorAst"
    right: "OperatorAst"


@dataclass(frozen=True)
class PowInt:
    exponent: int
    child: "OperatorAst"

    def __post_init__(self) -> None:
        if self.exponent < 2:
            raise ValueError("PowInt exponent must be >= 2")


@dataclass(frozen=True)
class Dx:
    order: int
    child: "OperatorAst"

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("Dx order must be >= 1")


OperatorAst = Union[Solution, Const, Add, Scale, Mul, PowInt, Dx]


def apply_operator(node: OperatorAst, y: FracSeries) -> FracSeries:
    """Evaluate the spatial operator on a truncated series."""
    if isinstance(node, Solution):
        return y
    if isinstance(node, Const):
        return FracSeries.constant(y.alpha, node.value, y.order)
    if isinstance(node, Add):
        acc = apply_operator(node.terms[0], y)
        for term in node.terms[1:]:
            acc = acc + apply_operator(term, y)
        return acc
    if isinstance(node, Scale):
        return apply_operator(node.child, y).scale(node.factor)
    if isinstance(node, Mul):
        return series_mul(apply_operator(node.left, y), apply_operator(node.right, y))
    if isinstance(node, PowInt):
        return series_pow(apply_operator(node.child, y), node.exponent)
    if isinstance(node, Dx):
        return series_spatial_diff(apply_operator(node.child, y), node.order)
    raise ValueError(f"ill-formed operator AST node: {node!r}")


# --------------------------------------------------------------------------
# problem specification


@dataclass(frozen=True)
class PdeSpec:
    """D_t^{time_order * alpha} y = rhs[y] with hyperbolic-basis ICs."""

    time_order: int
    alpha: float
    rhs: OperatorAst
    ic_a: HypExpr
    ic_b: HypExpr | None = None

    def __post_init__(self) -> None:
        if self.time_order not in (1, 2):
            raise ValueError("time_order must be 1 or 2")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must be in (0, 1]")
        if self.time_order == 1 and self.ic_b is not None:
            raise ValueError("first-order-in-time specs carry no ic_b")
        if self.time_order == 2 and self.ic_b is None:
            raise ValueError("second-order-in-time specs require ic_b")


@dataclass(frozen=True)
class ExampleParams:
    """Free parameters of the built-in benchmark problems."""

    v: float = 1.0
    w: float = 1.0
    lam: float = 1.0
    gamma: float = 2.0

    def __post_init__(self) -> None:
        if self.v <= 0.0 or self.w <= 0.0:
            raise ValueError("v and w must be strictly positive")


@dataclass(frozen=True)
class SolveResult:
    series: FracSeries
    residual_leading: tuple[float, ...] = field(default=())

    @property
    def order(self) -> int:
        return self.series.order


# --------------------------------------------------------------------------
# the engine


def solve(spec: PdeSpec, K: int = 6) -> SolveResult:
    """Build the order-K series solution by the coefficient recursion."""
    k = spec.time_order
    if K < k:
        raise ValueError(f"order K={K} must be >= time order {k}")
    coeffs: list[HypExpr] = [spec.ic_a]
    if k == 2:
        coeffs.append(spec.ic_b)  # type: ignore[arg-type]
    for n in range(K - k + 1):
        trunc = FracSeries(spec.alpha, tuple(coeffs[: n + 1]))
        rhs_series = apply_operator(spec.rhs, trunc)
        coeffs.append(rhs_series.coeffs[n])
    series = FracSeries(spec.alpha, tuple(coeffs))
    result = SolveResult(series)
    residuals = tuple(
        residual_check(spec, result, n).max_abs_coeff() for n in range(K + 1)
    )
    return SolveResult(series, residuals)


def residual_check(spec: PdeSpec, result: SolveResult, n: int) -> HypExpr:
    """Coefficient of s^-(n*alpha+1) in the k-th transform-space residual.

    The residual is assembled from the derivative-transform identities
    (order-two transform of D^{k alpha} y) applied to the truncated series
    minus the transformed right-hand side; the prefactor of h_n,
    (1 - k*alpha/(n*alpha+1)), is folded exactly into ((n-k)*alpha+1) * c_n
    so a correct series yields the identically zero expression.
    """
    if n > result.order:
        raise ValueError("residual order exceeds series order")
    k = spec.time_order
    alpha = spec.alpha
    series = result.series
    c = series.coeffs
    if n == 0:
        # (1 - k*alpha) * (c_0 - a)
        return (c[0] - spec.ic_a).scale(1.0 - k * alpha)
    if n < k:
        # only k = 2, n = 1: (1 - alpha) * (c_1 - b)
        return (c[1] - spec.ic_b).scale(1.0 - alpha)  # type: ignore[operator]
    rhs_series = apply_operator(spec.rhs, series)
    q = (n - k) * alpha + 1.0
    return (c[n] - rhs_series.coeffs[n - k]).scale(q)


# --------------------------------------------------------------------------
# built-in benchmark problems


def builtin_example(example_id: int, params: ExampleParams | None = None) -> PdeSpec:
    """The four benchmark specs (alpha is set separately via dataclasses.replace
    or the ``alpha`` argument of the callers; default 1).

    1: D^{2a} y = v (y^2)_xx - w (y^2)_xxxx        (Klein-Gordon type)
    2: D^{2a} y = y_xx + (y^2)_xx - (y y_xx)_xx    (Boussinesq)
    3: D^{2a} y = -(y^2)_xx + (y y_xx)_xx
    4: D^{a}  y = (y^3)_x - (y^3)_xxx
    """
    p = params or ExampleParams()
    y = Solution()
    if example_id == 1:
        mu = math.sqrt(p.v / p.w)
        amp = 2.0 * p.lam ** 2 / (3.0 * p.v)
        rhs: OperatorAst = Add(
            (
                Scale(p.v, Dx(2, PowInt(2, y))),
                Scale(-p.w, Dx(4, PowInt(2, y))),
            )
        )
        ic_a = HypExpr.const(amp) + HypExpr.cosh(mu / 2.0, -amp)
        ic_b = HypExpr.sinh(mu / 2.0, p.lam ** 3 / (3.0 * math.sqrt(p.v * p.w)))
        return PdeSpec(2, 1.0, rhs, ic_a, ic_b)
    if example_id == 2:
        g = p.gamma
        amp = -(g * g - 1.0)
        rhs = Add(
            (
                Dx(2, y),
                Dx(2, PowInt(2, y)),
                Scale(-1.0, Dx(2, Mul(y, Dx(2, y)))),
            )
        )
        ic_a = HypExpr.cosh(1.0, amp) + HypExpr.const(-amp)
        ic_b = HypExpr.sinh(1.0, g * (g * g - 1.0))
        return PdeSpec(2, 1.0, rhs, ic_a, ic_b)
    if example_id == 3:
        rhs = Add(
            (
                Scale(-1.0, Dx(2, PowInt(2, y))),
                Dx(2, Mul(y, Dx(2, y))),
            )
        )
        ic_a = HypExpr.cosh(1.0) + HypExpr.const(-1.0)
        ic_b = HypExpr.sinh(1.0, -1.0)
        return PdeSpec(2, 1.0, rhs, ic_a, ic_b)
    if example_id == 4:
        rhs = Add(
            (
                Dx(1, PowInt(3, y)),
                Scale(-1.0, Dx(3, PowInt(3, y))),
            )
        )
        ic_a = HypExpr.sinh(1.0 / 3.0, math.sqrt(1.5))
        return PdeSpec(1, 1.0, rhs, ic_a)
    raise ValueError(f"unknown example id {example_id!r}")


def with_alpha(spec: PdeSpec, alpha: float) -> PdeSpec:
    return PdeSpec(spec.time_order, alpha, spec.rhs, spec.ic_a, spec.ic_b)


def exact_solution(
    example_id: int,
    params: ExampleParams | None = None,
    alpha: float = 1.0,
    x: float = 0.0,
    t: float = 0.0,
    K_eval: int = 60,
) -> float:
    """Closed-form benchmark solution.

    Examples 1-3 are hyperbolic traveling waves built from the even/odd
    fractional series factors (plain cosh/sinh at alpha = 1); example 4 is
    the hyperbolic function of t^alpha / 3.
    """
    p = params or ExampleParams()
    classical = abs(alpha - 1.0) < 1e-12
    if example_id == 1:
        mu = math.sqrt(p.v / p.w)
        amp = 2.0 * p.lam ** 2 / (3.0 * p.v)
        speed = p.lam * mu / 2.0
        if classical:
            return amp * (1.0 - math.cosh(mu * x / 2.0 - speed * t))
        even = frac_cosh_series(alpha, speed, t, K_eval)
        odd = frac_sinh_series(alpha, speed, t, K_eval)
        _warn_tail(speed, t, alpha, K_eval)
        return -amp * (
            math.cosh(mu * x / 2.0) * even - math.sinh(mu * x / 2.0) * odd - 1.0
        )
    if example_id in (2, 3):
        if example_id == 2:
            amp, rate = -(p.gamma ** 2 - 1.0), p.gamma
        else:
            amp, rate = 1.0, 1.0
        if classical:
            return amp * (math.cosh(x - rate * t) - 1.0)
        even = frac_cosh_series(alpha, rate, t, K_eval)
        odd = frac_sinh_series(alpha, rate, t, K_eval)
        _warn_tail(rate, t, alpha, K_eval)
        return amp * (math.cosh(x) * even - math.sinh(x) * odd - 1.0)
    if example_id == 4:
        ta = tpow(t, alpha)
        return math.sqrt(1.5) * math.sinh((x - ta) / 3.0)
    raise ValueError(f"unknown example id {example_id!r}")


def _warn_tail(a: float, t: float, alpha: float, K_eval: int) -> None:
    import warnings

    from .special import gamma as _gamma

    p = (2 * K_eval + 2) * alpha
    arg = p + 1.0
    if arg > 170.0:
        return  # tail term underflows well past double range
    tail = abs(a) ** (2 * K_eval + 2) * tpow(t, p) / _gamma(arg)
    if tail > 1e-14:
        warnings.warn(
            f"exact_solution: series tail ~{tail:.2e} above 1e-14; raise K_eval",
            stacklevel=3,
        )


# --------------------------------------------------------------------------
# JSON ingestion (schema documented in the README)

_NODE_TAGS = {"solution", "const", "add", "scale", "mul", "pow", "dx"}


def _ast_to_json(node: OperatorAst) -> dict[str, Any]:
    if isinstance(node, Solution):
        return {"node": "solution"}
    if isinstance(node, Const):
        return {"node": "const", "value": node.value}
    if isinstance(node, Add):
        return {"node": "add", "terms": [_ast_to_json(t) for t in node.terms]}
    if isinstance(node, Scale):
        return {"node": "scale", "factor": node.factor, "child": _ast_to_json(node.child)}
    if isinstance(node, Mul):
        return {"node": "mul", "left": _ast_to_json(node.left), "right": _ast_to_json(node.right)}
    if isinstance(node, PowInt):
        return {"node": "pow", "exponent": node.exponent, "child": _ast_to_json(node.child)}
    if isinstance(node, Dx):
        return {"node": "dx", "order": node.order, "child": _ast_to_json(node.child)}
    raise ValueError(f"ill-formed operator AST node: {node!r}")


def _ast_from_json(obj: dict[str, Any]) -> OperatorAst:
    tag = obj.get("node")
    if tag == "solution":
        return Solution()
    if tag == "const":
        return Const(float(obj["value"]))
    if tag == "add":
        return Add(tuple(_ast_from_json(t) for t in obj["terms"]))
    if tag == "scale":
        return Scale(float(obj["factor"]), _ast_from_json(obj["child"]))
    if tag == "mul":
        return Mul(_ast_from_json(obj["left"]), _ast_from_json(obj["right"]))
    if tag == "pow":
        return PowInt(int(obj["exponent"]), _ast_from_json(obj["child"]))
    if tag == "dx":
        return Dx(int(obj["order"]), _ast_from_json(obj["child"]))
    raise ValueError(f"unknown AST node tag {tag!r} (expected one of {sorted(_NODE_TAGS)})")


_KIND_NAMES = {"const": Kind.CONST, "cosh": Kind.COSH, "sinh": Kind.SINH}


def _hyp_to_json(e: HypExpr) -> list[dict[str, Any]]:
    return [
        {"kind": kind.name.lower(), "freq": freq, "coeff": coeff}
        for kind, freq, coeff in e.terms
    ]


def _hyp_from_json(items: list[dict[str, Any]]) -> HypExpr:
    return HypExpr.of(
        (_KIND_NAMES[it["kind"]], float(it.get("freq", 0.0)), float(it["coeff"]))
        for it in items
    )


def pde_spec_to_json(spec: PdeSpec) -> str:
    doc: dict[str, Any] = {
        "time_order": spec.time_order,
        "alpha": spec.alpha,
        "rhs": _ast_to_json(spec.rhs),
        "ic_a": _hyp_to_json(spec.ic_a),
    }
    if spec.ic_b is not None:
        doc["ic_b"] = _hyp_to_json(spec.ic_b)
    return json.dumps(doc, indent=2)


def pde_spec_from_json(text: str) -> PdeSpec:
    doc = json.loads(text)
    ic_b = _hyp_from_json(doc["ic_b"]) if "ic_b" in doc else None
    return PdeSpec(
        time_order=int(doc["time_order"]),
        alpha=float(doc["alpha"]),
        rhs=_ast_from_json(doc["rhs"]),
        ic_a=_hyp_from_json(doc["ic_a"]),
        ic_b=ic_b,
    )
