"""Benchmark table / figure-data generation and the command line interface.

Reference grids are x in {0,2,4,6,8,10} crossed with t in {0.25,0.5,0.75,1}
(t-major blocks, x ascending within a block), 24 rows per table.  All output
is plain data (CSV tables and whitespace-separated surface triples); nothing
here renders plots.
"""

from __future__ import annotations

import csv
import io
import math
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import click

from .ara import ara_monomial, ara_numeric, verify_property
from .fpseries import series_eval
from .solver import (
    ExampleParams,
    builtin_example,
    exact_solution,
    pde_spec_from_json,
    solve,
    with_alpha,
)

__all__ = [
    "TableRow",
    "RunConfig",
    "REFERENCE_X",
    "REFERENCE_T",
    "DEFAULT_TABLE_ORDER",
    "make_table",
    "emit_csv",
    "parse_csv",
    "emit_surface",
    "run_validation",
    "cli",
    "main",
]

REFERENCE_X = (0.0, 2.0, 4.0, 6.0, 8.0, 10.0)
REFERENCE_T = (0.25, 0.5, 0.75, 1.0)

# truncation order used for each example's error table: examples 1-3 are
# effectively converged at these orders while example 4's published errors
# reflect the order-6 truncation itself
DEFAULT_TABLE_ORDER = {1: 24, 2: 24, 3: 13, 4: 6}


@dataclass(frozen=True)
class TableRow:
    x: float
    t: float
    exact: float
    numeric: float

    @property
    def abs_error(self) -> float:
        return abs(self.exact - self.numeric)


@dataclass(frozen=True)
class RunConfig:
    example_id: int
    alphas: tuple[float, ...] = (1.0,)
    order: int = 6
    x_values: tuple[float, ...] = REFERENCE_X
    t_values: tuple[float, ...] = REFERENCE_T
    params: ExampleParams = field(default_factory=ExampleParams)
    out_dir: Path = Path(".")

    def __post_init__(self) -> None:
        if not self.x_values or not self.t_values:
            raise ValueError("grid must be non-empty")
        if not self.alphas:
            raise ValueError("at least one alpha required")


def make_table(
    example_id: int,
    params: ExampleParams | None = None,
    alpha: float = 1.0,
    K: int | None = None,
    x_values: Sequence[float] = REFERENCE_X,
    t_values: Sequence[float] = REFERENCE_T,
) -> list[TableRow]:
    """Error table for one example: t-major blocks, x ascending."""
    p = params or ExampleParams()
    if K is None:
        K = DEFAULT_TABLE_ORDER[example_id]
    spec = with_alpha(builtin_example(example_id, p), alpha)
    series = solve(spec, K).series
    rows = []
    for t in t_values:
        for x in x_values:
            numeric = series_eval(series, x, t)
            exact = exact_solution(example_id, p, alpha, x, t)
            rows.append(TableRow(x, t, exact, numeric))
    return rows


def _fmt(v: float) -> str:
    return f"{v:.15g}"


def emit_csv(rows: Sequence[TableRow], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "t", "exact", "numeric", "abs_error"])
        for r in rows:
            w.writerow([_fmt(r.x), _fmt(r.t), _fmt(r.exact), _fmt(r.numeric), _fmt(r.abs_error)])


def parse_csv(path: str | Path) -> list[TableRow]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            TableRow(float(r["x"]), float(r["t"]), float(r["exact"]), float(r["numeric"]))
            for r in reader
        ]


def emit_surface(
    example_id: int,
    params: ExampleParams | None = None,
    alphas: Sequence[float] = (0.25, 0.5, 0.75, 1.0),
    K: int = 24,
    x_values: Sequence[float] | None = None,
    t_values: Sequence[float] | None = None,
    out_dir: str | Path = ".",
) -> list[Path]:
    """Write one `x t y` surface file per alpha plus the exact surface."""
    p = params or ExampleParams()
    if x_values is None:
        x_values = [-1.0 + i * 0.1 for i in range(21)]
    if t_values is None:
        t_values = [i * 0.05 for i in range(21)]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for alpha in alphas:
        spec = with_alpha(builtin_example(example_id, p), alpha)
        series = solve(spec, K).series
        path = out / f"surface_ex{example_id}_alpha{alpha:g}.dat"
        with open(path, "w") as fh:
            for x in x_values:
                for t in t_values:
                    fh.write(f"{_fmt(x)} {_fmt(t)} {_fmt(series_eval(series, x, t))}\n")
        written.append(path)
    path = out / f"surface_ex{example_id}_exact.dat"
    with open(path, "w") as fh:
        for x in x_values:
            for t in t_values:
                fh.write(f"{_fmt(x)} {_fmt(t)} {_fmt(exact_solution(example_id, p, 1.0, x, t))}\n")
    written.append(path)
    return written


# --------------------------------------------------------------------------
# validation driver


def run_validation(verbose: bool = True) -> list[str]:
    """Cross-module consistency checks; returns failure messages (empty = ok)."""
    failures: list[str] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        if verbose:
            status = "ok" if ok else "FAIL"
            click.echo(f"  [{status}] {name}" + (f"  ({detail})" if detail else ""))
        if not ok:
            failures.append(f"{name}: {detail}")

    # transform identities on a monomial probe (extrapolation is exact there)
    s_grid = (10.0, 20.0, 40.0, 80.0)
    probe = lambda t: t
    dprobe = lambda t: 1.0
    for pid in (1, 2, 3, 4, 5, 7):
        rep = verify_property(pid, probe, s_grid, alpha=1.0, dalpha_f=dprobe)
        check(f"transform property {pid}", rep.max_discrepancy < 1e-6,
              f"max discrepancy {rep.max_discrepancy:.2e}")
    # closed-form monomial transforms
    worst = 0.0
    for p_exp in (0.0, 0.5, 1.0, 1.5, 2.0):
        for n in (1, 2):
            for s in (1.0, 3.0, 7.5):
                ref = ara_monomial(p_exp, n, s)
                got = ara_numeric(lambda t: t ** p_exp, n, s)
                worst = max(worst, abs(got - ref) / abs(ref))
    check("monomial transform oracle", worst < 1e-8, f"worst rel {worst:.2e}")
    # solver residuals across examples and orders
    for ex in (1, 2, 3, 4):
        for alpha in (0.25, 0.5, 0.75, 1.0):
            spec = with_alpha(builtin_example(ex), alpha)
            res = solve(spec, 6)
            worst = max(res.residual_leading)
            check(f"example {ex} residual (alpha={alpha})", worst <= 1e-12,
                  f"max coeff {worst:.2e}")
    # tables against the closed forms
    for ex in (1, 2, 3, 4):
        rows = make_table(ex)
        worst = max(r.abs_error for r in rows)
        tol = {1: 1e-10, 2: 1e-8, 3: 1e-5, 4: 1e-4}[ex]
        check(f"example {ex} table error", worst < tol, f"max abs {worst:.2e}")
    return failures


# --------------------------------------------------------------------------
# CLI


def _out_dir(opt: str | None) -> Path:
    if opt:
        return Path(opt)
    return Path(os.environ.get("ARARPS_OUTDIR", "."))


@click.group()
def cli() -> None:
    """Fractional power series solver for hyperbolic-wave benchmark PDEs."""


@cli.command("solve")
@click.option("--example", "example_id", type=int, default=None,
              help="Built-in example id (1-4).")
@click.option("--spec", "spec_path", type=click.Path(exists=True), default=None,
              help="JSON problem specification file.")
@click.option("--alpha", type=float, default=1.0, show_default=True)
@click.option("--order", "K", type=int, default=6, show_default=True)
@click.option("--at", "points", multiple=True,
              help="Evaluate at x:t (repeatable), e.g. --at 0:1.")
@click.option("--gamma", type=float, default=2.0, show_default=True)
@click.option("--v", type=float, default=1.0, show_default=True)
@click.option("--w", type=float, default=1.0, show_default=True)
@click.option("--lam", "--lambda", "lam", type=float, default=1.0, show_default=True)
def cmd_solve(example_id, spec_path, alpha, K, points, gamma, v, w, lam):
    """Print series coefficients (and point values) for a problem."""
    if (example_id is None) == (spec_path is None):
        raise click.UsageError("provide exactly one of --example or --spec")
    if example_id is not None:
        if example_id not in (1, 2, 3, 4):
            raise click.UsageError("--example must be 1, 2, 3 or 4")
        params = ExampleParams(v=v, w=w, lam=lam, gamma=gamma)
        spec = with_alpha(builtin_example(example_id, params), alpha)
    else:
        spec = pde_spec_from_json(Path(spec_path).read_text())
        spec = with_alpha(spec, alpha)
    result = solve(spec, K)
    for n, c in enumerate(result.series.coeffs):
        click.echo(f"c[{n}] = {c.render()}")
    for pt in points:
        try:
            xs, ts = pt.split(":")
            x, t = float(xs), float(ts)
        except ValueError:
            raise click.UsageError(f"bad point {pt!r}; expected x:t")
        click.echo(f"y({x:g}, {t:g}) = {series_eval(result.series, x, t):.15g}")


@cli.command("table")
@click.option("--example", "example_id", type=int, required=True)
@click.option("--alpha", type=float, default=1.0, show_default=True)
@click.option("--order", "K", type=int, default=None,
              help="Truncation order (defaults per example).")
@click.option("--gamma", type=float, default=2.0, show_default=True)
@click.option("--v", type=float, default=1.0, show_default=True)
@click.option("--w", type=float, default=1.0, show_default=True)
@click.option("--lam", "--lambda", "lam", type=float, default=1.0, show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="CSV path (defaults to table_exN[...].csv in the output dir).")
@click.option("--out-dir", type=click.Path(), default=None)
def cmd_table(example_id, alpha, K, gamma, v, w, lam, out_path, out_dir):
    """Regenerate a benchmark error table as CSV."""
    if example_id not in (1, 2, 3, 4):
        raise click.UsageError("--example must be 1, 2, 3 or 4")
    params = ExampleParams(v=v, w=w, lam=lam, gamma=gamma)
    rows = make_table(example_id, params, alpha, K)
    if out_path is None:
        suffix = f"_gamma{gamma:g}" if example_id == 2 else ""
        out_path = _out_dir(out_dir) / f"table_ex{example_id}{suffix}.csv"
    emit_csv(rows, out_path)
    click.echo(f"wrote {len(rows)} rows to {out_path}")


@cli.command("transform")
@click.option("--fn", required=True, help="Function of t; monomials like t^1.5.")
@click.option("--n", "order", type=click.Choice(["1", "2"]), required=True)
@click.option("--s", "s", type=float, required=True)
def cmd_transform(fn, order, s):
    """Numeric vs closed-form transform values for a monomial."""
    m = re.fullmatch(r"t(?:\^([0-9.]+))?", fn.strip())
    if m is None:
        raise click.UsageError(f"cannot parse --fn {fn!r}; use forms like t, t^2, t^0.5")
    p = float(m.group(1)) if m.group(1) else 1.0
    n = int(order)
    exact = ara_monomial(p, n, s)
    numeric = ara_numeric(lambda t: t ** p, n, s)
    click.echo(f"exact   {exact:.15g}")
    click.echo(f"numeric {numeric:.15g}")
    click.echo(f"abs err {abs(exact - numeric):.3e}")


@cli.command("validate")
def cmd_validate():
    """Run the cross-module validation suites."""
    failures = run_validation(verbose=True)
    if failures:
        click.echo(f"{len(failures)} check(s) failed", err=True)
        sys.exit(1)
    click.echo("all checks passed")


@cli.command("surface")
@click.option("--example", "example_id", type=int, required=True)
@click.option("--alpha", "alphas", type=float, multiple=True,
              default=(0.25, 0.5, 0.75, 1.0), show_default=True)
@click.option("--order", "K", type=int, default=24, show_default=True)
@click.option("--gamma", type=float, default=2.0, show_default=True)
@click.option("--out-dir", type=click.Path(), default=None)
def cmd_surface(example_id, alphas, K, gamma, out_dir):
    """Emit `x t y` surface data files (one per alpha, plus exact)."""
    if example_id not in (1, 2, 3, 4):
        raise click.UsageError("--example must be 1, 2, 3 or 4")
    params = ExampleParams(gamma=gamma)
    paths = emit_surface(example_id, params, alphas, K, out_dir=_out_dir(out_dir))
    for p in paths:
        click.echo(f"wrote {p}")


def main() -> None:
    cli(prog_name="ararps")


if __name__ == "__main__":
    main()
