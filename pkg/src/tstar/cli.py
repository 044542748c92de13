"""Command-line front end.

Three subcommands:

* ``verify IDENTITY`` runs one identity's check over a parameter grid and
  emits either an aligned table or newline-delimited JSON reports.
* ``table corollary|beta`` prints closed forms next to their decimal values.
* ``bench FAMILY`` streams a series over a geometric checkpoint schedule and
  reports the empirical tail exponent.

Exit codes: 0 all pass, 1 any FAIL or INCONCLUSIVE, 2 usage error,
3 precision or capacity error.  JSON output is byte-identical across runs
with the same flags; measured timings only appear under ``--timings``.
"""

from __future__ import annotations

import json
import math
import re
import sys
import time
from fractions import Fraction

import click
import gmpy2
from gmpy2 import mpfr

from . import checks
from .backend import available_backends
from .closedform import Term, corollary_fixture, pi_factor, rhs_gencev, rhs_theorem1
from .constants import euler_number
from .errors import CapacityError, PrecisionError
from .precision import make_context
from .report import STATUS_PASS, format_fixed, format_significant, render_table
from .series import (
    FamilyKind,
    SeriesFamily,
    extend_trace,
    fit_tail_exponent,
    partial_sum,
)

L2I_SAMPLES = ((1, 6), (1, 4), (1, 3))  # x/pi for the fixed sample points
L2II_T_DEFAULT = (25, 50, 90)

DEFAULT_GRIDS = {
    "theorem1": {"j": range(0, 5)},
    "gencev": {"j": range(0, 4)},
    "corollary": {"i": range(1, 5)},
    "beta-table": {"m": range(1, 14, 2)},
    "oracle-tstar": {"n": range(1, 16), "j": range(0, 5)},
    "oracle-zetastar": {"n": range(1, 16), "j": range(0, 5)},
    "poly-identities": {"n": range(1, 51), "j": range(2, 4)},
    "L1i": {"m": range(0, 5), "n": range(1, 7)},
    "L1ii": {"m": range(0, 4), "k": range(1, 7)},
    "L2i": {},
    "L2ii": {"j": range(0, 3)},
    "L2iii": {"j": range(0, 4)},
    "L2iv": {"m": range(0, 4)},
    "L3": {"m": range(0, 4), "n": range(1, 7)},
    "R1": {"m": range(0, 4), "n": range(1, 7)},
    "R2": {"m": range(0, 4)},
    "R3": {"m": range(0, 4), "n": range(1, 7)},
}


def _parse_range(text: str | None, default) -> list:
    if text is None:
        return list(default)
    t = text.strip()
    try:
        if ".." in t:
            lo_s, hi_s = t.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise click.UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(t)]
    except ValueError:
        raise click.UsageError(f"malformed range {text!r}; expected A..B or a single integer")


def _parse_int_list(text: str | None, default) -> list:
    if text is None:
        return list(default)
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.UsageError(f"malformed list {text!r}; expected comma-separated integers")


def _grid(identity: str, name: str, override: str | None) -> list:
    return _parse_range(override, DEFAULT_GRIDS[identity].get(name, ()))


def _run_suite(
    identity: str,
    *,
    j_range,
    m_range,
    n_range,
    k_range,
    i_range,
    t_pcts,
    k_terms,
    digits,
    tolerance,
    backend,
) -> list:
    ctx = None
    if digits is not None:
        ctx = make_context(digits)
    tol = tolerance
    j_vals = _grid(identity, "j", j_range)
    m_vals = _grid(identity, "m", m_range)
    n_vals = _grid(identity, "n", n_range)
    k_vals = _grid(identity, "k", k_range)
    i_vals = _grid(identity, "i", i_range)
    out = []
    if identity == "theorem1":
        for j in j_vals:
            out.append(checks.check_theorem1(j, ctx, tolerance=tol, backend=backend))
    elif identity == "gencev":
        for j in j_vals:
            out.append(checks.check_gencev(j, ctx, tolerance=tol, backend=backend))
    elif identity == "corollary":
        for i in i_vals:
            out.append(checks.check_corollary(i, ctx, tolerance=tol))
    elif identity == "beta-table":
        odd = [m for m in m_vals if m % 2 == 1]
        if not odd:
            raise click.UsageError("beta-table covers odd orders; the range has none")
        for m in odd:
            out.append(checks.check_beta_table(m, ctx, tolerance=tol))
    elif identity == "oracle-tstar":
        for n in n_vals:
            for j in j_vals:
                out.append(checks.check_oracle_tstar(n, j))
    elif identity == "oracle-zetastar":
        for n in n_vals:
            for j in j_vals:
                out.append(checks.check_oracle_zetastar(n, j))
    elif identity == "poly-identities":
        for n in n_vals:
            for j in j_vals:
                out.append(checks.check_poly(n, j))
    elif identity == "L1i":
        for m in m_vals:
            for n in n_vals:
                out.append(checks.check_L1i(m, n, ctx, tolerance=tol))
    elif identity == "L1ii":
        for m in m_vals:
            for k in k_vals:
                out.append(checks.check_L1ii(m, k, ctx, tolerance=tol))
    elif identity == "L2i":
        for num, den in L2I_SAMPLES:
            out.append(checks.check_L2i(num, den, ctx, K=k_terms, tolerance=tol))
    elif identity == "L2ii":
        for t_pct in t_pcts:
            for j in j_vals:
                out.append(checks.check_L2ii(t_pct, j, ctx, tolerance=tol))
    elif identity == "L2iii":
        for j in j_vals:
            out.append(checks.check_L2iii(j, ctx, tolerance=tol))
    elif identity == "L2iv":
        for m in m_vals:
            out.append(checks.check_L2iv(m, ctx, tolerance=tol))
    elif identity == "L3":
        for m in m_vals:
            for n in n_vals:
                out.append(checks.check_L3(m, n, ctx, tolerance=tol))
    elif identity == "R1":
        for m in m_vals:
            for n in n_vals:
                out.append(checks.check_R1(m, n, ctx, tolerance=tol))
    elif identity == "R2":
        for m in m_vals:
            out.append(checks.check_R2(m, ctx, tolerance=tol))
    elif identity == "R3":
        for m in m_vals:
            for n in n_vals:
                out.append(checks.check_R3(m, n, ctx, tolerance=tol))
    else:
        raise click.UsageError(
            f"unknown identity {identity!r}; choose from: {', '.join(checks.CHECK_IDS)}"
        )
    return out


@click.group()
def main():
    """Verify central-binomial star-sum series and their companion integral
    identities in arbitrary precision."""


@main.command()
@click.argument("identity")
@click.option("--j", "j_range", default=None, help="depth range A..B (or one value)")
@click.option("--m", "m_range", default=None, help="moment order range A..B")
@click.option("--n", "n_range", default=None, help="index range A..B")
@click.option("--k", "k_range", default=None, help="kernel order range A..B")
@click.option("--i", "i_range", default=None, help="constant index range A..B")
@click.option("--t-pct", "t_pcts_text", default=None, help="sample points as percentages, comma-separated")
@click.option("--K", "k_terms", type=int, default=10_000, show_default=True, help="expansion terms for the truncated-series check")
@click.option("--digits", type=int, default=None, help="decimal digit target (default 20; 40 for beta-table)")
@click.option("--tolerance", default=None, help="override the per-identity pass tolerance")
@click.option("--json", "as_json", is_flag=True, help="emit newline-delimited JSON reports")
@click.option("--timings", is_flag=True, help="include measured elapsed_ms in JSON output")
@click.option(
    "--backend",
    type=click.Choice(("auto",) + tuple(sorted(available_backends()))),
    default="auto",
    show_default=True,
    help="summation kernel",
)
def verify(
    identity,
    j_range,
    m_range,
    n_range,
    k_range,
    i_range,
    t_pcts_text,
    k_terms,
    digits,
    tolerance,
    as_json,
    timings,
    backend,
):
    """Check one identity over a parameter grid and report pass/fail."""
    if identity not in checks.CHECK_IDS:
        raise click.UsageError(
            f"unknown identity {identity!r}; choose from: {', '.join(checks.CHECK_IDS)}"
        )
    t_pcts = _parse_int_list(t_pcts_text, L2II_T_DEFAULT)
    try:
        reports = _run_suite(
            identity,
            j_range=j_range,
            m_range=m_range,
            n_range=n_range,
            k_range=k_range,
            i_range=i_range,
            t_pcts=t_pcts,
            k_terms=k_terms,
            digits=digits,
            tolerance=tolerance,
            backend=None if backend == "auto" else backend,
        )
    except (CapacityError, PrecisionError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if as_json:
        for rep in reports:
            click.echo(rep.to_json(with_timing=timings))
    else:
        click.echo(render_table(reports))
        n_pass = sum(r.status == STATUS_PASS for r in reports)
        n_fail = sum(r.status == "FAIL" for r in reports)
        n_inc = len(reports) - n_pass - n_fail
        click.echo(f"{len(reports)} checks: {n_pass} PASS, {n_fail} FAIL, {n_inc} INCONCLUSIVE")
    sys.exit(0 if all(r.status == STATUS_PASS for r in reports) else 1)


def _beta_closed_text(m: int) -> str:
    if m % 2 == 1:
        k = (m - 1) // 2
        coeff = Fraction(
            (-1) ** k * euler_number(2 * k), 2 * math.factorial(2 * k) * 2 ** m
        )
        return Term(coeff, (pi_factor(m),)).text()
    if m == 2:
        return "G"
    return "(series)"


@main.command()
@click.argument("which", type=click.Choice(["corollary", "beta"]))
@click.option("--digits", type=int, default=12, show_default=True, help="decimal places printed")
def table(which, digits):
    """Print closed forms with their decimal values."""
    if digits < 1:
        raise click.UsageError("need at least one digit")
    try:
        ctx = make_context(digits + 12)
    except CapacityError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    rows = []
    if which == "corollary":
        header = ("depth", "closed form", "value")
        for i in range(1, 5):
            _, reduced = corollary_fixture(i)
            val = reduced.evaluate(ctx)
            rows.append((str(i - 1), reduced.to_text(), format_fixed(val.value, digits)))
    else:
        header = ("order", "closed form", "value")
        from .constants import beta

        for m in range(1, 9):
            val = beta(m, ctx)
            rows.append((str(m), _beta_closed_text(m), format_fixed(val.value, digits)))
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(3)]
    click.echo("  ".join(header[c].ljust(widths[c]) for c in range(3)))
    for r in rows:
        click.echo("  ".join(r[c].ljust(widths[c]) for c in range(3)))


_SCHEDULE_RE = re.compile(r"(\d+)x(\d+)\^(\d+)")


def _parse_schedule(text: str) -> list:
    m = _SCHEDULE_RE.fullmatch(text.strip())
    if not m:
        raise click.UsageError(f"malformed schedule {text!r}; expected N0xR^k, e.g. 1000x4^3")
    n0, ratio, count = int(m.group(1)), int(m.group(2)), int(m.group(3))
    if n0 < 1 or ratio < 2 or count < 1:
        raise click.UsageError("schedule needs N0 >= 1, R >= 2, k >= 1")
    return [n0 * ratio ** i for i in range(count)]


@main.command()
@click.argument("family", type=click.Choice(["theorem1", "gencev"]))
@click.option("--j", type=int, default=1, show_default=True, help="series depth")
@click.option("--schedule", default="1000x4^3", show_default=True, help="checkpoint schedule N0xR^k")
@click.option("--digits", type=int, default=20, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--timings", is_flag=True, help="include measured elapsed_ms")
@click.option(
    "--backend",
    type=click.Choice(("auto",) + tuple(sorted(available_backends()))),
    default="auto",
    show_default=True,
)
def bench(family, j, schedule, digits, as_json, timings, backend):
    """Stream a series over a geometric schedule and fit its tail exponent."""
    ns = _parse_schedule(schedule)
    kind = FamilyKind.TSTAR if family == "theorem1" else FamilyKind.ZETASTAR
    be = None if backend == "auto" else backend
    try:
        ctx = make_context(digits)
        fam = SeriesFamily(kind, j)
        closed = (rhs_theorem1(j) if family == "theorem1" else rhs_gencev(j)).evaluate(ctx)
        started = time.perf_counter()
        trace = partial_sum(fam, ns[0], ctx, checkpoints=(ns[0],), backend=be)
        stamps = [time.perf_counter() - started]
        for n in ns[1:]:
            trace = extend_trace(trace, n)
            stamps.append(time.perf_counter() - started)
    except (CapacityError, PrecisionError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    rows = []
    err_rows = []
    for (n, s_n), stamp in zip(trace.checkpoints, stamps):
        with gmpy2.context(precision=trace.bits):
            err = abs(s_n - closed.value)
        err_rows.append((n, err))
        rows.append(
            {
                "n": n,
                "partial_sum": format_significant(s_n, digits),
                "abs_error": format_significant(err, 3),
                "elapsed_ms": int(stamp * 1000) if timings else 0,
            }
        )
    try:
        exponent = fit_tail_exponent(err_rows)
    except ValueError:
        exponent = None  # fewer than two informative checkpoints
    if as_json:
        payload = {
            "family": family,
            "j": j,
            "digits": digits,
            "backend": trace.backend,
            "rows": rows,
            "tail_exponent": None if exponent is None else f"{exponent:.3f}",
        }
        click.echo(json.dumps(payload, separators=(",", ":"), sort_keys=False))
    else:
        widths = (12, digits + 8, 10, 10)
        click.echo(
            f"{'n'.rjust(widths[0])}  {'partial sum'.ljust(widths[1])}"
            f"  {'abs error'.ljust(widths[2])}  elapsed_ms"
        )
        for row in rows:
            click.echo(
                f"{str(row['n']).rjust(widths[0])}  {row['partial_sum'].ljust(widths[1])}"
                f"  {row['abs_error'].ljust(widths[2])}  {row['elapsed_ms']}"
            )
        click.echo(f"kernel: {trace.backend}")
        if exponent is None:
            click.echo("fitted tail exponent: n/a (need two checkpoints)")
        else:
            click.echo(f"fitted tail exponent: {exponent:.3f}")


if __name__ == "__main__":
    main()
