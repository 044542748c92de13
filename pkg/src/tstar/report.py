"""Verification reports and deterministic decimal formatting.

JSON output must be byte-identical across runs of the same command, so all
numeric rendering goes through gmpy2.digits (correctly rounded, no locale or
platform variation) and timings default to zero unless explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import gmpy2
from gmpy2 import mpfr

STATUS_PASS = "PASS"
STATUS_FAIL = "FAIL"
STATUS_INCONCLUSIVE = "INCONCLUSIVE"

_JSON_FIELDS = (
    "identity_id",
    "params",
    "lhs",
    "rhs",
    "abs_error",
    "tolerance",
    "method",
    "work",
    "elapsed_ms",
    "status",
)


def format_significant(x, digits: int) -> str:
    """Scientific notation with exactly `digits` significant digits.

    Exact zero renders as "0" (the oracle checks report exact agreement that
    way).
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = mpfr(x) if not isinstance(x, mpfr) else x
    if gmpy2.is_nan(x):
        return "nan"
    if gmpy2.is_infinite(x):
        return "-inf" if x < 0 else "inf"
    if x == 0:
        return "0"
    if digits == 1:
        return _one_digit(x)
    ds, exp, _ = gmpy2.digits(x, 10, digits)
    sign = ""
    if ds.startswith("-"):
        sign, ds = "-", ds[1:]
    ds = ds.ljust(digits, "0")
    return f"{sign}{ds[0]}.{ds[1:]}e{exp - 1:+03d}"


def _one_digit(x) -> str:
    # mpfr_get_str refuses single-digit requests, and rounding its two-digit
    # output again would double-round; go through the exact rational instead
    sign = "-" if x < 0 else ""
    q = abs(gmpy2.mpq(x))
    _, exp, _ = gmpy2.digits(x, 10, 2)
    e = exp - 1
    while q >= gmpy2.mpq(10) ** (e + 1):
        e += 1
    while q < gmpy2.mpq(10) ** e:
        e -= 1
    m = q / gmpy2.mpq(10) ** e
    unit, rem = divmod(int(m.numerator), int(m.denominator))
    double = 2 * rem
    if double > m.denominator or (double == m.denominator and unit % 2):
        unit += 1
    if unit == 10:
        unit, e = 1, e + 1
    return f"{sign}{unit}e{e:+03d}"


def format_fixed(x, places: int) -> str:
    """Fixed-point rendering with `places` digits after the decimal point.

    Rounds to nearest (ties to even) via exact rational arithmetic, so the
    0.999.. -> 1.000 carry across the integer boundary is handled correctly.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    x = mpfr(x) if not isinstance(x, mpfr) else x
    if gmpy2.is_nan(x):
        return "nan"
    if gmpy2.is_infinite(x):
        return "-inf" if x < 0 else "inf"
    q = gmpy2.mpq(x) * gmpy2.mpq(10) ** places
    num, den = int(q.numerator), int(q.denominator)
    unit, rem = divmod(num, den)  # floor division, rem >= 0
    double = 2 * rem
    if double > den or (double == den and unit % 2):
        unit += 1
    sign = "-" if unit < 0 else ""
    body = str(abs(unit)).rjust(places + 1, "0")
    if not places:
        return f"{sign}{body}"
    return f"{sign}{body[:-places]}.{body[-places:]}"


@dataclass(frozen=True)
class VerificationReport:
    """One identity instance checked at one parameter point."""

    identity_id: str
    params: tuple  # ordered (name, int) pairs
    lhs: str
    rhs: str
    abs_error: str
    tolerance: str
    method: str
    work: int
    elapsed_ms: int
    status: str

    def __post_init__(self):
        if self.status not in (STATUS_PASS, STATUS_FAIL, STATUS_INCONCLUSIVE):
            raise ValueError(f"unknown status {self.status!r}")
        if self.work < 0 or self.elapsed_ms < 0:
            raise ValueError("work and elapsed_ms must be non-negative")

    def to_json(self, *, with_timing: bool = False) -> str:
        rec = {name: getattr(self, name) for name in _JSON_FIELDS}
        rec["params"] = dict(self.params)
        if not with_timing:
            rec["elapsed_ms"] = 0
        return json.dumps(rec, separators=(",", ":"), sort_keys=False)

    def params_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params)


def make_report(
    identity_id: str,
    params,
    lhs_value,
    rhs_value,
    tolerance,
    *,
    method: str,
    work: int,
    elapsed_ms: int,
    digits: int,
) -> VerificationReport:
    """Build a report from numeric sides; PASS iff |lhs - rhs| <= tolerance."""
    prec = max(lhs_value.precision, rhs_value.precision, 64) + 8
    with gmpy2.context(precision=prec):
        err = abs(lhs_value - rhs_value)
    tol = mpfr(tolerance)
    status = STATUS_PASS if err <= tol else STATUS_FAIL
    return VerificationReport(
        identity_id=identity_id,
        params=tuple(params),
        lhs=format_significant(lhs_value, digits),
        rhs=format_significant(rhs_value, digits),
        abs_error=format_significant(err, 3),
        tolerance=format_significant(tol, 3),
        method=method,
        work=work,
        elapsed_ms=elapsed_ms,
        status=status,
    )


def inconclusive_report(
    identity_id: str,
    params,
    tolerance,
    *,
    method: str,
    reason: str,
    work: int = 0,
    elapsed_ms: int = 0,
) -> VerificationReport:
    return VerificationReport(
        identity_id=identity_id,
        params=tuple(params),
        lhs="",
        rhs="",
        abs_error="nan",
        tolerance=format_significant(mpfr(tolerance), 3),
        method=f"{method} [{reason}]",
        work=work,
        elapsed_ms=elapsed_ms,
        status=STATUS_INCONCLUSIVE,
    )


def strip_timing(report: VerificationReport) -> VerificationReport:
    return replace(report, elapsed_ms=0)


def render_table(reports) -> str:
    """Aligned human-readable table, one row per report."""
    headers = ("identity", "params", "lhs", "rhs", "abs_error", "tolerance", "status")
    rows = [
        (
            r.identity_id,
            r.params_text(),
            r.lhs,
            r.rhs,
            r.abs_error,
            r.tolerance,
            r.status,
        )
        for r in reports
    ]
    widths = [
        max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)
