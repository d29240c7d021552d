"""Numerical checkers for the substitution theorems, both directions of the
fundamental theorem, a 14-row derivative table, and a catalog of definite
integrals whose closed forms come from the constructive tower.

Every checker returns CheckReport rows rather than raising on failure;
the only exceptions raised are hypothesis violations (a caller-supplied
antiderivative that does not match its integrand) and bad arguments.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .elementary import (
    e_const,
    exp_construct,
    hyperbolic,
    inverse_fn,
    log_construct,
    pow_construct,
)
from .errors import HypothesisViolation, InvalidArgumentError
from .integrator import cumulative, integrate, integrate_improper

Fn = Callable[[float], float]

CSV_HEADER = "name,lhs,rhs,abs_diff,tol,pass,anchor"


@dataclass(frozen=True)
class CheckReport:
    """One verified identity: lhs vs rhs at a tolerance.

    passed is exactly abs_diff <= tol.  anchor restates the identity being
    checked in plain ASCII so a report line is self-describing.
    """

    name: str
    lhs: float
    rhs: float
    abs_diff: float
    tol: float
    passed: bool
    anchor: str


def make_report(name: str, lhs: float, rhs: float, tol: float, anchor: str) -> CheckReport:
    diff = abs(lhs - rhs)
    return CheckReport(name, lhs, rhs, diff, tol, diff <= tol, anchor)


def reports_to_csv(reports: Sequence[CheckReport]) -> str:
    lines = [CSV_HEADER]
    for r in reports:
        lines.append(
            f"{r.name},{r.lhs:.17g},{r.rhs:.17g},{r.abs_diff:.17g},"
            f"{r.tol:.17g},{'true' if r.passed else 'false'},{r.anchor}"
        )
    return "\n".join(lines) + "\n"


def _chebyshev_points(a: float, b: float, count: int = 5) -> list[float]:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return [mid + half * math.cos(math.pi * (2 * i - 1) / (2 * count)) for i in range(1, count + 1)]


def _verify_antiderivative(big_g: Fn, g: Fn, a: float, b: float, tol: float, label: str) -> None:
    # Spot-check the theorem hypothesis G(x) - G(a) = integral of g from a
    # to x at 5 Chebyshev points; a corrupted antiderivative must not
    # silently produce a vacuous theorem check.
    base = big_g(a)
    for x in _chebyshev_points(a, b):
        want = integrate(g, a, x, tol / 10.0).value
        drift = abs(big_g(x) - base - want)
        if drift > tol:
            raise HypothesisViolation(
                x, f"{label} drifts from the integral of its slope by {drift:.3g}"
            )


def check_u_sub(
    f: Fn,
    big_g: Fn,
    g: Fn,
    a: float,
    b: float,
    tol: float,
    name: str = "u-substitution",
) -> CheckReport:
    """Change of variables: integral of f(G(t))g(t) vs f over [G(a), G(b)].

    G must be an antiderivative of g on [a, b]; that hypothesis is
    spot-checked and violations raise rather than report.
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    _verify_antiderivative(big_g, g, a, b, tol, "substitution inner function")
    lhs = integrate(lambda t: f(big_g(t)) * g(t), a, b, tol / 4.0).value
    rhs = integrate(f, big_g(a), big_g(b), tol / 4.0).value
    return make_report(
        name, lhs, rhs, tol, "int[a..b] f(G(t)) g(t) dt = int[G(a)..G(b)] f(u) du"
    )


def check_parts(
    u: Fn,
    p: Fn,
    v: Fn,
    q: Fn,
    a: float,
    b: float,
    tol: float,
    name: str = "integration-by-parts",
) -> CheckReport:
    """Integration by parts: int p v + int u q vs the boundary term."""
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    _verify_antiderivative(u, p, a, b, tol, "parts factor u")
    _verify_antiderivative(v, q, a, b, tol, "parts factor v")
    lhs = (
        integrate(lambda t: p(t) * v(t), a, b, tol / 4.0).value
        + integrate(lambda t: u(t) * q(t), a, b, tol / 4.0).value
    )
    rhs = u(b) * v(b) - u(a) * v(a)
    return make_report(
        name, lhs, rhs, tol, "int[a..b] p v dt + int[a..b] u q dt = u(b)v(b) - u(a)v(a)"
    )


def ftc_forward_check(
    f: Fn, a: float, b: float, grid_n: int, h: float, tol: float
) -> CheckReport:
    """Differentiate the cumulative integral and compare against f.

    Builds F once over a grid holding x_i +- h for grid_n interior points,
    then checks the central differences (F(x+h) - F(x-h))/2h against f(x).
    abs_diff is the worst deviation; lhs/rhs report the worst point.
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    if grid_n < 1:
        raise InvalidArgumentError(f"need at least one sample point, got {grid_n}")
    if not h > 0:
        raise InvalidArgumentError(f"step must be positive, got {h}")
    spacing = (b - a) / grid_n
    if not 2.0 * h <= spacing:
        raise InvalidArgumentError(f"step {h} too large for {grid_n} points on [{a}, {b}]")
    points = [a + spacing * (i + 0.5) for i in range(grid_n)]
    grid: list[float] = []
    for x in points:
        grid.append(x - h)
        grid.append(x + h)
    values = cumulative(f, a, grid, tol / 2.0)
    worst = -1.0
    lhs = rhs = 0.0
    for i, x in enumerate(points):
        got = (values[2 * i + 1] - values[2 * i]) / (2.0 * h)
        want = f(x)
        dev = abs(got - want)
        if dev > worst:
            worst, lhs, rhs = dev, got, want
    return CheckReport(
        "ftc-forward", lhs, rhs, worst, tol, worst <= tol,
        "d/dx int[a..x] f(t) dt = f(x)",
    )


def ftc_reverse_check(big_g: Fn, dg: Fn, a: float, b: float, tol: float) -> CheckReport:
    """Evaluate the integral of a derivative by boundary values."""
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    lhs = integrate(dg, a, b, tol / 2.0).value
    rhs = big_g(b) - big_g(a)
    return make_report(
        "ftc-reverse", lhs, rhs, tol, "int[a..b] G'(t) dt = G(b) - G(a)"
    )


def _diff_step(x: float) -> float:
    # 2^-13 balances h^2 truncation against ulp/h cancellation in doubles.
    return math.ldexp(max(1.0, abs(x)), -13)


def _central_diff(fn: Fn, x: float, h: float) -> float:
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


def _max_deviation_report(
    name: str, fn: Fn, dfn: Fn, points: Sequence[float], tol: float, anchor: str
) -> CheckReport:
    worst = -1.0
    lhs = rhs = 0.0
    for x in points:
        got = _central_diff(fn, x, _diff_step(x))
        want = dfn(x)
        dev = abs(got - want)
        if dev > worst:
            worst, lhs, rhs = dev, got, want
    return CheckReport(name, lhs, rhs, worst, tol, worst <= tol, anchor)


def _interior_points(lo: float, hi: float, count: int) -> list[float]:
    step = (hi - lo) / count
    return [lo + step * (i + 0.5) for i in range(count)]


_TABLE_EPS = 1e-12
_TABLE_POINTS = 16


def _table_rows() -> list[tuple[str, Fn, Fn, float, float, str]]:
    eps = _TABLE_EPS
    heps = 1e-14
    return [
        ("deriv-power-1",
         lambda x: pow_construct(x, 1.0, eps), lambda x: 1.0,
         0.25, 4.0, "d/dx x^a = a x^(a-1) at a=1"),
        ("deriv-power-3/2",
         lambda x: pow_construct(x, 1.5, eps),
         lambda x: 1.5 * pow_construct(x, 0.5, eps),
         0.25, 4.0, "d/dx x^a = a x^(a-1) at a=3/2"),
        ("deriv-exp", lambda x: exp_construct(x, eps), lambda x: exp_construct(x, eps),
         -1.0, 2.0, "d/dx exp x = exp x"),
        ("deriv-log", lambda x: log_construct(x, eps).value, lambda x: 1.0 / x,
         0.5, 4.0, "d/dx log x = 1/x"),
        ("deriv-sin", math.sin, math.cos, -2.0, 2.0, "d/dx sin x = cos x"),
        ("deriv-cos", math.cos, lambda x: -math.sin(x), -2.0, 2.0, "d/dx cos x = -sin x"),
        ("deriv-tan", math.tan, lambda x: 1.0 / math.cos(x) ** 2,
         -1.2, 1.2, "d/dx tan x = sec^2 x"),
        ("deriv-cot", lambda x: math.cos(x) / math.sin(x),
         lambda x: -1.0 / math.sin(x) ** 2,
         0.4, 2.7, "d/dx cot x = -csc^2 x"),
        ("deriv-arctan", lambda x: inverse_fn("arctan", x, eps),
         lambda x: 1.0 / (1.0 + x * x),
         -3.0, 3.0, "d/dx arctan x = 1/(1+x^2)"),
        ("deriv-arcsin", lambda x: inverse_fn("arcsin", x, eps),
         lambda x: 1.0 / math.sqrt(1.0 - x * x),
         -0.9, 0.9, "d/dx arcsin x = 1/sqrt(1-x^2)"),
        ("deriv-sinh", lambda x: hyperbolic("sinh", x, heps),
         lambda x: hyperbolic("cosh", x, heps),
         -2.0, 2.0, "d/dx sinh x = cosh x"),
        ("deriv-cosh", lambda x: hyperbolic("cosh", x, heps),
         lambda x: hyperbolic("sinh", x, heps),
         -2.0, 2.0, "d/dx cosh x = sinh x"),
        ("deriv-tanh", lambda x: hyperbolic("tanh", x, heps),
         lambda x: hyperbolic("sech2", x, heps),
         -2.0, 2.0, "d/dx tanh x = sech^2 x"),
        ("deriv-arsinh", lambda x: inverse_fn("arsinh", x, eps),
         lambda x: 1.0 / math.sqrt(1.0 + x * x),
         -2.0, 2.0, "d/dx arsinh x = 1/sqrt(1+x^2)"),
    ]


def derivative_table_check(tol: float) -> list[CheckReport]:
    """Central-difference check of all 14 derivative-table rows."""
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    reports = []
    for name, fn, dfn, lo, hi, anchor in _table_rows():
        pts = _interior_points(lo, hi, _TABLE_POINTS)
        reports.append(_max_deviation_report(name, fn, dfn, pts, tol, anchor))
    return reports


def product_chain_check(tol: float) -> list[CheckReport]:
    """Product rule on sin * exp and chain rule on sin(t^2)."""
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    eps = _TABLE_EPS

    def uv(x: float) -> float:
        return math.sin(x) * exp_construct(x, eps)

    def uv_rule(x: float) -> float:
        e = exp_construct(x, eps)
        return math.cos(x) * e + math.sin(x) * e

    product = _max_deviation_report(
        "product-rule", uv, uv_rule, _interior_points(-1.0, 1.5, 8), tol,
        "d/dx (u v) = u' v + u v'",
    )

    def composed(t: float) -> float:
        return math.sin(t * t)

    def chain_rule(t: float) -> float:
        return math.cos(t * t) * 2.0 * t

    pts = _interior_points(-1.5, 1.5, 8) + [1.0]
    chain = _max_deviation_report(
        "chain-rule", composed, chain_rule, pts, tol,
        "d/dx F(G(x)) = f(G(x)) g(x)",
    )
    return [product, chain]


def functional_equation_check(
    seed: int, pairs: int = 200, tol: float = 3e-12
) -> CheckReport:
    """Worst |log(xy) - log x - log y| over seeded pairs in [2^-8, 2^8]."""
    rng = random.Random(seed)
    worst = -1.0
    lhs = rhs = 0.0
    for _ in range(pairs):
        x = 2.0 ** rng.uniform(-8.0, 8.0)
        y = 2.0 ** rng.uniform(-8.0, 8.0)
        combined = log_construct(x * y, 1e-12).value
        split = log_construct(x, 1e-12).value + log_construct(y, 1e-12).value
        dev = abs(combined - split)
        if dev > worst:
            worst, lhs, rhs = dev, combined, split
    return CheckReport(
        "log-functional-equation", lhs, rhs, worst, tol, worst <= tol,
        "log(xy) = log x + log y",
    )


@dataclass(frozen=True)
class CatalogEntry:
    """A definite integral with a closed form from the constructive tower."""

    name: str
    integrand: Fn
    closed_form: Callable[[float, float], float]
    lo: float
    hi: float
    anchor: str
    improper_end: Optional[str] = None


_CLOSED_EPS = 1e-12


def _catalog_entries(eps: float) -> list[CatalogEntry]:
    """The verification catalog; eps controls integrand-side precision."""
    ceps = _CLOSED_EPS
    half_pi = 0.5 * math.pi

    def sec(t: float) -> float:
        return 1.0 / math.cos(t)

    def cot(t: float) -> float:
        return math.cos(t) / math.sin(t)

    return [
        CatalogEntry(
            "cos-integral", math.cos,
            lambda a, b: math.sin(b) - math.sin(a),
            0.0, half_pi, "int[0..x] cos t dt = sin x"),
        CatalogEntry(
            "sin-integral", math.sin,
            lambda a, b: math.cos(a) - math.cos(b),
            0.0, math.pi, "int[0..x] sin t dt = 1 - cos x"),
        CatalogEntry(
            "exp-integral", lambda t: exp_construct(t, eps),
            lambda a, b: exp_construct(b, ceps) - exp_construct(a, ceps),
            0.0, 1.0, "int[p..q] e^t dt = e^q - e^p"),
        CatalogEntry(
            "base2-integral", lambda t: pow_construct(2.0, t, eps),
            lambda a, b: (pow_construct(2.0, b, ceps) - pow_construct(2.0, a, ceps))
            / log_construct(2.0, ceps).value,
            0.0, 1.0, "int[p..q] b^t dt = (b^q - b^p)/log b"),
        CatalogEntry(
            "cube-integral", lambda t: t * t * t,
            lambda a, b: (b ** 4 - a ** 4) / 4.0,
            0.0, 2.0, "int[0..x] t^n dt = x^(n+1)/(n+1)"),
        CatalogEntry(
            "recip-integral", lambda t: 1.0 / t,
            lambda a, b: log_construct(b, ceps).value - log_construct(a, ceps).value,
            1.0, 2.0, "int[1..x] dt/t = log x"),
        CatalogEntry(
            "sec2-integral", lambda t: sec(t) ** 2,
            lambda a, b: math.tan(b) - math.tan(a),
            0.0, 1.0, "int[0..x] sec^2 t dt = tan x"),
        CatalogEntry(
            "csc2-integral", lambda t: 1.0 / math.sin(t) ** 2,
            lambda a, b: cot(a) - cot(b),
            0.5, 1.5, "int[a..b] csc^2 t dt = cot a - cot b"),
        CatalogEntry(
            "sqrt-power-integral", lambda t: pow_construct(t, 0.5, eps),
            lambda a, b: (pow_construct(b, 1.5, ceps) - pow_construct(a, 1.5, ceps)) / 1.5,
            1.0, 4.0, "int[p..q] t^a dt = (q^(a+1) - p^(a+1))/(a+1) at a=1/2"),
        CatalogEntry(
            "invsqrt-power-integral", lambda t: pow_construct(t, -0.5, eps),
            lambda a, b: (pow_construct(b, 0.5, ceps) - pow_construct(a, 0.5, ceps)) / 0.5,
            1.0, 4.0, "int[p..q] t^a dt = (q^(a+1) - p^(a+1))/(a+1) at a=-1/2"),
        CatalogEntry(
            "arctan-integral", lambda t: 1.0 / (1.0 + t * t),
            lambda a, b: inverse_fn("arctan", b, ceps) - inverse_fn("arctan", a, ceps),
            0.0, 1.0, "int[0..y] dt/(1+t^2) = arctan y"),
        CatalogEntry(
            "arcsin-integral", lambda t: 1.0 / math.sqrt(1.0 - t * t),
            lambda a, b: inverse_fn("arcsin", b, ceps) - inverse_fn("arcsin", a, ceps),
            0.0, 0.5, "int[0..y] dt/sqrt(1-t^2) = arcsin y"),
        CatalogEntry(
            "arcsin-improper", lambda t: 1.0 / math.sqrt(1.0 - t * t),
            lambda a, b: inverse_fn("arcsin", b, ceps) - inverse_fn("arcsin", a, ceps),
            0.0, 1.0, "int[0..1] dt/sqrt(1-t^2) = pi/2", improper_end="upper"),
        CatalogEntry(
            "tan-integral", math.tan,
            lambda a, b: log_construct(math.cos(a), ceps).value
            - log_construct(math.cos(b), ceps).value,
            0.2, 1.2, "int tan t dt = -log|cos t| + C"),
        CatalogEntry(
            "cot-integral", cot,
            lambda a, b: log_construct(math.sin(b), ceps).value
            - log_construct(math.sin(a), ceps).value,
            0.3, 1.2, "int cot t dt = log|sin t| + C"),
        CatalogEntry(
            "sec-integral", sec,
            lambda a, b: log_construct(sec(b) + math.tan(b), ceps).value
            - log_construct(sec(a) + math.tan(a), ceps).value,
            0.0, 1.0, "int[0..x] sec t dt = log(sec x + tan x)"),
        CatalogEntry(
            "csc-integral", lambda t: 1.0 / math.sin(t),
            lambda a, b: log_construct((1.0 + math.cos(a)) / math.sin(a), ceps).value
            - log_construct((1.0 + math.cos(b)) / math.sin(b), ceps).value,
            0.5, 1.5, "int csc t dt: antiderivative -log(csc t + cot t)"),
        CatalogEntry(
            "cosh-integral", lambda t: hyperbolic("cosh", t, eps),
            lambda a, b: hyperbolic("sinh", b, ceps) - hyperbolic("sinh", a, ceps),
            0.0, 1.0, "int[0..x] cosh t dt = sinh x"),
        CatalogEntry(
            "sinh-integral", lambda t: hyperbolic("sinh", t, eps),
            lambda a, b: hyperbolic("cosh", b, ceps) - hyperbolic("cosh", a, ceps),
            0.0, 1.0, "int[0..x] sinh t dt = cosh x - 1"),
        CatalogEntry(
            "sech2-integral", lambda t: hyperbolic("sech2", t, eps),
            lambda a, b: hyperbolic("tanh", b, ceps) - hyperbolic("tanh", a, ceps),
            0.0, 1.0, "int[0..x] sech^2 t dt = tanh x"),
        CatalogEntry(
            "csch2-integral", lambda t: hyperbolic("csch2", t, eps),
            lambda a, b: hyperbolic("coth", a, ceps) - hyperbolic("coth", b, ceps),
            0.5, 1.5, "int[a..b] csch^2 t dt = coth a - coth b"),
        CatalogEntry(
            "arsinh-integral", lambda t: 1.0 / math.sqrt(1.0 + t * t),
            lambda a, b: inverse_fn("arsinh", b, ceps) - inverse_fn("arsinh", a, ceps),
            0.0, 1.0, "int[0..y] dt/sqrt(1+t^2) = arsinh y"),
        CatalogEntry(
            "arcosh-improper", lambda t: 1.0 / math.sqrt(t * t - 1.0),
            lambda a, b: inverse_fn("arcosh", b, ceps) - inverse_fn("arcosh", a, ceps),
            1.0, 2.0, "int[1..y] dt/sqrt(t^2-1) = arcosh y", improper_end="lower"),
        CatalogEntry(
            "artanh-integral", lambda t: 1.0 / (1.0 - t * t),
            lambda a, b: inverse_fn("artanh", b, ceps) - inverse_fn("artanh", a, ceps),
            0.0, 0.5, "int[0..y] dt/(1-t^2) = artanh y"),
        CatalogEntry(
            "log-antiderivative", lambda t: log_construct(t, eps).value,
            lambda a, b: (b * log_construct(b, ceps).value - b)
            - (a * log_construct(a, ceps).value - a),
            1.0, 2.0, "int[1..x] log t dt = x log x - x + 1"),
        CatalogEntry(
            "arctan-antiderivative", lambda t: inverse_fn("arctan", t, eps),
            lambda a, b: (b * inverse_fn("arctan", b, ceps)
                          - 0.5 * log_construct(1.0 + b * b, ceps).value)
            - (a * inverse_fn("arctan", a, ceps)
               - 0.5 * log_construct(1.0 + a * a, ceps).value),
            0.0, 1.0, "int[0..x] arctan t dt = x arctan x - log(1+x^2)/2"),
        CatalogEntry(
            "sectan-integral", lambda t: math.sin(t) / math.cos(t) ** 2,
            lambda a, b: sec(b) - sec(a),
            0.0, 1.0, "int[0..x] sec t tan t dt = sec x - 1"),
    ]


def _run_entry(entry: CatalogEntry, tol: float) -> CheckReport:
    qtol = tol / 2.0
    if entry.improper_end is not None:
        result = integrate_improper(entry.integrand, entry.lo, entry.hi, entry.improper_end, qtol)
    else:
        result = integrate(entry.integrand, entry.lo, entry.hi, qtol)
    rhs = entry.closed_form(entry.lo, entry.hi)
    return make_report(entry.name, result.value, rhs, tol, entry.anchor)


def run_catalog(
    tol: float, jobs: Optional[int] = None, name_filter: Optional[str] = None
) -> list[CheckReport]:
    """Integrate every catalog entry and compare with its closed form.

    Entries are independent; jobs > 1 runs them in a thread pool.  Reports
    come back sorted by name regardless of schedule.  name_filter keeps
    only entries whose name contains the substring, skipping the rest
    before any quadrature runs.
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    entries = _catalog_entries(max(1e-13, tol * 1e-3))
    if name_filter is not None:
        entries = [e for e in entries if name_filter in e.name]
    if jobs is not None and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda e: _run_entry(e, tol), entries))
    else:
        reports = [_run_entry(e, tol) for e in entries]
    return sorted(reports, key=lambda r: r.name)


def substitution_showcases(tol: float) -> list[CheckReport]:
    """The worked substitution and parts examples as named reports."""
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    eps = _TABLE_EPS
    e_val = e_const(eps)
    reports = [
        check_u_sub(
            lambda u: 1.0 / (1.0 + u * u), math.tan,
            lambda t: 1.0 / math.cos(t) ** 2,
            0.0, 0.25 * math.pi, tol, name="usub-arctan"),
        check_u_sub(
            math.cos, lambda t: t, lambda t: 1.0,
            0.0, 1.0, tol, name="usub-identity"),
        check_u_sub(
            lambda u: 1.0 / (2.0 * u), lambda t: 1.0 + t * t,
            lambda t: 2.0 * t,
            0.0, 1.0, tol, name="usub-half-log"),
        check_parts(
            lambda t: log_construct(t, eps).value, lambda t: 1.0 / t,
            lambda t: t, lambda t: 1.0,
            1.0, e_val, tol, name="parts-log"),
        check_parts(
            lambda t: t, lambda t: 1.0, lambda t: t, lambda t: 1.0,
            0.0, 1.0, tol, name="parts-tt"),
        check_parts(
            lambda t: inverse_fn("arctan", t, eps), lambda t: 1.0 / (1.0 + t * t),
            lambda t: t, lambda t: 1.0,
            0.0, 1.0, tol, name="parts-arctan"),
    ]
    return reports
