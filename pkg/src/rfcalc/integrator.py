"""Convergent integration by partition refinement.

integrate() doubles the cell count of a uniform partition until two
successive Riemann sums agree to the requested tolerance.  There is no
adaptive subdivision and no quadrature formula beyond the tag rule; the
point is to watch the definitional limit converge.  integrate_improper()
runs the same engine on a shrinking-window sequence toward a singular
endpoint and accelerates the tail with one Aitken delta-squared step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import DivergenceError, InvalidArgumentError
from .partitions import Interval, MIDPOINT, TagRule, riemann_sum, uniform_partition

Fn = Callable[[float], float]

DEFAULT_MAX_N = 2 ** 22
DEFAULT_N0 = 8

# Improper-limit controls.  Window j uses endpoint offset (b-a)*2^-j; the
# inner tolerance divides by 32 because Aitken amplifies independent window
# errors by roughly an order of magnitude at ratio ~ 1/sqrt(2).
_IMPROPER_FIRST_J = 2
_IMPROPER_MAX_J = 40
_IMPROPER_INNER_DIV = 32.0
_GROWTH_STREAK = 5


@dataclass(frozen=True)
class IntegrationResult:
    """Outcome of a refinement run.

    value is the last Riemann sum (or accelerated limit), error_estimate the
    last successive difference, trace the full (n, value) refinement history.
    converged=False with the cap reached is an answer, not an error.
    """

    value: float
    error_estimate: float
    n_final: int
    evaluations: int
    converged: bool
    trace: tuple[tuple[int, float], ...] = field(default_factory=tuple)


def integrate(
    f: Fn,
    a: float,
    b: float,
    tol: float,
    rule: TagRule = MIDPOINT,
    max_n: int = DEFAULT_MAX_N,
    n0: int = DEFAULT_N0,
) -> IntegrationResult:
    """Refine uniform Riemann sums of f over [a, b] until Cauchy-stable.

    Conventions: the integral over [a, a] is exactly 0, and reversed
    endpoints negate the result.  Stops once successive sums differ by at
    most tol, or returns converged=False when doubling would pass max_n.
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    if max_n < 1:
        raise InvalidArgumentError(f"max_n must be positive, got {max_n}")
    if a == b:
        return IntegrationResult(0.0, 0.0, 0, 0, True, ())
    if a > b:
        r = integrate(f, b, a, tol, rule, max_n, n0)
        return IntegrationResult(
            -r.value, r.error_estimate, r.n_final, r.evaluations, r.converged,
            tuple((n, -v) for n, v in r.trace),
        )
    # Below the resolution of the grid itself there is nothing to refine.
    if a + (b - a) / 8.0 <= a:
        v = f(a + (b - a) * 0.5) * (b - a)
        return IntegrationResult(v, abs(v), 1, 1, True, ((1, v),))

    n = max(1, min(n0, max_n))
    prev: float | None = None
    trace: list[tuple[int, float]] = []
    evaluations = 0
    interval = Interval(a, b)
    while True:
        s = riemann_sum(f, uniform_partition(interval, n, rule))
        evaluations += n
        trace.append((n, s))
        if prev is not None:
            diff = abs(s - prev)
            if diff <= tol:
                return IntegrationResult(s, diff, n, evaluations, True, tuple(trace))
        if 2 * n > max_n:
            est = abs(s - prev) if prev is not None else math.inf
            return IntegrationResult(s, est, n, evaluations, False, tuple(trace))
        prev = s
        n *= 2


def _aitken(x0: float, x1: float, x2: float) -> float:
    den = x2 - 2.0 * x1 + x0
    if den == 0.0 or not math.isfinite(den):
        return x2
    return x2 - (x2 - x1) ** 2 / den


def integrate_improper(
    f: Fn,
    a: float,
    b: float,
    singular_end: str,
    tol: float,
    rule: TagRule = MIDPOINT,
    max_n: int = DEFAULT_MAX_N,
) -> IntegrationResult:
    """Limit of proper integrals as a window closes on a singular endpoint.

    Window j stops short of the bad endpoint by (b-a)*2^-j for j = 2, 3, ...
    The window values feed one Aitken delta-squared extrapolation, and the
    run stops when successive accelerated values differ by at most tol.
    Monotone growth that is still accelerating after five consecutive
    windows and has passed 1/tol raises DivergenceError; that pattern is
    what a non-integrable endpoint looks like, as opposed to slow
    convergence, whose increments shrink.
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    if singular_end not in ("lower", "upper"):
        raise InvalidArgumentError(f"singular_end must be 'lower' or 'upper', got {singular_end!r}")
    if a == b:
        return IntegrationResult(0.0, 0.0, 0, 0, True, ())
    if a > b:
        raise InvalidArgumentError("improper integration requires a < b")

    span = b - a
    raw: list[float] = []
    acc: list[float] = []
    trace: list[tuple[int, float]] = []
    evaluations = 0
    n_seed = DEFAULT_N0
    n_last = 0
    for j in range(_IMPROPER_FIRST_J, _IMPROPER_MAX_J + 1):
        delta = span * 2.0 ** -j
        lo, hi = (a + delta, b) if singular_end == "lower" else (a, b - delta)

        inner_tol = tol / _IMPROPER_INNER_DIV
        if len(raw) >= 3:
            d1 = abs(raw[-1]) - abs(raw[-2])
            d2 = abs(raw[-2]) - abs(raw[-3])
            if d1 > d2 > 0.0:
                # Accelerating growth: blow-up suspected, and detecting it
                # only needs increments resolved to a fraction of themselves.
                inner_tol = max(inner_tol, 0.25 * d1)

        r = integrate(f, lo, hi, inner_tol, rule, max_n, n0=n_seed)
        evaluations += r.evaluations
        n_seed = max(DEFAULT_N0, r.n_final // 2)
        n_last = r.n_final
        raw.append(r.value)

        if len(raw) > _GROWTH_STREAK:
            increments = [
                abs(raw[i + 1]) - abs(raw[i]) for i in range(len(raw) - 1 - _GROWTH_STREAK, len(raw) - 1)
            ]
            if all(d > 0.0 for d in increments) and abs(raw[-1]) > 1.0 / tol:
                raise DivergenceError(
                    f"window integrals grew monotonically past 1/tol={1.0 / tol:g}; "
                    f"endpoint looks non-integrable (last value {raw[-1]:g})"
                )

        value = _aitken(raw[-3], raw[-2], raw[-1]) if len(raw) >= 3 else raw[-1]
        acc.append(value)
        trace.append((n_last, value))
        if len(raw) >= 4:
            diff = abs(acc[-1] - acc[-2])
            if diff <= tol:
                return IntegrationResult(acc[-1], diff, n_last, evaluations, True, tuple(trace))

    diff = abs(acc[-1] - acc[-2]) if len(acc) >= 2 else math.inf
    return IntegrationResult(acc[-1], diff, n_last, evaluations, False, tuple(trace))


def cumulative(
    f: Fn,
    a: float,
    grid: Sequence[float],
    tol: float,
    rule: TagRule = MIDPOINT,
    max_n: int = DEFAULT_MAX_N,
) -> list[float]:
    """Prefix integrals F(x) = integral of f from a to x for each grid x.

    Each cell between consecutive grid points is integrated once and the
    results are prefix-summed, so the differences F(x_{i+1}) - F(x_i)
    reproduce the cell integrals to rounding error.  The grid must be
    sorted with grid[0] >= a; duplicates contribute zero-width cells.
    """
    if not tol > 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    pts = [float(x) for x in grid]
    if not pts:
        return []
    if pts[0] < a:
        raise InvalidArgumentError(f"grid starts at {pts[0]} before a={a}")
    if any(y < x for x, y in zip(pts, pts[1:])):
        raise InvalidArgumentError("grid must be sorted ascending")
    cell_tol = tol / max(1, len(pts))
    values: list[float] = []
    total = 0.0
    left = a
    for x in pts:
        total += integrate(f, left, x, cell_tol, rule, max_n).value
        values.append(total)
        left = x
    return values


@dataclass(frozen=True)
class ConvergenceReport:
    """Observed error decay of Riemann sums over a list of cell counts.

    diff per row is |value - exact| when an exact value was supplied, else
    the successive difference (None on the first row).  estimated_order
    averages log2 of the diff ratios over the last three rows; a vanishing
    diff makes the order +inf by convention.
    """

    rows: tuple[tuple[int, float, float | None], ...]
    estimated_order: float

    def to_csv(self) -> str:
        lines = ["n,value,diff"]
        for n, value, diff in self.rows:
            d = "" if diff is None else format(diff, ".17g")
            lines.append(f"{n},{format(value, '.17g')},{d}")
        lines.append(f"# estimated_order={format(self.estimated_order, '.17g')}")
        return "\n".join(lines) + "\n"


def convergence_report(
    f: Fn,
    a: float,
    b: float,
    rule: TagRule,
    n_list: Sequence[int],
    exact: float | None = None,
) -> ConvergenceReport:
    """Tabulate Riemann sums of f over [a, b] for each n in n_list."""
    ns = [int(n) for n in n_list]
    if not ns:
        raise InvalidArgumentError("n_list must be non-empty")
    if any(n < 1 for n in ns):
        raise InvalidArgumentError("every n must be >= 1")
    if any(y <= x for x, y in zip(ns, ns[1:])):
        raise InvalidArgumentError("n_list must be strictly increasing")
    if not a < b:
        raise InvalidArgumentError("convergence report needs a < b")

    interval = Interval(a, b)
    values = [riemann_sum(f, uniform_partition(interval, n, rule)) for n in ns]

    rows: list[tuple[int, float, float | None]] = []
    for i, (n, v) in enumerate(zip(ns, values)):
        if exact is not None:
            diff: float | None = abs(v - exact)
        elif i == 0:
            diff = None
        else:
            diff = abs(v - values[i - 1])
        rows.append((n, v, diff))

    orders: list[float] = []
    usable = [(n, d) for n, _, d in rows if d is not None]
    for (n1, d1), (n2, d2) in zip(usable, usable[1:]):
        if d2 == 0.0:
            orders.append(math.inf)
        elif d1 == 0.0:
            orders.append(-math.inf)
        else:
            orders.append(math.log(d1 / d2) / math.log(n2 / n1))
    tail = orders[-3:]
    if not tail:
        order = math.inf
    elif any(math.isinf(o) for o in tail):
        order = math.inf if any(o == math.inf for o in tail) else -math.inf
    else:
        order = sum(tail) / len(tail)
    return ConvergenceReport(tuple(rows), order)
