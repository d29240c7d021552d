"""Tagged partitions and Riemann sums.

A tagged partition of [a, b] is a strictly increasing list of points
t_0 < t_1 < ... < t_n together with one tag per cell, t_k <= xi_k <= t_{k+1}.
The Riemann sum of f over such a partition is

    S(f, P) = sum_k f(xi_k) * (t_{k+1} - t_k)

evaluated left to right with compensated summation, so the result is the
correctly rounded value of the exact sum of the computed terms.  Everything
downstream (the integrator, the telescoping evaluators, the theorem checks)
reduces to this one primitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EvaluationError, InvalidArgumentError

Fn = Callable[[float], float]


@dataclass(frozen=True)
class Interval:
    """A closed interval [a, b] with a <= b."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidArgumentError("interval endpoints must be finite")
        if self.a > self.b:
            raise InvalidArgumentError(f"interval requires a <= b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class TagRule:
    """How to place the tag inside each cell.

    The three standard placements are module constants LEFT, RIGHT and
    MIDPOINT; custom_rule wraps an arbitrary per-cell tag function.
    """

    name: str
    fn: Callable[[float, float], float] | None = None


LEFT = TagRule("left")
RIGHT = TagRule("right")
MIDPOINT = TagRule("midpoint")


def custom_rule(fn: Callable[[float, float], float]) -> TagRule:
    """A rule whose tag for cell [lo, hi] is fn(lo, hi); validated eagerly."""
    return TagRule("custom", fn)


class TaggedPartition:
    """Immutable partition points plus one tag per cell.

    Construction validates everything: points strictly increasing, exactly
    one tag per cell, every tag inside its cell.  The arrays are frozen so a
    partition cannot drift after it has been checked.
    """

    __slots__ = ("points", "tags")

    def __init__(self, points, tags):
        pts = np.asarray(points, dtype=float)
        tgs = np.asarray(tags, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise InvalidArgumentError("need at least two partition points")
        if tgs.ndim != 1 or tgs.size != pts.size - 1:
            raise InvalidArgumentError(
                f"need exactly one tag per cell: {pts.size - 1} cells, {tgs.size} tags"
            )
        if not (np.all(np.isfinite(pts)) and np.all(np.isfinite(tgs))):
            raise InvalidArgumentError("points and tags must be finite")
        if not np.all(pts[1:] > pts[:-1]):
            raise InvalidArgumentError("partition points must be strictly increasing")
        if not (np.all(tgs >= pts[:-1]) and np.all(tgs <= pts[1:])):
            bad = int(np.argmax((tgs < pts[:-1]) | (tgs > pts[1:])))
            raise InvalidArgumentError(
                f"tag {tgs[bad]!r} outside its cell [{pts[bad]!r}, {pts[bad + 1]!r}]"
            )
        pts.flags.writeable = False
        tgs.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "tags", tgs)

    def __setattr__(self, name, value):
        raise AttributeError("TaggedPartition is immutable")

    @property
    def n(self) -> int:
        return self.points.size - 1

    @property
    def a(self) -> float:
        return float(self.points[0])

    @property
    def b(self) -> float:
        return float(self.points[-1])

    def __repr__(self) -> str:
        return f"TaggedPartition(n={self.n}, [{self.a}, {self.b}])"


def _apply_rule(points: np.ndarray, rule: TagRule) -> np.ndarray:
    if rule.name == "left":
        return points[:-1]
    if rule.name == "right":
        return points[1:]
    if rule.name == "midpoint":
        return 0.5 * (points[:-1] + points[1:])
    if rule.name == "custom":
        assert rule.fn is not None
        return np.fromiter(
            (rule.fn(lo, hi) for lo, hi in zip(points[:-1], points[1:])),
            dtype=float,
            count=points.size - 1,
        )
    raise InvalidArgumentError(f"unknown tag rule {rule.name!r}")


def uniform_partition(interval: Interval, n: int, rule: TagRule = MIDPOINT) -> TaggedPartition:
    """Equal-width partition with points t_k = a + k*(b-a)/n.

    Requires a < b and n >= 1.  Tags come from the rule; a custom rule is
    validated cell by cell at construction time.
    """
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    if not interval.a < interval.b:
        raise InvalidArgumentError("uniform partition needs a < b")
    h = (interval.b - interval.a) / n
    points = interval.a + np.arange(n + 1, dtype=float) * h
    return TaggedPartition(points, _apply_rule(points, rule))


def geometric_partition(p: float, q: float, n: int, rule: TagRule = MIDPOINT) -> TaggedPartition:
    """Partition of [p, q] whose points p*(q/p)^(k/n) share a constant ratio.

    Requires 0 < p < q.  Cell widths grow geometrically, which is what makes
    the power-function sums telescoping-friendly.
    """
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    if not (0.0 < p < q):
        raise InvalidArgumentError(f"need 0 < p < q, got p={p}, q={q}")
    ratio = q / p
    points = p * np.power(ratio, np.arange(n + 1, dtype=float) / n)
    return TaggedPartition(points, _apply_rule(points, rule))


def mesh(partition: TaggedPartition) -> float:
    """Largest cell width; the quantity driven to zero in every limit here."""
    return float(np.max(np.diff(partition.points)))


def riemann_sum(f: Fn, partition: TaggedPartition) -> float:
    """The definitional sum of f over the partition, compensated.

    Terms f(xi_k) * width_k accumulate left to right through math.fsum, so
    the only rounding is in the terms themselves.  A non-finite sample
    raises EvaluationError naming the tag that produced it.
    """
    tags = partition.tags.tolist()
    widths = np.diff(partition.points).tolist()
    try:
        total = math.fsum(f(x) * w for x, w in zip(tags, widths))
    except (ValueError, OverflowError, ZeroDivisionError):
        total = math.nan
    if not math.isfinite(total):
        # rescan to attribute the failure to a specific tag
        for x in tags:
            try:
                y = f(x)
            except (ValueError, OverflowError, ZeroDivisionError) as exc:
                raise EvaluationError(x, str(exc) or "integrand raised") from exc
            if not math.isfinite(y):
                raise EvaluationError(x, "integrand sample is not finite")
    return total
