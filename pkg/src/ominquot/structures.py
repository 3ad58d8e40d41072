"""Layered line structures and their five-place difference predicates.

The exact structure stacks one projective line per integer level, ordered
lexicographically with the infinity point at the bottom of each fiber;
``succ`` shifts a point up one level.  Its predicate asks that four points
sit strictly between x and succ(x) and that their fiber values satisfy the
equal-differences relation in a chart sending x's fiber value to infinity.

A floating-point presentation of the same structure lives on the real line
with period pi and a cotangent predicate; ``to_layer_point`` identifies the
two presentations level by level via x -> (floor(x/pi), -cot(x)).

A doubled variant carries two tagged copies of the layered line, with the
predicate gated to points that all lie in one copy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .moebius import INFINITY, MoebiusMap, ProjPoint, canonical_to_infinity, proj

__all__ = [
    "DegenerateFiberError",
    "equal_differences",
    "solve_equal_differences",
    "LayerPoint",
    "layer_point",
    "place_in_interval",
    "layer_predicate",
    "DoubledPoint",
    "embed",
    "doubled_predicate",
    "PERIOD",
    "cot",
    "shift_real",
    "cot_predicate",
    "to_layer_point",
    "from_layer_point",
    "layer_predicate_float",
]


class DegenerateFiberError(ValueError):
    """No admissible solution exists in the requested fiber."""


def equal_differences(x, y1, y2, y3, y4, chart: MoebiusMap | None = None) -> bool:
    """Whether f(y1) - f(y2) == f(y3) - f(y4) for a chart f sending x to infinity.

    False whenever x is one of the four data points.  The default chart is
    ``canonical_to_infinity(x)``; passing any other chart that sends x to
    infinity gives the same verdict.
    """
    x = proj(x)
    ys = tuple(proj(y) for y in (y1, y2, y3, y4))
    if x in ys:
        return False
    if chart is None:
        f = canonical_to_infinity(x)
    else:
        f = chart
        if not f(x).is_infinity:
            raise ValueError("chart must send the base point to infinity")
    v1, v2, v3, v4 = (f(y).value for y in ys)
    return v1 - v2 == v3 - v4


def solve_equal_differences(x, y2, y3, y4) -> ProjPoint:
    """The unique y1 with ``equal_differences(x, y1, y2, y3, y4)``.

    Computed as f^{-1}(f(y2) + f(y3) - f(y4)) for the canonical chart f, then
    re-verified before returning.
    """
    x = proj(x)
    y2, y3, y4 = proj(y2), proj(y3), proj(y4)
    if x in (y2, y3, y4):
        raise ValueError("base point may not appear among the data points")
    f = canonical_to_infinity(x)
    target = f(y2).value + f(y3).value - f(y4).value
    y1 = f.inverse()(ProjPoint(target))
    if y1 == x or not equal_differences(x, y1, y2, y3, y4):
        raise DegenerateFiberError(
            f"no admissible solution for x={x}, data=({y2}, {y3}, {y4})"
        )
    return y1


@total_ordering
@dataclass(frozen=True)
class LayerPoint:
    """A point (level, fiber value) of the layered line, ordered lexicographically."""

    level: int
    point: ProjPoint

    def __post_init__(self):
        object.__setattr__(self, "point", proj(self.point))

    def succ(self) -> "LayerPoint":
        return LayerPoint(self.level + 1, self.point)

    def pred(self) -> "LayerPoint":
        return LayerPoint(self.level - 1, self.point)

    def __lt__(self, other):
        if not isinstance(other, LayerPoint):
            return NotImplemented
        if self.level != other.level:
            return self.level < other.level
        return self.point < other.point

    def __str__(self) -> str:
        return f"({self.level}, {self.point})"

    def __repr__(self) -> str:
        return f"LayerPoint({self.level}, {self.point})"


def layer_point(level: int, value) -> LayerPoint:
    return LayerPoint(level, proj(value))


def place_in_interval(x: LayerPoint, value) -> LayerPoint:
    """The unique point strictly between x and succ(x) with the given fiber value.

    The open interval (x, succ(x)) meets every fiber value except x's own:
    values above x's value sit at x's level, all others one level up.
    """
    v = proj(value)
    if v == x.point:
        raise ValueError("value equals the endpoint's fiber value")
    if x.point.is_infinity:
        return LayerPoint(x.level, v)
    if x.point < v:
        return LayerPoint(x.level, v)
    return LayerPoint(x.level + 1, v)


def layer_predicate(x: LayerPoint, y1, y2, y3, y4) -> bool:
    """Five-place predicate of the layered line.

    True when the four points lie strictly between x and succ(x) and their
    fiber values satisfy ``equal_differences`` at x's fiber value.
    """
    s = x.succ()
    ys = (y1, y2, y3, y4)
    if not all(x < y < s for y in ys):
        return False
    return equal_differences(x.point, *(y.point for y in ys))


@total_ordering
@dataclass(frozen=True)
class DoubledPoint:
    """A layered-line point tagged with copy index 1 or 2; copy 1 precedes copy 2."""

    copy: int
    point: LayerPoint

    def __post_init__(self):
        if self.copy not in (1, 2):
            raise ValueError("copy index must be 1 or 2")

    def succ(self) -> "DoubledPoint":
        return DoubledPoint(self.copy, self.point.succ())

    def __lt__(self, other):
        if not isinstance(other, DoubledPoint):
            return NotImplemented
        if self.copy != other.copy:
            return self.copy < other.copy
        return self.point < other.point

    def __str__(self) -> str:
        return f"{self.copy}:{self.point}"

    def __repr__(self) -> str:
        return f"DoubledPoint({self.copy}, {self.point})"


def embed(copy: int, p: LayerPoint) -> DoubledPoint:
    """Include a layered-line point into the given copy of the doubled structure."""
    return DoubledPoint(copy, p)


def doubled_predicate(x: DoubledPoint, y1, y2, y3, y4) -> bool:
    """False unless all five points share a copy; then the layer predicate applies."""
    ys = (y1, y2, y3, y4)
    if any(y.copy != x.copy for y in ys):
        return False
    return layer_predicate(x.point, *(y.point for y in ys))


PERIOD = math.pi


def cot(x: float) -> float:
    """cos(x)/sin(x); finite away from multiples of pi."""
    return math.cos(x) / math.sin(x)


def shift_real(x: float) -> float:
    """The real-line successor, one period up."""
    return x + PERIOD


def cot_predicate(x: float, y1, y2, y3, y4, tol: float = 1e-9) -> bool:
    """Floating-point predicate on the real line.

    True when every y lies strictly inside (x, x + pi) and
    cot(y1-x) - cot(y2-x) equals cot(y3-x) - cot(y4-x) within ``tol``
    (both relative and absolute).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    ys = (y1, y2, y3, y4)
    if not all(math.isfinite(v) for v in (x, *ys)):
        raise ValueError("points must be finite")
    if not all(x < y < x + PERIOD for y in ys):
        return False
    lhs = cot(y1 - x) - cot(y2 - x)
    rhs = cot(y3 - x) - cot(y4 - x)
    return math.isclose(lhs, rhs, rel_tol=tol, abs_tol=tol)


def to_layer_point(x: float, pole_tol: float = 1e-9) -> LayerPoint:
    """Identify a real number with (floor(x/pi), -cot(x)) on the layered line.

    Values within ``pole_tol`` of a multiple of pi snap to that multiple's
    infinity point.  The fiber value is the exact rational of the binary64
    result of -cot(x); downstream comparisons apply their own tolerance.
    """
    if not math.isfinite(x):
        raise ValueError("point must be finite")
    k = round(x / PERIOD)
    if abs(x - k * PERIOD) <= pole_tol:
        return LayerPoint(k, INFINITY)
    return LayerPoint(math.floor(x / PERIOD), ProjPoint(Fraction(-cot(x))))


def from_layer_point(p: LayerPoint) -> float:
    """Float inverse of ``to_layer_point``; exact at infinity points."""
    if p.point.is_infinity:
        return p.level * PERIOD
    return p.level * PERIOD + math.atan2(1.0, -float(p.point.value))


def layer_predicate_float(x: LayerPoint, y1, y2, y3, y4, tol: float = 1e-9) -> bool:
    """Tolerance twin of ``layer_predicate`` for float-carried fiber values.

    The interval test stays exact; the equal-differences test runs in binary64
    through the canonical chart at x's fiber value.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    s = x.succ()
    ys = (y1, y2, y3, y4)
    if not all(x < y < s for y in ys):
        return False
    if x.point.is_infinity:
        vals = [float(y.point.value) for y in ys]
    else:
        u = float(x.point.value)
        vals = [
            0.0 if y.point.is_infinity else -1.0 / (float(y.point.value) - u)
            for y in ys
        ]
    return math.isclose(vals[0] - vals[1], vals[2] - vals[3], rel_tol=tol, abs_tol=tol)
