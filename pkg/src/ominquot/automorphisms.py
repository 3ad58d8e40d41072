"""Automorphism families of the layered structures, with exact fixed-point data.

Positive-slope affine maps act on every fiber at once and fix each level's
infinity point; their fixed-point loci are computed symbolically.  Real-line
translations play the same role for the floating-point presentation, and
``transported_translation`` reads a translation back through the
identification of the two presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .moebius import MoebiusMap, ProjPoint, affine_map
from .report import Check
from .sampling import random_predicate_tuple, spawn_rng
from .structures import (
    DoubledPoint,
    LayerPoint,
    equal_differences,
    from_layer_point,
    to_layer_point,
)

__all__ = [
    "AffineMap",
    "FixedPointKind",
    "FixedPointSet",
    "fixed_points",
    "translate_real",
    "transported_translation",
    "check_projective_automorphism",
]


@dataclass(frozen=True)
class AffineMap:
    """x -> a x + b with a > 0, acting fiberwise and fixing every infinity point."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a <= 0:
            raise ValueError("slope must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def as_moebius(self) -> MoebiusMap:
        return affine_map(self.a, self.b)

    def __call__(self, q) -> Fraction:
        return self.a * Fraction(q) + self.b

    def on_point(self, p: ProjPoint) -> ProjPoint:
        return p if p.is_infinity else ProjPoint(self.a * p.value + self.b)

    def on_layer(self, p: LayerPoint) -> LayerPoint:
        """Apply within the fiber, keeping the level."""
        return LayerPoint(p.level, self.on_point(p.point))

    def on_first_copy(self, p: DoubledPoint) -> DoubledPoint:
        """Move copy 1 by this map; fix copy 2 pointwise."""
        if p.copy == 1:
            return DoubledPoint(1, self.on_layer(p.point))
        return p

    def __str__(self) -> str:
        return f"x -> {self.a}*x + {self.b}"


class FixedPointKind(Enum):
    ALL_POINTS = "all-points"
    INFINITY_FIBER_ONLY = "infinity-fiber-only"
    INFINITY_FIBER_PLUS = "infinity-fiber-plus"


@dataclass(frozen=True)
class FixedPointSet:
    """Symbolic fixed-point locus of an AffineMap on the layered line.

    Every map fixes each level's infinity point.  The identity fixes
    everything; a map with slope 1 and nonzero offset fixes nothing else; a
    map with slope != 1 additionally fixes the fiber value b/(1 - a) at every
    level, recorded in ``extra``.
    """

    kind: FixedPointKind
    extra: Fraction | None = None

    def contains(self, p: LayerPoint) -> bool:
        if self.kind is FixedPointKind.ALL_POINTS:
            return True
        if p.point.is_infinity:
            return True
        return self.kind is FixedPointKind.INFINITY_FIBER_PLUS and p.point.value == self.extra

    def issubset(self, other: "FixedPointSet") -> bool:
        if other.kind is FixedPointKind.ALL_POINTS:
            return True
        if self.kind is FixedPointKind.ALL_POINTS:
            return False
        if self.kind is FixedPointKind.INFINITY_FIBER_ONLY:
            return True
        if other.kind is FixedPointKind.INFINITY_FIBER_PLUS:
            return self.extra == other.extra
        return False

    def describe(self) -> str:
        if self.kind is FixedPointKind.INFINITY_FIBER_PLUS:
            return f"{self.kind.value} {self.extra}"
        return self.kind.value


def fixed_points(t: AffineMap) -> FixedPointSet:
    """Exact solution of t(x) = x, joined with the always-fixed infinity fibers."""
    if t.a == 1:
        if t.b == 0:
            return FixedPointSet(FixedPointKind.ALL_POINTS)
        return FixedPointSet(FixedPointKind.INFINITY_FIBER_ONLY)
    return FixedPointSet(FixedPointKind.INFINITY_FIBER_PLUS, t.b / (1 - t.a))


def translate_real(alpha: float, x: float) -> float:
    """The real-line automorphism x -> x + alpha."""
    return x + alpha


def transported_translation(p: LayerPoint, q: LayerPoint):
    """The layered-line map conjugate, through the real-line identification,
    to the translation carrying p to q.  Returns a callable on LayerPoint."""
    alpha = from_layer_point(q) - from_layer_point(p)

    def act(r: LayerPoint) -> LayerPoint:
        return to_layer_point(from_layer_point(r) + alpha)

    return act


def check_projective_automorphism(g: MoebiusMap, budget: int, seed) -> Check:
    """Sample tuples, half engineered to satisfy the predicate, and test that
    g preserves the equal-differences predicate on all of them."""
    rng = spawn_rng(seed, f"projective-automorphism:{g}")
    failures = 0
    witness = None
    for i in range(budget):
        x, ys = random_predicate_tuple(rng, force_true=(i % 2 == 0))
        before = equal_differences(x, *ys)
        after = equal_differences(g(x), *(g(y) for y in ys))
        if before != after:
            failures += 1
            if witness is None:
                witness = f"g={g} x={x} ys=({ys[0]}, {ys[1]}, {ys[2]}, {ys[3]})"
    return Check(
        id=f"projective_automorphism[{g}]",
        paper_ref="fractional linear maps preserve the equal-differences predicate",
        samples=budget,
        failures=failures,
        witness=witness,
    )
