"""Exact arithmetic on the rational projective line and its map group.

Points are exact rationals together with a single point at infinity,
totally ordered by identifying the circle with the interval [-inf, +inf),
so the infinity point is the least element.  Maps z -> (a z + b)/(c z + d)
are invertible 2x2 rational matrices taken up to scale; entries are
normalized so that the first nonzero entry equals 1, which makes equality
of maps decidable.  Rescaling divides the determinant by a square, so the
sign of the determinant is well defined on normalized maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

__all__ = [
    "SingularMatrixError",
    "ProjPoint",
    "INFINITY",
    "proj",
    "MoebiusMap",
    "IDENTITY",
    "affine_map",
    "canonical_to_infinity",
    "cot_conjugation_map",
]


class SingularMatrixError(ValueError):
    """A 2x2 matrix with determinant zero was used where a map is required."""


@total_ordering
@dataclass(frozen=True)
class ProjPoint:
    """A projective-line point; ``value`` is an exact rational, or None for infinity."""

    value: Fraction | None

    def __post_init__(self):
        if self.value is not None and not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"ProjPoint({self})"


INFINITY = ProjPoint(None)


def proj(x) -> ProjPoint:
    """Coerce ``x`` to a ProjPoint; the string ``"inf"`` gives the infinity point."""
    if isinstance(x, ProjPoint):
        return x
    if isinstance(x, str) and x.strip().lower() == "inf":
        return INFINITY
    return ProjPoint(Fraction(x))


@dataclass(frozen=True)
class MoebiusMap:
    """The map z -> (a z + b)/(c z + d) with ad - bc != 0.

    The action is total on the projective line: the pole goes to infinity,
    and infinity goes to a/c (or stays put when c = 0, i.e. for affine maps).
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        a, b, c, d = (Fraction(v) for v in (self.a, self.b, self.c, self.d))
        if a * d == b * c:
            raise SingularMatrixError(f"singular matrix [{a} {b}; {c} {d}]")
        pivot = next(v for v in (a, b, c, d) if v)
        object.__setattr__(self, "a", a / pivot)
        object.__setattr__(self, "b", b / pivot)
        object.__setattr__(self, "c", c / pivot)
        object.__setattr__(self, "d", d / pivot)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def is_affine(self) -> bool:
        """Affine maps are exactly the stabilizer of the infinity point."""
        return self.c == 0

    def __call__(self, p) -> ProjPoint:
        p = proj(p)
        if p.value is None:
            return INFINITY if self.c == 0 else ProjPoint(self.a / self.c)
        den = self.c * p.value + self.d
        if den == 0:
            return INFINITY
        return ProjPoint((self.a * p.value + self.b) / den)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product; self applies last: ``f.compose(g)(p) == f(g(p))``."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __str__(self) -> str:
        return f"[{self.a} {self.b}; {self.c} {self.d}]"

    def __repr__(self) -> str:
        return f"MoebiusMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


IDENTITY = MoebiusMap(1, 0, 0, 1)


def affine_map(a, b) -> MoebiusMap:
    """The map z -> a z + b (requires a != 0)."""
    return MoebiusMap(a, b, 0, 1)


def canonical_to_infinity(x) -> MoebiusMap:
    """A chart sending ``x`` to infinity: z -> -1/(z - x), or the identity at infinity.

    Any two charts sending x to infinity differ by an affine map, and affine
    maps preserve equality of differences, so predicates built from chart
    differences do not depend on this particular choice.
    """
    x = proj(x)
    if x.is_infinity:
        return IDENTITY
    return MoebiusMap(0, -1, 1, -x.value)


def cot_conjugation_map(c) -> MoebiusMap:
    """The chart u -> (-c u + 1)/(u + c), taking -cot(x) to cot(x - alpha) when c = cot(alpha).

    It sends -c to infinity; the raw matrix has determinant -(c*c) - 1, so the
    family is nonsingular for every rational c.
    """
    c = Fraction(c)
    return MoebiusMap(-c, 1, 1, c)
