"""Difference classes of the layered line and the obstruction certificate.

Ordered pairs x < y of rationals, read as pairs of points in the base strip
(the open interval between (0, inf) and (1, inf), which is exactly the
level-0 real fiber), are equivalent when the five-place predicate anchored
at (0, inf) matches them; the exact difference d = x - y < 0 is a complete
class code.  Positive-slope affine maps act on pairs coordinatewise and on
classes by d -> a d.

The obstruction certificate packages four exact verdicts showing that no
point set of the layered line has the stabilizer pattern of a difference
class: slope-1 maps fix every class, no class survives a slope change, yet
any point set fixed by the unit translation sits inside the infinity fibers
and is therefore also fixed by the doubling map.

Anchored triples (a, b, c) with a < b < c < succ(a) carry the analogous
chart-difference invariant relative to their base point.

Two probes ask topological questions about the class space exactly: images
of open boxes under d are open intervals in (-inf, 0), and distinct classes
pull back disjoint open neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .automorphisms import AffineMap, FixedPointKind, fixed_points
from .moebius import INFINITY, canonical_to_infinity
from .report import Check
from .sampling import (
    random_fraction,
    random_layer_point,
    random_negative_fraction,
    random_positive_fraction,
    spawn_rng,
)
from .structures import LayerPoint, layer_point, layer_predicate

__all__ = [
    "NotInXError",
    "NotInYError",
    "BASE_POINT",
    "StripPair",
    "ClassInvariant",
    "pairs_equivalent",
    "pair_invariant",
    "map_pair",
    "class_action",
    "check_triple",
    "triples_equivalent",
    "triple_invariant",
    "Verdict",
    "ObstructionCertificate",
    "MUTATIONS",
    "MUTATION_TARGETS",
    "obstruction_certificate",
    "probe_openness",
    "probe_hausdorff",
]


class NotInXError(ValueError):
    """The pair is not an ordered pair x < y of rationals."""


class NotInYError(ValueError):
    """The triple is not a chain a < b < c < succ(a)."""


# anchor of the base strip: the open interval (BASE_POINT, BASE_POINT.succ())
# is exactly the level-0 real fiber
BASE_POINT = LayerPoint(0, INFINITY)


@dataclass(frozen=True)
class StripPair:
    """An ordered pair x < y of rationals, identified with two base-strip points."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        x, y = Fraction(self.x), Fraction(self.y)
        if not x < y:
            raise NotInXError(f"need x < y, got ({x}, {y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def as_layer_points(self) -> tuple[LayerPoint, LayerPoint]:
        return layer_point(0, self.x), layer_point(0, self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class ClassInvariant:
    """Complete class code: an exact chart difference, with the base point for
    anchored-triple classes (None for strip-pair classes, where d < 0)."""

    d: Fraction
    base: LayerPoint | None = None

    def __post_init__(self):
        object.__setattr__(self, "d", Fraction(self.d))
        if self.base is None and self.d >= 0:
            raise ValueError("strip-pair classes have negative difference")

    def __str__(self) -> str:
        if self.base is None:
            return str(self.d)
        return f"base={self.base} d={self.d}"


def pairs_equivalent(p: StripPair, q: StripPair) -> bool:
    """Evaluate the predicate anchored at the base point on the two pairs.

    The verdict always agrees with equality of the exact differences; the
    agreement is asserted on every call.
    """
    px, py = p.as_layer_points()
    qx, qy = q.as_layer_points()
    by_predicate = layer_predicate(BASE_POINT, px, py, qx, qy)
    by_invariant = (p.x - p.y) == (q.x - q.y)
    assert by_predicate == by_invariant, f"route disagreement on {p}, {q}"
    return by_predicate


def pair_invariant(p: StripPair) -> ClassInvariant:
    """The class code of a strip pair: the exact difference x - y < 0."""
    return ClassInvariant(p.x - p.y)


def map_pair(t: AffineMap, p: StripPair) -> StripPair:
    """Apply an affine map to both coordinates; positive slope keeps x < y."""
    return StripPair(t(p.x), t(p.y))


def class_action(t: AffineMap, inv: ClassInvariant) -> ClassInvariant:
    """Induced action on strip-pair classes: d -> a d."""
    if inv.base is not None:
        raise ValueError("the action is defined on strip-pair classes")
    return ClassInvariant(t.a * inv.d)


def check_triple(a: LayerPoint, b: LayerPoint, c: LayerPoint) -> None:
    if not (a < b < c < a.succ()):
        raise NotInYError(f"need a < b < c < succ(a), got ({a}, {b}, {c})")


def triples_equivalent(t1, t2) -> bool:
    """Anchored-triple equivalence: same base point, and the predicate at that
    base matches (b, c) against (b', c')."""
    a, b, c = t1
    a2, b2, c2 = t2
    check_triple(a, b, c)
    check_triple(a2, b2, c2)
    return a == a2 and layer_predicate(a, b, c, b2, c2)


def triple_invariant(a: LayerPoint, b: LayerPoint, c: LayerPoint) -> ClassInvariant:
    """Complete code of an anchored triple: its base point together with the
    chart difference f(b) - f(c) at the base fiber value."""
    check_triple(a, b, c)
    f = canonical_to_infinity(a.point)
    return ClassInvariant(f(b.point).value - f(c.point).value, base=a)


@dataclass(frozen=True)
class Verdict:
    name: str
    holds: bool
    samples: int
    detail: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "samples": self.samples,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ObstructionCertificate:
    """Four exact verdicts that rule out coding difference classes as point sets.

    Every class is fixed by every slope-1 map, no class is fixed by any map
    of other slope, while any point set fixed by the unit translation lies in
    the infinity fibers, which the doubling map fixes as well.  So no point
    set distinguishes the two maps the way every class does.
    """

    seed: int
    samples: int
    mutation: str | None
    translation: AffineMap
    scaling: AffineMap
    verdicts: tuple[Verdict, ...]

    @property
    def valid(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def verdict(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "kind": "obstruction-certificate",
            "seed": self.seed,
            "samples": self.samples,
            "mutation": self.mutation,
            "translation": str(self.translation),
            "scaling": str(self.scaling),
            "valid": self.valid,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


MUTATIONS = ("trivial-action", "no-fixed-class", "fixed-set", "containment")

# which verdict each designed mutation is built to break
MUTATION_TARGETS = {
    "trivial-action": "trivial_action_a1",
    "no-fixed-class": "no_fixed_class_a_ne_1",
    "fixed-set": "fix_tau11_is_infinity_fiber",
    "containment": "fix_tau11_subset_fix_tau20",
}


def obstruction_certificate(
    seed: int = 0, samples: int = 10000, mutation: str | None = None
) -> ObstructionCertificate:
    """Build the four-verdict certificate.

    ``mutation`` injects one designed defect (see MUTATIONS) so that exactly
    the targeted verdict fails; this keeps the checker honest about being
    able to fail.
    """
    if mutation is not None and mutation not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutation!r}")
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = spawn_rng(seed, "obstruction-certificate")
    translation = AffineMap(1, 1)
    scaling = AffineMap(2, 0)
    verdicts = []

    # (i) slope-1 maps act trivially on classes
    slope_one = Fraction(2 if mutation == "trivial-action" else 1)
    fails = 0
    detail = f"slope {slope_one} with sampled offsets fixes every sampled class"
    for _ in range(samples):
        t = AffineMap(slope_one, random_fraction(rng))
        d = ClassInvariant(random_negative_fraction(rng))
        if class_action(t, d) != d:
            fails += 1
            if fails == 1:
                detail = f"map {t} moved class {d} to {class_action(t, d)}"
    verdicts.append(Verdict("trivial_action_a1", fails == 0, samples, detail))

    # (ii) no class is fixed once the slope moves off 1; algebraically,
    # a*d == d with a != 1 forces d == 0, which no class carries
    fails = 0
    detail = "sampled maps of slope != 1 move every sampled class"
    for _ in range(samples):
        if mutation == "no-fixed-class":
            a = Fraction(1)
        else:
            while True:
                a = random_positive_fraction(rng)
                if a != 1:
                    break
        t = AffineMap(a, random_fraction(rng))
        d = ClassInvariant(random_negative_fraction(rng))
        if class_action(t, d) == d:
            fails += 1
            if fails == 1:
                detail = f"map {t} fixed class {d}"
    verdicts.append(Verdict("no_fixed_class_a_ne_1", fails == 0, samples, detail))

    # (iii) the fixed-point set of the unit translation is exactly the
    # infinity fibers; cross-checked pointwise against direct application
    probe = scaling if mutation == "fixed-set" else translation
    fps = fixed_points(probe)
    ok = fps.kind is FixedPointKind.INFINITY_FIBER_ONLY
    detail = f"fixed points of {probe}: {fps.describe()}"
    for _ in range(samples):
        p = random_layer_point(rng)
        if fps.contains(p) != (probe.on_layer(p) == p):
            ok = False
            detail = f"symbolic locus of {probe} disagrees with application at {p}"
            break
    verdicts.append(Verdict("fix_tau11_is_infinity_fiber", ok, samples, detail))

    # (iv) containment of fixed-point sets; sampled points of the smaller
    # locus are re-checked under the larger map
    if mutation == "containment":
        small, large = fixed_points(scaling), fixed_points(translation)
        detail = f"{small.describe()} within {large.describe()}"
    else:
        small, large = fixed_points(translation), fixed_points(scaling)
        detail = f"{small.describe()} within {large.describe()}"
    ok = small.issubset(large)
    if ok:
        for _ in range(samples):
            p = LayerPoint(rng.randint(-3, 3), INFINITY)
            if not (small.contains(p) <= large.contains(p)):
                ok = False
                detail = f"containment fails at {p}"
                break
    verdicts.append(Verdict("fix_tau11_subset_fix_tau20", ok, samples, detail))

    return ObstructionCertificate(
        seed=seed,
        samples=samples,
        mutation=mutation,
        translation=translation,
        scaling=scaling,
        verdicts=tuple(verdicts),
    )


def _attainable(v: Fraction, x0, x1, y0, y1) -> bool:
    """Is v realized as x - y by a pair x < y inside the open box?"""
    if v >= 0:
        return False
    return max(x0, y0 + v) < min(x1, y1 + v)


def probe_openness(
    grid: int,
    window=(Fraction(0), Fraction(1), Fraction(0), Fraction(1)),
    probes_per_box: int = 3,
) -> Check:
    """Exact image of d = x - y over every open sub-box of the window.

    Interval arithmetic gives each image as (x0 - y1, min(x1 - y0, 0)); the
    probe independently verifies, by solving for rational witnesses, that
    interior values are attained and endpoints are not, so every nonempty
    image is an open interval inside (-inf, 0).
    """
    if grid < 2:
        raise ValueError("grid must be at least 2")
    x_lo, x_hi, y_lo, y_hi = (Fraction(v) for v in window)
    if not (x_lo < x_hi and y_lo < y_hi):
        raise ValueError("window must be a nonempty open box")
    dx = (x_hi - x_lo) / grid
    dy = (y_hi - y_lo) / grid
    boxes = 0
    failures = 0
    witness = None
    for i in range(grid):
        x0 = x_lo + i * dx
        x1 = x0 + dx
        for j in range(grid):
            y0 = y_lo + j * dy
            y1 = y0 + dy
            lo = x0 - y1
            hi = min(x1 - y0, Fraction(0))
            if lo >= hi:
                continue
            boxes += 1
            ok = hi <= 0
            ok = ok and not _attainable(lo, x0, x1, y0, y1)
            ok = ok and not _attainable(hi, x0, x1, y0, y1)
            step = (hi - lo) / (probes_per_box + 1)
            for k in range(1, probes_per_box + 1):
                v = lo + k * step
                ok = ok and _attainable(v, x0, x1, y0, y1)
                wx = (max(x0, y0 + v) + min(x1, y1 + v)) / 2
                wy = wx - v
                ok = ok and x0 < wx < x1 and y0 < wy < y1 and wx < wy
                ok = ok and wx - wy == v
            if not ok:
                failures += 1
                if witness is None:
                    witness = f"box ({x0},{x1})x({y0},{y1}) image ({lo},{hi})"
    return Check(
        id="quotient_image_openness",
        paper_ref="the difference invariant maps open boxes to open intervals in (-inf, 0)",
        samples=boxes,
        failures=failures,
        witness=witness,
    )


def probe_hausdorff(samples: int, seed) -> Check:
    """Disjoint saturated neighborhoods for sampled pairs of distinct classes.

    Around classes d1 != d2 take difference intervals of radius |d1 - d2|/3;
    disjointness, membership of each class in its own interval only, and a
    representative pair landing in the right interval are all checked exactly.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = spawn_rng(seed, "hausdorff")
    separated = 0
    failures = 0
    witness = None
    for _ in range(samples):
        d1 = random_negative_fraction(rng)
        d2 = random_negative_fraction(rng)
        if d1 == d2:
            continue
        separated += 1
        r = abs(d1 - d2) / 3
        lo1, hi1 = d1 - r, d1 + r
        lo2, hi2 = d2 - r, d2 + r
        ok = hi1 <= lo2 if d1 < d2 else hi2 <= lo1
        ok = ok and lo1 < d1 < hi1 and lo2 < d2 < hi2
        ok = ok and not (lo1 < d2 < hi1) and not (lo2 < d1 < hi2)
        rep1 = pair_invariant(StripPair(Fraction(0), -d1))
        rep2 = pair_invariant(StripPair(Fraction(0), -d2))
        ok = ok and lo1 < rep1.d < hi1 and lo2 < rep2.d < hi2
        if not ok:
            failures += 1
            if witness is None:
                witness = f"d1={d1} d2={d2} radius={r}"
    return Check(
        id="hausdorff_separation",
        paper_ref="distinct classes admit disjoint saturated neighborhoods",
        samples=separated,
        failures=failures,
        witness=witness,
    )
