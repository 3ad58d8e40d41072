"""Deterministic sample generators for the verification suites.

Every generator draws from a ``random.Random`` stream seeded with
``f"{seed}:{label}"``, so each check owns an independent, reproducible
stream and reports are stable across runs.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .moebius import INFINITY, MoebiusMap, ProjPoint
from .pregeometry import AffineForm, Imaginary, scalar
from .structures import (
    LayerPoint,
    place_in_interval,
    solve_equal_differences,
)

__all__ = [
    "spawn_rng",
    "random_fraction",
    "random_positive_fraction",
    "random_negative_fraction",
    "random_point",
    "random_moebius",
    "random_layer_point",
    "random_point_between",
    "random_predicate_tuple",
    "random_layer_tuple",
    "random_affine_form",
    "random_pregeometry_instance",
]


def spawn_rng(seed, label: str) -> random.Random:
    """Independent deterministic stream for (seed, label)."""
    return random.Random(f"{seed}:{label}")


def random_fraction(rng, num: int = 24, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_positive_fraction(rng, num: int = 12, den: int = 8) -> Fraction:
    return Fraction(rng.randint(1, num), rng.randint(1, den))


def random_negative_fraction(rng, num: int = 24, den: int = 12) -> Fraction:
    return Fraction(-rng.randint(1, num), rng.randint(1, den))


def random_point(rng, infinity_rate: float = 0.125) -> ProjPoint:
    if rng.random() < infinity_rate:
        return INFINITY
    return ProjPoint(random_fraction(rng))


def random_moebius(rng) -> MoebiusMap:
    while True:
        a, b, c, d = (random_fraction(rng) for _ in range(4))
        if a * d != b * c:
            return MoebiusMap(a, b, c, d)


def random_layer_point(rng, level_range: int = 2, infinity_rate: float = 0.125) -> LayerPoint:
    return LayerPoint(rng.randint(-level_range, level_range), random_point(rng, infinity_rate))


def random_point_between(rng, x: LayerPoint) -> LayerPoint:
    """A point strictly between x and succ(x)."""
    if x.point.is_infinity:
        return LayerPoint(x.level, ProjPoint(random_fraction(rng)))
    roll = rng.random()
    if roll < 0.45:
        return LayerPoint(x.level, ProjPoint(x.point.value + random_positive_fraction(rng)))
    if roll < 0.9:
        return LayerPoint(x.level + 1, ProjPoint(x.point.value - random_positive_fraction(rng)))
    return LayerPoint(x.level + 1, INFINITY)


def random_predicate_tuple(rng, force_true: bool = False):
    """A base point and four data points; with ``force_true`` the first data
    point is solved for, so the equal-differences predicate holds."""
    while True:
        x = random_point(rng, 0.2)
        ys = [random_point(rng) for _ in range(4)]
        if not force_true:
            return x, ys
        if x in ys[1:]:
            continue
        y1 = solve_equal_differences(x, *ys[1:])
        return x, [y1, ys[1], ys[2], ys[3]]


def random_layer_tuple(rng, force_true: bool = False):
    """A layered base point with four points between it and its successor;
    with ``force_true`` the first point is solved for inside the interval."""
    x = random_layer_point(rng)
    ys = [random_point_between(rng, x) for _ in range(4)]
    if force_true:
        w = solve_equal_differences(x.point, *(y.point for y in ys[1:]))
        ys[0] = place_in_interval(x, w)
    return x, ys


def random_affine_form(rng, generators: int, max_terms: int = 3) -> AffineForm:
    terms = rng.randint(0, min(max_terms, generators))
    idxs = rng.sample(range(generators), terms)
    coeffs = tuple((i, random_fraction(rng, 6, 4)) for i in sorted(idxs))
    return AffineForm(random_fraction(rng, 6, 4), coeffs)


def random_pregeometry_instance(rng, max_generators: int = 6, max_tuple: int = 6):
    """A random tuple of forms and an imaginary definable from it."""
    gens = rng.randint(1, max_generators)
    n = rng.randint(1, max_tuple)
    x = [random_affine_form(rng, gens) for _ in range(n)]
    while True:
        invs = []
        for _ in range(rng.randint(1, 3)):
            f = scalar(random_fraction(rng, 4, 3))
            for xi in x:
                if rng.random() < 0.5:
                    f = f + random_fraction(rng, 3, 2) * xi
            invs.append(f)
        try:
            return x, Imaginary(tuple(invs))
        except ValueError:
            continue
