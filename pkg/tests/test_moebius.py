from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ominquot import (
    IDENTITY,
    INFINITY,
    MoebiusMap,
    ProjPoint,
    SingularMatrixError,
    affine_map,
    canonical_to_infinity,
    cot_conjugation_map,
    proj,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)

moebius_maps = (
    st.tuples(rationals, rationals, rationals, rationals)
    .filter(lambda t: t[0] * t[3] != t[1] * t[2])
    .map(lambda t: MoebiusMap(*t))
)

points = st.one_of(st.just(INFINITY), rationals.map(ProjPoint))


def test_singular_matrix_rejected():
    with pytest.raises(SingularMatrixError):
        MoebiusMap(1, 2, 2, 4)
    with pytest.raises(SingularMatrixError):
        MoebiusMap(0, 0, 0, 0)


def test_scalar_multiples_canonicalize():
    assert MoebiusMap(2, 0, 0, 2) == IDENTITY
    assert MoebiusMap(3, 6, 0, 3) == affine_map(1, 2)
    assert MoebiusMap(Fraction(-1, 2), 0, 0, Fraction(-1, 2)) == IDENTITY


def test_point_ordering_infinity_least():
    assert INFINITY < proj(-1000)
    assert proj(-1) < proj(0) < proj(Fraction(1, 2))
    assert sorted([proj(3), INFINITY, proj(-2)]) == [proj("inf"), proj(-2), proj(3)]


def test_proj_coercions():
    assert proj("inf").is_infinity
    assert proj("3/4") == ProjPoint(Fraction(3, 4))
    assert proj(2) == ProjPoint(Fraction(2))


def test_total_action_covers_pole_and_infinity():
    inv = MoebiusMap(0, 1, 1, 0)  # z -> 1/z
    assert inv(proj(0)).is_infinity
    assert inv(INFINITY) == proj(0)
    assert inv(proj(4)) == proj(Fraction(1, 4))


def test_affine_composition_oracle():
    assert affine_map(1, 1) @ affine_map(2, 0) == affine_map(2, 1)
    assert affine_map(2, 0) @ affine_map(1, 1) == affine_map(2, 2)
    assert affine_map(1, 1).inverse() == affine_map(1, -1)


def test_is_affine_exactly_fixes_infinity():
    assert affine_map(5, -3).is_affine
    assert not MoebiusMap(0, 1, 1, 0).is_affine
    assert affine_map(5, -3)(INFINITY).is_infinity


def test_canonical_chart_oracle():
    f = canonical_to_infinity(proj(1))
    assert f(proj(1)).is_infinity
    assert f(proj(3)) == proj(Fraction(-1, 2))
    assert canonical_to_infinity(INFINITY) == IDENTITY


def test_cot_conjugation_oracle():
    g = cot_conjugation_map(1)
    assert g(proj(-1)).is_infinity
    assert g(INFINITY) == proj(-1)
    assert g(proj(0)) == proj(1)
    assert g @ g == IDENTITY
    assert g.det < 0


@given(moebius_maps, moebius_maps, moebius_maps)
def test_composition_associative(m1, m2, m3):
    assert (m1 @ m2) @ m3 == m1 @ (m2 @ m3)


@given(moebius_maps)
def test_identity_and_inverse(m):
    assert m @ IDENTITY == m == IDENTITY @ m
    assert m @ m.inverse() == IDENTITY
    assert m.inverse() @ m == IDENTITY


@given(moebius_maps, moebius_maps, points)
def test_action_compatible_with_composition(m1, m2, p):
    assert (m1 @ m2)(p) == m1(m2(p))


@given(moebius_maps, points, points)
def test_action_injective(m, p, q):
    if p != q:
        assert m(p) != m(q)


@given(moebius_maps, moebius_maps)
def test_det_sign_multiplicative(m1, m2):
    sign = lambda q: (q > 0) - (q < 0)
    assert sign((m1 @ m2).det) == sign(m1.det) * sign(m2.det)


@given(rationals)
def test_cot_conjugation_family(c):
    g = cot_conjugation_map(c)
    assert g(ProjPoint(-c)).is_infinity
    assert g(INFINITY) == ProjPoint(-c)
    assert g @ g == IDENTITY
    assert g.det < 0
