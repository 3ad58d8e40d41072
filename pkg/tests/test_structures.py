import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ominquot import (
    INFINITY,
    PERIOD,
    DoubledPoint,
    LayerPoint,
    affine_map,
    canonical_to_infinity,
    cot,
    cot_predicate,
    doubled_predicate,
    embed,
    equal_differences,
    from_layer_point,
    layer_point,
    layer_predicate,
    layer_predicate_float,
    place_in_interval,
    proj,
    shift_real,
    solve_equal_differences,
    to_layer_point,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
points = st.one_of(st.just(INFINITY), rationals.map(proj))


# ---------------------------------------------------------------- predicate


def test_equal_differences_oracles():
    assert equal_differences("inf", 1, 2, 3, 4)
    assert not equal_differences("inf", 1, 2, 3, 5)
    # chart at 0 is -1/z: values -1/2, -1/3, -1/3, -1/6 have equal differences
    assert equal_differences(0, 2, 3, 3, 6)
    assert not equal_differences(0, 1, 2, 3, 4)


def test_equal_differences_false_on_membership():
    assert not equal_differences(1, 1, 2, 3, 4)
    assert not equal_differences("inf", "inf", "inf", "inf", "inf")


def test_custom_chart_must_send_base_to_infinity():
    with pytest.raises(ValueError):
        equal_differences(0, 1, 2, 3, 4, chart=affine_map(1, 1))


def test_solve_oracles():
    assert solve_equal_differences("inf", 2, 3, 4) == proj(1)
    assert solve_equal_differences(0, 3, 3, 6) == proj(2)
    assert solve_equal_differences("inf", 5, 7, 7) == proj(5)


def test_solve_rejects_base_among_data():
    with pytest.raises(ValueError):
        solve_equal_differences(2, 2, 3, 4)


@given(points, points, points, points)
def test_solved_point_satisfies_predicate(x, y2, y3, y4):
    if x in (y2, y3, y4):
        return
    y1 = solve_equal_differences(x, y2, y3, y4)
    assert equal_differences(x, y1, y2, y3, y4)


@given(
    points,
    points,
    points,
    points,
    points,
    st.fractions(min_value=-6, max_value=6, max_denominator=8).filter(bool),
    rationals,
)
def test_chart_independence(x, y1, y2, y3, y4, a, b):
    chart = affine_map(a, b) @ canonical_to_infinity(x)
    assert equal_differences(x, y1, y2, y3, y4) == equal_differences(
        x, y1, y2, y3, y4, chart=chart
    )


# ---------------------------------------------------------------- layered line


def test_layer_order_lexicographic():
    assert layer_point(0, 5) < layer_point(1, "inf") < layer_point(1, -100)
    assert layer_point(0, "inf") < layer_point(0, 0)
    assert layer_point(2, 3).succ() == layer_point(3, 3)
    assert layer_point(2, 3).pred() == layer_point(1, 3)


def test_place_in_interval_cases():
    x = layer_point(0, 5)
    assert place_in_interval(x, 7) == layer_point(0, 7)
    assert place_in_interval(x, 3) == layer_point(1, 3)
    assert place_in_interval(x, "inf") == layer_point(1, "inf")
    top = layer_point(0, "inf")
    assert place_in_interval(top, -9) == layer_point(0, -9)
    with pytest.raises(ValueError):
        place_in_interval(x, 5)


def test_interval_placement_is_strictly_between():
    for x in (layer_point(0, 5), layer_point(-1, "inf"), layer_point(3, Fraction(-7, 2))):
        for v in (Fraction(-10), Fraction(0), Fraction(99), None):
            value = INFINITY if v is None else proj(v)
            if value == x.point:
                continue
            y = place_in_interval(x, value)
            assert x < y < x.succ()
            assert y.point == value


def test_layer_predicate_oracles():
    assert layer_predicate(layer_point(0, "inf"), *(layer_point(0, v) for v in (1, 2, 3, 4)))
    assert layer_predicate(layer_point(0, 0), *(layer_point(0, v) for v in (2, 3, 3, 6)))
    # fourth point outside the interval (x, succ x)
    assert not layer_predicate(
        layer_point(0, 5),
        layer_point(1, 2),
        layer_point(1, 3),
        layer_point(1, 3),
        layer_point(1, 6),
    )


def test_layer_predicate_mixed_levels():
    x = layer_point(0, 5)
    ys_vals = (7, 9, 9, 11)  # chart at 5 -> -1/(v-5): -1/2, -1/4, -1/4, -1/6 ... unequal
    ys = [place_in_interval(x, v) for v in ys_vals]
    assert not layer_predicate(x, *ys)
    # solve the fourth value instead so the differences really agree
    y4 = place_in_interval(x, solve_equal_differences(x.point, *(proj(v) for v in (9, 9, 7))))
    assert layer_predicate(x, ys[0], ys[1], ys[1], y4)


# ---------------------------------------------------------------- doubled


def test_doubled_order_and_embed():
    assert embed(1, layer_point(9, 9)) < embed(2, layer_point(-9, "inf"))
    assert embed(1, layer_point(0, 1)).succ() == embed(1, layer_point(1, 1))
    with pytest.raises(ValueError):
        DoubledPoint(3, layer_point(0, 0))


def test_doubled_gate():
    x = layer_point(0, "inf")
    ys = [layer_point(0, v) for v in (1, 2, 3, 4)]
    assert doubled_predicate(embed(1, x), *(embed(1, y) for y in ys))
    assert doubled_predicate(embed(2, x), *(embed(2, y) for y in ys))
    mixed = [embed(1, ys[0]), embed(2, ys[1]), embed(1, ys[2]), embed(1, ys[3])]
    assert not doubled_predicate(embed(1, x), *mixed)
    assert not doubled_predicate(embed(2, x), *(embed(1, y) for y in ys))


# ---------------------------------------------------------------- real line


def test_cot_predicate_engineered_tuple():
    x = 0.3
    o1, o2, o3 = 0.4, 0.9, 1.7
    o4 = math.atan2(1.0, cot(o3) - cot(o1) + cot(o2))
    ys = [x + o for o in (o1, o2, o3, o4)]
    assert cot_predicate(x, *ys)
    assert not cot_predicate(x, ys[0] + 0.01, ys[1], ys[2], ys[3])
    # a point outside the window flips the verdict regardless of the relation
    assert not cot_predicate(x, *ys[:3], x + 3.5)
    assert not cot_predicate(x, *ys[:3], x - 0.2)


def test_cot_predicate_validation():
    with pytest.raises(ValueError):
        cot_predicate(0.1, 0.2, 0.3, 0.4, 0.5, tol=0.0)
    with pytest.raises(ValueError):
        cot_predicate(math.inf, 0.2, 0.3, 0.4, 0.5)


def test_shift_real_is_one_period():
    assert shift_real(0.25) == 0.25 + PERIOD


def test_identification_oracles():
    assert to_layer_point(0.0) == LayerPoint(0, INFINITY)
    assert to_layer_point(PERIOD + 1e-12) == LayerPoint(1, INFINITY)
    assert to_layer_point(-PERIOD - 1e-12) == LayerPoint(-1, INFINITY)
    mid = to_layer_point(PERIOD / 2)
    assert mid.level == 0 and abs(float(mid.point.value)) <= 1e-9
    neg = to_layer_point(-PERIOD / 4)
    assert neg.level == -1
    assert abs(float(neg.point.value) - 1.0) <= 1e-12


def test_identification_round_trip():
    for x in (0.3, 1.2, 2.9, -0.7, -4.5, 9.1):
        assert math.isclose(from_layer_point(to_layer_point(x)), x, abs_tol=1e-9)
    assert from_layer_point(LayerPoint(2, INFINITY)) == 2 * PERIOD


def test_identification_preserves_order():
    xs = [-4.0, -2.2, -0.4, 0.3, 1.0, 2.8, 3.6, 5.9]
    mapped = [to_layer_point(x) for x in xs]
    assert mapped == sorted(mapped)


def test_layer_predicate_float_matches_exact_on_rational_points():
    x = layer_point(0, "inf")
    ys = [layer_point(0, v) for v in (1, 2, 3, 4)]
    assert layer_predicate_float(x, *ys)
    assert layer_predicate(x, *ys)
    bad = [layer_point(0, v) for v in (1, 2, 3, 5)]
    assert not layer_predicate_float(x, *bad)


def test_transport_of_engineered_tuple():
    x = 0.3
    o1, o2, o3 = 0.4, 0.9, 1.7
    o4 = math.atan2(1.0, cot(o3) - cot(o1) + cot(o2))
    ys = [x + o for o in (o1, o2, o3, o4)]
    assert cot_predicate(x, *ys)
    assert layer_predicate_float(to_layer_point(x), *(to_layer_point(y) for y in ys))


@given(st.floats(min_value=-10.0, max_value=10.0))
def test_round_trip_away_from_poles(x):
    if abs(x - round(x / PERIOD) * PERIOD) < 1e-3:
        return
    assert math.isclose(from_layer_point(to_layer_point(x)), x, abs_tol=1e-9)
