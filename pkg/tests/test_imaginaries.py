import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ominquot import (
    MUTATIONS,
    AffineMap,
    ClassInvariant,
    NotInXError,
    NotInYError,
    StripPair,
    class_action,
    layer_point,
    map_pair,
    obstruction_certificate,
    pair_invariant,
    pairs_equivalent,
    probe_hausdorff,
    probe_openness,
    triple_invariant,
    triples_equivalent,
)
from ominquot.imaginaries import MUTATION_TARGETS, BASE_POINT

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaps = st.fractions(min_value=Fraction(1, 8), max_value=10, max_denominator=8)


# ---------------------------------------------------------------- strip pairs


def test_strip_pair_requires_order():
    with pytest.raises(NotInXError):
        StripPair(3, 1)
    with pytest.raises(NotInXError):
        StripPair(1, 1)


def test_pair_equivalence_oracles():
    assert pairs_equivalent(StripPair(1, 3), StripPair(2, 4))
    assert not pairs_equivalent(StripPair(1, 2), StripPair(1, 3))


def test_pair_invariant_oracle():
    assert pair_invariant(StripPair(1, 3)) == ClassInvariant(Fraction(-2))
    assert str(pair_invariant(StripPair(1, 3))) == "-2"


def test_class_invariant_rejects_nonnegative_pair_code():
    with pytest.raises(ValueError):
        ClassInvariant(Fraction(1))
    with pytest.raises(ValueError):
        ClassInvariant(Fraction(0))


def test_class_action_oracle():
    t = AffineMap(2, 5)
    assert class_action(t, ClassInvariant(Fraction(-2))) == ClassInvariant(Fraction(-4))
    anchored = triple_invariant(
        layer_point(0, "inf"), layer_point(0, 1), layer_point(0, 2)
    )
    with pytest.raises(ValueError):
        class_action(t, anchored)


@given(rationals, gaps, rationals, gaps)
def test_equivalence_iff_equal_difference(x1, g1, x2, g2):
    p = StripPair(x1, x1 + g1)
    q = StripPair(x2, x2 + g2)
    assert pairs_equivalent(p, q) == (pair_invariant(p) == pair_invariant(q))
    assert pairs_equivalent(p, q) == (g1 == g2)


@given(
    st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8),
    rationals,
    rationals,
    gaps,
)
def test_map_pair_equivariant(a, b, x, g):
    t = AffineMap(a, b)
    p = StripPair(x, x + g)
    assert pair_invariant(map_pair(t, p)) == class_action(t, pair_invariant(p))


# ---------------------------------------------------------------- triples


def test_triple_validation():
    a = layer_point(0, "inf")
    b = layer_point(0, 1)
    c = layer_point(0, 2)
    with pytest.raises(NotInYError):
        triples_equivalent((a, c, b), (a, b, c))
    with pytest.raises(NotInYError):
        triple_invariant(a, b, layer_point(1, "inf"))


def test_triple_invariant_oracles():
    inv = triple_invariant(layer_point(0, "inf"), layer_point(0, 1), layer_point(0, 2))
    assert inv.base == BASE_POINT
    assert inv.d == -1
    inv2 = triple_invariant(layer_point(0, 0), layer_point(0, 2), layer_point(0, 3))
    # chart -1/z: f(2) - f(3) = -1/2 + 1/3
    assert inv2.d == Fraction(-1, 6)


def test_triples_equivalent_iff_same_invariant():
    a = layer_point(0, "inf")
    t1 = (a, layer_point(0, 1), layer_point(0, 2))
    t2 = (a, layer_point(0, 5), layer_point(0, 6))
    t3 = (a, layer_point(0, 5), layer_point(0, 7))
    assert triples_equivalent(t1, t2)
    assert triple_invariant(*t1) == triple_invariant(*t2)
    assert not triples_equivalent(t1, t3)
    assert triple_invariant(*t1) != triple_invariant(*t3)
    shifted = tuple(p.succ() for p in t1)
    assert not triples_equivalent(t1, shifted)
    assert triple_invariant(*t1) != triple_invariant(*shifted)


# ---------------------------------------------------------------- certificate


def test_certificate_valid_by_default():
    cert = obstruction_certificate(seed=0, samples=200)
    assert cert.valid
    assert [v.name for v in cert.verdicts] == [
        "trivial_action_a1",
        "no_fixed_class_a_ne_1",
        "fix_tau11_is_infinity_fiber",
        "fix_tau11_subset_fix_tau20",
    ]


def test_certificate_serializes():
    cert = obstruction_certificate(seed=0, samples=50)
    payload = json.loads(json.dumps(cert.to_dict()))
    assert payload["kind"] == "obstruction-certificate"
    assert payload["valid"] is True
    assert len(payload["verdicts"]) == 4


@pytest.mark.parametrize("mutation", MUTATIONS)
def test_each_mutation_breaks_only_its_target(mutation):
    cert = obstruction_certificate(seed=0, samples=200, mutation=mutation)
    target = MUTATION_TARGETS[mutation]
    assert not cert.valid
    assert not cert.verdict(target).holds
    for v in cert.verdicts:
        if v.name != target:
            assert v.holds


def test_certificate_rejects_bad_inputs():
    with pytest.raises(ValueError):
        obstruction_certificate(samples=0)
    with pytest.raises(ValueError):
        obstruction_certificate(mutation="unknown")


def test_certificate_deterministic():
    c1 = obstruction_certificate(seed=5, samples=100)
    c2 = obstruction_certificate(seed=5, samples=100)
    assert json.dumps(c1.to_dict()) == json.dumps(c2.to_dict())


# ---------------------------------------------------------------- topology


def test_openness_probe_small_grid():
    check = probe_openness(2)
    assert check.id == "quotient_image_openness"
    assert check.samples == 3  # one sub-box pair has an empty image
    assert check.failures == 0


def test_openness_probe_shifted_window():
    check = probe_openness(3, window=(Fraction(1), Fraction(2), Fraction(3), Fraction(4)))
    assert check.failures == 0
    assert check.samples == 9  # x always below y: every sub-box image is nonempty


def test_openness_image_oracle():
    # independent dense sampling for the box (1,2) x (3,4): image must be (-3,-1)
    lo, hi = Fraction(-3), Fraction(-1)
    step = Fraction(1, 40)
    diffs = set()
    x = Fraction(1) + step
    while x < 2:
        y = Fraction(3) + step
        while y < 4:
            if x < y:
                diffs.add(x - y)
            y += step
        x += step
    assert all(lo < d < hi for d in diffs)
    assert min(diffs) == lo + 2 * step
    assert max(diffs) == hi - 2 * step


def test_openness_probe_rejects_bad_window():
    with pytest.raises(ValueError):
        probe_openness(1)
    with pytest.raises(ValueError):
        probe_openness(5, window=(1, 1, 0, 1))


def test_hausdorff_probe():
    check = probe_hausdorff(300, seed=0)
    assert check.id == "hausdorff_separation"
    assert check.failures == 0
    assert 0 < check.samples <= 300


def test_hausdorff_radius_oracle():
    d1, d2 = Fraction(-1), Fraction(-2)
    r = abs(d1 - d2) / 3
    assert (d1 - r, d1 + r) == (Fraction(-4, 3), Fraction(-2, 3))
    assert (d2 - r, d2 + r) == (Fraction(-7, 3), Fraction(-5, 3))
    assert d2 + r < d1 - r  # disjoint with room to spare
