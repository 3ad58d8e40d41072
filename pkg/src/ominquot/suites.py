"""Verification suites: seeded sampling checks for the library's structural claims.

Each check owns a deterministic random stream, counts failures over a sample
budget, and reports a witness for the first failure.  Suite assembly scales
budgets so that a base budget of 10000 gives the intended per-check counts.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .automorphisms import (
    AffineMap,
    check_projective_automorphism,
    transported_translation,
    translate_real,
)
from .imaginaries import (
    MUTATION_TARGETS,
    MUTATIONS,
    StripPair,
    class_action,
    map_pair,
    obstruction_certificate,
    pair_invariant,
    pairs_equivalent,
    probe_hausdorff,
    probe_openness,
    triple_invariant,
    triples_equivalent,
)
from .moebius import (
    IDENTITY,
    INFINITY,
    MoebiusMap,
    ProjPoint,
    affine_map,
    canonical_to_infinity,
    cot_conjugation_map,
)
from .pregeometry import (
    Imaginary,
    InvariantNotDefinableError,
    extract_basis,
    generator,
    in_closure,
    rank,
    rank_by_enumeration,
    scalar,
)
from .report import Check, VerdictReport, merge_checks
from .sampling import (
    random_affine_form,
    random_fraction,
    random_layer_point,
    random_layer_tuple,
    random_moebius,
    random_point,
    random_point_between,
    random_positive_fraction,
    random_pregeometry_instance,
    random_predicate_tuple,
    spawn_rng,
)
from .structures import (
    PERIOD,
    DoubledPoint,
    LayerPoint,
    cot,
    cot_predicate,
    doubled_predicate,
    embed,
    equal_differences,
    from_layer_point,
    layer_predicate,
    layer_predicate_float,
    place_in_interval,
    shift_real,
    solve_equal_differences,
    to_layer_point,
)

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
    "DEFAULT_TOLERANCE",
    "DEFAULT_GRID",
    "DEFAULT_WINDOW",
    "SUITE_NAMES",
    "run_suite",
]

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 10000
DEFAULT_TOLERANCE = 1e-9
DEFAULT_GRID = 50
DEFAULT_WINDOW = (Fraction(0), Fraction(1), Fraction(0), Fraction(1))

SUITE_NAMES = (
    "moebius",
    "p0",
    "structures",
    "automorphisms",
    "imaginaries",
    "pregeometry",
    "topology",
)


# ---------------------------------------------------------------- moebius


def check_group_laws(seed, samples) -> Check:
    """Associativity, identity, and inverses for map composition."""
    rng = spawn_rng(seed, "group-laws")
    failures = 0
    witness = None
    for _ in range(samples):
        m1, m2, m3 = (random_moebius(rng) for _ in range(3))
        ok = (m1 @ m2) @ m3 == m1 @ (m2 @ m3)
        ok = ok and m1 @ IDENTITY == m1 == IDENTITY @ m1
        ok = ok and m1 @ m1.inverse() == IDENTITY == m1.inverse() @ m1
        if not ok:
            failures += 1
            if witness is None:
                witness = f"m1={m1} m2={m2} m3={m3}"
    return Check(
        "group_laws",
        "fractional linear maps form a group under composition",
        samples,
        failures,
        witness,
    )


def check_action_compatibility(seed, samples) -> Check:
    """Matrix product agrees with composition of the projective action."""
    rng = spawn_rng(seed, "action-compatibility")
    failures = 0
    witness = None
    for _ in range(samples):
        m1, m2 = random_moebius(rng), random_moebius(rng)
        p = random_point(rng, 0.2)
        if (m1 @ m2)(p) != m1(m2(p)):
            failures += 1
            if witness is None:
                witness = f"m1={m1} m2={m2} p={p}"
    return Check(
        "action_compatibility",
        "matrix composition matches composition of the projective action",
        samples,
        failures,
        witness,
    )


def check_affine_stabilizer(seed, samples) -> Check:
    """A map fixes the infinity point exactly when it is affine."""
    rng = spawn_rng(seed, "affine-stabilizer")
    failures = 0
    witness = None
    for i in range(samples):
        if i % 2 == 0:
            m = affine_map(
                random_fraction(rng) or Fraction(1), random_fraction(rng)
            )
        else:
            m = random_moebius(rng)
        if m.is_affine != m(INFINITY).is_infinity:
            failures += 1
            if witness is None:
                witness = f"m={m}"
    return Check(
        "affine_stabilizer",
        "the stabilizer of the infinity point is the affine subgroup",
        samples,
        failures,
        witness,
    )


def check_scalar_canonical_form(seed, samples) -> Check:
    """Rescaled matrices canonicalize to the same map with the same det sign."""
    rng = spawn_rng(seed, "scalar-canonical-form")
    failures = 0
    witness = None
    for _ in range(samples):
        while True:
            a, b, c, d = (random_fraction(rng) for _ in range(4))
            if a * d != b * c:
                break
        s = Fraction(0)
        while s == 0:
            s = random_fraction(rng)
        m1 = MoebiusMap(a, b, c, d)
        m2 = MoebiusMap(s * a, s * b, s * c, s * d)
        ok = m1 == m2 and (m1.det > 0) == (m2.det > 0)
        ok = ok and (m1.det > 0) == (a * d - b * c > 0)
        if not ok:
            failures += 1
            if witness is None:
                witness = f"entries=({a},{b},{c},{d}) scale={s}"
    return Check(
        "scalar_canonical_form",
        "matrices equal up to scale canonicalize identically, keeping the determinant sign",
        samples,
        failures,
        witness,
    )


def check_cot_chart_exact(seed, samples) -> Check:
    """Exact identities of the cotangent-conjugation chart family."""
    rng = spawn_rng(seed, "cot-chart-exact")
    failures = 0
    witness = None
    for i in range(samples):
        c = random_fraction(rng)
        g = cot_conjugation_map(c)
        anchor = ProjPoint(-c)
        ok = g(anchor).is_infinity and g(INFINITY) == anchor
        ok = ok and g @ g == IDENTITY and g.det < 0
        if i % 2 == 0:
            us = [random_point(rng) for _ in range(3)]
            if anchor in us:
                us = [ProjPoint(-c + 1), ProjPoint(-c + 2), ProjPoint(-c + 3)]
            tup = [solve_equal_differences(anchor, *us), *us]
        else:
            tup = [random_point(rng) for _ in range(4)]
        ok = ok and equal_differences(anchor, *tup) == equal_differences(
            anchor, *tup, chart=g
        )
        if not ok:
            failures += 1
            if witness is None:
                witness = f"c={c} tuple=({tup[0]}, {tup[1]}, {tup[2]}, {tup[3]})"
    return Check(
        "cot_chart_exact",
        "the cotangent chart sends -c to infinity, is an involution, and is a valid chart",
        samples,
        failures,
        witness,
    )


def check_cot_chart_float(seed, samples, tolerance) -> Check:
    """The chart reproduces cot(x - alpha) from -cot(x) within tolerance."""
    rng = spawn_rng(seed, "cot-chart-float")
    failures = 0
    witness = None
    margin = 0.1
    for _ in range(samples):
        while True:
            alpha = rng.uniform(margin, PERIOD - margin)
            x = rng.uniform(margin, PERIOD - margin)
            if margin < abs(x - alpha) < PERIOD - margin:
                break
        c = Fraction(cot(alpha))
        u = Fraction(-cot(x))
        image = cot_conjugation_map(c)(ProjPoint(u))
        expected = cot(x - alpha)
        ok = not image.is_infinity and math.isclose(
            float(image.value), expected, rel_tol=tolerance, abs_tol=tolerance
        )
        if not ok:
            failures += 1
            if witness is None:
                witness = f"alpha={alpha!r} x={x!r}"
    return Check(
        "cot_chart_float",
        "the chart reproduces cot(x - alpha) from -cot(x) in binary64",
        samples,
        failures,
        witness,
    )


# ---------------------------------------------------------------- p0


def check_chart_independence(seed, samples) -> Check:
    """The predicate verdict is unchanged under any chart sending x to infinity."""
    rng = spawn_rng(seed, "chart-independence")
    failures = 0
    witness = None
    for i in range(samples):
        x, ys = random_predicate_tuple(rng, force_true=(i % 2 == 0))
        a = random_positive_fraction(rng)
        if i % 4 == 3:
            a = -a
        h = affine_map(a, random_fraction(rng))
        chart = h @ canonical_to_infinity(x)
        if equal_differences(x, *ys) != equal_differences(x, *ys, chart=chart):
            failures += 1
            if witness is None:
                witness = f"x={x} ys=({ys[0]}, {ys[1]}, {ys[2]}, {ys[3]}) h={h}"
    return Check(
        "equal_differences_chart_independent",
        "the equal-differences predicate does not depend on the chart choice",
        samples,
        failures,
        witness,
    )


def check_fiber_solution_unique(seed, samples) -> Check:
    """The solved point satisfies the predicate and every perturbation falsifies it."""
    rng = spawn_rng(seed, "fiber-solution-unique")
    failures = 0
    witness = None
    deltas = (Fraction(1), Fraction(-1), Fraction(1, 7), Fraction(-1, 7))
    for _ in range(samples):
        while True:
            x = random_point(rng, 0.2)
            rest = [random_point(rng) for _ in range(3)]
            if x not in rest:
                break
        y1 = solve_equal_differences(x, *rest)
        ok = equal_differences(x, y1, *rest)
        f = canonical_to_infinity(x)
        finv = f.inverse()
        t = f(y1).value
        for delta in deltas:
            ok = ok and not equal_differences(x, finv(ProjPoint(t + delta)), *rest)
            if not y1.is_infinity:
                ok = ok and not equal_differences(
                    x, ProjPoint(y1.value + delta), *rest
                )
        if not ok:
            failures += 1
            if witness is None:
                witness = f"x={x} data=({rest[0]}, {rest[1]}, {rest[2]})"
    return Check(
        "fiber_solution_unique",
        "each difference equation has exactly one solution over its data",
        samples,
        failures,
        witness,
    )


# ---------------------------------------------------------------- structures

_POLE_MARGIN = 0.05
_WINDOW_MARGIN = 0.05


def _away_from_poles(v: float, margin: float = _POLE_MARGIN) -> bool:
    return abs(v - round(v / PERIOD) * PERIOD) > margin


def _sample_angle(rng) -> float:
    while True:
        x = rng.uniform(-4.0 * PERIOD, 4.0 * PERIOD)
        if _away_from_poles(x):
            return x


def _sample_window_offset(rng) -> float:
    return rng.uniform(_WINDOW_MARGIN, PERIOD - _WINDOW_MARGIN)


def _engineer_true_real_tuple(rng, x):
    """Four points in (x, x + pi) satisfying the cotangent relation, or None."""
    for _ in range(32):
        o1, o2, o3 = (_sample_window_offset(rng) for _ in range(3))
        o4 = math.atan2(1.0, cot(o3) - cot(o1) + cot(o2))
        if not (_WINDOW_MARGIN < o4 < PERIOD - _WINDOW_MARGIN):
            continue
        ys = [x + o1, x + o2, x + o3, x + o4]
        if all(_away_from_poles(y) for y in ys):
            return ys
    return None


def _transport_residuals(x, ys):
    """Defect of the difference relation on both sides of the identification."""
    n_vals = [cot(y - x) for y in ys]
    r_n = abs((n_vals[0] - n_vals[1]) - (n_vals[2] - n_vals[3]))
    u = float(to_layer_point(x).point.value)
    m_vals = []
    for y in ys:
        fiber = to_layer_point(y).point
        m_vals.append(0.0 if fiber.is_infinity else -1.0 / (float(fiber.value) - u))
    r_m = abs((m_vals[0] - m_vals[1]) - (m_vals[2] - m_vals[3]))
    return r_n, r_m


def _unambiguous(r_n: float, r_m: float, tol: float) -> bool:
    """Ambiguity guard: keep a tuple only when both residuals are decisively
    below tol/1000 or decisively above tol*1000, so binary64 noise can never
    flip a verdict."""
    lo, hi = tol / 1000.0, tol * 1000.0
    return (r_n <= lo and r_m <= lo) or (r_n >= hi and r_m >= hi)


def check_succ_order_automorphism(seed, samples) -> Check:
    """The level shift preserves order and carries intervals to intervals."""
    rng = spawn_rng(seed, "succ-order-automorphism")
    failures = 0
    witness = None
    for _ in range(samples):
        p = random_layer_point(rng, 3)
        q = random_layer_point(rng, 3)
        ok = (p < q) == (p.succ() < q.succ())
        ok = ok and p < p.succ() and p.succ().pred() == p
        x = random_layer_point(rng)
        y = random_point_between(rng, x)
        ok = ok and x < y < x.succ()
        ok = ok and x.succ() < y.succ() < x.succ().succ()
        if not ok:
            failures += 1
            if witness is None:
                witness = f"p={p} q={q} x={x} y={y}"
    return Check(
        "succ_order_automorphism",
        "the level shift is an order automorphism of the layered line",
        samples,
        failures,
        witness,
    )


def check_real_line_transport(seed, samples, tolerance) -> Check:
    """Order, pole snapping, round trips, and the predicate all transport
    through the floor/-cot identification (ambiguous tuples are skipped)."""
    rng = spawn_rng(seed, "real-line-transport")
    failures = 0
    witness = None
    kept = 0
    attempts = 0
    while kept < samples and attempts < samples * 20:
        attempts += 1
        x = _sample_angle(rng)
        y = _sample_angle(rng)
        ok = True
        if abs(x - y) > 1e-6:
            ok = (x < y) == (to_layer_point(x) < to_layer_point(y))
        ok = ok and math.isclose(
            from_layer_point(to_layer_point(x)), x, rel_tol=tolerance, abs_tol=tolerance
        )
        k = rng.randint(-3, 3)
        ok = ok and to_layer_point(k * PERIOD + rng.uniform(-1e-10, 1e-10)) == LayerPoint(
            k, INFINITY
        )
        if not ok:
            kept += 1
            failures += 1
            if witness is None:
                witness = f"order/pole stage x={x!r} y={y!r}"
            continue
        base = _sample_angle(rng)
        mode = kept % 3
        if mode == 0:
            ys = _engineer_true_real_tuple(rng, base)
            if ys is None:
                continue
        elif mode == 1:
            ys = [base + _sample_window_offset(rng) for _ in range(4)]
            if not all(_away_from_poles(v) for v in ys):
                continue
        else:
            ys = [base + _sample_window_offset(rng) for _ in range(2)]
            ys.append(base + rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 2.5))
            ys.append(base + _sample_window_offset(rng))
            if not all(_away_from_poles(v) for v in ys):
                continue
        if all(base < v < base + PERIOD for v in ys):
            r_n, r_m = _transport_residuals(base, ys)
            if not _unambiguous(r_n, r_m, tolerance):
                continue
        kept += 1
        lhs = cot_predicate(base, *ys, tol=tolerance)
        rhs = layer_predicate_float(
            to_layer_point(base), *(to_layer_point(v) for v in ys), tol=tolerance
        )
        if lhs != rhs:
            failures += 1
            if witness is None:
                witness = f"x={base!r} ys={[f'{v!r}' for v in ys]}"
    return Check(
        "real_line_transport",
        "the floor/-cot identification transports order and the predicate",
        kept,
        failures,
        witness,
    )


def check_doubled_embedding(seed, samples) -> Check:
    """Copy embeddings preserve order, the level shift, and the predicate."""
    rng = spawn_rng(seed, "doubled-embedding")
    failures = 0
    witness = None
    for i in range(samples):
        copy = rng.choice((1, 2))
        p = random_layer_point(rng)
        q = random_layer_point(rng)
        ok = (p < q) == (embed(copy, p) < embed(copy, q))
        ok = ok and embed(1, p) < embed(2, q)
        ok = ok and embed(copy, p.succ()) == embed(copy, p).succ()
        x, ys = random_layer_tuple(rng, force_true=(i % 2 == 0))
        ok = ok and layer_predicate(x, *ys) == doubled_predicate(
            embed(copy, x), *(embed(copy, y) for y in ys)
        )
        if not ok:
            failures += 1
            if witness is None:
                witness = f"copy={copy} p={p} q={q} x={x}"
    return Check(
        "doubled_embedding_atomic",
        "copy embeddings preserve order, shift, and the predicate",
        samples,
        failures,
        witness,
    )


def check_doubled_gate(seed, samples) -> Check:
    """The doubled predicate requires all five points in one copy."""
    rng = spawn_rng(seed, "doubled-gate")
    failures = 0
    witness = None
    for _ in range(samples):
        x, ys = random_layer_tuple(rng, force_true=True)
        ok = layer_predicate(x, *ys)
        ok = ok and doubled_predicate(embed(1, x), *(embed(1, y) for y in ys))
        ok = ok and doubled_predicate(embed(2, x), *(embed(2, y) for y in ys))
        k = rng.randint(0, 3)
        mixed = [embed(2 if j == k else 1, y) for j, y in enumerate(ys)]
        ok = ok and not doubled_predicate(embed(1, x), *mixed)
        ok = ok and not doubled_predicate(embed(2, x), *(embed(1, y) for y in ys))
        if not ok:
            failures += 1
            if witness is None:
                witness = f"x={x} ys=({ys[0]}, {ys[1]}, {ys[2]}, {ys[3]})"
    return Check(
        "doubled_predicate_gate",
        "the doubled predicate is false across copies and agrees within a copy",
        samples,
        failures,
        witness,
    )


# ---------------------------------------------------------------- automorphisms


def check_projective_preservation(seed, samples) -> Check:
    """Named and random fractional linear maps preserve the predicate."""
    named_budget = max(1, samples // 8)
    named = (IDENTITY, affine_map(2, 3), MoebiusMap(0, 1, 1, 0))
    parts = [check_projective_automorphism(g, named_budget, seed) for g in named]
    rng = spawn_rng(seed, "projective-preservation-random")
    budget = max(1, samples - len(named) * named_budget)
    failures = 0
    witness = None
    for i in range(budget):
        g = random_moebius(rng)
        x, ys = random_predicate_tuple(rng, force_true=(i % 2 == 0))
        if equal_differences(x, *ys) != equal_differences(g(x), *(g(y) for y in ys)):
            failures += 1
            if witness is None:
                witness = f"g={g} x={x}"
    parts.append(Check("random", "", budget, failures, witness))
    return merge_checks(
        "projective_maps_preserve_predicate",
        "every fractional linear map preserves the equal-differences predicate",
        parts,
    )


def check_affine_layer_preservation(seed, samples) -> Check:
    """Positive-slope affine maps are automorphisms of the layered line."""
    rng = spawn_rng(seed, "affine-layer-preservation")
    failures = 0
    witness = None
    for i in range(samples):
        t = AffineMap(random_positive_fraction(rng), random_fraction(rng))
        p = random_layer_point(rng)
        q = random_layer_point(rng)
        ok = (p < q) == (t.on_layer(p) < t.on_layer(q))
        ok = ok and t.on_layer(p.succ()) == t.on_layer(p).succ()
        x, ys = random_layer_tuple(rng, force_true=(i % 2 == 0))
        ok = ok and layer_predicate(x, *ys) == layer_predicate(
            t.on_layer(x), *(t.on_layer(y) for y in ys)
        )
        if not ok:
            failures += 1
            if witness is None:
                witness = f"t={t} p={p} q={q} x={x}"
    return Check(
        "affine_maps_preserve_layer_structure",
        "positive affine maps on fibers preserve order, shift, and the predicate",
        samples,
        failures,
        witness,
    )


def check_real_translations(seed, samples, tolerance) -> Check:
    """Translations preserve the real-line structure and act transitively."""
    rng = spawn_rng(seed, "real-translations")
    failures = 0
    witness = None
    kept = 0
    attempts = 0
    while kept < samples and attempts < samples * 20:
        attempts += 1
        alpha = rng.uniform(-5.0, 5.0)
        x = _sample_angle(rng)
        y = _sample_angle(rng)
        ok = True
        if abs(x - y) > 1e-6:
            ok = (x < y) == (translate_real(alpha, x) < translate_real(alpha, y))
        ok = ok and math.isclose(
            translate_real(alpha, shift_real(x)),
            shift_real(translate_real(alpha, x)),
            rel_tol=tolerance,
            abs_tol=tolerance,
        )
        ok = ok and math.isclose(
            translate_real(y - x, x), y, rel_tol=tolerance, abs_tol=tolerance
        )
        base = _sample_angle(rng)
        if kept % 2 == 0:
            ys = _engineer_true_real_tuple(rng, base)
            if ys is None:
                continue
        else:
            ys = [base + _sample_window_offset(rng) for _ in range(4)]
        n_vals = [cot(v - base) for v in ys]
        r_n = abs((n_vals[0] - n_vals[1]) - (n_vals[2] - n_vals[3]))
        if tolerance / 1000.0 < r_n < tolerance * 1000.0:
            continue
        kept += 1
        before = cot_predicate(base, *ys, tol=tolerance)
        after = cot_predicate(
            translate_real(alpha, base),
            *(translate_real(alpha, v) for v in ys),
            tol=tolerance,
        )
        if not ok or before != after:
            failures += 1
            if witness is None:
                witness = f"alpha={alpha!r} x={x!r} base={base!r}"
    return Check(
        "translations_preserve_real_predicate",
        "real translations preserve the cotangent predicate and act transitively",
        kept,
        failures,
        witness,
    )


def check_paired_doubled(seed, samples) -> Check:
    """Independent affine maps on the two copies give doubled automorphisms."""
    rng = spawn_rng(seed, "paired-doubled")
    failures = 0
    witness = None
    for i in range(samples):
        t1 = AffineMap(random_positive_fraction(rng), random_fraction(rng))
        if i % 3 == 0:
            t2 = AffineMap(1, 0)
        else:
            t2 = AffineMap(random_positive_fraction(rng), random_fraction(rng))

        def act(dp: DoubledPoint) -> DoubledPoint:
            inner = t1 if dp.copy == 1 else t2
            return DoubledPoint(dp.copy, inner.on_layer(dp.point))

        p = DoubledPoint(rng.choice((1, 2)), random_layer_point(rng))
        q = DoubledPoint(rng.choice((1, 2)), random_layer_point(rng))
        ok = (p < q) == (act(p) < act(q))
        ok = ok and act(p.succ()) == act(p).succ()
        x, ys = random_layer_tuple(rng, force_true=(i % 2 == 0))
        copy = rng.choice((1, 2))
        dx = embed(copy, x)
        dys = [embed(copy, y) for y in ys]
        ok = ok and doubled_predicate(dx, *dys) == doubled_predicate(
            act(dx), *(act(y) for y in dys)
        )
        ok = ok and t1.on_first_copy(embed(2, x)) == embed(2, x)
        ok = ok and t1.on_first_copy(embed(1, x)) == embed(1, t1.on_layer(x))
        if not ok:
            failures += 1
            if witness is None:
                witness = f"t1={t1} t2={t2} p={p} q={q}"
    return Check(
        "paired_automorphism_doubled",
        "independent affine maps on the two copies are automorphisms of the doubled structure",
        samples,
        failures,
        witness,
    )


def _moderate_layer_point(rng) -> LayerPoint:
    if rng.random() < 0.15:
        return LayerPoint(rng.randint(-2, 2), INFINITY)
    return LayerPoint(
        rng.randint(-2, 2), ProjPoint(Fraction(rng.randint(-32, 32), rng.randint(1, 4)))
    )


def check_second_copy_orbit(seed, samples, tolerance) -> Check:
    """Transported translations fix copy 1 pointwise and move any second-copy
    point to any other, so the second copy is a single orbit."""
    rng = spawn_rng(seed, "second-copy-orbit")
    failures = 0
    witness = None
    for _ in range(samples):
        p = _moderate_layer_point(rng)
        q = _moderate_layer_point(rng)
        act = transported_translation(p, q)
        r = act(p)
        ok = r.level == q.level
        if ok:
            if q.point.is_infinity or r.point.is_infinity:
                ok = q.point.is_infinity and r.point.is_infinity
            else:
                ok = math.isclose(
                    float(r.point.value),
                    float(q.point.value),
                    rel_tol=tolerance,
                    abs_tol=tolerance,
                )

        def doubled_act(dp: DoubledPoint) -> DoubledPoint:
            return dp if dp.copy == 1 else DoubledPoint(2, act(dp.point))

        s1 = _moderate_layer_point(rng)
        s2 = _moderate_layer_point(rng)
        if ok and abs(from_layer_point(s1) - from_layer_point(s2)) > 1e-6:
            ok = (s1 < s2) == (act(s1) < act(s2))
        ok = ok and doubled_act(embed(1, s1)) == embed(1, s1)
        ok = ok and doubled_act(embed(2, p)) == DoubledPoint(2, r)
        if not ok:
            failures += 1
            if witness is None:
                witness = f"p={p} q={q} landed={r}"
    return Check(
        "second_copy_orbit_transitivity",
        "maps fixing the first copy pointwise act transitively on the second copy",
        samples,
        failures,
        witness,
    )


# ---------------------------------------------------------------- imaginaries


def _random_strip_pair(rng) -> StripPair:
    x = random_fraction(rng)
    return StripPair(x, x + random_positive_fraction(rng))


def check_equivalence_laws(seed, samples) -> Check:
    """Reflexivity, symmetry, and transitivity of pair equivalence."""
    rng = spawn_rng(seed, "equivalence-laws")
    failures = 0
    witness = None
    for _ in range(samples):
        p = _random_strip_pair(rng)
        s1 = random_fraction(rng)
        q = StripPair(p.x + s1, p.y + s1)
        s2 = random_fraction(rng)
        r = StripPair(p.x + s2, p.y + s2)
        ok = pairs_equivalent(p, p)
        ok = ok and pairs_equivalent(p, q) and pairs_equivalent(q, r)
        ok = ok and pairs_equivalent(p, r)
        other = _random_strip_pair(rng)
        ok = ok and pairs_equivalent(p, other) == pairs_equivalent(other, p)
        if pairs_equivalent(p, other):
            ok = ok and pairs_equivalent(q, other)
        if not ok:
            failures += 1
            if witness is None:
                witness = f"p={p} q={q} r={r}"
    return Check(
        "equivalence_relation_laws",
        "difference equivalence is reflexive, symmetric, and transitive",
        samples,
        failures,
        witness,
    )


def check_invariant_matches(seed, samples) -> Check:
    """Pair equivalence holds exactly when the difference codes agree."""
    rng = spawn_rng(seed, "invariant-matches")
    failures = 0
    witness = None
    for i in range(samples):
        p = _random_strip_pair(rng)
        if i % 2 == 0:
            s = random_fraction(rng)
            q = StripPair(p.x + s, p.y + s)
        else:
            q = _random_strip_pair(rng)
        try:
            ok = pairs_equivalent(p, q) == (pair_invariant(p) == pair_invariant(q))
        except AssertionError:
            ok = False
        if not ok:
            failures += 1
            if witness is None:
                witness = f"p={p} q={q}"
    return Check(
        "predicate_matches_difference_invariant",
        "the anchored predicate equals equality of exact differences",
        samples,
        failures,
        witness,
    )


def check_action_equivariance(seed, samples) -> Check:
    """The class map intertwines affine maps with scaling of codes."""
    rng = spawn_rng(seed, "action-equivariance")
    unit = AffineMap(1, 1)
    doubler = AffineMap(2, 0)
    failures = 0
    witness = None
    for _ in range(samples):
        t = AffineMap(random_positive_fraction(rng), random_fraction(rng))
        p = _random_strip_pair(rng)
        inv = pair_invariant(p)
        ok = pair_invariant(map_pair(t, p)) == class_action(t, inv)
        ok = ok and class_action(unit, inv) == inv
        ok = ok and class_action(doubler, inv) != inv
        if not ok:
            failures += 1
            if witness is None:
                witness = f"t={t} p={p}"
    return Check(
        "class_action_equivariance",
        "the class map intertwines affine maps with scaling of invariants",
        samples,
        failures,
        witness,
    )


def _between_pair(rng, a: LayerPoint):
    for _ in range(16):
        b = random_point_between(rng, a)
        c = random_point_between(rng, a)
        if b == c:
            continue
        if c < b:
            b, c = c, b
        return b, c
    if a.point.is_infinity:
        return LayerPoint(a.level, ProjPoint(Fraction(0))), LayerPoint(
            a.level, ProjPoint(Fraction(1))
        )
    v = a.point.value
    return LayerPoint(a.level, ProjPoint(v + 1)), LayerPoint(a.level, ProjPoint(v + 2))


def _matched_triple(rng, a: LayerPoint, b: LayerPoint, c: LayerPoint):
    """A second (b', c') pair between a and succ(a) with the same chart difference."""
    f = canonical_to_infinity(a.point)
    d = f(b.point).value - f(c.point).value
    finv = f.inverse()
    for _ in range(16):
        b2 = random_point_between(rng, a)
        w = finv(ProjPoint(f(b2.point).value - d))
        if w == a.point:
            continue
        c2 = place_in_interval(a, w)
        if b2 < c2:
            return b2, c2
    return b, c


def check_anchored_triples(seed, samples) -> Check:
    """Anchored triples are equivalent exactly when their codes agree."""
    rng = spawn_rng(seed, "anchored-triples")
    failures = 0
    witness = None
    for i in range(samples):
        a = random_layer_point(rng)
        b, c = _between_pair(rng, a)
        t1 = (a, b, c)
        if i % 5 == 4:
            t2 = (a.succ(), b.succ(), c.succ())
        elif i % 2 == 0:
            b2, c2 = _matched_triple(rng, a, b, c)
            t2 = (a, b2, c2)
        else:
            b2, c2 = _between_pair(rng, a)
            t2 = (a, b2, c2)
        ok = triples_equivalent(t1, t2) == (
            triple_invariant(*t1) == triple_invariant(*t2)
        )
        ok = ok and triples_equivalent(t1, t1)
        ok = ok and triples_equivalent(t1, t2) == triples_equivalent(t2, t1)
        if not ok:
            failures += 1
            if witness is None:
                witness = f"t1=({t1[0]}, {t1[1]}, {t1[2]}) t2=({t2[0]}, {t2[1]}, {t2[2]})"
    return Check(
        "anchored_triple_invariant",
        "anchored triples are equivalent exactly when their chart invariants agree",
        samples,
        failures,
        witness,
    )


def check_certificate(seed, samples) -> Check:
    """The obstruction certificate verifies with all four verdicts."""
    cert = obstruction_certificate(seed=seed, samples=samples)
    bad = [v for v in cert.verdicts if not v.holds]
    return Check(
        "ei_failure_certificate",
        "difference classes have a stabilizer pattern no point set realizes",
        samples,
        len(bad),
        bad[0].detail if bad else None,
    )


def check_certificate_mutations(seed, samples) -> Check:
    """Each designed mutation breaks exactly its targeted verdict."""
    budget = max(1, samples // 10)
    failures = 0
    witness = None
    for mutation in MUTATIONS:
        cert = obstruction_certificate(seed=seed, samples=budget, mutation=mutation)
        target = MUTATION_TARGETS[mutation]
        ok = not cert.valid and not cert.verdict(target).holds
        ok = ok and all(v.holds for v in cert.verdicts if v.name != target)
        if not ok:
            failures += 1
            if witness is None:
                witness = f"mutation={mutation}"
    return Check(
        "certificate_mutation_suite",
        "each certificate verdict fails under its designed mutation",
        len(MUTATIONS),
        failures,
        witness,
    )


# ---------------------------------------------------------------- pregeometry


def check_closure_laws(seed, samples) -> Check:
    """Closure is reflexive, monotone, contains scalars, and is idempotent."""
    rng = spawn_rng(seed, "closure-laws")
    failures = 0
    witness = None
    for _ in range(samples):
        gens = rng.randint(1, 5)
        s = [random_affine_form(rng, gens) for _ in range(rng.randint(0, 3))]
        ctx = [random_affine_form(rng, gens) for _ in range(rng.randint(0, 2))]
        m = random_affine_form(rng, gens)
        extra = random_affine_form(rng, gens)
        ok = in_closure(scalar(random_fraction(rng)), [], ctx)
        ok = ok and all(in_closure(f, s, ctx) for f in s)
        if in_closure(m, s, ctx):
            ok = ok and in_closure(m, s + [extra], ctx)
        combo = scalar(random_fraction(rng))
        for f in s:
            combo = combo + random_fraction(rng, 3, 2) * f
        ok = ok and in_closure(combo, s, ctx)
        ok = ok and in_closure(m, s + [combo], ctx) == in_closure(m, s, ctx)
        if not ok:
            failures += 1
            if witness is None:
                witness = f"s={[str(f) for f in s]} m={m}"
    return Check(
        "closure_monotone_idempotent",
        "affine-span closure is monotone, idempotent, and contains scalars",
        samples,
        failures,
        witness,
    )


def check_exchange(seed, samples) -> Check:
    """p in cl(S + q) \\ cl(S) forces q in cl(S + p)."""
    rng = spawn_rng(seed, "exchange")
    failures = 0
    witness = None
    premises = 0
    for i in range(samples):
        gens = rng.randint(2, 4)
        s = [random_affine_form(rng, gens) for _ in range(rng.randint(0, 2))]
        if i % 2 == 0:
            q = generator(rng.randrange(gens))
            k = Fraction(0)
            while k == 0:
                k = random_fraction(rng, 3, 2)
            p = k * q + scalar(random_fraction(rng, 3, 2))
            if s:
                p = p + random_fraction(rng, 2, 2) * s[0]
        else:
            q = random_affine_form(rng, gens)
            p = random_affine_form(rng, gens)
        if not in_closure(p, s) and in_closure(p, s + [q]):
            premises += 1
            if not in_closure(q, s + [p]):
                failures += 1
                if witness is None:
                    witness = f"s={[str(f) for f in s]} p={p} q={q}"
    if premises < max(1, samples // 8):
        failures += 1
        if witness is None:
            witness = f"premise fired only {premises} times"
    return Check(
        "exchange_property",
        "affine-span closure satisfies the exchange law",
        samples,
        failures,
        witness,
    )


def check_basis_certificates(seed, samples) -> Check:
    """Basis extraction postconditions, re-verified from primitives."""
    rng = spawn_rng(seed, "basis-extraction")
    failures = 0
    witness = None
    for i in range(samples):
        x, e = random_pregeometry_instance(rng)
        ok = True
        try:
            cert = extract_basis(x, e)
        except InvariantNotDefinableError:
            ok = False
        else:
            chosen = [x[j] for j in cert.a_indices]
            ok = sorted(cert.a_indices + cert.c_indices) == list(range(len(x)))
            ok = ok and all(in_closure(inv, x) for inv in e.invariants)
            ok = ok and all(
                in_closure(x[j], chosen, e.invariants) for j in cert.c_indices
            )
            ok = ok and rank(chosen) == len(chosen) == cert.rank_over_empty
            ok = ok and rank(chosen, e.invariants) == len(chosen) == cert.rank_over_class
            ok = ok and rank(x, e.invariants) == len(chosen)
        if ok and i % 8 == 7:
            used = 1 + max((k for f in x for k, _ in f.coeffs), default=-1)
            alien = Imaginary((generator(used + 1),))
            try:
                extract_basis(x, alien)
                ok = False
            except InvariantNotDefinableError:
                pass
        if not ok:
            failures += 1
            if witness is None:
                witness = f"x={[str(f) for f in x]} e={e}"
    return Check(
        "basis_certificate_postconditions",
        "greedy basis extraction satisfies definability and rank equalities",
        samples,
        failures,
        witness,
    )


def check_rank_oracle(seed, samples) -> Check:
    """Elimination rank equals the brute-force independent-subset rank."""
    rng = spawn_rng(seed, "rank-oracle")
    failures = 0
    witness = None
    for _ in range(samples):
        gens = rng.randint(1, 4)
        forms = [random_affine_form(rng, gens) for _ in range(rng.randint(1, 5))]
        ctx = [random_affine_form(rng, gens) for _ in range(rng.randint(0, 2))]
        if rank(forms, ctx) != rank_by_enumeration(forms, ctx):
            failures += 1
            if witness is None:
                witness = f"forms={[str(f) for f in forms]}"
    return Check(
        "rank_matches_enumeration_oracle",
        "elimination rank equals brute-force independent-subset rank",
        samples,
        failures,
        witness,
    )


# ---------------------------------------------------------------- assembly


def _suite_moebius(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    tiny = max(1, samples // 100)
    return [
        check_group_laws(seed, samples),
        check_action_compatibility(seed, samples),
        check_affine_stabilizer(seed, samples),
        check_scalar_canonical_form(seed, samples),
        check_cot_chart_exact(seed, light),
        check_cot_chart_float(seed, tiny, tolerance),
    ]


def _suite_p0(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    return [
        check_chart_independence(seed, samples),
        check_fiber_solution_unique(seed, light),
    ]


def _suite_structures(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    return [
        check_succ_order_automorphism(seed, samples),
        check_real_line_transport(seed, light, tolerance),
        check_doubled_embedding(seed, samples),
        check_doubled_gate(seed, light),
    ]


def _suite_automorphisms(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    return [
        check_projective_preservation(seed, samples),
        check_affine_layer_preservation(seed, samples),
        check_real_translations(seed, samples, tolerance),
        check_paired_doubled(seed, samples),
        check_second_copy_orbit(seed, light, tolerance),
    ]


def _suite_imaginaries(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    return [
        check_equivalence_laws(seed, light),
        check_invariant_matches(seed, samples),
        check_action_equivariance(seed, samples),
        check_anchored_triples(seed, light),
        check_certificate(seed, samples),
        check_certificate_mutations(seed, samples),
    ]


def _suite_pregeometry(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    return [
        check_closure_laws(seed, light),
        check_exchange(seed, light),
        check_basis_certificates(seed, light),
        check_rank_oracle(seed, light),
    ]


def _suite_topology(seed, samples, tolerance, grid, window):
    light = max(1, samples // 10)
    return [
        probe_openness(grid, window),
        probe_hausdorff(light, seed),
    ]


_BUILDERS = {
    "moebius": _suite_moebius,
    "p0": _suite_p0,
    "structures": _suite_structures,
    "automorphisms": _suite_automorphisms,
    "imaginaries": _suite_imaginaries,
    "pregeometry": _suite_pregeometry,
    "topology": _suite_topology,
}


def run_suite(
    name: str,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    tolerance: float = DEFAULT_TOLERANCE,
    grid: int = DEFAULT_GRID,
    window=DEFAULT_WINDOW,
) -> VerdictReport:
    """Run one suite (or ``"all"``) and return its report."""
    if name != "all" and name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}")
    if samples < 1:
        raise ValueError("samples must be positive")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if grid < 2:
        raise ValueError("grid must be at least 2")
    checks = []
    for part in SUITE_NAMES if name == "all" else (name,):
        checks.extend(_BUILDERS[part](seed, samples, tolerance, grid, window))
    return VerdictReport(suite=name, seed=seed, tolerance=tolerance, checks=checks)
