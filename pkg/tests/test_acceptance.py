"""Acceptance gate: nine criteria, each with a pinned budget and wall clock.
Each test prints one ACCEPTANCE line so a log scan shows the verdicts.

Budgets: 10**4 for full suites, 10**3 and 10**2 where a criterion names them.
Tolerance for every floating-point comparison: 1e-9.  All sampling is seeded;
reruns are bit-identical.
"""

import subprocess
import sys
import time

from ominquot.imaginaries import probe_hausdorff, probe_openness
from ominquot.suites import (
    check_affine_layer_preservation,
    check_anchored_triples,
    check_action_equivariance,
    check_basis_certificates,
    check_certificate,
    check_certificate_mutations,
    check_chart_independence,
    check_closure_laws,
    check_cot_chart_exact,
    check_cot_chart_float,
    check_equivalence_laws,
    check_exchange,
    check_invariant_matches,
    check_paired_doubled,
    check_projective_preservation,
    check_rank_oracle,
    check_real_line_transport,
    check_real_translations,
)

SEED = 0
TOLERANCE = 1e-9
FULL = 10_000
LIGHT = 1_000
TINY = 100


def _finish(capsys, n, ok, elapsed, limit, detail):
    verdict = "PASS" if ok and elapsed < limit else "FAIL"
    with capsys.disabled():
        print(f"ACCEPTANCE {n}: {verdict} ({detail}; {elapsed:.2f}s < {limit}s)")
    assert ok, f"criterion {n}: {detail}"
    assert elapsed < limit, f"criterion {n} took {elapsed:.2f}s, limit {limit}s"


def test_acceptance_1_chart_independence(capsys):
    t0 = time.perf_counter()
    check = check_chart_independence(SEED, FULL)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        1,
        check.failures == 0 and check.samples == FULL,
        elapsed,
        5.0,
        f"chart independence exact on {check.samples} instances, "
        f"{check.failures} failures",
    )


def test_acceptance_2_cot_chart(capsys):
    t0 = time.perf_counter()
    exact = check_cot_chart_exact(SEED, LIGHT)
    approx = check_cot_chart_float(SEED, TINY, TOLERANCE)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        2,
        exact.failures == 0 and approx.failures == 0,
        elapsed,
        5.0,
        f"{exact.samples} exact chart identities and {approx.samples} "
        f"binary64 cross-checks at {TOLERANCE}",
    )


def test_acceptance_3_identification_transport(capsys):
    t0 = time.perf_counter()
    check = check_real_line_transport(SEED, LIGHT, TOLERANCE)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        3,
        check.failures == 0 and check.samples == LIGHT,
        elapsed,
        10.0,
        f"order and predicate transport on {check.samples} tuples at {TOLERANCE}",
    )


def test_acceptance_4_automorphism_suites(capsys):
    t0 = time.perf_counter()
    checks = [
        check_projective_preservation(SEED, FULL),
        check_affine_layer_preservation(SEED, FULL),
        check_real_translations(SEED, FULL, TOLERANCE),
        check_paired_doubled(SEED, FULL),
    ]
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        4,
        all(c.failures == 0 and c.samples == FULL for c in checks),
        elapsed,
        30.0,
        "four automorphism families at 10^4 samples each",
    )


def test_acceptance_5_equivalence_and_equivariance(capsys):
    t0 = time.perf_counter()
    laws = check_equivalence_laws(SEED, LIGHT)
    match = check_invariant_matches(SEED, FULL)
    equiv = check_action_equivariance(SEED, FULL)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        5,
        laws.failures == 0 and match.failures == 0 and equiv.failures == 0,
        elapsed,
        10.0,
        f"relation laws on {laws.samples}, invariant match on {match.samples}, "
        f"equivariance on {equiv.samples}",
    )


def test_acceptance_6_obstruction_certificate(capsys):
    t0 = time.perf_counter()
    cert = check_certificate(SEED, FULL)
    mutations = check_certificate_mutations(SEED, FULL)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        6,
        cert.failures == 0 and mutations.failures == 0,
        elapsed,
        1.0,
        "certificate valid and all four designed mutations falsify their targets",
    )


def test_acceptance_7_pregeometry(capsys):
    t0 = time.perf_counter()
    basis = check_basis_certificates(SEED, LIGHT)
    oracle = check_rank_oracle(SEED, LIGHT)
    exchange = check_exchange(SEED, LIGHT)
    closure = check_closure_laws(SEED, LIGHT)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        7,
        all(c.failures == 0 for c in (basis, oracle, exchange, closure)),
        elapsed,
        30.0,
        f"basis postconditions on {basis.samples} instances, rank oracle, "
        "exchange, closure laws",
    )


def test_acceptance_8_topology_probes(capsys):
    t0 = time.perf_counter()
    openness = probe_openness(50)
    separation = probe_hausdorff(LIGHT, SEED)
    elapsed = time.perf_counter() - t0
    _finish(
        capsys,
        8,
        openness.failures == 0 and separation.failures == 0,
        elapsed,
        10.0,
        f"open images on {openness.samples} sub-boxes, separation on "
        f"{separation.samples} class pairs",
    )


def test_acceptance_9_byte_identical_reports(capsys):
    cmd = [
        sys.executable, "-m", "ominquot",
        "verify", "all", "--samples", "400", "--seed", "7", "--format", "json",
    ]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    ok = first.stdout == second.stdout and len(first.stdout) > 0
    with capsys.disabled():
        print(f"ACCEPTANCE 9: {'PASS' if ok else 'FAIL'} (two identical "
              f"invocations, {len(first.stdout)} byte reports compared)")
    assert ok


def test_acceptance_anchored_triples_supplement():
    # same discipline for the anchored-triple code used by the quotient story
    check = check_anchored_triples(SEED, LIGHT)
    assert check.failures == 0
