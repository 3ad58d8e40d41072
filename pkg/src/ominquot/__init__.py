"""Exact structures on the projective line, a quotient no point set codes,
and seeded verification suites for all of it."""

from .automorphisms import (
    AffineMap,
    FixedPointKind,
    FixedPointSet,
    fixed_points,
    translate_real,
    transported_translation,
)
from .imaginaries import (
    MUTATIONS,
    ClassInvariant,
    NotInXError,
    NotInYError,
    ObstructionCertificate,
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
    SingularMatrixError,
    affine_map,
    canonical_to_infinity,
    cot_conjugation_map,
    proj,
)
from .pregeometry import (
    AffineForm,
    Imaginary,
    InvariantNotDefinableError,
    RankCertificate,
    TooLargeError,
    extract_basis,
    generator,
    in_closure,
    rank,
    rank_by_enumeration,
    scalar,
)
from .report import Check, VerdictReport, merge_checks
from .structures import (
    PERIOD,
    DegenerateFiberError,
    DoubledPoint,
    LayerPoint,
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
    shift_real,
    solve_equal_differences,
    to_layer_point,
)
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"
