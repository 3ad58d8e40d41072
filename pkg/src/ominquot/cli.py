"""Command-line harness: verification suites, evaluators, and certificates.

Grammar::

    ominquot verify <suite> [--seed N] [--samples N] [--tolerance X]
                            [--format text|json] [--output PATH]
    ominquot eval <kind> <args...> [--tolerance X]
    ominquot certificate [--seed N] [--samples N] [--output PATH] [--mutate NAME]
    ominquot q2 demo [--generators N] [--seed N]
    ominquot probe topology [--grid N] [--samples N] [--seed N]
                            [--window X0 X1 Y0 Y1] [--format text|json] [--output PATH]

Rational literals use p/q syntax and "inf" denotes the infinity point;
layered-line points use level:value syntax (for example ``0:inf`` or ``1:3/4``).
Literals starting with a minus sign need a ``--`` separator first, as in
``eval invariantX -- -1/2 1/2``.
Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .automorphisms import AffineMap, fixed_points
from .imaginaries import (
    MUTATIONS,
    StripPair,
    obstruction_certificate,
    pair_invariant,
    probe_hausdorff,
    probe_openness,
    triple_invariant,
)
from .moebius import INFINITY, ProjPoint
from .pregeometry import extract_basis, in_closure, rank_by_enumeration
from .report import VerdictReport
from .sampling import random_pregeometry_instance, spawn_rng
from .structures import (
    LayerPoint,
    cot_predicate,
    equal_differences,
    layer_predicate,
    to_layer_point,
)
from .suites import (
    DEFAULT_GRID,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    SUITE_NAMES,
    run_suite,
)

EVAL_KINDS = ("p0", "pM", "pN", "iso", "invariantX", "invariantY", "fixedpoints")

_EVAL_ARITY = {
    "p0": 5,
    "pM": 5,
    "pN": 5,
    "iso": 1,
    "invariantX": 2,
    "invariantY": 3,
    "fixedpoints": 2,
}


class _ParseError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _ParseError(f"not a rational literal: {text!r}") from exc


def _parse_point(text: str) -> ProjPoint:
    if text == "inf":
        return INFINITY
    return ProjPoint(_parse_rational(text))


def _parse_layer(text: str) -> LayerPoint:
    level, sep, value = text.partition(":")
    if not sep:
        raise _ParseError(f"layered points use level:value syntax, got {text!r}")
    try:
        lvl = int(level)
    except ValueError as exc:
        raise _ParseError(f"bad level in {text!r}") from exc
    return LayerPoint(lvl, _parse_point(value))


def _parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise _ParseError(f"not a float literal: {text!r}") from exc


def _emit(payload: str, output: str | None) -> None:
    if output:
        Path(output).write_text(payload)
    else:
        sys.stdout.write(payload)


def _cmd_verify(args) -> int:
    try:
        report = run_suite(
            args.suite,
            seed=args.seed,
            samples=args.samples,
            tolerance=args.tolerance,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = report.render_json() if args.fmt == "json" else report.render_text()
    _emit(payload, args.output)
    return 0 if report.passed else 1


def _cmd_eval(args) -> int:
    kind = args.kind
    raw = args.args
    try:
        want = _EVAL_ARITY[kind]
        if len(raw) != want:
            raise _ParseError(f"{kind} takes {want} arguments, got {len(raw)}")
        if kind == "p0":
            pts = [_parse_point(t) for t in raw]
            print("true" if equal_differences(*pts) else "false")
        elif kind == "pM":
            pts = [_parse_layer(t) for t in raw]
            print("true" if layer_predicate(*pts) else "false")
        elif kind == "pN":
            vals = [_parse_float(t) for t in raw]
            print("true" if cot_predicate(*vals, tol=args.tolerance) else "false")
        elif kind == "iso":
            print(to_layer_point(_parse_float(raw[0])))
        elif kind == "invariantX":
            x, y = (_parse_rational(t) for t in raw)
            print(pair_invariant(StripPair(x, y)))
        elif kind == "invariantY":
            a, b, c = (_parse_layer(t) for t in raw)
            print(triple_invariant(a, b, c))
        else:
            a, b = (_parse_rational(t) for t in raw)
            print(fixed_points(AffineMap(a, b)).describe())
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_certificate(args) -> int:
    try:
        cert = obstruction_certificate(
            seed=args.seed, samples=args.samples, mutation=args.mutate
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(json.dumps(cert.to_dict(), indent=2) + "\n", args.output)
    return 0 if cert.valid else 1


def _cmd_q2_demo(args) -> int:
    if args.generators < 1:
        print("error: --generators must be positive", file=sys.stderr)
        return 2
    rng = spawn_rng(args.seed, "q2-demo")
    x, e = random_pregeometry_instance(
        rng, max_generators=args.generators, max_tuple=args.generators + 2
    )
    cert = extract_basis(x, e)
    chosen = [x[i] for i in cert.a_indices]
    print("tuple:")
    for i, form in enumerate(x):
        print(f"  [{i}] {form}")
    print("class invariants:")
    for inv in e.invariants:
        print(f"  {inv}")
    print(f"independent positions: {list(cert.a_indices)}")
    print(f"dependent positions: {list(cert.c_indices)}")
    print(f"rank over the empty set: {cert.rank_over_empty}")
    print(f"rank over the class: {cert.rank_over_class}")
    covered = sorted(cert.a_indices + cert.c_indices) == list(range(len(x)))
    recoverable = all(
        in_closure(x[j], chosen, e.invariants) for j in cert.c_indices
    )
    print("postconditions:")
    print(f"  positions partition the tuple: {covered}")
    print(
        "  rank unchanged by the class: "
        f"{cert.rank_over_empty == cert.rank_over_class}"
    )
    print(f"  dependents recoverable over the class: {recoverable}")
    if len(x) <= 8:
        print(f"  enumeration oracle rank: {rank_by_enumeration(x, e.invariants)}")
    return 0


def _cmd_probe_topology(args) -> int:
    try:
        if args.window is None:
            window = None
        else:
            window = tuple(_parse_rational(t) for t in args.window)
        checks = [
            probe_openness(args.grid, window) if window else probe_openness(args.grid),
            probe_hausdorff(args.samples, args.seed),
        ]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = VerdictReport(
        suite="topology-probe", seed=args.seed, tolerance=0.0, checks=checks
    )
    payload = report.render_json() if args.fmt == "json" else report.render_text()
    _emit(payload, args.output)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ominquot",
        description="Exact projective-line structures, their quotients, and "
        "seeded verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=("all",) + SUITE_NAMES)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    verify.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    verify.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt"
    )
    verify.add_argument("--output", help="write the report to a file")
    verify.set_defaults(handler=_cmd_verify)

    ev = sub.add_parser("eval", help="evaluate one predicate or invariant")
    ev.add_argument("kind", choices=EVAL_KINDS)
    ev.add_argument("args", nargs="*")
    ev.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    ev.set_defaults(handler=_cmd_eval)

    cert = sub.add_parser("certificate", help="emit the obstruction certificate")
    cert.add_argument("--seed", type=int, default=DEFAULT_SEED)
    cert.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    cert.add_argument("--output", help="write the certificate to a file")
    cert.add_argument(
        "--mutate",
        choices=MUTATIONS,
        default=None,
        help="inject one designed defect (test hook)",
    )
    cert.set_defaults(handler=_cmd_certificate)

    q2 = sub.add_parser("q2", help="pregeometry demonstrations")
    q2sub = q2.add_subparsers(dest="q2_command", required=True)
    demo = q2sub.add_parser("demo", help="extract a basis from a random instance")
    demo.add_argument("--generators", type=int, default=4)
    demo.add_argument("--seed", type=int, default=DEFAULT_SEED)
    demo.set_defaults(handler=_cmd_q2_demo)

    probe = sub.add_parser("probe", help="sampled probe operations")
    psub = probe.add_subparsers(dest="probe_command", required=True)
    topo = psub.add_parser("topology", help="openness and separation probes")
    topo.add_argument("--grid", type=int, default=DEFAULT_GRID)
    topo.add_argument("--samples", type=int, default=1000)
    topo.add_argument("--seed", type=int, default=DEFAULT_SEED)
    topo.add_argument(
        "--window",
        nargs=4,
        metavar=("X0", "X1", "Y0", "Y1"),
        help="rational bounds of the sampled box",
    )
    topo.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt"
    )
    topo.add_argument("--output", help="write the report to a file")
    topo.set_defaults(handler=_cmd_probe_topology)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args)
