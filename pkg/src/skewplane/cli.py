"""Command-line front end.

Commands:

    eval       evaluate an expression over a chosen backend
    construct  trace the geometric addition/multiplication of two line
               points, optionally rendering the construction to SVG
    verify     run the cross-ratio map verification reports on a base
    desargues  validate a labeled configuration file and test the
               parallel-conclusion
    selftest   run the package's full invariant battery

Exit codes: 0 success / all checks pass, 1 a verification reported a
failure (or a Desargues conclusion came back false), 2 usage or parse
errors (including unsupported SVG backends), 3 singular or degenerate
mathematical input.  Every core error surfaces with its class name and
the offending values.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .constructions import (
    CONCURRENT,
    PARALLEL,
    DesarguesConfig,
    LineFrame,
    check_desargues,
    trace_addition,
    trace_multiplication,
    validate_desargues_config,
)
from .errors import (
    AuxOnBaseLineError,
    BackendMismatchError,
    CoincidentPointsError,
    DegenerateConstructionError,
    ExpressionSyntaxError,
    IdenticalLinesError,
    InvalidBaseError,
    InvalidConfigurationError,
    NoSolutionError,
    ParallelLinesError,
    PointOffBaseLineError,
    SingularArgumentError,
    SingularCrossRatioError,
    UnderdeterminedError,
    UnsupportedBackendError,
    ZeroDenominatorPointError,
    ZeroInverseError,
    ZeroValueNotInvertibleError,
)
from .expressions import (
    evaluate_expression,
    parse_expression,
    parse_point,
    parse_scalar,
    parse_scalar_list,
)
from .maps import (
    CrossRatioBase,
    Family,
    sample_arguments,
    verify_addition_structure,
    verify_distributive,
    verify_multiplicative_group,
)
from .plane import is_parallel, line_through
from .scalars import PrimeField, QuaternionField, RationalField, ScalarField
from .selftest import run_selftest
from .svg import emit_svg

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SINGULAR = 3

#: Degenerate or singular mathematical input (not a usage mistake).
_SINGULAR_ERRORS = (
    SingularCrossRatioError,
    ZeroDenominatorPointError,
    CoincidentPointsError,
    SingularArgumentError,
    ZeroValueNotInvertibleError,
    ZeroInverseError,
    InvalidBaseError,
    PointOffBaseLineError,
    AuxOnBaseLineError,
    DegenerateConstructionError,
    InvalidConfigurationError,
    ParallelLinesError,
    IdenticalLinesError,
    NoSolutionError,
    UnderdeterminedError,
)


def parse_backend(name: str) -> ScalarField:
    """Backend selector: ``rational``, ``quaternion``, or ``gfp(p)``."""
    text = name.strip()
    if text == "rational":
        return RationalField()
    if text == "quaternion":
        return QuaternionField()
    if text.startswith("gfp(") and text.endswith(")"):
        body = text[4:-1]
        try:
            p = int(body)
        except ValueError:
            raise ExpressionSyntaxError(f"bad prime {body!r} in backend selector", 4) from None
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ExpressionSyntaxError(str(exc), 4) from None
    raise ExpressionSyntaxError(
        f"unknown backend {name!r} (expected rational, gfp(p) or quaternion)", 0)


def load_desargues_config(path: str, field: ScalarField) -> DesarguesConfig:
    """Read the flat one-record-per-line configuration format.

    Lines: ``A=(x,y)`` .. ``C'=(x,y)`` and ``variant=parallel`` or
    ``variant=concurrent P=(x,y)``.  Blank lines and ``#`` comments are
    ignored.
    """
    with open(path, "r", encoding="utf-8") as handle:
        raw_lines = handle.read().splitlines()
    entries = {}
    variant = None
    center = None
    for number, raw in enumerate(raw_lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not value:
            raise ExpressionSyntaxError(f"config line {number} is not KEY=VALUE", 0)
        if key == "variant":
            if value == PARALLEL:
                variant = PARALLEL
            elif value.startswith(CONCURRENT):
                variant = CONCURRENT
                rest = value[len(CONCURRENT):].strip()
                if not rest.startswith("P="):
                    raise ExpressionSyntaxError(
                        f"config line {number}: concurrent variant needs P=(x,y)", 0)
                center = parse_point(rest[2:].strip(), field)
            else:
                raise ExpressionSyntaxError(
                    f"config line {number}: unknown variant {value!r}", 0)
        elif key in ("A", "B", "C", "A'", "B'", "C'"):
            entries[key] = parse_point(value, field)
        else:
            raise ExpressionSyntaxError(
                f"config line {number}: unknown key {key!r}", 0)
    missing = [k for k in ("A", "B", "C", "A'", "B'", "C'") if k not in entries]
    if missing:
        raise ExpressionSyntaxError(f"config is missing {', '.join(missing)}", 0)
    if variant is None:
        raise ExpressionSyntaxError("config is missing the variant line", 0)
    return DesarguesConfig(
        a=entries["A"], b=entries["B"], c=entries["C"],
        ap=entries["A'"], bp=entries["B'"], cp=entries["C'"],
        variant=variant, center=center)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_eval(args) -> int:
    field = parse_backend(args.backend)
    node = parse_expression(args.expression, field)
    print(evaluate_expression(node))
    return EXIT_OK


def _cmd_construct(args) -> int:
    field = parse_backend(args.backend)
    a = parse_scalar(args.a, field)
    b = parse_scalar(args.b, field)
    aux = parse_point(args.aux, field)
    if args.frame_origin or args.frame_unit:
        if not (args.frame_origin and args.frame_unit):
            raise ExpressionSyntaxError(
                "frame origin and unit must be given together", 0)
        frame = LineFrame(parse_point(args.frame_origin, field),
                          parse_point(args.frame_unit, field))
    else:
        frame = LineFrame.canonical(field)
    tracer = trace_addition if args.op == "add" else trace_multiplication
    trace = tracer(frame, frame.embed(a), frame.embed(b), aux)
    print(f"B1 = {trace.aux}")
    print(f"P1 = {trace.p1}")
    print(f"result = {trace.result}")
    print(f"coordinate = {frame.extract(trace.result)}")
    if args.svg:
        emit_svg(trace, args.svg)
        print(f"svg written to {args.svg}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    field = parse_backend(args.backend)
    points = parse_scalar_list(args.base, field)
    base = CrossRatioBase(Family(args.family), points)
    plain = sample_arguments(field, base, args.count, args.seed)
    invertible = sample_arguments(field, base, args.count, args.seed + 1,
                                  exclude_zero_point=True)
    triples = sample_arguments(field, base, args.count, args.seed + 2)
    reports = [
        verify_addition_structure(base, plain),
        verify_multiplicative_group(base, invertible),
        verify_distributive(base, triples),
    ]
    for report in reports:
        for line in report.lines():
            print(line)
    return EXIT_OK if all(report.passed for report in reports) else EXIT_CHECK_FAILED


def _cmd_desargues(args) -> int:
    field = parse_backend(args.backend)
    cfg = load_desargues_config(args.config, field)
    validate_desargues_config(cfg)
    print(f"variant: {cfg.variant}")
    if cfg.variant == CONCURRENT:
        print(f"joining lines AA', BB', CC' concurrent at {cfg.center}: ok")
    else:
        print("joining lines AA', BB', CC' parallel: ok")
    print("AB parallel A'B' and distinct: ok")
    print("BC parallel B'C' and distinct: ok")
    conclusion = check_desargues(cfg)
    ac = line_through(cfg.a, cfg.c)
    apcp = line_through(cfg.ap, cfg.cp)
    print(f"AC direction ({ac.direction[0]},{ac.direction[1]}), "
          f"A'C' direction ({apcp.direction[0]},{apcp.direction[1]})")
    print(f"conclusion AC parallel A'C': {'true' if conclusion else 'false'}")
    assert conclusion == is_parallel(ac, apcp)
    return EXIT_OK if conclusion else EXIT_CHECK_FAILED


def _cmd_selftest(args) -> int:
    results = run_selftest(seed=args.seed, count=args.count)
    for result in results:
        print(result.line())
    passed = all(result.passed for result in results)
    print(f"selftest: {'pass' if passed else 'FAIL'} "
          f"({sum(r.passed for r in results)}/{len(results)} suites)")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewplane",
        description="Exact Desargues-plane constructions, ratios and "
                    "cross-ratio map verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_backend(p):
        p.add_argument("--backend", default="rational",
                       help="rational, gfp(p) or quaternion (default rational)")

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expression")
    add_backend(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_construct = sub.add_parser("construct", help="trace a line-point construction")
    p_construct.add_argument("op", choices=("add", "mul"))
    p_construct.add_argument("--a", required=True, help="first operand (scalar literal)")
    p_construct.add_argument("--b", required=True, help="second operand (scalar literal)")
    p_construct.add_argument("--aux", required=True,
                             help="auxiliary point (x,y) off the base line")
    p_construct.add_argument("--svg", help="write the construction drawing here")
    p_construct.add_argument("--frame-origin", help="frame zero point (default (0,0))")
    p_construct.add_argument("--frame-unit", help="frame unit point (default (1,0))")
    add_backend(p_construct)
    p_construct.set_defaults(handler=_cmd_construct)

    p_verify = sub.add_parser("verify", help="verify cross-ratio map identities")
    p_verify.add_argument("--family", required=True, choices=[f.value for f in Family])
    p_verify.add_argument("--base", required=True,
                          help="three fixed points, comma separated")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--count", type=int, default=100)
    add_backend(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_desargues = sub.add_parser("desargues", help="check a configuration file")
    p_desargues.add_argument("--config", required=True)
    add_backend(p_desargues)
    p_desargues.set_defaults(handler=_cmd_desargues)

    p_selftest = sub.add_parser("selftest", help="run the invariant battery")
    p_selftest.add_argument("--seed", type=int, default=0)
    p_selftest.add_argument("--count", type=int, default=50)
    p_selftest.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 1) < 1:
        parser.error("--count must be at least 1")
    try:
        return args.handler(args)
    except ExpressionSyntaxError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedBackendError, BackendMismatchError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _SINGULAR_ERRORS as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except OSError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
