"""
Command-line front end.

Text output prints one key=value record per line, --json one JSON object per
line with the same fields. Exit status is 0 on success, 1 when a
verification fails and 2 on usage or domain errors (message on stderr).
"""

import argparse
import json
import logging
import sys
from typing import Dict, Sequence

from . import __version__
from .circulant import MaskVector, dump_matrix, parse_matrix, verify_algebra_identities
from .codes.bounds import self_dual_bound
from .codes.constants import CodeKind, DistanceMethod
from .codes.distance import Budget, min_distance
from .codes.linear import LinearCode
from .codes.reports import build_report
from .constructions.search import search_self_dual
from .constructions.tables import reproduce_tables
from .constructions.theorems import ConstructionRequest, self_duality_conditions
from .cyclotomy import (
    LABELS,
    build_context,
    cyclotomic_number_report,
    minus_one_class,
    parity_pattern,
    row_sum_identity,
)
from .exceptions import CyclocodeError, DistanceBudgetExceeded
from .gf import make_field
from .settings import Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Output:
    """Writes records as key=value lines or JSON lines."""

    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def record(self, data: Dict) -> None:
        if self.as_json:
            line = json.dumps(data, separators=(", ", ": "))
        else:
            line = " ".join(
                "{}={}".format(
                    key, value if isinstance(value, str) else json.dumps(value, separators=(",", ":"))
                )
                for key, value in data.items()
            )
        self.stream.write(line + "\n")

    def text(self, text: str) -> None:
        self.stream.write(text)


# Argument helpers.

def _add_context_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="first odd prime")
    parser.add_argument("--q", type=int, required=True, help="second odd prime")


def _add_construction_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--p", type=int, required=required, help="first odd prime")
    parser.add_argument("--q", type=int, required=required, help="second odd prime")
    parser.add_argument("--field", type=int, default=2, help="field order l (default: 2)")
    parser.add_argument(
        "--kind", choices=list(CodeKind), default=CodeKind.PURE,
        help="pure (I | R) or bordered generator (default: pure)"
    )
    parser.add_argument(
        "--m", required=required,
        help="mask m0,...,m4 as field tokens, e.g. 1,1,0,u+1,u"
    )
    parser.add_argument("--alpha", help="border corner (bordered codes only)")


def _request(args) -> ConstructionRequest:
    field = make_field(args.field)
    return ConstructionRequest(
        p=args.p,
        q=args.q,
        field_order=args.field,
        kind=args.kind,
        m=MaskVector.parse(field, args.m),
        alpha=None if args.alpha is None else field.parse(args.alpha),
    )


def _code_from(args, parser: argparse.ArgumentParser):
    """(code, request) from --input or from the construction flags."""
    if args.input:
        with open(args.input) as stream:
            generator = parse_matrix(stream.read())
        return LinearCode(generator, name=args.input), None

    missing = [flag for flag in ("p", "q", "m") if getattr(args, flag) is None]
    if missing:
        parser.error("give --input or the construction flags (missing: {})".format(
            ", ".join("--" + flag for flag in missing)
        ))
    request = _request(args)
    return request.build(), request


# Subcommands.

def cmd_classes(args, out: Output) -> int:
    ctx = build_context(args.p, args.q)
    record = {"p": ctx.p, "q": ctx.q, "n": ctx.n, "g": ctx.g, "x": ctx.x}
    if out.as_json:
        record["classes"] = {label: list(ctx.members(label)) for label in LABELS}
        out.record(record)
        return EXIT_OK

    out.record(record)
    for label in LABELS:
        out.text("{}={{{}}}\n".format(label, ",".join(str(r) for r in ctx.members(label))))
    return EXIT_OK


def cmd_numbers(args, out: Output) -> int:
    ctx = build_context(args.p, args.q)
    records = cyclotomic_number_report(ctx)
    for record in records:
        out.record({
            "i": record.i,
            "j": record.j,
            "direct": record.direct,
            "closed_form": record.closed_form,
            "agrees": record.agrees,
        })

    for i in (0, 1):
        lhs, e = row_sum_identity(ctx, i)
        out.record({"row_sum": i, "lhs": lhs, "e": e, "agrees": lhs == e})

    minus_one = minus_one_class(ctx)
    out.record({"minus_one": minus_one.label, "claimed": minus_one.claimed, "agrees": minus_one.agrees})

    if ctx.is_mixed:
        pattern = parity_pattern(ctx.p, ctx.q)
        out.record({
            "parity": "predicted",
            "omega_sum": pattern.omega_sum,
            "agrees": all(
                record.direct % 2 == pattern.parity(record.i, record.j) for record in records
            ),
        })

    return EXIT_OK if all(record.agrees for record in records) else EXIT_FAILED


def cmd_identities(args, out: Output) -> int:
    ctx = build_context(args.p, args.q)
    report = verify_algebra_identities(ctx, make_field(args.field))
    for check in report.checks:
        record = {
            "verdict": "PASS" if check.passed else "FAIL",
            "identity": check.name,
        }
        if not check.passed:
            record["expected"] = list(check.expected)
            record["actual"] = None if check.actual is None else list(check.actual)
        out.record(record)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_build(args, out: Output) -> int:
    request = _request(args)
    code = request.build()
    if args.dump:
        out.text(dump_matrix(code.generator))
    else:
        out.record(build_report(code, request).as_record())
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    code, request = _code_from(args, args.parser)
    report = build_report(code, request)
    out.record(report.as_record())

    if request is not None:
        conditions = self_duality_conditions(
            request.context, request.field, request.kind, request.m, alpha=request.alpha
        )
        for condition in conditions.conditions:
            out.record({
                "condition": condition.name,
                "expected": condition.expected,
                "actual": condition.actual,
                "passed": condition.passed,
            })
        if conditions.verdict != report.self_dual:
            logger.warning(
                "coefficient criteria say %s, direct check says %s",
                conditions.verdict, report.self_dual
            )
            return EXIT_FAILED

    return EXIT_OK if report.self_dual else EXIT_FAILED


def cmd_mindist(args, out: Output) -> int:
    code, request = _code_from(args, args.parser)
    settings = args.settings
    budget = Budget(
        max_evaluations=settings.max_evaluations if args.budget is None else args.budget,
        max_seconds=settings.max_seconds if args.seconds is None else args.seconds,
    )
    try:
        distance = min_distance(code, method=args.method, budget=budget, settings=settings)
    except DistanceBudgetExceeded as e:
        sys.stderr.write("budget exhausted: {} <= d <= {}\n".format(*e.interval))
        return EXIT_FAILED

    out.record(build_report(code, request, distance=distance, include_elapsed=args.timings).as_record())
    return EXIT_OK


def cmd_bound(args, out: Output) -> int:
    bound = self_dual_bound(args.field, args.n)
    out.record({"l": args.field, "N": args.n, "bound": bound.bound, "rule": bound.rule})
    return EXIT_OK


def cmd_search(args, out: Output) -> int:
    ctx = build_context(args.p, args.q)
    result = search_self_dual(
        ctx, make_field(args.field), args.kind,
        compute_distance=args.distance,
        settings=args.settings,
    )
    for hit in result.hits:
        out.record(hit.report.as_record())
    for disagreement in result.disagreements:
        out.record({
            "disagreement": disagreement.request.describe(),
            "criteria": disagreement.criteria,
            "self_dual": disagreement.self_dual,
        })

    summary = {
        "scanned": result.scanned,
        "pruned": result.pruned,
        "hits": result.hit_count,
        "disagreements": len(result.disagreements),
        "complete": result.complete,
        "swap_closed": result.swap_closed,
    }
    if result.family is not None:
        summary["family"] = result.family.family
        summary["family_complete"] = result.family.complete
        summary["family_exhaustive"] = result.family.exhaustive
    out.record(summary)

    if result.disagreements or not result.complete:
        return EXIT_FAILED
    return EXIT_OK


def cmd_reproduce_tables(args, out: Output) -> int:
    report = reproduce_tables(method=args.method, settings=args.settings, include_elapsed=args.timings)
    for outcome in report.outcomes:
        record = {"verdict": outcome.verdict, "row": outcome.row.label}
        if outcome.report is not None:
            record.update(outcome.report.as_record())
        if outcome.row.comment:
            record["comment"] = outcome.row.comment
        if outcome.reason:
            record["reason"] = outcome.reason
        out.record(record)
    out.record({"tables": "PASS" if report.passed else "FAIL"})
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocode",
        description="Double circulant self-dual codes from generalized cyclotomy of order two.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--json", action="store_true", help="one JSON object per line")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log to stderr at INFO (-v) or DEBUG (-vv)"
    )
    parser.add_argument("--timings", action="store_true", help="report elapsed_ms for distances")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub = commands.add_parser("classes", help="print the cyclotomic partition of Z_pq")
    _add_context_arguments(sub)
    sub.set_defaults(handler=cmd_classes)

    sub = commands.add_parser("numbers", help="cyclotomic numbers, direct against closed form")
    _add_context_arguments(sub)
    sub.set_defaults(handler=cmd_numbers)

    sub = commands.add_parser("identities", help="check the matrix product table")
    _add_context_arguments(sub)
    sub.add_argument("--field", type=int, default=2, help="field order l (default: 2)")
    sub.set_defaults(handler=cmd_identities)

    sub = commands.add_parser("build", help="construct a code and print its report")
    _add_construction_arguments(sub)
    sub.add_argument("--dump", action="store_true", help="print the generator matrix instead")
    sub.set_defaults(handler=cmd_build)

    sub = commands.add_parser("check", help="self-duality verdict with each coefficient condition")
    _add_construction_arguments(sub, required=False)
    sub.add_argument("--input", metavar="FILE", help="generator matrix dump")
    sub.set_defaults(handler=cmd_check, parser=sub)

    sub = commands.add_parser("mindist", help="exact minimum distance")
    _add_construction_arguments(sub, required=False)
    sub.add_argument("--input", metavar="FILE", help="generator matrix dump")
    sub.add_argument("--method", choices=list(DistanceMethod), default=DistanceMethod.AUTO)
    sub.add_argument("--budget", type=int, help="maximum codeword evaluations")
    sub.add_argument("--seconds", type=int, help="maximum wall-clock seconds")
    sub.set_defaults(handler=cmd_mindist, parser=sub)

    sub = commands.add_parser("bound", help="distance bound for self-dual codes")
    sub.add_argument("--field", type=int, required=True, help="field order l")
    sub.add_argument("--n", type=int, required=True, help="code length N")
    sub.set_defaults(handler=cmd_bound)

    sub = commands.add_parser("search", help="sweep every mask for self-dual codes")
    _add_context_arguments(sub)
    sub.add_argument("--field", type=int, default=2, help="field order l (default: 2)")
    sub.add_argument("--kind", choices=list(CodeKind), default=CodeKind.PURE)
    sub.add_argument("--distance", action="store_true", help="attach minimum distances to hits")
    sub.set_defaults(handler=cmd_search)

    sub = commands.add_parser("reproduce-tables", help="rebuild the published codes and verify [N, k, d]")
    sub.add_argument(
        "--method", choices=list(DistanceMethod), default=DistanceMethod.INFOSET,
        help="distance method (default: infoset)"
    )
    sub.set_defaults(handler=cmd_reproduce_tables)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    out = Output(as_json=args.json)
    try:
        args.settings = Settings.from_env()
        return args.handler(args, out)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (CyclocodeError, ValueError, OSError) as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_USAGE
