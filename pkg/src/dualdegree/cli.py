"""Command-line front end.

Exit status is 0 on success or a true verdict, 1 on a false verdict
(not realizable, outside, failed verification) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction

from .core import (
    DegreePartition,
    NotRealizable,
    berge_realizable,
    conjugate,
    corrected_conjugate,
    describe_failure,
    ferrers_matrix,
    format_sequence,
    parse_sequence,
    realize,
    render_ferrers,
)
from .exactmath import format_rational, hull_membership, to_point
from .polytope import extreme_points, extremes_to_json, facet_membership, facet_system
from .verify import DEFAULT_MAX_N, counterexample_check, verify_theorem

COMMANDS = (
    "conjugate",
    "corrected",
    "realizable",
    "realize",
    "ferrers",
    "extremes",
    "facets",
    "member",
    "verify",
    "counterexample",
)


class UsageError(Exception):
    pass


def _int_sequence(text: str) -> tuple[int, ...]:
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_sequence(text: str) -> tuple[Fraction, ...]:
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"bad token {token!r} in sequence {text!r}") from None
    return tuple(out)


def _vertex_count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex count {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"vertex count must be positive, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")

    parser = argparse.ArgumentParser(prog="dualdegree", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", default=False, help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("conjugate", parents=[common], help="dual degree partition (suppressed form)")
    p.add_argument("seq", type=_int_sequence, help="degree partition, e.g. 4,3,3,2,2,2")

    p = sub.add_parser("corrected", parents=[common], help="corrected conjugate degrees")
    p.add_argument("seq", type=_int_sequence)

    p = sub.add_parser("realizable", parents=[common], help="Berge realizability test")
    p.add_argument("seq", type=_int_sequence)

    p = sub.add_parser("realize", parents=[common], help="edge list of a realizing graph")
    p.add_argument("seq", type=_int_sequence)

    p = sub.add_parser("ferrers", parents=[common], help="plain-text Ferrers diagram")
    p.add_argument("seq", type=_int_sequence)
    p.add_argument("--corrected", action="store_true", help="draw the corrected diagram")

    p = sub.add_parser("extremes", parents=[common], help="extreme points of the polytope")
    p.add_argument("n", type=_vertex_count)

    p = sub.add_parser("facets", parents=[common], help="facet-defining inequalities")
    p.add_argument("n", type=_vertex_count)

    p = sub.add_parser("member", parents=[common], help="check a point against the facets")
    p.add_argument("seq", type=_rational_sequence, help="dual partition (trailing zero optional with -n)")
    p.add_argument("-n", type=_vertex_count, default=None, help="vertex count (default: len + 1)")
    p.add_argument("--certificate", action="store_true",
                   help="also decide hull membership exactly against the extreme points")

    p = sub.add_parser("verify", parents=[common], help="verify the polytope description for n")
    p.add_argument("n", type=_vertex_count, nargs="+")
    p.add_argument("--max-n", type=_vertex_count, default=DEFAULT_MAX_N, dest="max_n",
                   help=f"verification guard (default {DEFAULT_MAX_N})")

    p = sub.add_parser("counterexample", parents=[common],
                       help="integral point of the polytope that is not realizable")
    p.add_argument("seq", type=_rational_sequence, nargs="?", default=None,
                   help="dual partition (default 5,3,3,3,3,3)")
    p.add_argument("-n", type=_vertex_count, default=None)
    return parser


def _degree_partition(values: Sequence[int]) -> DegreePartition:
    try:
        return DegreePartition(tuple(values))
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _normalize_dual(values: tuple[Fraction, ...], n: int | None, err) -> tuple[tuple[Fraction, ...], int]:
    if n is None:
        return values, len(values) + 1
    if len(values) == n:
        if values[-1] != 0:
            raise UsageError(f"the n-th entry of a dual partition must be 0, got {values[-1]}")
        print(f"note: dropped suppressed trailing zero d*_{n}", file=err)
        values = values[:-1]
    if len(values) != n - 1:
        raise UsageError(f"expected {n - 1} entries (or {n} with trailing 0) for n={n}, got {len(values)}")
    return values, n


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _exact(v: Fraction):
    return v.numerator if v.denominator == 1 else format_rational(v)


def _dispatch(args, out, err) -> int:
    as_json = args.json
    cmd = args.command

    if cmd == "conjugate":
        d = _degree_partition(args.seq)
        x = conjugate(d)
        if as_json:
            _emit({"n": d.n, "d": list(d.values), "dual": list(x.values)}, out)
        else:
            out.write(format_sequence(x.values) + "\n")
        return 0

    if cmd == "corrected":
        d = _degree_partition(args.seq)
        cbar = corrected_conjugate(d)
        if as_json:
            _emit({"n": d.n, "d": list(d.values), "corrected": list(cbar)}, out)
        else:
            out.write(format_sequence(cbar) + "\n")
        return 0

    if cmd == "realizable":
        d = _degree_partition(args.seq)
        ok, report = berge_realizable(d)
        odd = sum(d.values) % 2 == 1
        k = None if ok or odd else report.first_violation
        slack = report.slacks[k - 1] if k is not None else None
        if as_json:
            _emit({
                "d": list(d.values),
                "realizable": ok,
                "even_sum": not odd,
                "slacks": list(report.slacks),
                "first_violation": k,
                "first_slack": slack,
            }, out)
        elif ok:
            out.write("realizable\n")
        else:
            out.write(describe_failure(d.values, odd, k, slack) + "\n")
        return 0 if ok else 1

    if cmd == "realize":
        d = _degree_partition(args.seq)
        try:
            g = realize(d)
        except NotRealizable as exc:
            if as_json:
                _emit({"d": list(d.values), "realizable": False, "odd_sum": exc.odd_sum,
                       "first_violation": exc.slack_index, "first_slack": exc.slack}, out)
            else:
                out.write(str(exc) + "\n")
            return 1
        if as_json:
            _emit({"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}, out)
        else:
            out.write(g.to_edge_list())
        return 0

    if cmd == "ferrers":
        d = _degree_partition(args.seq)
        if as_json:
            rows = ferrers_matrix(d, args.corrected)
            _emit({
                "d": list(d.values),
                "corrected": args.corrected,
                "rows": rows,
                "column_sums": [sum(r[j] for r in rows) for j in range(d.n)],
            }, out)
        else:
            out.write(render_ferrers(d, args.corrected))
        return 0

    if cmd in ("extremes", "facets"):
        if args.n < 2:
            raise UsageError("the polytope needs n >= 2")
        if cmd == "extremes":
            if as_json:
                _emit(extremes_to_json(args.n), out)
            else:
                for label, x in extreme_points(args.n):
                    out.write(f"{label}\t{format_sequence(x.values)}\n")
        else:
            system = facet_system(args.n)
            if as_json:
                _emit(system.to_json(), out)
            else:
                for q in system.inequalities:
                    out.write(f"{q}\n")
        return 0

    if cmd == "member":
        values, n = _normalize_dual(args.seq, args.n, err)
        if n < 2:
            raise UsageError("the polytope needs n >= 2")
        ok, violated = facet_membership(values, n)
        system = facet_system(n)
        cert = None
        if args.certificate:
            cert = hull_membership(to_point(values), [to_point(x.values) for _, x in extreme_points(n)])
            ok = ok and cert.inside
        if as_json:
            obj = {"n": n, "x": [_exact(v) for v in values], "member": ok, "violated": violated}
            if cert is not None:
                obj["certificate"] = cert.to_json()
            _emit(obj, out)
        else:
            if not violated:
                out.write("inside: satisfies all facets\n")
            for i in violated:
                out.write(f"outside: violates #{i + 1}: {system.inequalities[i]}\n")
            if cert is not None:
                if cert.inside:
                    weights = ", ".join(
                        f"{format_rational(w)}*{lab}"
                        for w, (lab, _) in zip(cert.weights, extreme_points(n)) if w
                    )
                    out.write(f"hull: Inside ({weights})\n")
                else:
                    out.write(f"hull: Outside (separator {cert.separator})\n")
        return 0 if ok else 1

    if cmd == "verify":
        reports = []
        for n in args.n:
            if n > args.max_n:
                raise UsageError(f"n={n} exceeds --max-n {args.max_n}")
            if n < 2:
                raise UsageError("the polytope needs n >= 2")
            reports.append(verify_theorem(n, max_n=args.max_n))
        if as_json:
            _emit([r.to_json() for r in reports], out)
        else:
            for r in reports:
                out.write(r.to_text())
        return 0 if all(r.passed for r in reports) else 1

    if cmd == "counterexample":
        if args.seq is None:
            if args.n not in (None, 7):
                raise UsageError("-n requires an explicit point")
            values, n = to_point((5, 3, 3, 3, 3, 3)), 7
        else:
            values, n = _normalize_dual(args.seq, args.n, err)
        if n < 2:
            raise UsageError("the polytope needs n >= 2")
        report = counterexample_check(values, n)
        if as_json:
            _emit(report.to_json(), out)
        else:
            out.write(report.to_text())
        return 0 if report.is_counterexample else 1

    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out, err)
    except UsageError as exc:
        print(f"dualdegree: error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
