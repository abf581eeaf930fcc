"""Command-line front end.

    qsymp verify --n 2 --max-degree 3 --suites serre,lemmas
    qsymp apply  --n 2 --op "e(1)" --elem "x(1)"
    qsymp mul    --n 2 "x(2)" "x(1)"
    qsymp roots  --n 3

Exit status: 0 when every checked identity holds, 1 when some identity
fails, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from .grammar import ParseError, parse_element, parse_operator
from .sympspace import product
from .uqsp.data import enumerate_positive_roots, root_weight
from .uqsp.suites import SUITES, label_text, run_suite, weight_text

SUITE_ORDER = ["serre", "module-algebra", "highest-weight", "root-vectors", "lemmas"]
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _suites(text: str) -> List[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise argparse.ArgumentTypeError("no suites given")
    if "all" in names:
        return list(SUITE_ORDER)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITE_ORDER)} or all"
        )
    return [s for s in SUITE_ORDER if s in names]


def _default_jobs() -> int:
    raw = os.environ.get("QSYMP_JOBS")
    if raw is None or raw == "":
        return 1
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QSYMP_JOBS must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank n >= 2 (default 2)")
    common.add_argument("--output", choices=["text", "structured"], default="text",
                        help="human-readable text or JSON lines (default text)")

    parser = argparse.ArgumentParser(prog="qsymp", description="Exact computations on the quantum symplectic space.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--max-degree", type=int, default=3,
                   help="degree bound; for highest-weight it is the degree m (default 3)")
    v.add_argument("--suites", type=_suites, default=list(SUITE_ORDER),
                   help="comma-separated: " + ", ".join(SUITE_ORDER) + ", or all (default all)")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default $QSYMP_JOBS or 1)")

    a = sub.add_parser("apply", parents=[common], help="apply an operator expression to an element")
    a.add_argument("--op", required=True, help='operator expression, e.g. "br_q(D(1),Psi(1))"')
    a.add_argument("--elem", required=True, help='element expression, e.g. "x(-1)x(1)"')

    m = sub.add_parser("mul", parents=[common], help="multiply two elements")
    m.add_argument("--lhs", help="left factor")
    m.add_argument("--rhs", help="right factor")
    m.add_argument("factors", nargs="*", help="left and right factor, as an alternative to --lhs/--rhs")

    sub.add_parser("roots", parents=[common], help="list the positive roots in order")
    return parser


def _emit(out, record: dict, structured: bool, text: str) -> None:
    out.write((json.dumps(record, ensure_ascii=False) if structured else text) + "\n")


def cmd_verify(args, out) -> int:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be >= 0")
    if "serre" in args.suites and args.max_degree < 2:
        raise UsageError("the serre suite needs --max-degree >= 2")
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    total = failed = 0
    structured = args.output == "structured"
    for name in args.suites:
        report = run_suite(name, args.n, args.max_degree, jobs)
        total += len(report.results)
        failed += len(report.failures)
        body = report.to_structured() if structured else report.to_text()
        if body:
            out.write(body + "\n")
    if not structured:
        if failed:
            out.write(f"{failed} of {total} identities FAILED\n")
        else:
            out.write(f"all {total} identities passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_apply(args, out) -> int:
    op = parse_operator(args.op, args.n)
    elem = parse_element(args.elem, args.n)
    result = op.apply(elem)
    _emit(out, {"command": "apply", "n": args.n, "op": args.op, "elem": args.elem, "result": str(result)},
          args.output == "structured", str(result))
    return EXIT_OK


def cmd_mul(args, out) -> int:
    factors = list(args.factors)
    if args.lhs is not None:
        factors.insert(0, args.lhs)
    if args.rhs is not None:
        factors.append(args.rhs)
    if len(factors) != 2:
        raise UsageError("mul needs exactly two factors")
    a, b = (parse_element(f, args.n) for f in factors)
    result = product(a, b)
    _emit(out, {"command": "mul", "n": args.n, "lhs": factors[0], "rhs": factors[1], "result": str(result)},
          args.output == "structured", str(result))
    return EXIT_OK


def cmd_roots(args, out) -> int:
    for k, label in enumerate(enumerate_positive_roots(args.n), 1):
        weight = weight_text(root_weight(label))
        _emit(out, {"index": k, "label": [label.first, label.second], "operator": label_text(label), "weight": weight},
              args.output == "structured", f"{k:>3}  {label_text(label):<10}  {weight}")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "apply": cmd_apply, "mul": cmd_mul, "roots": cmd_roots}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.n < 2:
            raise UsageError(f"--n must be >= 2, got {args.n}")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qsymp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qsymp: parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"qsymp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); stop quietly
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
