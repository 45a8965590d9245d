"""Command-line surface: tabulation, point evaluation, invariant sweeps,
curve sampling, and instrumented sort runs.

Every number printed is an exact integer or an exact terminating decimal;
no floating point exists anywhere on the output path.  Exit codes: 0 on
success, 1 when an invariant or expected-count assertion fails, 2 on usage
or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import counts, fractal, oracle, verify
from .dyadic import Dyadic

EVAL_FUNCTIONS = ("b", "w", "bigF", "takagi", "breveF")
SAMPLE_FUNCTIONS = ("bigF", "takagi", "breveF")  # plus dynamic partial:k
SORT_CASES = ("best", "worst", "random", "file")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _parse_rational(text: str) -> Fraction:
    """Exact rational literal: 'p/2^e', 'p/q', or a terminating decimal."""
    text = text.strip()
    if "/" in text:
        p_text, q_text = text.split("/", 1)
        if q_text.startswith("2^"):
            return Fraction(int(p_text), 1 << int(q_text[2:]))
        q = int(q_text)
        if q < 1:
            raise ValueError(f"denominator must be >= 1 in {text!r}")
        return Fraction(int(p_text), q)
    return Fraction(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mergecomps",
        description="Exact MergeSort comparison counts and the Takagi function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="tabulate counts for a range of sizes")
    p.add_argument("--from", dest="start", type=_positive_int, required=True)
    p.add_argument("--to", dest="end", type=_positive_int, required=True)
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    p.add_argument("function", choices=EVAL_FUNCTIONS)
    p.add_argument("argument")
    p.add_argument("--precision", type=_positive_int, default=None,
                   help="series terms K for non-dyadic takagi arguments")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("verify", help="run invariant sweeps")
    p.add_argument("--suite", choices=verify.SUITES, required=True)
    p.add_argument("--max-n", dest="max_n", type=_positive_int, default=256)
    p.add_argument("--max-m", dest="max_m", type=_positive_int, default=64)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sample", help="emit x,y rows of a curve on a dyadic grid")
    p.add_argument("--function", required=True)
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="end", required=True)
    p.add_argument("--points", type=_positive_int, required=True)
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("sortcount", help="run the instrumented sorter once")
    p.add_argument("--case", choices=SORT_CASES, required=True)
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_sortcount)

    return parser


def cmd_analyze(args) -> int:
    if args.start > args.end:
        raise ValueError(f"--from {args.start} exceeds --to {args.end}")
    sep = "," if args.format == "csv" else "\t"
    print(sep.join(("n", "B", "W", "F", "twoB_minus_W", "A2")))
    for n in range(args.start, args.end + 1):
        row = counts.analyze(n)
        print(sep.join((
            str(row.n), str(row.best), str(row.worst),
            row.fractal_at_n.decimal(), str(row.two_b_minus_w), str(row.digit_sum),
        )))
    return 0


def cmd_eval(args) -> int:
    name = args.function
    if name in ("b", "w"):
        n = int(args.argument)
        if n < 1:
            raise ValueError(f"{name} requires n >= 1, got {n}")
        value = counts.best_comps(n) if name == "b" else counts.worst_comps(n)
        print(value)
        return 0
    if name in ("bigF", "breveF"):
        x = Dyadic.parse(args.argument)
        fn = fractal.zigzag_sum if name == "bigF" else fractal.takagi_rescaled
        print(fn(x).decimal())
        return 0
    # takagi: exact at dyadics, certified approximation elsewhere
    x = _parse_rational(args.argument)
    den = x.denominator
    if den & (den - 1) == 0:
        print(fractal.takagi_dyadic(Dyadic.from_fraction(x)).decimal())
        return 0
    if args.precision is None:
        raise ValueError(
            f"{args.argument} is not a dyadic rational; takagi needs --precision K"
        )
    approx = fractal.takagi_approx(x.numerator, x.denominator, args.precision)
    print(f"{approx.value.decimal()} error<=2^-{args.precision}")
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, args.max_n, args.max_m)
    failures = 0
    for result in results:
        if result.ok:
            print(f"PASS {result.name}")
        else:
            failures += 1
            print(f"FAIL {result.name} first counterexample: {result.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed "
          f"(max-n={args.max_n}, max-m={args.max_m})")
    return 0 if failures == 0 else 1


def _sample_eval(name: str):
    if name == "bigF":
        return fractal.zigzag_sum
    if name == "takagi":
        return fractal.takagi_dyadic
    if name == "breveF":
        return fractal.takagi_rescaled
    if name.startswith("partial:"):
        k = int(name.split(":", 1)[1])
        if k < 0:
            raise ValueError(f"partial:{k} needs k >= 0")
        return lambda x: fractal.takagi_partial(k, x)
    raise ValueError(
        f"unknown sample function {name!r}; "
        f"choose one of {', '.join(SAMPLE_FUNCTIONS)}, or partial:k"
    )


def cmd_sample(args) -> int:
    fn = _sample_eval(args.function)
    start = Dyadic.parse(args.start)
    end = Dyadic.parse(args.end)
    if args.points < 2:
        raise ValueError(f"--points must be >= 2, got {args.points}")
    if end < start:
        raise ValueError(f"--from {start} exceeds --to {end}")
    span = end - start
    step_exact = Fraction(span.num, (1 << span.exp) * (args.points - 1))
    if step_exact.denominator & (step_exact.denominator - 1):
        raise ValueError(
            f"grid step ({end} - {start})/{args.points - 1} is not a dyadic rational; "
            "choose points-1 dividing the span's odd part times a power of two"
        )
    step = Dyadic.from_fraction(step_exact)
    sep = "," if args.format == "csv" else "\t"
    print(f"x{sep}y")
    for j in range(args.points):
        x = start + step * j
        print(f"{x.decimal()}{sep}{fn(x).decimal()}")
    return 0


def _read_stdin_keys() -> list[int]:
    keys = []
    for line_no, line in enumerate(sys.stdin, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            value = int(text)
        except ValueError:
            raise ValueError(f"line {line_no}: {text!r} is not an integer") from None
        if not -(1 << 63) <= value < (1 << 63):
            raise ValueError(f"line {line_no}: {value} outside signed 64-bit range")
        keys.append(value)
    return keys


def cmd_sortcount(args) -> int:
    if args.case == "file":
        keys = _read_stdin_keys()
        if not keys:
            raise ValueError("no keys on standard input")
        n = len(keys)
    else:
        if args.n is None:
            raise ValueError(f"--case {args.case} requires --n")
        n = args.n
        if args.case == "best":
            keys = oracle.best_case_input(n)
        elif args.case == "worst":
            keys = oracle.worst_case_input(n)
        else:
            keys = oracle.random_input(n, args.seed)
    trace = oracle.merge_sort_count(keys)
    b, w = counts.best_comps(n), counts.worst_comps(n)
    print(f"n={n} comps={trace.comparisons} B={b} W={w}")
    if args.case == "best" and trace.comparisons != b:
        print(f"assertion failed: best-case comps {trace.comparisons} != {b}",
              file=sys.stderr)
        return 1
    if args.case == "worst" and trace.comparisons != w:
        print(f"assertion failed: worst-case comps {trace.comparisons} != {w}",
              file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream consumer (head, etc.) closed the stream; not an error
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
