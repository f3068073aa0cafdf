"""Command-line front door.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 environment error (network or cache).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .backtrack import brute_table, count_brute, count_brute_stats, enumerate_perms
from .closed_form import count_k1, count_k2, count_k3, k2_table, k3_table
from .core import ANCHORED, FREE, CountTable, Variant, endpoints
from .oeis import OeisFetchError, serialize_bfile
from .profile_dp import _Sweep, count_dp, state_space_size, term_table
from .seqmine import InsufficientDataError, conjecture_probe
from .verify import SUITES

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_ENV = 3


class UsageError(Exception):
    pass


def parse_variant(text: str) -> Variant:
    if text == "anchored":
        return ANCHORED
    if text == "free":
        return FREE
    if text.startswith("endpoints:"):
        try:
            s, e = text[len("endpoints:"):].split(",")
            return endpoints(int(s), int(e))
        except ValueError:
            raise UsageError(f"bad endpoints spec {text!r}, want endpoints:<s>,<e>")
    raise UsageError(f"unknown variant {text!r}")


def _closed_count(k: int, n: int, variant: Variant) -> int:
    if variant.kind != "anchored" or k > 3:
        raise UsageError("closed-form counting covers anchored k <= 3 only")
    return {1: count_k1, 2: count_k2, 3: count_k3}[k](n)


def cmd_count(args) -> int:
    variant = parse_variant(args.variant)
    method = args.method
    if method == "auto":
        method = "closed" if (args.k <= 3 and variant.kind == "anchored") else "dp"
    if method == "closed":
        value = _closed_count(args.k, args.n, variant)
    elif method == "dp":
        value = count_dp(args.k, args.n, variant)
    else:
        value = count_brute(args.k, args.n, variant)
    print(value)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    variant = parse_variant(args.variant)
    stream = enumerate_perms(args.k, args.n, variant)
    if args.format == "lines":
        for p in stream:
            print(",".join(str(v) for v in p.entries))
    else:
        print(json.dumps([list(p.entries) for p in stream]))
    return EXIT_OK


def _make_table(k: int, variant: Variant, max_n: int, method: str) -> CountTable:
    if method == "closed":
        if variant.kind != "anchored" or k > 3:
            raise UsageError("closed-form tables cover anchored k <= 3 only")
        vals = {1: lambda m: [1] * m, 2: k2_table, 3: k3_table}[k](max_n)
        return CountTable(
            k=k,
            variant=variant,
            terms={n: v for n, v in enumerate(vals, start=1)},
            provenance="closed-form",
        )
    if method == "brute":
        return brute_table(k, max_n, variant)
    return term_table(k, variant, max_n)


def cmd_table(args) -> int:
    variant = parse_variant(args.variant)
    if args.max_n == 0:
        return EXIT_OK
    table = _make_table(args.k, variant, args.max_n, args.method)
    if args.format == "bfile":
        sys.stdout.write(serialize_bfile(table))
    elif args.format == "csv":
        for n in sorted(table.terms):
            print(f"{n},{table[n]}")
    else:
        print(
            json.dumps(
                {
                    "k": table.k,
                    "variant": args.variant,
                    "offset": table.offset,
                    "terms": table.values(),
                }
            )
        )
    return EXIT_OK


def cmd_mine(args) -> int:
    try:
        report = conjecture_probe(args.k, args.terms, args.holdout, args.max_order)
    except InsufficientDataError as exc:
        print(f"insufficient data: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report is None:
        print(
            json.dumps(
                {"k": args.k, "order": None, "note": "no recurrence found within the order bound"}
            )
        )
        return EXIT_VERIFY_FAIL
    print(
        json.dumps(
            {
                "k": report.k,
                "order": report.order,
                "coefficients": list(report.coefficients),
                "gf_numerator": list(report.gf.numerator),
                "gf_denominator": list(report.gf.denominator),
                "holdout_match": report.holdout_match,
                "state_space_size": report.state_space_size,
                "note": "numerical evidence only; not a proof of rationality",
            }
        )
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    kwargs = {}
    if args.max_n is not None:
        kwargs["max_n"] = args.max_n
    try:
        checks = suite(**kwargs)
    except OeisFetchError as exc:
        print(f"skip: {exc}", file=sys.stderr)
        return EXIT_ENV
    all_ok = True
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            all_ok = False
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


def cmd_bench(args) -> int:
    variant = ANCHORED
    if args.method == "dp":
        print("n,seconds,peak_profiles")
        if args.max_n < 1:
            return EXIT_OK
        sweep = _Sweep(args.k, variant)
        for n in range(1, args.max_n + 1):
            t0 = time.perf_counter()
            sweep.step(final_step=(n == args.max_n))
            sweep.finished_count()
            dt = time.perf_counter() - t0
            print(f"{n},{dt:.6f},{sweep.peak_states}")
    else:
        print("n,seconds,nodes")
        for n in range(1, args.max_n + 1):
            t0 = time.perf_counter()
            _, nodes = count_brute_stats(args.k, n, variant)
            dt = time.perf_counter() - t0
            print(f"{n},{dt:.6f},{nodes}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="anchorperms",
        description="Exact enumeration of bounded-gap anchored permutations",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, with_n=True):
        p.add_argument("--k", type=int, required=True)
        if with_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--variant", default="anchored")

    p = sub.add_parser("count", help="print one exact count")
    add_common(p)
    p.add_argument("--method", choices=["auto", "brute", "dp", "closed"], default="auto")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list the permutations in lexicographic order")
    add_common(p)
    p.add_argument("--format", choices=["lines", "json"], default="lines")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="emit a count table")
    add_common(p, with_n=False)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")
    p.add_argument("--method", choices=["dp", "closed", "brute"], default="dp")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("mine", help="mine a linear recurrence from DP counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--holdout", type=int, required=True)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="per-n timing and search-size CSV")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--method", choices=["dp", "brute"], default="dp")
    p.set_defaults(func=cmd_bench)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OeisFetchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV


if __name__ == "__main__":
    sys.exit(main())
