"""Command line entry point.

Exit codes: 0 tree convex (or success), 1 not tree convex, 2 error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from treeconvex.bench import (
    LARGE_CONFIGS,
    VerdictMismatchError,
    bench_configs,
    bench_directory,
    summarize,
    write_csv,
)
from treeconvex.core import SetCollection
from treeconvex.errors import TreeConvexError
from treeconvex.formats import (
    format_witness,
    looks_like_cats,
    parse_cats,
    parse_collection,
    parse_witness,
    serialize_collection,
)
from treeconvex.gen import GenConfig, random_collection
from treeconvex.oracle import brute_force_tree_convex
from treeconvex.recognize import is_tree_convex, join_components, tree_test
from treeconvex.spanning import spanning_tree_verdict

EXIT_CONVEX, EXIT_NOT_CONVEX, EXIT_ERROR = 0, 1, 2

log = logging.getLogger("treeconvex")


def load(path: str, fmt: str = "auto") -> SetCollection:
    data = Path(path).read_bytes()
    if fmt == "cats" or (fmt == "auto" and looks_like_cats(data)):
        return parse_cats(data)
    return parse_collection(data)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_check(args: argparse.Namespace) -> int:
    s = load(args.path, args.format)
    algo = args.algorithm
    if algo == "oracle":
        convex = brute_force_tree_convex(s)
        witness = None
        if args.witness:
            log.warning("the oracle does not produce a witness")
    else:
        verdict = None
        if algo in ("acyclic", "both"):
            verdict = is_tree_convex(s, tree=args.tree)
        if algo in ("spanning", "both"):
            other = spanning_tree_verdict(s)
            if verdict is not None and other.convex != verdict.convex:
                raise VerdictMismatchError(
                    f"acyclicity says {verdict.convex}, spanning tree says {other.convex}"
                )
            if verdict is None:
                verdict = other
        convex = verdict.convex
        witness = verdict.witness
        if witness is not None and args.tree:
            witness = join_components(witness)

    print("tree convex" if convex else "not tree convex")
    if convex and args.witness and witness is not None:
        _emit(format_witness(s, witness), args.out)
    return EXIT_CONVEX if convex else EXIT_NOT_CONVEX


def cmd_treetest(args: argparse.Namespace) -> int:
    s = load(args.sets, args.format)
    forest = parse_witness(Path(args.tree).read_bytes(), s)
    ok = tree_test(s, forest)
    print("tree convex with respect to the given forest" if ok
          else "not tree convex with respect to the given forest")
    return EXIT_CONVEX if ok else EXIT_NOT_CONVEX


def cmd_oracle(args: argparse.Namespace) -> int:
    s = load(args.path, args.format)
    convex = brute_force_tree_convex(s)
    print("tree convex" if convex else "not tree convex")
    return EXIT_CONVEX if convex else EXIT_NOT_CONVEX


def cmd_gen(args: argparse.Namespace) -> int:
    cfg = GenConfig(args.m, args.n, args.r1, args.r2, args.seed)
    _emit(serialize_collection(random_collection(cfg)), args.out)
    return 0


def _parse_config(text: str, seed: int) -> GenConfig:
    try:
        m, n, r1, r2 = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n,r1,r2 but got {text!r}") from None
    return GenConfig(m, n, r1, r2, seed)


def _parse_range(text: str) -> list[int]:
    lo, hi, *step = (int(x) for x in text.split(":"))
    return list(range(lo, hi + 1, step[0] if step else 1))


def cmd_bench(args: argparse.Namespace) -> int:
    workers = 1 if args.serial_timing else args.jobs
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", newline="")
    report = sys.stderr if out is sys.stdout else sys.stdout
    try:
        if args.dir:
            records = bench_directory(Path(args.dir), workers=workers)
            write_csv(records, out)
            print(summarize(str(args.dir), records), file=report)
            return 0
        configs = [_parse_config(c, args.seed) for c in args.config]
        if args.table1:
            configs += [GenConfig(*c, seed=args.seed) for c in LARGE_CONFIGS]
        if args.sweep:
            name, _, spec = args.sweep.partition("=")
            base = _parse_config(args.base, args.seed)
            configs += [_replace_param(base, name, v) for v in _parse_range(spec)]
        if not configs:
            raise TreeConvexError("bench needs --config, --table1, --sweep or --dir")
        rows = []
        for cfg, records in zip(configs, bench_configs(configs, args.repetitions,
                                                         workers=workers)):
            rows.extend(records)
            if records:
                print(summarize(str(cfg), records), file=report)
        write_csv(rows, out)
        return 0
    finally:
        if out is not sys.stdout:
            out.close()


def _replace_param(base: GenConfig, name: str, value: int) -> GenConfig:
    if name not in ("m", "r2"):
        raise TreeConvexError(f"--sweep can vary m or r2, not {name!r}")
    from dataclasses import replace
    return replace(base, **{name: value})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeconvex",
        description="Recognize tree convex set collections and benchmark recognizers.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("auto", "native", "cats"), default="auto",
                     help="input format (auto detects CATS headers)")

    p = sub.add_parser("check", parents=[fmt], help="decide tree convexity of a file")
    p.add_argument("path")
    p.add_argument("-a", "--algorithm", choices=("acyclic", "spanning", "both", "oracle"),
                   default="acyclic")
    p.add_argument("--witness", action="store_true", help="print the witness edge list")
    p.add_argument("--tree", action="store_true", help="join witness components into one tree")
    p.add_argument("-o", "--out", help="write the witness here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("treetest", parents=[fmt],
                       help="test a collection against a given forest edge list")
    p.add_argument("sets")
    p.add_argument("tree")
    p.set_defaults(func=cmd_treetest)

    p = sub.add_parser("oracle", parents=[fmt], help="brute-force decision (n <= 9)")
    p.add_argument("path")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a random <m,n,r1,r2> collection")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time both recognizers, write CSV")
    p.add_argument("--config", action="append", default=[], metavar="M,N,R1,R2")
    p.add_argument("--table1", action="store_true",
                   help="add <100,100,2,10>, <300,300,2,30>, <500,500,2,50>")
    p.add_argument("--sweep", metavar="PARAM=LO:HI[:STEP]",
                   help="vary m or r2 around --base, e.g. m=10:200:10")
    p.add_argument("--base", default="50,100,2,30", metavar="M,N,R1,R2")
    p.add_argument("--dir", help="benchmark every instance file in a directory")
    p.add_argument("-r", "--repetitions", type=int, default=10,
                   help="instances per configuration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.add_argument("--serial-timing", action=argparse.BooleanOptionalAction, default=True,
                   help="time every instance in this process (default)")
    p.add_argument("-j", "--jobs", type=int, default=1,
                   help="worker processes when --no-serial-timing")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, TreeConvexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
