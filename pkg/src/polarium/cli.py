"""Command-line driver: build spaces from spec strings, run the property
battery, emit deterministic JSON reports, replay failure witnesses.

Exit codes: 0 success; 1 usage or spec-parse error (also: nothing to
replay); 2 enumeration bound exceeded; 3 equivalence-assertion failure or
stale witness; 4 expectation mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from polarium import props
from polarium.catalog import SpecParseError, build_space, parse_space_spec
from polarium.linalg import BoundExceeded
from polarium.props import EquivalenceViolation, full_report, validate_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND = 2
EXIT_ASSERTION = 3
EXIT_EXPECTATION = 4

TABLE_COLUMNS = ["A", "B_triads", "B_prime", "C", "D", "regular_pairs", "symplectic"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="polarium",
                     description="finite polar space property verification")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the property battery on spaces")
    check.add_argument("specs", nargs="+", metavar="SPEC",
                       help='space specs like "W(3,2)", "Q-(5,2)", "P(W(3,5))"')
    check.add_argument("--expect", metavar="FILE",
                       help="golden report; exit 4 if any verdict differs")
    check.add_argument("--out", metavar="FILE", help="write the JSON report here")
    check.add_argument("--format", choices=["json", "table"], default="json")
    check.add_argument("--workers", type=int, default=1,
                       help="spaces processed concurrently")
    check.add_argument("--max-points", type=int, default=2000)
    check.add_argument("--seed", type=int, default=0,
                       help="seed for the sampled perp-invariant self-check")
    check.add_argument("--timings", action="store_true",
                       help="include per-checker millis (breaks byte-for-byte "
                            "reproducibility)")

    replay = sub.add_parser("replay", help="re-validate a reported witness")
    replay.add_argument("report", help="JSON report produced by check")
    replay.add_argument("witness_id", metavar="WITNESS",
                        help='"<space>/<property>", e.g. "Q-(5,2)/A"')

    info = sub.add_parser("info", help="point/line/rank counts only")
    info.add_argument("spec")
    return parser


def _check_one(spec_text: str, max_points: int, seed: int):
    space = build_space(spec_text, max_points=max_points)
    _sampled_perp_invariant(space, seed)
    return full_report(space)


def _sampled_perp_invariant(space, seed, samples=200):
    """perp(perp(perp(X))) == perp(X) on seeded random point sets."""
    rng = random.Random(f"{seed}:{space.name}")
    n = space.n_points
    for _ in range(samples):
        size = rng.randrange(1, min(4, n) + 1)
        idxs = sorted(rng.sample(range(n), size))
        first = space.perp_mask(idxs)
        if not first.any():
            continue
        second = space.coll[first].all(axis=0)
        third = space.coll[second].all(axis=0)
        if not np.array_equal(first, third):
            raise EquivalenceViolation(
                f"{space.name}: triple perp differs from perp on {idxs}")


def _render_table(reports) -> str:
    width = max(len(r["space"]) for r in reports) + 2
    head = "space".ljust(width) + "  ".join(c.ljust(13) for c in TABLE_COLUMNS)
    lines = [head, "-" * len(head)]
    for r in reports:
        cells = [r["properties"][c]["verdict"].ljust(13) for c in TABLE_COLUMNS]
        lines.append(r["space"].ljust(width) + "  ".join(cells))
    return "\n".join(lines) + "\n"


def _compare_expectation(reports, expect_path):
    with open(expect_path, "r", encoding="utf-8") as fh:
        expected = json.load(fh)
    by_name = {r["space"]: r for r in expected}
    diffs = []
    for rep in reports:
        exp = by_name.get(rep["space"])
        if exp is None:
            diffs.append(f'{rep["space"]}: missing from expectation file')
            continue
        for prop, data in rep["properties"].items():
            want = exp["properties"].get(prop, {}).get("verdict")
            if want != data["verdict"]:
                diffs.append(f'{rep["space"]}/{prop}: expected {want}, '
                             f'got {data["verdict"]}')
    return diffs


def cmd_check(args) -> int:
    try:
        for s in args.specs:
            parse_space_spec(s)
    except SpecParseError as exc:
        print(f"polarium: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.workers > 1:
            with ThreadPoolExecutor(max_workers=args.workers) as pool:
                futures = [pool.submit(_check_one, s, args.max_points, args.seed)
                           for s in args.specs]
                results = [f.result() for f in futures]
        else:
            results = [_check_one(s, args.max_points, args.seed)
                       for s in args.specs]
    except SpecParseError as exc:
        print(f"polarium: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"polarium: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except EquivalenceViolation as exc:
        print(f"polarium: equivalence assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERTION

    reports = [r.to_dict(include_millis=args.timings) for r in results]
    payload = json.dumps(reports, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    if args.format == "table":
        sys.stdout.write(_render_table(reports))
    elif not args.out:
        sys.stdout.write(payload)

    if args.expect:
        diffs = _compare_expectation(reports, args.expect)
        if diffs:
            for d in diffs:
                print(f"polarium: expectation mismatch: {d}", file=sys.stderr)
            return EXIT_EXPECTATION
    return EXIT_OK


def cmd_replay(args) -> int:
    with open(args.report, "r", encoding="utf-8") as fh:
        reports = json.load(fh)
    if "/" not in args.witness_id:
        print('polarium: witness id must look like "W(3,2)/A"', file=sys.stderr)
        return EXIT_USAGE
    space_name, prop = args.witness_id.rsplit("/", 1)
    rep = next((r for r in reports if r["space"] == space_name), None)
    if rep is None or prop not in rep.get("properties", {}):
        print(f"polarium: no entry for {args.witness_id} in the report",
              file=sys.stderr)
        return EXIT_USAGE
    entry = rep["properties"][prop]
    if entry["verdict"] != props.FAILS:
        print(f"polarium: {args.witness_id} verdict is {entry['verdict']!r}; "
              "nothing to replay", file=sys.stderr)
        return EXIT_USAGE
    space = build_space(space_name)
    if validate_witness(space, prop, entry["witness"]):
        print(f"{args.witness_id}: witness valid")
        return EXIT_OK
    print(f"polarium: {args.witness_id}: stale witness (nondeterminism or "
          "tampered report)", file=sys.stderr)
    return EXIT_ASSERTION


def cmd_info(args) -> int:
    try:
        space = build_space(args.spec)
    except SpecParseError as exc:
        print(f"polarium: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"polarium: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    info = {"space": space.name, "points": space.n_points,
            "lines": len(space.lines), "rank": space.rank}
    sys.stdout.write(json.dumps(info, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "check":
        code = cmd_check(args)
    elif args.command == "replay":
        code = cmd_replay(args)
    else:
        code = cmd_info(args)
    return code


if __name__ == "__main__":
    sys.exit(main())
