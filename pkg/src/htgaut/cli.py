"""Command-line front end: ``htgaut {classify,census,verify,export}``.

Exit codes: 0 success, 2 usage or invalid parameters, 3 classifier/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from htgaut.census import (
    CensusRow,
    census_rows,
    run_verify,
    summarize,
    verify_triple,
    write_census,
)
from htgaut.classify import classify
from htgaut.errors import HtgError
from htgaut.formats import to_dot, to_graph6, to_json
from htgaut.htg import build_htg, normal_form, validate_params

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 2, 3

log = logging.getLogger("htgaut")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _arc_text(level: int, regular: int | None) -> str:
    if regular is not None and regular > 0:
        return f"{regular}-arc-regular"
    if level >= 1:
        return f"{level}-arc-transitive"
    return "regular on vertices" if regular == 0 else "not arc-transitive"


def cmd_classify(args: argparse.Namespace) -> int:
    p_raw = validate_params(args.m, args.n, args.ell)
    p = normal_form(p_raw)
    if p != p_raw:
        print(f"note: {p_raw} normalised to {p}", file=sys.stderr)
    r = classify(p_raw)
    verification = verify_triple(p) if args.verify else None
    if args.format == "json":
        row = CensusRow.from_result(p_raw, r, verification.ok if verification else None)
        record = row.__dict__ | {"normal_cayley": r.is_normal_cayley}
        if verification and not verification.ok:
            record["mismatches"] = verification.mismatches
        print(json.dumps(record))
    else:
        flags = " ".join(f"c{k}={'T' if f else 'F'}" for k, f in enumerate(r.flags.as_tuple(), 1))
        lines = [
            f"{r.params}  order {r.params.order}  girth {r.girth}",
            f"category: {r.label}",
            f"flags: {flags}",
            f"|Aut| = {r.predicted_aut_order}  vertex stabilizer {r.predicted_stabilizer}",
            f"symmetry: {_arc_text(r.arc_transitive_up_to, r.arc_regular_at)}",
            f"normal Cayley graph of G: {'yes' if r.is_normal_cayley else 'no'}",
        ]
        if verification is not None:
            lines.append(
                f"oracle: |Aut| = {verification.aut_order}, stabilizer {verification.stabilizer}, "
                f"verified={'true' if verification.ok else 'false'}"
            )
            lines.extend(f"  mismatch {m}" for m in verification.mismatches)
        print("\n".join(lines))
    if verification is not None and not verification.ok:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    if args.max_order < 4:
        raise HtgError("--max-order must be at least 4")
    rows = census_rows(args.max_order)
    _emit(write_census(rows, args.format), args.out)
    log.info("%d rows", len(rows))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    try:
        results = run_verify(args.max_order, jobs=args.jobs, force=args.force)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start
    bad = [r for r in results if not r.ok]
    for r in bad:
        for m in r.mismatches:
            print(f"MISMATCH {r.params}: {m}")
    print(f"{'category':<16}{'count':>8}")
    for label, count in sorted(summarize(results).items()):
        print(f"{label:<16}{count:>8}")
    print(f"triples: {len(results)}  mismatches: {len(bad)}  time: {elapsed:.1f}s")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    p = validate_params(args.m, args.n, args.ell)
    htg = build_htg(p)
    if args.format == "graph6":
        text = to_graph6(htg.graph) + "\n"
    elif args.format == "dot":
        text = to_dot(htg)
    else:
        text = json.dumps(to_json(htg)) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="htgaut", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def triple(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)
        sp.add_argument("ell", type=int)

    sp = sub.add_parser("classify", help="classify Aut(HTG(m,n,l)) from its parameters")
    triple(sp)
    sp.add_argument("--verify", action="store_true", help="confirm with the automorphism engine")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("census", help="classify every normal-form triple up to an order")
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="cross-check classifier and oracle on every triple")
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
    sp.add_argument("--force", action="store_true", help="lift the max-order runtime guard")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write one graph as graph6, DOT or JSON")
    triple(sp)
    sp.add_argument("--format", choices=["graph6", "dot", "json"], default="graph6")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except HtgError as exc:
        print(f"error: {type(exc).__name__.removesuffix('Error')}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
