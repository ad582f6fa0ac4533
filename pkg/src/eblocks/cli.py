"""Command line: eblocks {system, sweep, classify, check}.

Exit status is 0 on success, 1 when a check fails and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import atlas, checks
from .blocks import (adjacency_poset, compute_blocks, simple_gvm_indices)
from .conjugacy import class_table_csv, class_table_text, classify_subsets
from .jantzen import jantzen_matrix
from .orbit import enumerate_system
from .rootdata import KINDS, format_coords, format_fraction, rank_of

EMITS = ("weights", "jantzen", "blocks", "poset", "simple-gvm")
FORMATS = ("text", "csv", "json", "dot")


class UsageError(Exception):
    pass


def parse_indices(text: str | None, rank: int) -> tuple[int, ...]:
    """"2,3,4" or "2-4" or "" / "-" / "none" for the empty set; "all" for every index."""
    if text is None:
        return ()
    text = text.strip().lower()
    if text in ("", "-", "none", "0"):
        return ()
    if text == "all":
        return tuple(range(1, rank + 1))
    out = set()
    for part in text.split(","):
        part = part.strip()
        try:
            if "-" in part:
                a, b = (int(v) for v in part.split("-"))
                out.update(range(a, b + 1))
            else:
                out.add(int(part))
        except ValueError:
            raise UsageError(f"malformed index list {text!r}") from None
    if any(not 1 <= v <= rank for v in out):
        raise UsageError(f"indices must lie in 1..{rank}: {text!r}")
    return tuple(sorted(out))


def _kind(text: str) -> str:
    k = text.upper()
    if k not in KINDS:
        raise argparse.ArgumentTypeError(f"kind must be one of {', '.join(KINDS)}")
    return k


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def system_json(S, m, B) -> str:
    doc = {
        "kind": S.kind,
        "I": sorted(S.I),
        "J": sorted(S.J),
        "N": S.N,
        "weights": S.array.tolist(),
        "e_coords": [[format_fraction(q) for q in S.paper_coords(k)] for k in range(1, S.N + 1)],
        "jantzen": [[i, j, c] for (i, j), c in sorted(m.entries.items())],
        "blocks": B.blocks(),
    }
    return json.dumps(doc, indent=1) + "\n"


def render_system(S, emit: str, fmt: str, witnesses: bool = False) -> str:
    n = S.root_system.rank
    if emit == "weights" and fmt in ("text", "csv"):
        if fmt == "csv":
            head = ["index"] + [f"x{i}" for i in range(1, n + 1)] + [f"e{i}" for i in range(1, n + 1)]
            rows = [[k, *S.weight(k), *map(format_fraction, S.paper_coords(k))] for k in range(1, S.N + 1)]
            return _csv([head] + rows)
        w = len(str(max(S.N, 1)))
        return "".join(f"{k:>{w}}  {format_coords(S.paper_coords(k))}\n" for k in range(1, S.N + 1))
    m = jantzen_matrix(S, witnesses=witnesses)
    B = compute_blocks(m)
    if fmt == "json":
        return system_json(S, m, B)
    if emit == "weights":
        raise UsageError("weights support text, csv and json")
    if emit == "jantzen":
        if fmt == "csv":
            return m.to_csv()
        text = m.report() + "\n"
        if witnesses:
            for (i, j), wit in sorted(m.witnesses.items()):
                text += f"c({i},{j}) = " + " ".join(f"{'+' if s > 0 else '-'}{beta}" for beta, s in wit) + "\n"
        return text
    if emit == "blocks":
        return B.to_csv() if fmt == "csv" else B.to_text() + "\n"
    if emit == "poset":
        P = adjacency_poset(m)
        if fmt == "dot":
            return P.to_dot()
        if fmt == "csv":
            return _csv([["i", "j"]] + sorted(P.edges))
        return "".join(f"{i} -> {j}\n" for i, j in sorted(P.edges))
    if emit == "simple-gvm":
        idx = sorted(simple_gvm_indices(m))
        if fmt == "csv":
            return _csv([["index"] + [f"e{i}" for i in range(1, n + 1)]]
                        + [[k, *map(format_fraction, S.paper_coords(k))] for k in idx])
        return "".join(f"{k}  {format_coords(S.paper_coords(k))}\n" for k in idx)
    raise UsageError(f"unknown emit {emit!r}")


def run_system_report(args) -> int:
    n = rank_of(args.kind)
    I, J = parse_indices(args.I, n), parse_indices(args.J, n)
    if args.format == "dot" and args.emit != "poset":
        raise UsageError("--format dot requires --emit poset")
    S = enumerate_system(args.kind, I, J, method=args.method)
    text = render_system(S, args.emit, args.format, witnesses=args.witnesses)
    _write(text, args.out)
    return 0


def cmd_sweep(args) -> int:
    if args.format not in ("text", "csv"):
        raise UsageError("sweep output supports text and csv")

    def progress(rec):
        if args.progress:
            print(f"{rec.I} {rec.J} N={rec.N} {rec.status}", file=sys.stderr, flush=True)

    res = atlas.sweep(args.kind, args.min_sum, disconnected_only=args.disconnected_only and args.table == "pairs",
                      strategy=args.strategy, verify=args.verify, cache_dir=args.cache_dir, workers=args.workers,
                      max_sum=args.max_sum, progress=progress)
    if args.table == "pairs":
        text = atlas.records_to_csv(res) if args.format == "csv" else _records_text(res)
    else:
        rows = atlas.semisimple_table(res) if args.table == "semisimple" else atlas.aggregate_by_class(res)
        text = atlas.rows_to_csv(rows) if args.format == "csv" else atlas.rows_to_text(rows) + "\n"
    _write(text, args.out)
    print(res.summary(), file=sys.stderr)
    for r in res.failures:
        print(f"failed {r.I} {r.J}: {r.error}", file=sys.stderr)
    return 1 if res.failures else 0


def _records_text(res) -> str:
    lines = []
    for r in res.records:
        if r.status == "shortcut":
            desc = "1 block (threshold)"
        elif r.block_sizes is None:
            desc = f"failed: {r.error}"
        else:
            desc = f"N={r.N}  {atlas.block_summary(r.block_sizes) or 'empty'}"
        lines.append(f"I={','.join(map(str, r.I)) or '-'}  J={','.join(map(str, r.J)) or '-'}  {desc}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    classes = classify_subsets(args.kind)
    if args.format == "csv":
        text = class_table_csv(classes)
    elif args.format == "text":
        text = class_table_text(classes) + "\n"
    else:
        raise UsageError("classify output supports text and csv")
    _write(text, args.out)
    return 0


def run_check_suite(args) -> int:
    kinds = tuple(args.kind) if args.kind else ()
    results = checks.SUITES[args.suite](kinds)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} passed")
    return 1 if failed else 0


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eblocks", description="Blocks of parabolic category O for E6, E7, E8.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("system", help="report on one system (kind, I, J)")
    s.add_argument("kind", type=_kind)
    s.add_argument("--I", default="", help="indices of I, e.g. 2,3,4 or 2-7 (default: empty)")
    s.add_argument("--J", default="", help="indices of J (default: empty)")
    s.add_argument("--emit", choices=EMITS, default="weights")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.add_argument("--witnesses", action="store_true", help="list the roots behind each coefficient")
    s.add_argument("--method", choices=("lattice", "orbit"), default="lattice")
    s.add_argument("--out")
    s.set_defaults(func=run_system_report)

    w = sub.add_parser("sweep", help="block decompositions over many (I, J)")
    w.add_argument("kind", type=_kind)
    w.add_argument("--min-sum", type=int, default=0)
    w.add_argument("--max-sum", type=int)
    w.add_argument("--disconnected-only", action="store_true")
    w.add_argument("--strategy", choices=("pairs", "classes"), default="pairs")
    w.add_argument("--table", choices=("disconnected", "semisimple", "pairs"), default="disconnected")
    w.add_argument("--verify", action="store_true", help="compute pairs covered by the one-block threshold")
    w.add_argument("--cache-dir")
    w.add_argument("--workers", type=int)
    w.add_argument("--format", choices=("text", "csv"), default="text")
    w.add_argument("--progress", action="store_true")
    w.add_argument("--out")
    w.set_defaults(func=cmd_sweep)

    c = sub.add_parser("classify", help="conjugacy classes of subsets of simple roots")
    c.add_argument("kind", type=_kind)
    c.add_argument("--format", choices=("text", "csv"), default="text")
    c.add_argument("--out")
    c.set_defaults(func=cmd_classify)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=sorted(checks.SUITES))
    k.add_argument("--kind", type=_kind, action="append", help="restrict or extend the kinds (repeatable)")
    k.set_defaults(func=run_check_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "min_sum", 0) < 0:
        parser.error("--min-sum must be nonnegative")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"eblocks: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
