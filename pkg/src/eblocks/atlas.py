"""Sweeps over (I, J) pairs, aggregation by conjugacy class and table output.

Two sweep strategies are offered.  ``pairs`` computes every ordered pair.
``classes`` computes one representative per unordered pair of conjugacy
classes and transports the result to every member pair, using invariance of
the block structure under conjugating I or J and under swapping I with J.
"""
from __future__ import annotations

import csv
import io
import os
import random
import tempfile
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .blocks import compute_blocks, system_blocks, threshold_shortcut
from .conjugacy import ConjugacyClass, class_of, classify_subsets
from .jantzen import jantzen_matrix
from .orbit import enumerate_system, weyl_quotient_bound
from .rootdata import normalize_subset, rank_of

CACHE_VERSION = 1
CACHE_ENV = "EBLOCKS_CACHE"
WORKERS_ENV = "EBLOCKS_WORKERS"
# Systems up to this size get a materialised Jantzen matrix and a full cache
# entry; larger ones use a streaming block computation and a summary entry.
DETAIL_LIMIT = 20000

Pair = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class PairRecord:
    I: tuple[int, ...]
    J: tuple[int, ...]
    N: int | None
    block_sizes: tuple[int, ...] | None
    status: str = "computed"  # computed | cached | shortcut | transported | failed
    error: str = ""

    @property
    def connected(self) -> bool | None:
        if self.status == "shortcut":
            return True
        if self.block_sizes is None:
            return None
        return len(self.block_sizes) <= 1

    @property
    def semisimple(self) -> bool:
        return bool(self.block_sizes) and all(s == 1 for s in self.block_sizes)


@dataclass
class SweepResult:
    kind: str
    min_sum: int
    strategy: str
    records: list[PairRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[PairRecord]:
        return [r for r in self.records if r.status == "failed"]

    def disconnected(self) -> list[PairRecord]:
        return [r for r in self.records if r.connected is False]

    def lookup(self, I, J) -> PairRecord:
        key = (tuple(sorted(I)), tuple(sorted(J)))
        for r in self.records:
            if (r.I, r.J) == key:
                return r
        raise KeyError(key)

    def summary(self) -> str:
        counts = Counter(r.status for r in self.records)
        parts = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        return (f"{self.kind} |I|+|J| >= {self.min_sum} ({self.strategy}): {len(self.records)} pairs "
                f"[{parts}], {len(self.disconnected())} disconnected")


def block_summary(sizes: Iterable[int], times: str = "x") -> str:
    """"2x12 + 20" style: k x s terms in ascending order of block size."""
    c = Counter(sizes)
    return " + ".join(f"{c[s]}{times}{s}" if c[s] > 1 else str(s) for s in sorted(c))


def parse_block_summary(text: str) -> tuple[int, ...]:
    out = []
    if not text.strip():
        return ()
    for term in text.replace("×", "x").split("+"):
        term = term.strip()
        if "x" in term:
            k, s = term.split("x")
            out += [int(s)] * int(k)
        else:
            out.append(int(term))
    return tuple(sorted(out))


def _indices(I) -> str:
    return ",".join(map(str, sorted(I))) or "-"


def cache_path(cache_dir: str | os.PathLike, kind: str, I, J) -> Path:
    return Path(cache_dir) / kind / f"I={_indices(I)}_J={_indices(J)}.dat"


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _render_cache(kind, I, J, system, matrix, blocks) -> str:
    lines = [f"eblocks-cache {CACHE_VERSION}", f"kind {kind}", f"I {_indices(I)}", f"J {_indices(J)}",
             f"N {blocks.N}", "blocks " + " ".join(map(str, blocks.block_sizes))]
    if matrix is not None:
        lines.append(f"weights {system.N}")
        lines += [" ".join(map(str, w)) for w in system.array.tolist()]
        lines.append(f"jantzen {len(matrix)}")
        lines += [f"{i} {j} {c}" for (i, j), c in sorted(matrix.entries.items())]
        lines.append(f"labels {blocks.N}")
        lines += [" ".join(map(str, blocks.labels.tolist()))]
    else:
        lines.append("detail none")
    return "\n".join(lines) + "\n"


def read_cache(path: Path) -> dict | None:
    """Header fields of a cache file, or None if absent or from another version."""
    try:
        with open(path) as fh:
            head = [fh.readline().rstrip("\n") for _ in range(6)]
    except OSError:
        return None
    if head[0] != f"eblocks-cache {CACHE_VERSION}":
        return None
    fields = dict(line.split(" ", 1) for line in head[1:] if " " in line)
    sizes = fields.get("blocks", "")
    return {"kind": fields.get("kind"), "N": int(fields["N"]),
            "block_sizes": tuple(int(s) for s in sizes.split()) if sizes else ()}


def compute_pair(kind: str, I, J, cache_dir: str | None = None, early_exit: bool = True) -> PairRecord:
    """Enumerate a system and decompose it into blocks (consulting the cache)."""
    kind = kind.upper()
    n = rank_of(kind)
    I, J = normalize_subset(I, n), normalize_subset(J, n)
    key = (tuple(sorted(I)), tuple(sorted(J)))
    path = cache_path(cache_dir, kind, I, J) if cache_dir else None
    if path is not None:
        hit = read_cache(path)
        if hit is not None:
            return PairRecord(*key, hit["N"], hit["block_sizes"], "cached")
    small = weyl_quotient_bound(kind, I, J) <= DETAIL_LIMIT
    system = enumerate_system(kind, I, J, method="orbit")
    if small:
        matrix = jantzen_matrix(system)
        blocks = compute_blocks(matrix)
    else:
        matrix = None
        blocks = system_blocks(system, early_exit=early_exit)
    if path is not None:
        _write_atomic(path, _render_cache(kind, I, J, system, matrix, blocks))
    return PairRecord(*key, system.N, tuple(blocks.block_sizes))


def _safe_compute(args) -> PairRecord:
    kind, I, J, cache_dir = args
    try:
        return compute_pair(kind, I, J, cache_dir)
    except Exception as exc:  # recorded, the sweep carries on
        return PairRecord(tuple(sorted(I)), tuple(sorted(J)), None, None, "failed", f"{type(exc).__name__}: {exc}")


def _run(units: list, workers: int, progress: Callable | None) -> Iterator[PairRecord]:
    if workers <= 1:
        for u in units:
            rec = _safe_compute(u)
            if progress:
                progress(rec)
            yield rec
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rec in pool.map(_safe_compute, units, chunksize=1):
            if progress:
                progress(rec)
            yield rec


def all_subsets(kind: str) -> list[tuple[int, ...]]:
    n = rank_of(kind)
    return [c for r in range(n + 1) for c in combinations(range(1, n + 1), r)]


def ordered_pairs(kind: str, min_sum: int = 0, max_sum: int | None = None) -> list[Pair]:
    """Ordered (I, J) with min_sum <= |I| + |J| <= max_sum, largest sums first."""
    subs = all_subsets(kind)
    top = 2 * rank_of(kind) if max_sum is None else max_sum
    pairs = [(I, J) for I in subs for J in subs if min_sum <= len(I) + len(J) <= top]
    pairs.sort(key=lambda p: (-(len(p[0]) + len(p[1])), p))
    return pairs


def _class_index(kind: str) -> dict[frozenset[int], int]:
    return {I: k for k, c in enumerate(classify_subsets(kind)) for I in c.members}


def class_cells(kind: str, min_sum: int = 0, max_sum: int | None = None) -> list[tuple[ConjugacyClass, ConjugacyClass]]:
    """Unordered class pairs, oriented with |I| >= |J| (ties by class order)."""
    classes = classify_subsets(kind)
    top = 2 * rank_of(kind) if max_sum is None else max_sum
    cells = []
    for a, A in enumerate(classes):
        for b, B in enumerate(classes):
            if not min_sum <= A.rank + B.rank <= top:
                continue
            if A.rank > B.rank or (A.rank == B.rank and a <= b):
                cells.append((A, B))
    cells.sort(key=lambda c: (-(c[0].rank + c[1].rank), classes.index(c[0]), classes.index(c[1])))
    return cells


def sweep(kind: str, min_sum: int = 0, disconnected_only: bool = False, strategy: str = "pairs",
          verify: bool = False, cache_dir: str | None = None, workers: int | None = None,
          max_sum: int | None = None, progress: Callable | None = None) -> SweepResult:
    """Block decompositions of every ordered pair with |I| + |J| >= min_sum.

    Pairs covered by the one-block threshold are recorded as shortcuts unless
    ``verify`` is set.  With ``disconnected_only`` the result keeps only the
    disconnected pairs (and failures).
    """
    kind = kind.upper()
    if min_sum < 0:
        raise ValueError("min_sum must be nonnegative")
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV) or None
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    result = SweepResult(kind, min_sum, strategy)
    if strategy == "pairs":
        todo = []
        for I, J in ordered_pairs(kind, min_sum, max_sum):
            if threshold_shortcut(kind, I, J, verify):
                result.records.append(PairRecord(I, J, None, None, "shortcut"))
            else:
                todo.append((kind, I, J, cache_dir))
        result.records += list(_run(todo, workers, progress))
    elif strategy == "classes":
        cells = class_cells(kind, min_sum, max_sum)
        todo, shortcut_cells = [], []
        for A, B in cells:
            rep = (tuple(sorted(A.representative)), tuple(sorted(B.representative)))
            if threshold_shortcut(kind, *rep, verify):
                shortcut_cells.append((A, B))
            else:
                todo.append((kind, *rep, cache_dir))
        computed = list(_run(todo, workers, progress))
        done = {(r.I, r.J): r for r in computed}
        for A, B in cells:
            rep = (tuple(sorted(A.representative)), tuple(sorted(B.representative)))
            base = done.get(rep)
            for X, Y in {(A, B), (B, A)}:
                for I in X.members:
                    for J in Y.members:
                        key = (tuple(sorted(I)), tuple(sorted(J)))
                        if base is None:
                            result.records.append(PairRecord(*key, None, None, "shortcut"))
                        elif base.status == "failed":
                            result.records.append(PairRecord(*key, None, None, "failed", base.error))
                        elif key == rep:
                            result.records.append(base)
                        else:
                            result.records.append(PairRecord(*key, base.N, base.block_sizes, "transported"))
        result.records.sort(key=lambda r: (-(len(r.I) + len(r.J)), r.I, r.J))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if disconnected_only:
        result.records = [r for r in result.records if r.connected is False or r.status == "failed"]
    return result


@dataclass(frozen=True)
class ClassRow:
    class_I: ConjugacyClass
    class_J: ConjugacyClass
    N: int
    block_sizes: tuple[int, ...]
    pairs: int

    @property
    def blocks(self) -> str:
        return block_summary(self.block_sizes)

    @property
    def block_count(self) -> int:
        return len(self.block_sizes)


class InconsistentCell(RuntimeError):
    """Two pairs in one class cell disagree on their block structure."""


def aggregate_by_class(result: SweepResult, disconnected_only: bool = True) -> list[ClassRow]:
    """One row per (class of I, class of J) with |I| >= |J|.

    For equal sizes only one orientation of a pair of distinct classes is kept.
    """
    index = _class_index(result.kind)
    classes = classify_subsets(result.kind)
    cells: dict[tuple[int, int], list[PairRecord]] = defaultdict(list)
    for r in result.records:
        if r.block_sizes is None:
            continue
        cells[(index[frozenset(r.I)], index[frozenset(r.J)])].append(r)
    rows = []
    for (a, b), recs in cells.items():
        A, B = classes[a], classes[b]
        if A.rank < B.rank or (A.rank == B.rank and a > b and (b, a) in cells):
            continue
        shapes = {(r.N, r.block_sizes) for r in recs}
        if len(shapes) != 1:
            raise InconsistentCell(f"{A.label()} / {B.label()}: {sorted(shapes)}")
        N, sizes = shapes.pop()
        if disconnected_only and len(sizes) <= 1:
            continue
        rows.append(ClassRow(A, B, N, sizes, len(recs)))
    rows.sort(key=lambda r: (len(r.block_sizes), r.N, r.class_I.label(), r.class_J.label()))
    return rows


def semisimple_table(result: SweepResult) -> list[ClassRow]:
    """Class rows whose blocks are all singletons (connected ones included)."""
    return [r for r in aggregate_by_class(result, disconnected_only=False)
            if r.N > 0 and all(s == 1 for s in r.block_sizes)]


def duality_check(kind: str, I, J, cache_dir: str | None = None) -> bool:
    """Block-size multisets of (I, J) and (J, I) agree."""
    a = compute_pair(kind, I, J, cache_dir, early_exit=False)
    b = compute_pair(kind, J, I, cache_dir, early_exit=False)
    return a.N == b.N and a.block_sizes == b.block_sizes


def duality_violations(result: SweepResult) -> list[tuple[PairRecord, PairRecord]]:
    """Computed pairs whose swapped pair was also computed with different blocks."""
    seen = {(r.I, r.J): r for r in result.records if r.block_sizes is not None}
    return [(r, seen[(r.J, r.I)]) for (I, J), r in seen.items()
            if I < J and (J, I) in seen and (r.N, r.block_sizes) != (seen[(J, I)].N, seen[(J, I)].block_sizes)]


def sample_pairs(kind: str, count: int, total: int | None = None, seed: int = 0) -> list[Pair]:
    """Random ordered pairs (with |I| + |J| == total when given)."""
    rng = random.Random(seed)
    pool = ordered_pairs(kind, total or 0, total)
    return rng.sample(pool, min(count, len(pool)))


def rows_to_text(rows: list[ClassRow]) -> str:
    wI = max([len("Phi_I")] + [len(r.class_I.label()) for r in rows])
    wJ = max([len("Phi_J")] + [len(r.class_J.label()) for r in rows])
    out = [f"{'Phi_I':<{wI}}  {'Phi_J':<{wJ}}  blocks"]
    out += [f"{r.class_I.label():<{wI}}  {r.class_J.label():<{wJ}}  {r.blocks}" for r in rows]
    return "\n".join(out)


def rows_to_csv(rows: list[ClassRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class_I", "class_J", "N", "blocks", "block_count", "pairs"])
    for r in rows:
        w.writerow([r.class_I.label(), r.class_J.label(), r.N, r.blocks, r.block_count, r.pairs])
    return buf.getvalue()


def records_to_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["I", "J", "N", "blocks", "status"])
    for r in result.records:
        blocks = block_summary(r.block_sizes) if r.block_sizes else ("1 block" if r.status == "shortcut" else "")
        w.writerow([_indices(r.I), _indices(r.J), "" if r.N is None else r.N, blocks, r.status])
    return buf.getvalue()


__all__ = [
    "PairRecord", "SweepResult", "ClassRow", "InconsistentCell", "sweep", "compute_pair",
    "aggregate_by_class", "semisimple_table", "duality_check", "duality_violations", "block_summary", "parse_block_summary",
    "class_cells", "ordered_pairs", "sample_pairs", "rows_to_text", "rows_to_csv", "records_to_csv",
    "read_cache", "cache_path", "class_of",
]
