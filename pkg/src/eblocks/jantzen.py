"""Jantzen coefficients of a parabolic system.

For a system weight lam and a positive root beta outside Phi_I with
<lam, beta^vee> > 0, the reflection s_beta lam either is singular for Phi_I
(and contributes nothing) or sorts into the strict I-chamber as
mu = w s_beta lam with w in W_I; it then contributes (-1)**len(w) to c(lam, mu).
"""
from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .orbit import ParabolicSystem, sort_to_I_dominant
from .rootdata import Root, Weight, build_root_system, normalize_subset


class EnumerationError(RuntimeError):
    """A linked weight is missing from the system: the enumeration is incomplete."""


@dataclass
class JantzenMatrix:
    """Sparse integer matrix of nonzero Jantzen coefficients.

    ``src``, ``dst`` are 0-based row/column arrays; the public accessors use the
    1-based system indexing.
    """
    n_weights: int
    src: np.ndarray
    dst: np.ndarray
    coef: np.ndarray
    witnesses: dict[tuple[int, int], list[tuple[Root, int]]] | None = field(default=None, repr=False)

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {(int(i) + 1, int(j) + 1): int(c) for i, j, c in zip(self.src, self.dst, self.coef)}

    def __len__(self) -> int:
        return int(self.src.shape[0])

    def row(self, i: int) -> dict[int, int]:
        mask = self.src == i - 1
        return {int(j) + 1: int(c) for j, c in zip(self.dst[mask], self.coef[mask])}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "c"])
        for (i, j), c in sorted(self.entries.items()):
            w.writerow([i, j, c])
        return buf.getvalue()

    def report(self) -> str:
        """Per-row lists of columns with positive and negative coefficients."""
        pos: dict[int, list[int]] = defaultdict(list)
        neg: dict[int, list[int]] = defaultdict(list)
        for (i, j), c in sorted(self.entries.items()):
            (pos if c > 0 else neg)[i].append(j if abs(c) == 1 else f"{j}[{c:+d}]")
        width = len(str(self.n_weights))
        lines = []
        for i in range(1, self.n_weights + 1):
            p = ", ".join(map(str, pos.get(i, []))) or "-"
            q = ", ".join(map(str, neg.get(i, []))) or "-"
            lines.append(f"{i:>{width}} | + {p} | - {q}")
        return "\n".join(lines)


def psi_plus(kind: str, weight: Weight, I: Iterable[int]) -> list[Root]:
    R = build_root_system(kind)
    I = normalize_subset(I, R.rank)
    inside = set(R.subsystem_positive_roots(I))
    return [b for b in R.positive_roots if b not in inside and R.coroot_pairing(weight, b) > 0]


def psi_plus_plus(kind: str, weight: Weight, I: Iterable[int]) -> list[Root]:
    R = build_root_system(kind)
    I = normalize_subset(I, R.rank)
    return [b for b in psi_plus(kind, weight, I) if R.is_regular(R.reflect(weight, b), I)]


def linked_targets(weight: Weight, system: ParabolicSystem) -> list[tuple[Root, int, int]]:
    """(beta, target index, sign) for every beta in psi_plus_plus of the weight."""
    R = system.root_system
    out = []
    for b in psi_plus_plus(system.kind, weight, system.I):
        mu, sign = sort_to_I_dominant(system.kind, R.reflect(weight, b), system.I)
        target = system.index.get(mu)
        if target is None:
            raise EnumerationError(f"{mu} = sort(s_beta {weight}) with beta = {b} is not in the system")
        out.append((b, target, sign))
    return out


def _matrix_python(system: ParabolicSystem, witnesses: bool) -> JantzenMatrix:
    rows, cols, vals = [], [], []
    wit: dict[tuple[int, int], list[tuple[Root, int]]] = {}
    for i, lam in enumerate(system.weights, start=1):
        grouped: dict[int, list[tuple[Root, int]]] = defaultdict(list)
        for b, j, s in linked_targets(lam, system):
            grouped[j].append((b, s))
        for j in sorted(grouped):
            c = sum(s for _, s in grouped[j])
            if c:
                rows.append(i - 1)
                cols.append(j - 1)
                vals.append(c)
                if witnesses:
                    wit[(i, j)] = grouped[j]
    return JantzenMatrix(system.N, np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64),
                         np.array(vals, dtype=np.int64), wit if witnesses else None)


def coefficient_chunks(system: ParabolicSystem, buffer: int = 1 << 20, rows: int = 1 << 16) -> Iterator[tuple[np.ndarray, ...]]:
    """Yield (src, dst, coef) arrays of nonzero coefficients, 0-based, row by row.

    Rows are produced by the compiled kernel in slices of at most ``rows`` rows
    and ``buffer`` entries, so a caller that only needs connectivity never holds the matrix.
    The yielded arrays are views into a reused buffer.
    """
    R = system.root_system
    X = system.array
    N = X.shape[0]
    slots, values = kernels.build_table(kernels.encode(X))
    I_idx = np.array(sorted(i - 1 for i in system.I), dtype=np.int64)
    inside = set(R.subsystem_positive_roots(system.I))
    candidates = np.array([k for k, r in enumerate(R.positive_roots) if r not in inside], dtype=np.int64)
    buffer = max(buffer, candidates.shape[0] + 1)
    out_src = np.empty(buffer, dtype=np.int64)
    out_dst = np.empty(buffer, dtype=np.int64)
    out_coef = np.empty(buffer, dtype=np.int64)
    r = 0
    while r < N:
        nxt, w = kernels.jantzen_rows(X, r, min(N, r + rows), slots, values, R.roots_array, R.roots_weight_array,
                                      candidates, I_idx, R.cartan_array, out_src, out_dst, out_coef)
        if nxt < 0:
            bad = -1 - nxt
            raise EnumerationError(f"a linked weight of {tuple(X[bad])} is not in the system")
        yield out_src[:w], out_dst[:w], out_coef[:w]
        r = nxt


def _matrix_compiled(system: ParabolicSystem) -> JantzenMatrix:
    parts = [tuple(a.copy() for a in chunk) for chunk in coefficient_chunks(system)]
    if parts:
        src, dst, coef = (np.concatenate(p) for p in zip(*parts))
    else:
        src = dst = coef = np.empty(0, dtype=np.int64)
    perm = np.lexsort((dst, src))
    return JantzenMatrix(system.N, src[perm], dst[perm], coef[perm])


def jantzen_matrix(system: ParabolicSystem, witnesses: bool = False, engine: str = "auto") -> JantzenMatrix:
    """All nonzero c(lam^i, lam^j) of the system.

    ``engine`` is "python" (reference implementation, records witnesses),
    "compiled", or "auto" (compiled unless witnesses are requested).
    """
    if engine == "auto":
        engine = "python" if witnesses else "compiled"
    if engine == "python":
        return _matrix_python(system, witnesses)
    if engine == "compiled":
        if witnesses:
            raise ValueError("witness storage requires the python engine")
        return _matrix_compiled(system)
    raise ValueError(f"unknown engine {engine!r}")
