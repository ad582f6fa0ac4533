"""Blocks, the adjacency poset and module-theoretic readouts of a Jantzen matrix.

Two simple modules lie in the same block exactly when their weights are joined
by a chain of nonzero Jantzen coefficients, so blocks are the connected
components of the (undirected) nonzero-entry graph.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .jantzen import JantzenMatrix, coefficient_chunks
from .orbit import ParabolicSystem
from .rootdata import normalize_subset, rank_of

# Largest |I| + |J| for which a single block is known in advance.
ONE_BLOCK_THRESHOLD = {"E6": 5, "E7": 6, "E8": 7}


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """``labels[k]`` is the minimal 1-based index in the block of index k + 1."""
    labels: np.ndarray

    @property
    def N(self) -> int:
        return int(self.labels.shape[0])

    @cached_property
    def block_sizes(self) -> list[int]:
        return sorted(Counter(self.labels.tolist()).values())

    @property
    def block_count(self) -> int:
        return len(self.block_sizes)

    @property
    def connected(self) -> bool:
        return self.block_count <= 1

    def blocks(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for k, lab in enumerate(self.labels.tolist(), start=1):
            groups.setdefault(lab, []).append(k)
        return [groups[k] for k in sorted(groups)]

    def label(self, i: int) -> int:
        return int(self.labels[i - 1])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "block"])
        for k, lab in enumerate(self.labels.tolist(), start=1):
            w.writerow([k, lab])
        return buf.getvalue()

    def to_text(self) -> str:
        sizes = ", ".join(str(len(b)) for b in sorted(self.blocks(), key=len, reverse=True))
        head = f"{self.block_count} block{'s' if self.block_count != 1 else ''}: sizes {sizes}"
        body = [f"  block {b[0]}: {' '.join(map(str, b))}" for b in self.blocks()]
        return "\n".join([head] + body)


def _labels_from_edges(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    parent = np.arange(n, dtype=np.int64)
    kernels.dsu_union(parent, np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64))
    return kernels.dsu_labels(parent) + 1


def compute_blocks(m: JantzenMatrix) -> BlockDecomposition:
    """Disjoint-set union over the nonzero entries."""
    return BlockDecomposition(_labels_from_edges(m.n_weights, m.src, m.dst))


def system_blocks(system: ParabolicSystem, early_exit: bool = True) -> BlockDecomposition:
    """Blocks of a system without materialising its Jantzen matrix.

    With ``early_exit`` the scan stops once everything is in one block.
    """
    parent = np.arange(system.N, dtype=np.int64)
    components = system.N
    for src, dst, _ in coefficient_chunks(system):
        components -= kernels.dsu_union(parent, src, dst)
        if early_exit and components <= 1:
            break
    return BlockDecomposition(kernels.dsu_labels(parent) + 1)


def threshold_shortcut(kind: str, I, J, verify: bool = False) -> str | None:
    """"one block" when |I| + |J| is at or below the known threshold, else None.

    With ``verify`` the shortcut is disabled and callers compute directly.
    """
    kind = kind.upper()
    n = rank_of(kind)
    if verify:
        return None
    if len(normalize_subset(I, n)) + len(normalize_subset(J, n)) <= ONE_BLOCK_THRESHOLD[kind]:
        return "one block"
    return None


@dataclass(frozen=True)
class AdjacencyPoset:
    n: int
    edges: frozenset[tuple[int, int]]

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        lines += [f'  {k} [label="{k}"];' for k in range(1, self.n + 1)]
        lines += [f"  {i} -> {j};" for i, j in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @property
    def sources(self) -> set[int]:
        targets = {j for _, j in self.edges}
        return set(range(1, self.n + 1)) - targets

    @property
    def sinks(self) -> set[int]:
        starts = {i for i, _ in self.edges}
        return set(range(1, self.n + 1)) - starts


def adjacency_poset(m: JantzenMatrix) -> AdjacencyPoset:
    """Keep (i, j) with c_ij != 0 unless an index-increasing chain of nonzero
    entries of length at least two also leads from i to j."""
    succ: dict[int, list[int]] = {}
    for (i, j) in m.entries:
        succ.setdefault(i, []).append(j)
    # reach[k]: bitset of indices reachable from k by index-increasing chains.
    reach = [0] * (m.n_weights + 2)
    for i in range(m.n_weights, 0, -1):
        acc = 0
        for j in succ.get(i, ()):
            if j > i:
                acc |= (1 << j) | reach[j]
        reach[i] = acc
    edges = set()
    for i, js in succ.items():
        for j in js:
            longer = any(k > i and k != j and (reach[k] >> j) & 1 for k in js)
            if not longer:
                edges.add((i, j))
    return AdjacencyPoset(m.n_weights, frozenset(edges))


def simple_gvm_indices(m: JantzenMatrix) -> set[int]:
    """Indices whose row vanishes: the sum formula then forces M_I(lam) simple."""
    rows = set((m.src + 1).tolist())
    return set(range(1, m.n_weights + 1)) - rows


def isolated_top_indices(m: JantzenMatrix) -> set[int]:
    """Indices with no incoming nonzero coefficient."""
    cols = set((m.dst + 1).tolist())
    return set(range(1, m.n_weights + 1)) - cols
