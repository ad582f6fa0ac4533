"""Exceptional root systems E6, E7, E8 in exact arithmetic.

Weights are integer tuples in the fundamental-weight basis: ``x[i]`` is the
pairing of the weight with the i-th simple coroot.  Roots are integer tuples of
simple-root coefficients.  Subsets of simple roots are given 1-based, using the
Bourbaki numbering (1-3-4-5-6-7-8 chain with 2 attached to 4).
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import exact

KINDS = ("E6", "E7", "E8")

Weight = tuple[int, ...]
Root = tuple[int, ...]

_DYNKIN_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))

# Weighted Euclidean form on the coordinate tuples returned by to_paper_coords.
DISPLAY_FORM_WEIGHTS = {
    "E8": (1,) * 8,
    "E7": (1,) * 6 + (2,),
    "E6": (1,) * 5 + (3,),
}


def rank_of(kind: str) -> int:
    try:
        return {"E6": 6, "E7": 7, "E8": 8}[kind.upper()]
    except KeyError:
        raise ValueError(f"unsupported root system {kind!r}; expected one of {KINDS}") from None


def normalize_subset(subset: Iterable[int] | None, rank: int) -> frozenset[int]:
    """Validate a 1-based subset of simple-root labels."""
    s = frozenset(int(i) for i in (subset or ()))
    bad = [i for i in s if not 1 <= i <= rank]
    if bad:
        raise ValueError(f"simple-root labels {sorted(bad)} out of range 1..{rank}")
    return s


def cartan_matrix(kind: str) -> tuple[tuple[int, ...], ...]:
    n = rank_of(kind)
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _DYNKIN_EDGES:
        if a <= n and b <= n:
            C[a - 1][b - 1] = C[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in C)


class RootSystem:
    """Immutable E_n datum with pairings, reflections and coordinate changes."""

    def __init__(self, kind: str):
        self.kind = kind.upper()
        self.rank = n = rank_of(self.kind)
        self.cartan = cartan_matrix(self.kind)
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        self.positive_roots: tuple[Root, ...] = _close_under_reflections(self.simple_roots, self.cartan)
        self.root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self.weight_gram: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(row) for row in exact.inverse(self.cartan)
        )
        # Smallest d with d*G integral: 1, 2, 3 for E8, E7, E6.
        self.gram_denominator = int(np.lcm.reduce([v.denominator for row in self.weight_gram for v in row]))
        for r in self.positive_roots:
            if self.root_norm(r) != 2:
                raise AssertionError("root system is not simply laced")

    def __repr__(self) -> str:
        return f"RootSystem({self.kind!r})"

    def __reduce__(self):
        return build_root_system, (self.kind,)

    # -- numpy views used by the batch kernels --------------------------------

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def roots_array(self) -> np.ndarray:
        return np.array(self.positive_roots, dtype=np.int64)

    @cached_property
    def roots_weight_array(self) -> np.ndarray:
        """Positive roots written in the fundamental-weight basis."""
        return self.roots_array @ self.cartan_array

    @cached_property
    def scaled_gram(self) -> np.ndarray:
        d = self.gram_denominator
        return np.array([[int(v * d) for v in row] for row in self.weight_gram], dtype=np.int64)

    @cached_property
    def rho_key_vector(self) -> np.ndarray:
        """d * <w_i, rho>: integer weights for the rho-pairing of x-vectors."""
        return self.scaled_gram.sum(axis=1)

    # -- elementary data -------------------------------------------------------

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    def root_norm(self, beta: Root) -> int:
        C = self.cartan
        n = self.rank
        return sum(beta[i] * C[i][j] * beta[j] for i in range(n) for j in range(n))

    def root_inner(self, a: Root, b: Root) -> int:
        C = self.cartan
        n = self.rank
        return sum(a[i] * C[i][j] * b[j] for i in range(n) for j in range(n) if a[i] and b[j])

    def root_to_weight(self, beta: Root) -> Weight:
        C = self.cartan
        return tuple(sum(beta[j] * C[j][k] for j in range(self.rank)) for k in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def height(self, beta: Root) -> int:
        return sum(beta)

    # -- pairings and reflections ---------------------------------------------

    def coroot_pairing(self, weight: Weight, beta: Root) -> int:
        """<weight, beta^vee>; valid because every root has length 2."""
        return sum(c * x for c, x in zip(beta, weight))

    def reflect(self, weight: Weight, beta: Root) -> Weight:
        p = self.coroot_pairing(weight, beta)
        if p == 0:
            return tuple(weight)
        b = self.root_to_weight(beta)
        return tuple(x - p * bx for x, bx in zip(weight, b))

    def simple_reflect(self, weight: Weight, i: int) -> Weight:
        """Reflect in the simple root with 0-based index i."""
        v = weight[i]
        row = self.cartan[i]
        return tuple(x - v * c for x, c in zip(weight, row))

    def subsystem_positive_roots(self, subset: Iterable[int]) -> list[Root]:
        """Positive roots supported on the given 1-based simple roots."""
        I = normalize_subset(subset, self.rank)
        outside = [j for j in range(self.rank) if j + 1 not in I]
        return [r for r in self.positive_roots if all(r[j] == 0 for j in outside)]

    def is_regular(self, weight: Weight, subset: Iterable[int]) -> bool:
        return all(self.coroot_pairing(weight, a) != 0 for a in self.subsystem_positive_roots(subset))

    def inversion_parity(self, weight: Weight, subset: Iterable[int]) -> int:
        """Parity of the number of positive roots of the subsystem pairing negatively."""
        count = 0
        for a in self.subsystem_positive_roots(subset):
            p = self.coroot_pairing(weight, a)
            if p == 0:
                raise ValueError(f"weight {weight} is singular for the subsystem {sorted(subset)}")
            count += p < 0
        return count % 2

    # -- norms and coordinates -------------------------------------------------

    def norm(self, weight: Weight) -> Fraction:
        G = self.weight_gram
        n = self.rank
        return sum(
            (weight[i] * G[i][j] * weight[j] for i in range(n) for j in range(n) if weight[i] and weight[j]),
            Fraction(0),
        )

    def inner(self, a: Weight, b: Weight) -> Fraction:
        G = self.weight_gram
        n = self.rank
        return sum((a[i] * G[i][j] * b[j] for i in range(n) for j in range(n)), Fraction(0))

    def rho_pairing(self, weight: Weight) -> Fraction:
        return self.inner(weight, self.rho)

    def to_paper_coords(self, weight: Weight) -> tuple[Fraction, ...]:
        """Orthogonal coordinates with squared length sum(DISPLAY_FORM_WEIGHTS * c**2)."""
        return paper_coords(self.kind, weight)


def paper_coords(kind: str, x: Sequence[int]) -> tuple[Fraction, ...]:
    x = [Fraction(v) for v in x]
    kind = kind.upper()
    half = (x[1] + x[2]) / 2
    partial = [half]
    last = {"E8": 7, "E7": 6, "E6": 5}[kind]
    for k in range(3, last + 1):
        partial.append(partial[-1] + x[k])
    head = [(x[1] - x[2]) / 2] + partial
    if kind == "E8":
        tail = 2 * x[0] + (5 * x[1] + 7 * x[2]) / 2 + 5 * x[3] + 4 * x[4] + 3 * x[5] + 2 * x[6] + x[7]
    elif kind == "E7":
        tail = (3 * x[2] + 3 * x[4] + x[6]) / 2 + x[0] + x[1] + 2 * x[3] + x[5]
    else:
        tail = x[1] / 2 + (2 * x[0] + 2 * x[4] + x[5]) / 3 + Fraction(5, 6) * x[2] + x[3]
    return tuple(head) + (tail,)


def paper_coords_array(kind: str, X: np.ndarray) -> np.ndarray:
    """Integer matrix of 6*coordinates for a batch of x-vectors (exact)."""
    n = rank_of(kind)
    M = np.array([[int(6 * c) for c in paper_coords(kind, [int(i == j) for j in range(n)])] for i in range(n)],
                 dtype=np.int64)
    return X @ M


def _close_under_reflections(simple: Sequence[Root], C: Sequence[Sequence[int]]) -> tuple[Root, ...]:
    n = len(simple)
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                p = sum(r[j] * C[j][i] for j in range(n))
                s = tuple(r[k] - (p if k == i else 0) for k in range(n))
                if any(s) and min(s) >= 0 and s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def build_root_system(kind: str) -> RootSystem:
    return RootSystem(kind)


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_coords(coords: Iterable[Fraction]) -> str:
    return "(" + ", ".join(format_fraction(Fraction(c)) for c in coords) + ")"
