"""Weights of a parabolic system (Phi, Phi_I, Phi_J).

The simple modules of the system are indexed by the strictly I-dominant
weights in the W-orbit of w_J = sum of fundamental weights outside J.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels
from .lattice import shell_points
from .rootdata import (Weight, build_root_system, normalize_subset, paper_coords,
                       paper_coords_array, rank_of)


@dataclass(frozen=True, eq=False)
class ParabolicSystem:
    """Ordered weights lam^1..lam^N of a system, stored as an (N, rank) int array."""
    kind: str
    I: frozenset[int]
    J: frozenset[int]
    array: np.ndarray = field(repr=False)

    @property
    def root_system(self):
        return build_root_system(self.kind)

    def __len__(self) -> int:
        return self.array.shape[0]

    @property
    def N(self) -> int:
        return self.array.shape[0]

    def __repr__(self) -> str:
        return f"ParabolicSystem({self.kind}, I={sorted(self.I)}, J={sorted(self.J)}, N={self.N})"

    @cached_property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(map(tuple, self.array.tolist()))

    @cached_property
    def order_keys(self) -> tuple[Fraction, ...]:
        """<lam, rho> for each weight; nonincreasing along the system."""
        R = self.root_system
        d = R.gram_denominator
        return tuple(Fraction(int(k), d) for k in self.array @ R.rho_key_vector)

    @cached_property
    def index(self) -> dict[Weight, int]:
        """1-based position of each weight."""
        return {w: k + 1 for k, w in enumerate(self.weights)}

    def weight(self, i: int) -> Weight:
        return tuple(int(v) for v in self.array[i - 1])

    def paper_coords(self, i: int) -> tuple[Fraction, ...]:
        return paper_coords(self.kind, self.weight(i))

    @classmethod
    def from_array(cls, kind: str, I, J, X: np.ndarray) -> "ParabolicSystem":
        X = np.ascontiguousarray(_order(kind, np.asarray(X, dtype=np.int64)))
        X.setflags(write=False)
        return cls(kind, frozenset(I), frozenset(J), X)


_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


def weyl_group_order(kind: str, I: Iterable[int] | None = None) -> int:
    """|W_I| (|W| when I is None)."""
    from .conjugacy import cartan_type
    n = rank_of(kind)
    I = range(1, n + 1) if I is None else I
    order = 1
    for letter, r in cartan_type(kind, I):
        if letter == "A":
            order *= math.factorial(r + 1)
        elif letter == "D":
            order *= 2 ** (r - 1) * math.factorial(r)
        else:
            order *= _E_ORDERS[r]
    return order


def weyl_quotient_bound(kind: str, I, J) -> int:
    """|W| / (|W_I| |W_J|), an upper bound for the size of the system."""
    return weyl_group_order(kind) // (weyl_group_order(kind, I) * weyl_group_order(kind, J))


def omega_J(kind: str, J: Iterable[int]) -> Weight:
    n = rank_of(kind)
    J = normalize_subset(J, n)
    return tuple(0 if i + 1 in J else 1 for i in range(n))


def dominant_representative(kind: str, weight: Weight) -> tuple[Weight, int]:
    """Reflect away negative simple pairings; returns (dominant weight, steps)."""
    R = build_root_system(kind)
    x = tuple(weight)
    steps = 0
    while True:
        i = next((k for k, v in enumerate(x) if v < 0), None)
        if i is None:
            return x, steps
        x = R.simple_reflect(x, i)
        steps += 1


def sort_to_I_dominant(kind: str, weight: Weight, I: Iterable[int]) -> tuple[Weight, int]:
    """Move a Phi_I-regular weight into the strict I-chamber by W_I.

    Returns (mu, sign) with sign = (-1)**length of the Weyl group element used.
    """
    R = build_root_system(kind)
    I = sorted(i - 1 for i in normalize_subset(I, R.rank))
    x = tuple(weight)
    steps = 0
    while True:
        i = next((k for k in I if x[k] < 0), None)
        if i is None:
            break
        x = R.simple_reflect(x, i)
        steps += 1
    if any(x[k] == 0 for k in I):
        raise ValueError(f"weight {tuple(weight)} is singular for I = {sorted(k + 1 for k in I)}")
    return x, (-1) ** steps


def _order(kind: str, X: np.ndarray) -> np.ndarray:
    """Sort by decreasing rho-pairing, ties by decreasing coordinate tuple."""
    R = build_root_system(kind)
    if X.shape[0] == 0:
        return X.reshape(0, R.rank)
    primary = X @ R.rho_key_vector
    coords = paper_coords_array(kind, X)
    # lexsort sorts ascending by the last key first; negate for descending.
    keys = [-coords[:, c] for c in range(coords.shape[1] - 1, -1, -1)] + [-primary]
    return X[np.lexsort(keys)]


def _lattice_weights(kind: str, I: frozenset[int], J: frozenset[int]) -> np.ndarray:
    R = build_root_system(kind)
    n = R.rank
    top = omega_J(kind, J)
    target = R.norm(top)
    lower = [1 if i + 1 in I else None for i in range(n)]
    order = [i for i in range(n) if i + 1 in I] + [i for i in range(n) if i + 1 not in I]
    found = [x for x in shell_points(R.weight_gram, target, lower, order)
             if dominant_representative(kind, x)[0] == top]
    return np.array(found, dtype=np.int64).reshape(len(found), n)


def orbit_moves(kind: str, I: frozenset[int]) -> np.ndarray:
    """Positive roots reaching every neighbouring W_I-orbit from a chamber point.

    These are the roots with coefficient 1 on exactly one simple root outside I
    and support otherwise inside I; they contain W_I alpha_j for each j not in I.
    """
    R = build_root_system(kind)
    outside = [j for j in range(R.rank) if j + 1 not in I]
    idx = [k for k, r in enumerate(R.positive_roots)
           if sum(r[j] for j in outside) == 1]
    return np.array(idx, dtype=np.int64)


def chamber_orbit(kind: str, I: frozenset[int], start: Weight) -> np.ndarray:
    """All weakly I-dominant weights in the W-orbit of a dominant weight."""
    R = build_root_system(kind)
    n = R.rank
    I_idx = np.array(sorted(i - 1 for i in I), dtype=np.int64)
    moves = orbit_moves(kind, I)
    C = R.cartan_array
    seen = kernels.encode(np.array([start], dtype=np.int64))
    frontier = np.array([start], dtype=np.int64)
    while frontier.shape[0]:
        keys = np.unique(kernels.expand_frontier(frontier, R.roots_array, R.roots_weight_array, moves, I_idx, C))
        fresh = keys[~np.isin(keys, seen, assume_unique=True)]
        seen = np.union1d(seen, fresh)
        frontier = kernels.decode(fresh, n)
    return kernels.decode(seen, n)


def _orbit_weights(kind: str, I: frozenset[int], J: frozenset[int]) -> np.ndarray:
    X = chamber_orbit(kind, I, omega_J(kind, J))
    cols = sorted(i - 1 for i in I)
    if cols:
        X = X[(X[:, cols] >= 1).all(axis=1)]
    return X


def enumerate_system(kind: str, I: Iterable[int] = (), J: Iterable[int] = (),
                     method: str = "lattice") -> ParabolicSystem:
    """Strictly I-dominant weights of W w_J, ordered by decreasing rho-pairing.

    ``method="lattice"`` solves the norm equation by exact ellipsoid search and
    filters by dominance reduction; ``method="orbit"`` walks W_I-orbits of the
    W-orbit directly and scales with the size of the answer.
    """
    kind = kind.upper()
    n = rank_of(kind)
    I = normalize_subset(I, n)
    J = normalize_subset(J, n)
    if method == "lattice":
        X = _lattice_weights(kind, I, J)
    elif method == "orbit":
        X = _orbit_weights(kind, I, J)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    return ParabolicSystem.from_array(kind, I, J, X)
