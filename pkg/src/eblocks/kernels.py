"""Compiled inner loops for large systems.

Weights are packed into int64 keys (7 bits per coordinate, offset 64), which
bounds coordinates to [-64, 63]; every weight of norm at most <rho, rho> = 620
in E8 has coordinates of absolute value at most 35.
"""
from __future__ import annotations

import numpy as np
from numba import njit

OFFSET = 64
BASE = 128
_LIMIT = 63


def encode(X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.int64)
    if X.size and (X.min() < -OFFSET or X.max() > _LIMIT):
        raise OverflowError("weight coordinate outside the packable range")
    powers = BASE ** np.arange(X.shape[1], dtype=np.int64)
    return (X + OFFSET) @ powers


def decode(keys: np.ndarray, n: int) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    out = np.empty((keys.shape[0], n), dtype=np.int64)
    k = keys.copy()
    for i in range(n):
        out[:, i] = k % BASE - OFFSET
        k //= BASE
    return out


@njit(cache=True)
def _key(y):
    key = 0
    mult = 1
    for k in range(y.shape[0]):
        key += (y[k] + OFFSET) * mult
        mult *= BASE
    return key


@njit(cache=True)
def _sort_into_chamber(y, I_idx, C):
    """Apply simple reflections of I until y is weakly I-dominant; return count."""
    n = y.shape[0]
    count = 0
    moved = True
    while moved:
        moved = False
        for t in range(I_idx.shape[0]):
            i = I_idx[t]
            v = y[i]
            if v < 0:
                for k in range(n):
                    y[k] -= v * C[i, k]
                count += 1
                moved = True
                break
    return count


def build_table(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Open-addressing table mapping packed keys to their row index."""
    size = 1 << max(4, int(2 * max(keys.shape[0], 1) - 1).bit_length())
    slots = np.full(size, -1, dtype=np.int64)
    values = np.empty(size, dtype=np.int64)
    _fill_table(slots, values, keys)
    return slots, values


@njit(cache=True)
def _hash(key, mask):
    h = (key * np.int64(-7046029254386353131)) ^ (key >> 29)
    return h & mask


@njit(cache=True)
def _fill_table(slots, values, keys):
    mask = slots.shape[0] - 1
    for r in range(keys.shape[0]):
        h = _hash(keys[r], mask)
        while slots[h] != -1:
            h = (h + 1) & mask
        slots[h] = keys[r]
        values[h] = r


@njit(cache=True)
def _lookup(slots, values, key):
    mask = slots.shape[0] - 1
    h = _hash(key, mask)
    while slots[h] != -1:
        if slots[h] == key:
            return values[h]
        h = (h + 1) & mask
    return -1


@njit(cache=True)
def sort_batch(X, I_idx, C):
    """Sort each row into the weak I-chamber; returns (rows, parities, singular)."""
    Y = X.copy()
    m = Y.shape[0]
    parity = np.zeros(m, dtype=np.int8)
    singular = np.zeros(m, dtype=np.bool_)
    for r in range(m):
        parity[r] = _sort_into_chamber(Y[r], I_idx, C) & 1
        for t in range(I_idx.shape[0]):
            if Y[r, I_idx[t]] == 0:
                singular[r] = True
    return Y, parity, singular


@njit(cache=True)
def jantzen_rows(X, start, stop, slots, values, roots, roots_w, candidates,
                 I_idx, C, out_src, out_dst, out_coef):
    """Nonzero Jantzen coefficients for rows start..stop-1 of X.

    Stops early when the output buffers cannot hold another full row.  Returns
    (next_row, entries_written); next_row == -1 - r flags that the sorted
    reflection of row r was not found among the system keys.
    """
    N = stop
    n = X.shape[1]
    m = candidates.shape[0]
    cap = out_src.shape[0]
    y = np.empty(n, dtype=np.int64)
    tg = np.empty(m, dtype=np.int64)
    sg = np.empty(m, dtype=np.int64)
    w = 0
    r = start
    while r < N:
        if w + m > cap:
            return r, w
        cnt = 0
        for c in range(m):
            b = candidates[c]
            p = 0
            for k in range(n):
                p += roots[b, k] * X[r, k]
            if p <= 0:
                continue
            for k in range(n):
                y[k] = X[r, k] - p * roots_w[b, k]
            par = _sort_into_chamber(y, I_idx, C)
            sing = False
            for t in range(I_idx.shape[0]):
                if y[I_idx[t]] == 0:
                    sing = True
                    break
            if sing:
                continue
            tgt = _lookup(slots, values, _key(y))
            if tgt < 0:
                return -1 - r, w
            sign = 1 - 2 * (par & 1)
            found = False
            for q in range(cnt):
                if tg[q] == tgt:
                    sg[q] += sign
                    found = True
                    break
            if not found:
                tg[cnt] = tgt
                sg[cnt] = sign
                cnt += 1
        for q in range(cnt):
            if sg[q] != 0:
                out_src[w] = r
                out_dst[w] = tg[q]
                out_coef[w] = sg[q]
                w += 1
        r += 1
    return r, w


@njit(cache=True)
def expand_frontier(F, roots, roots_w, moves, I_idx, C):
    """Keys of the weak I-chamber representatives of s_beta f for f in F, beta in moves."""
    f = F.shape[0]
    n = F.shape[1]
    m = moves.shape[0]
    out = np.empty(f * m, dtype=np.int64)
    y = np.empty(n, dtype=np.int64)
    w = 0
    for r in range(f):
        for c in range(m):
            b = moves[c]
            p = 0
            for k in range(n):
                p += roots[b, k] * F[r, k]
            if p == 0:
                continue
            for k in range(n):
                y[k] = F[r, k] - p * roots_w[b, k]
            _sort_into_chamber(y, I_idx, C)
            out[w] = _key(y)
            w += 1
    return out[:w]


@njit(cache=True)
def _dsu_find(parent, a):
    root = a
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


@njit(cache=True)
def dsu_union(parent, src, dst):
    """Union every (src[k], dst[k]); the root of a set is its minimal member.

    Returns the number of merges performed.
    """
    merges = 0
    for k in range(src.shape[0]):
        a = _dsu_find(parent, src[k])
        b = _dsu_find(parent, dst[k])
        if a < b:
            parent[b] = a
            merges += 1
        elif b < a:
            parent[a] = b
            merges += 1
    return merges


@njit(cache=True)
def dsu_labels(parent):
    out = np.empty(parent.shape[0], dtype=np.int64)
    for k in range(parent.shape[0]):
        out[k] = _dsu_find(parent, k)
    return out
