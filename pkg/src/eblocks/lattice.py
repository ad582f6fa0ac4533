"""Exact enumeration of integer points on an ellipsoid shell.

Depth-first Fincke-Pohst search driven by an exact rational LDL^T factorisation,
so admission at the boundary never depends on floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from . import exact


def _isqrt_fraction(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def _interval(center: Fraction, radius_sq: Fraction) -> tuple[int, int]:
    """Integers v with (v + center)**2 <= radius_sq, as an inclusive range."""
    r = math.sqrt(float(radius_sq))
    c = float(center)
    lo = math.floor(-c - r) - 1
    hi = math.ceil(-c + r) + 1
    while (lo + center) ** 2 > radius_sq and lo <= hi:
        lo += 1
    while (hi + center) ** 2 > radius_sq and hi >= lo:
        hi -= 1
    return lo, hi


def shell_points(
    gram: Sequence[Sequence],
    target: Fraction | int,
    lower: Sequence[int | None] | None = None,
    order: Sequence[int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield all integer x with x^T gram x == target.

    ``lower[i]`` is an optional lower bound on x[i] applied as a branch cut.
    ``order`` lists coordinates in the order the search fixes them; coordinates
    with cuts should come first.
    """
    n = len(gram)
    order = list(order) if order is not None else list(range(n - 1, -1, -1))
    lower = list(lower) if lower is not None else [None] * n
    target = Fraction(target)
    if target < 0:
        return
    # Permute so that the first-fixed coordinate is the last LDL index.
    perm = order[::-1]
    Gp = [[Fraction(gram[a][b]) for b in perm] for a in perm]
    L, D = exact.ldl(Gp)
    cuts = [lower[perm[k]] for k in range(n)]
    y = [0] * n

    def centre(k: int) -> Fraction:
        return sum((L[j][k] * y[j] for j in range(k + 1, n) if y[j]), Fraction(0))

    def search(k: int, residual: Fraction) -> Iterator[tuple[int, ...]]:
        c = centre(k)
        t = residual / D[k]
        if k == 0:
            s = _isqrt_fraction(t)
            if s is None:
                return
            for v in sorted({s - c, -s - c}):
                if v.denominator == 1 and (cuts[0] is None or v >= cuts[0]):
                    y[0] = int(v)
                    out = [0] * n
                    for pos, coord in enumerate(perm):
                        out[coord] = y[pos]
                    yield tuple(out)
            y[0] = 0
            return
        lo, hi = _interval(c, t)
        if cuts[k] is not None:
            lo = max(lo, cuts[k])
        for v in range(lo, hi + 1):
            used = (v + c) ** 2 * D[k]
            y[k] = v
            yield from search(k - 1, residual - used)
        y[k] = 0

    yield from search(n - 1, target)
