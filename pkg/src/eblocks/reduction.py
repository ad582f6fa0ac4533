"""Root subsystems, weight restriction and the reduction chain Phi(beta).

Subsystems are explicit sets of roots (both signs, as simple-root coefficient
tuples).  This is an analysis tool; nothing here sits on the hot path.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import exact
from .conjugacy import TypeLabel, format_type, type_of_cartan
from .rootdata import Root, Weight, build_root_system, normalize_subset


def _neg(b: Root) -> Root:
    return tuple(-c for c in b)


def _is_positive(b: Root) -> bool:
    return any(c > 0 for c in b)


@dataclass(frozen=True)
class Subsystem:
    """A root subsystem of an E-type system, closed under negation."""
    kind: str
    roots: frozenset[Root]

    @classmethod
    def from_positive(cls, kind: str, positive: Iterable[Root]) -> "Subsystem":
        pos = list(positive)
        return cls(kind, frozenset(pos) | frozenset(_neg(b) for b in pos))

    @property
    def positive_roots(self) -> list[Root]:
        return sorted(b for b in self.roots if _is_positive(b))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, b) -> bool:
        return tuple(b) in self.roots

    @property
    def simple_roots(self) -> list[Root]:
        """Positive roots that are not a sum of two positive roots of the subsystem."""
        pos = self.positive_roots
        pset = set(pos)
        simple = []
        for b in pos:
            if not any(tuple(x - y for x, y in zip(b, a)) in pset for a in pos if a != b):
                simple.append(b)
        return simple

    @property
    def rank(self) -> int:
        return exact.rank(self.positive_roots) if self.roots else 0

    def cartan(self) -> list[list[int]]:
        R = build_root_system(self.kind)
        S = self.simple_roots
        return [[R.root_inner(a, b) for b in S] for a in S]

    def cartan_type(self) -> TypeLabel:
        return type_of_cartan(self.cartan()) if self.roots else ()

    def type_name(self) -> str:
        return format_type(self.cartan_type())

    def intersect(self, other: "Subsystem") -> "Subsystem":
        return Subsystem(self.kind, self.roots & other.roots)

    def span_closure(self, generators: Iterable[Root]) -> "Subsystem":
        """(Q generators) intersected with this subsystem."""
        n = build_root_system(self.kind).rank
        span = exact.Span(list(generators), n)
        return Subsystem(self.kind, frozenset(b for b in self.roots if b in span))

    def component_of(self, beta: Root) -> "Subsystem":
        """Irreducible component containing beta (linked by nonorthogonality)."""
        inner = _inner(self.kind)
        beta = tuple(beta)
        if beta not in self.roots:
            raise ValueError(f"{beta} is not in the subsystem")
        comp = {beta, _neg(beta)}
        frontier = [beta]
        rest = [b for b in self.positive_roots if b != beta and _neg(b) != beta]
        while frontier:
            a = frontier.pop()
            keep = []
            for b in rest:
                if inner(a, b) != 0:
                    comp.update((b, _neg(b)))
                    frontier.append(b)
                else:
                    keep.append(b)
            rest = keep
        return Subsystem(self.kind, frozenset(comp))

    def is_irreducible(self) -> bool:
        if not self.roots:
            return False
        return self.component_of(self.positive_roots[0]) == self


@lru_cache(maxsize=None)
def _inner_table(kind: str):
    R = build_root_system(kind)
    return R.root_index, R.roots_array @ R.cartan_array @ R.roots_array.T


def _inner(kind: str):
    index, table = _inner_table(kind)

    def inner(a: Root, b: Root) -> int:
        sa, sb = _is_positive(a), _is_positive(b)
        v = int(table[index[a if sa else _neg(a)], index[b if sb else _neg(b)]])
        return v if sa == sb else -v
    return inner


def full_system(kind: str) -> Subsystem:
    return Subsystem.from_positive(kind, build_root_system(kind).positive_roots)


def parabolic(kind: str, I: Iterable[int]) -> Subsystem:
    R = build_root_system(kind)
    return Subsystem.from_positive(kind, R.subsystem_positive_roots(normalize_subset(I, R.rank)))


def singular_roots(kind: str, weight: Weight) -> Subsystem:
    """Phi_lambda: the roots orthogonal to the weight."""
    R = build_root_system(kind)
    return Subsystem.from_positive(kind, [b for b in R.positive_roots if R.coroot_pairing(weight, b) == 0])


@dataclass(frozen=True)
class Restriction:
    """lam|_Phi' recorded on a simple system of Phi'.

    ``pairings[k] = <lam, gamma_k^vee>`` and ``coefficients`` expresses the
    restricted weight in the basis of simple roots gamma_k.
    """
    simple_roots: tuple[Root, ...]
    pairings: tuple[int, ...]
    coefficients: tuple[Fraction, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.pairings)


def restrict_weight(kind: str, weight: Weight, sub: Subsystem) -> Restriction:
    """The unique weight of Q Phi' with the same coroot pairings as ``weight`` on Phi'."""
    R = build_root_system(kind)
    S = sub.simple_roots
    p = [R.coroot_pairing(weight, g) for g in S]
    if not S:
        return Restriction((), (), ())
    A = sub.cartan()
    Ainv = exact.inverse(A)
    # lam' = sum q_k gamma_k with sum_k q_k <gamma_k, gamma_j> = p_j
    q = tuple(sum((Ainv[j][k] * p[k] for k in range(len(S))), Fraction(0)) for j in range(len(S)))
    return Restriction(tuple(S), tuple(p), q)


def reduction_chain(kind: str, weight: Weight, I: Iterable[int], beta: Root,
                    trace: bool = False):
    """Phi(beta): alternate component and rational-span closures until stable.

    The four steps cycle through: component containing beta; span with Phi_I;
    component; span with Phi_lambda.  Each step acts on the current member
    Phi' as on the restricted triple, so the spans use Phi_I cap Phi' and
    Phi_lambda cap Phi'.  With ``trace`` the full chain is returned
    as well.
    """
    R = build_root_system(kind)
    I = normalize_subset(I, R.rank)
    beta = tuple(beta)
    inside = set(R.subsystem_positive_roots(I))
    if beta not in R.root_index or beta in inside or R.coroot_pairing(weight, beta) <= 0:
        raise ValueError(f"{beta} is not in Psi^+ of {tuple(weight)}")
    phi_I = parabolic(kind, I)
    phi_lam = singular_roots(kind, weight)
    steps = [
        lambda S: S.component_of(beta),
        lambda S: S.span_closure(phi_I.intersect(S).positive_roots + [beta]),
        lambda S: S.component_of(beta),
        lambda S: S.span_closure(phi_lam.intersect(S).positive_roots + [beta]),
    ]
    chain = [full_system(kind)]
    unchanged = 0
    k = 0
    while unchanged < len(steps):
        nxt = steps[k % 4](chain[-1])
        unchanged = unchanged + 1 if nxt == chain[-1] else 0
        chain.append(nxt)
        k += 1
    result = chain[-1]
    return (result, chain) if trace else result


def basic_ranks(kind: str, weight: Weight, I: Iterable[int], sub: Subsystem) -> tuple[int, int, int]:
    """(rank Phi_I cap sub, rank Phi_lambda cap sub, rank sub)."""
    return (parabolic(kind, I).intersect(sub).rank,
            singular_roots(kind, weight).intersect(sub).rank,
            sub.rank)
