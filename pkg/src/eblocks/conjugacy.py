"""Cartan types of parabolic subsystems and their W-conjugacy classes.

A subset I of the simple roots is identified with the set of positive roots of
Phi_I.  W acts on such sets through simple reflections (each maps a positive
root to a positive root up to sign), and two subsets are conjugate exactly when
their root sets share an orbit.
"""
from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .rootdata import build_root_system, cartan_matrix, normalize_subset, rank_of

TypeLabel = tuple[tuple[str, int], ...]

DEFAULT_ORBIT_CAP = 10 ** 7
_LETTER_ORDER = {"E": 0, "D": 1, "A": 2}


class OrbitTooLarge(RuntimeError):
    """The orbit search exceeded its state cap."""


def identify_component(cartan: Sequence[Sequence[int]]) -> tuple[str, int]:
    """Name a connected simply-laced Dynkin diagram given by its Cartan matrix."""
    n = len(cartan)
    adj = [[j for j in range(n) if j != i and cartan[i][j]] for i in range(n)]
    branch = [i for i in range(n) if len(adj[i]) >= 3]
    if not branch:
        if any(len(a) > 2 for a in adj) or sum(len(a) for a in adj) != 2 * (n - 1):
            raise ValueError("not a Dynkin diagram of type A, D or E")
        return ("A", n)
    if len(branch) > 1 or len(adj[branch[0]]) != 3:
        raise ValueError("not a Dynkin diagram of type A, D or E")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise ValueError(f"unexpected branch arms {arms}")


def _components(nodes: Sequence[int], adjacent) -> list[list[int]]:
    left = set(nodes)
    out = []
    while left:
        seed = min(left)
        comp, queue = [], [seed]
        left.discard(seed)
        while queue:
            v = queue.pop()
            comp.append(v)
            for u in list(left):
                if adjacent(u, v):
                    left.discard(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def canonical_type(parts: Iterable[tuple[str, int]]) -> TypeLabel:
    return tuple(sorted(parts, key=lambda p: (_LETTER_ORDER[p[0]], -p[1])))


def type_of_cartan(cartan: Sequence[Sequence[int]]) -> TypeLabel:
    """Multiset of irreducible types of a (possibly decomposable) Cartan matrix."""
    comps = _components(range(len(cartan)), lambda u, v: cartan[u][v] != 0)
    return canonical_type(identify_component([[cartan[a][b] for b in c] for a in c]) for c in comps)


def cartan_type(kind: str, I: Iterable[int]) -> TypeLabel:
    """Type of Phi_I, e.g. (("D", 6),) for {2,...,7} in E8."""
    n = rank_of(kind)
    I = sorted(normalize_subset(I, n))
    C = cartan_matrix(kind.upper())
    return type_of_cartan([[C[a - 1][b - 1] for b in I] for a in I])


def format_type(label: TypeLabel, times: str = "x") -> str:
    """"A3xA1", "A1^3", "A2^2xA1^2"; the empty type renders as "0"."""
    if not label:
        return "0"
    pieces, k = [], 0
    while k < len(label):
        m = k
        while m < len(label) and label[m] == label[k]:
            m += 1
        name = f"{label[k][0]}{label[k][1]}"
        pieces.append(name if m - k == 1 else f"{name}^{m - k}")
        k = m
    return times.join(pieces)


def parse_type(text: str) -> TypeLabel:
    """Inverse of format_type; accepts "x", "*" or the multiplication sign."""
    text = text.strip().replace("×", "x").replace("*", "x").replace(" ", "")
    if text in ("", "0", "∅"):
        return ()
    parts = []
    for piece in text.split("x"):
        base, _, exp = piece.partition("^")
        letter, rank = base[0].upper(), int(base[1:])
        parts += [(letter, rank)] * (int(exp) if exp else 1)
    return canonical_type(parts)


@lru_cache(maxsize=None)
def _reflection_tables(kind: str) -> tuple[tuple[int, ...], ...]:
    """perm[i][k]: index of the positive root equal to +-s_i(beta_k)."""
    R = build_root_system(kind)
    tables = []
    for i in range(R.rank):
        row = []
        for beta in R.positive_roots:
            p = sum(c * R.cartan[j][i] for j, c in enumerate(beta))
            img = tuple(c - (p if j == i else 0) for j, c in enumerate(beta))
            if all(c <= 0 for c in img):
                img = tuple(-c for c in img)
            row.append(R.root_index[img])
        tables.append(tuple(row))
    return tuple(tables)


def root_set(kind: str, I: Iterable[int]) -> tuple[int, ...]:
    """Sorted indices of the positive roots of Phi_I."""
    R = build_root_system(kind)
    return tuple(sorted(R.root_index[b] for b in R.subsystem_positive_roots(I)))


def orbit_search(kind: str, I: Iterable[int], targets: Iterable[tuple[int, ...]] = (),
                 cap: int = DEFAULT_ORBIT_CAP) -> tuple[set[tuple[int, ...]], bool]:
    """Breadth-first W-orbit of the root set of Phi_I.

    Stops as soon as every root set in ``targets`` has been met (if any were
    given).  Returns (states seen, complete) where complete means the whole
    orbit was exhausted.
    """
    kind = kind.upper()
    perm = _reflection_tables(kind)
    start = root_set(kind, I)
    want = set(targets) - {start}
    seen = {start}
    queue = deque([start])
    while queue:
        if targets and not want:
            return seen, False
        state = queue.popleft()
        for p in perm:
            nxt = tuple(sorted(p[k] for k in state))
            if nxt not in seen:
                seen.add(nxt)
                want.discard(nxt)
                if len(seen) > cap:
                    raise OrbitTooLarge(f"orbit of {sorted(normalize_subset(I, rank_of(kind)))} exceeds {cap} states")
                queue.append(nxt)
    return seen, True


def are_conjugate(kind: str, I: Iterable[int], I2: Iterable[int], cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Whether w Phi_I = Phi_I2 for some w in W."""
    kind = kind.upper()
    n = rank_of(kind)
    I, I2 = normalize_subset(I, n), normalize_subset(I2, n)
    if len(I) != len(I2) or cartan_type(kind, I) != cartan_type(kind, I2):
        return False
    goal = root_set(kind, I2)
    seen, _ = orbit_search(kind, I, [goal], cap)
    return goal in seen


@dataclass(frozen=True)
class ConjugacyClass:
    kind: str
    members: tuple[frozenset[int], ...]
    cartan_type: TypeLabel
    prime_tag: str = ""

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> frozenset[int]:
        return self.members[0]

    @property
    def rank(self) -> int:
        return len(self.members[0])

    def label(self, counts: bool = True, times: str = "x") -> str:
        """Table-style label such as "A5(4)" or "(A5)'(2)"."""
        name = format_type(self.cartan_type, times)
        if self.prime_tag:
            name = f"({name}){self.prime_tag}"
        if counts and self.size > 1:
            name += f"({self.size})"
        return name

    def __contains__(self, I) -> bool:
        return frozenset(I) in self.members


def _subset_key(I: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(I))


@lru_cache(maxsize=None)
def _classify(kind: str, cap: int) -> tuple[ConjugacyClass, ...]:
    n = rank_of(kind)
    by_type: dict[TypeLabel, list[frozenset[int]]] = {}
    for r in range(n + 1):
        for c in combinations(range(1, n + 1), r):
            by_type.setdefault(cartan_type(kind, c), []).append(frozenset(c))
    classes = []
    for label, subsets in by_type.items():
        left = sorted(subsets, key=_subset_key)
        found = []
        while left:
            seed = left[0]
            if len(left) == 1:
                group = [seed]
            else:
                sets = {root_set(kind, I): I for I in left}
                orbit, _ = orbit_search(kind, seed, list(sets), cap)
                group = [I for s, I in sets.items() if s in orbit]
            group.sort(key=_subset_key)
            found.append(tuple(group))
            left = [I for I in left if I not in group]
        found.sort(key=lambda g: _subset_key(g[0]))
        tags = ["'", "''", "'''"] if len(found) > 1 else [""]
        classes += [ConjugacyClass(kind, g, label, tags[k]) for k, g in enumerate(found)]
    classes.sort(key=lambda c: (-c.rank, c.cartan_type, _subset_key(c.representative)))
    return tuple(classes)


def classify_subsets(kind: str, cap: int = DEFAULT_ORBIT_CAP) -> list[ConjugacyClass]:
    """All 2**n subsets of the simple roots, grouped into W-conjugacy classes.

    Classes sharing a Cartan type are tagged ', '', ... in order of their
    lexicographically smallest member.
    """
    return list(_classify(kind.upper(), cap))


def class_of(kind: str, I: Iterable[int]) -> ConjugacyClass:
    n = rank_of(kind)
    I = normalize_subset(I, n)
    for c in classify_subsets(kind):
        if I in c.members:
            return c
    raise KeyError(I)


def find_class(kind: str, label: str) -> ConjugacyClass:
    """Look a class up by a table label like "D4xA1", "(A5)'" or "A1^3''"."""
    text = label.strip()
    tag = ""
    if text.startswith("("):
        close = text.index(")")
        text, tag = text[1:close], text[close + 1:]
    else:
        while text.endswith("'"):
            tag += "'"
            text = text[:-1]
    tag = tag.replace("′", "'").replace("″", "''").split("(")[0]
    wanted = parse_type(text.split("(")[0])
    hits = [c for c in classify_subsets(kind) if c.cartan_type == wanted and c.prime_tag == tag]
    if len(hits) != 1:
        raise KeyError(label)
    return hits[0]


def class_table_csv(classes: Sequence[ConjugacyClass]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["type", "tag", "size", "members"])
    for c in classes:
        members = " ".join(",".join(map(str, _subset_key(I))) or "-" for I in c.members)
        w.writerow([format_type(c.cartan_type), c.prime_tag, c.size, members])
    return buf.getvalue()


def class_table_text(classes: Sequence[ConjugacyClass]) -> str:
    lines = []
    for c in classes:
        members = "  ".join("{" + ",".join(map(str, _subset_key(I))) + "}" for I in c.members)
        lines.append(f"{c.label():<18} {members}")
    return "\n".join(lines)
