from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from oracles import subsets, theta_coefficients, theta_expansion, weyl_group_matrices

from eblocks.jantzen import EnumerationError, jantzen_matrix, linked_targets, psi_plus, psi_plus_plus
from eblocks.orbit import ParabolicSystem, enumerate_system, weyl_group_order
from eblocks.reduction import (basic_ranks, full_system, parabolic, reduction_chain, restrict_weight,
                               singular_roots)
from eblocks.rootdata import build_root_system


def small_e6_systems(limit=12):
    """Deterministic E6 systems with 10 <= N <= 50 and a modest W_I."""
    out = []
    for I in subsets(6, 1):
        if weyl_group_order("E6", I) > 1920:
            continue
        for J in subsets(6):
            S = enumerate_system("E6", I, J, method="orbit")
            if 10 <= S.N <= 50:
                out.append(S)
                break
        if len(out) == limit:
            break
    return out


SMALL = small_e6_systems()


def test_enough_small_systems():
    assert len(SMALL) >= 10
    assert len({frozenset(S.I) for S in SMALL}) == len(SMALL)


@pytest.mark.parametrize("S", SMALL, ids=lambda S: f"I={sorted(S.I)}-J={sorted(S.J)}")
def test_theta_expansion_oracle(S):
    mats, signs = weyl_group_matrices("E6", S.I)
    assert len(mats) == weyl_group_order("E6", S.I)
    m = jantzen_matrix(S)
    nonzero = 0
    for i, lam in enumerate(S.weights, start=1):
        full = theta_expansion("E6", mats, signs, lam, psi_plus("E6", lam, S.I))
        reduced = theta_expansion("E6", mats, signs, lam, psi_plus_plus("E6", lam, S.I))
        assert full == reduced
        coeffs = theta_coefficients("E6", S.I, mats, signs, lam, psi_plus("E6", lam, S.I))
        got = {S.weight(j): c for j, c in m.row(i).items()}
        assert got == coeffs
        nonzero += len(coeffs)
    assert nonzero == len(m)


@pytest.mark.parametrize("S", SMALL[:4], ids=lambda S: f"I={sorted(S.I)}-J={sorted(S.J)}")
def test_engines_agree_small(S):
    a = jantzen_matrix(S, engine="python")
    b = jantzen_matrix(S, engine="compiled")
    assert a.entries == b.entries


@pytest.mark.parametrize("kind,I,J", [("E7", (2, 4, 5, 6), (1, 3, 7)), ("E8", (1, 2, 3, 4, 5), (3, 4, 5, 6, 7, 8))])
def test_engines_agree(kind, I, J):
    S = enumerate_system(kind, I, J, method="orbit")
    assert jantzen_matrix(S, engine="python").entries == jantzen_matrix(S, engine="compiled").entries


def test_engines_agree_on_example(example_system, example_matrix):
    assert jantzen_matrix(example_system, engine="compiled").entries == example_matrix.entries


def test_witnesses_sum_to_coefficients(example_matrix):
    wit = example_matrix.witnesses
    assert set(wit) == set(example_matrix.entries)
    for key, roots in wit.items():
        assert sum(s for _, s in roots) == example_matrix.entries[key]


@pytest.mark.parametrize("S", SMALL, ids=lambda S: f"I={sorted(S.I)}-J={sorted(S.J)}")
def test_triangular(S):
    for (i, j) in jantzen_matrix(S).entries:
        assert i < j
        assert S.order_keys[i - 1] > S.order_keys[j - 1]


def test_triangular_example(example_system, example_matrix):
    for (i, j) in example_matrix.entries:
        assert example_system.order_keys[i - 1] > example_system.order_keys[j - 1]


def test_witness_option_needs_python_engine(example_system):
    with pytest.raises(ValueError):
        jantzen_matrix(example_system, witnesses=True, engine="compiled")
    with pytest.raises(ValueError):
        jantzen_matrix(example_system, engine="fortran")


def test_incomplete_system_is_detected():
    S = enumerate_system("E6", (1, 2), (4, 5, 6), method="orbit")
    broken = ParabolicSystem.from_array("E6", S.I, S.J, S.array[:-1])
    with pytest.raises(EnumerationError):
        jantzen_matrix(broken, engine="python")
    with pytest.raises(EnumerationError):
        jantzen_matrix(broken, engine="compiled")


def test_linked_targets_land_lower(example_system):
    for lam in example_system.weights[:10]:
        for b, j, s in linked_targets(lam, example_system):
            assert s in (1, -1)
            assert j > example_system.index[lam]


def test_psi_sets():
    R = build_root_system("E6")
    lam = R.rho
    assert len(psi_plus("E6", lam, ())) == 36
    assert psi_plus_plus("E6", lam, ()) == psi_plus("E6", lam, ())
    inside = set(R.subsystem_positive_roots((1, 3)))
    assert not inside & set(psi_plus("E6", lam, (1, 3)))


def test_basic_system_rank_identities_on_example(example_system):
    """Phi(beta) is irreducible and the restricted triple is basic, for all (lam, beta)."""
    kind, I = "E8", example_system.I
    pairs = 0
    types = Counter()
    for lam in example_system.weights:
        for b in psi_plus(kind, lam, I):
            sub = reduction_chain(kind, lam, I, b)
            assert b in sub
            assert sub.is_irreducible()
            rI, rL, r = basic_ranks(kind, lam, I, sub)
            assert rI == rL == r - 1, (lam, b, sub.type_name())
            res = restrict_weight(kind, lam, sub)
            assert all(isinstance(p, int) for p in res.pairings)
            types[sub.type_name()] += 1
            pairs += 1
    assert pairs == sum(types.values()) > 0
    assert set(types) <= {"A1", "A2", "A3", "D4", "A4", "D5", "A5", "D6", "E6", "A6", "A7", "D7", "E7", "E8"}


def test_reduction_chain_trace_stabilises():
    R = build_root_system("E8")
    lam = (1, 1, 1, 1, 1, 1, 1, 1)
    sub, chain = reduction_chain("E8", lam, (), R.highest_root, trace=True)
    assert chain[0] == full_system("E8")
    assert all(a == sub for a in chain[-4:])
    with pytest.raises(ValueError):
        reduction_chain("E8", lam, (1,), (1, 0, 0, 0, 0, 0, 0, 0))


def test_restrict_weight_solves_pairings():
    R = build_root_system("E7")
    lam = (2, -1, 0, 3, 1, -2, 1)
    sub = parabolic("E7", (1, 3, 4, 5))
    res = restrict_weight("E7", lam, sub)
    for g, p in zip(res.simple_roots, res.pairings):
        assert p == R.coroot_pairing(lam, g)
        # sum_k q_k <gamma_k, g> reproduces the pairing
        assert sum(q * R.root_inner(h, g) for q, h in zip(res.coefficients, res.simple_roots)) == p
    assert all(isinstance(q, Fraction) for q in res.coefficients)
    assert restrict_weight("E7", lam, singular_roots("E7", (1,) * 7)).simple_roots == ()
