from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from eblocks.blocks import (ONE_BLOCK_THRESHOLD, _labels_from_edges, adjacency_poset, compute_blocks,
                            isolated_top_indices, simple_gvm_indices, system_blocks, threshold_shortcut)
from eblocks.jantzen import coefficient_chunks, jantzen_matrix
from eblocks.orbit import enumerate_system

SYSTEMS = [("E6", (1, 3, 4), (2, 5, 6)), ("E6", (3, 4, 5), (1, 3, 4, 5)), ("E7", (2, 4, 5, 6), (1, 3, 7)),
           ("E7", (2, 3, 4, 5), (1, 6, 7)), ("E6", (1, 2), (1, 2)), ("E8", (2, 3, 4, 5, 6, 7), (3, 4, 5, 7))]


@pytest.fixture(scope="module", params=SYSTEMS, ids=lambda p: f"{p[0]}-{p[1]}-{p[2]}")
def case(request):
    kind, I, J = request.param
    S = enumerate_system(kind, I, J, method="orbit")
    return S, jantzen_matrix(S)


def partition(labels):
    groups = {}
    for k, lab in enumerate(np.asarray(labels).tolist()):
        groups.setdefault(lab, set()).add(k)
    return {frozenset(g) for g in groups.values()}


def test_dsu_matches_scipy(case):
    S, m = case
    A = coo_matrix((np.ones(len(m)), (m.src, m.dst)), shape=(S.N, S.N))
    n, lab = connected_components(A, directed=False)
    B = compute_blocks(m)
    assert B.block_count == n
    assert partition(B.labels) == partition(lab)
    assert sum(B.block_sizes) == S.N


def test_streaming_matches_full(case):
    S, m = case
    assert partition(system_blocks(S, early_exit=False).labels) == partition(compute_blocks(m).labels)
    early = system_blocks(S)
    assert early.connected == compute_blocks(m).connected


def test_small_chunks_reassemble(case):
    S, m = case
    got = {}
    for src, dst, coef in coefficient_chunks(S, buffer=64, rows=5):
        for i, j, c in zip(src.tolist(), dst.tolist(), coef.tolist()):
            assert (i + 1, j + 1) not in got
            got[(i + 1, j + 1)] = c
    assert got == m.entries


def test_poset_is_transitive_reduction(case):
    S, m = case
    G = nx.DiGraph()
    G.add_nodes_from(range(1, S.N + 1))
    G.add_edges_from(m.entries)
    assert nx.is_directed_acyclic_graph(G)
    assert adjacency_poset(m).edges == frozenset(nx.transitive_reduction(G).edges)


def test_poset_edges_give_the_same_blocks(case):
    S, m = case
    P = adjacency_poset(m)
    src = np.array([i - 1 for i, _ in P.edges], dtype=np.int64)
    dst = np.array([j - 1 for _, j in P.edges], dtype=np.int64)
    assert partition(_labels_from_edges(S.N, src, dst)) == partition(compute_blocks(m).labels)


def test_sources_and_sinks(case):
    S, m = case
    P = adjacency_poset(m)
    assert P.sinks == simple_gvm_indices(m)
    assert P.sources == isolated_top_indices(m)
    assert S.N == 0 or 1 in P.sources


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 30), data=st.data())
def test_labels_ignore_edge_order(n, data):
    edges = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40))
    perm = data.draw(st.permutations(range(len(edges))))
    src = np.array([e[0] for e in edges], dtype=np.int64)
    dst = np.array([e[1] for e in edges], dtype=np.int64)
    a = _labels_from_edges(n, src, dst)
    b = _labels_from_edges(n, src[list(perm)], dst[list(perm)])
    assert partition(a) == partition(b)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    assert partition(a) == {frozenset(c) for c in nx.connected_components(G)}


def test_example_blocks(example_matrix):
    B = compute_blocks(example_matrix)
    assert sorted(B.block_sizes) == [16, 28]
    assert B.block_count == 2 and not B.connected
    assert B.to_text().startswith("2 blocks: sizes 28, 16")
    assert B.to_csv().splitlines()[0] == "index,block"


def test_threshold_shortcut():
    assert threshold_shortcut("E6", (1, 2), (3, 4, 5)) == "one block"
    assert threshold_shortcut("E6", (1, 2), (3, 4, 5), verify=True) is None
    assert threshold_shortcut("E8", (1, 2, 3, 4), (5, 6, 7, 8)) is None
    assert ONE_BLOCK_THRESHOLD == {"E6": 5, "E7": 6, "E8": 7}
