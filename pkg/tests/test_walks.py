import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chsnorms import graph as gr
from chsnorms import spectra, walks
from chsnorms.graph import Graph

from conftest import random_graph
from oracles import walks_brute

graphs = st.integers(1, 7).flatmap(
    lambda n: st.integers(0, (1 << gr.pair_count(n)) - 1).map(lambda b: Graph(n, b)))


def test_power_one_is_adjacency(rng):
    g = random_graph(rng, 6)
    assert walks.walk_count_matrix(g, 1) == g.adjacency().tolist()


def test_k4_length_two():
    w = walks.walk_count_matrix(gr.complete(4), 2)
    assert [w[i][i] for i in range(4)] == [3, 3, 3, 3]
    assert w == walks_brute(gr.complete(4).adjacency().tolist(), 2)


def test_p3_length_two():
    w = walks.walk_count_matrix(gr.path(3), 2)
    assert [w[i][i] for i in range(3)] == [1, 2, 1]


def test_closed_walk_examples():
    assert walks.closed_walk_count(gr.complete(3), 4) == 18
    assert walks.closed_walk_count(gr.complete(4), 7) == 2184
    assert walks.closed_walk_count(gr.complete(4), 3) == 24


@settings(max_examples=60, deadline=None)
@given(graphs, st.integers(1, 5))
def test_matrix_matches_brute_force(g, k):
    assert walks.walk_count_matrix(g, k) == walks_brute(g.adjacency().tolist(), k)


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_walk_invariants(g):
    c = walks.closed_walk_counts(g, 12)
    assert c[1] == 0 and c[2] == 2 * g.m
    assert all(x >= 0 for x in c.counts)
    full = walks.closed_walk_counts(gr.complete(g.order), 12)
    assert all(c[k] <= full[k] for k in range(1, 13))
    if gr.is_bipartite(g):
        assert all(c[k] == 0 for k in range(1, 13, 2))


@settings(max_examples=100, deadline=None)
@given(graphs, graphs)
def test_union_additive(g, h):
    u = walks.closed_walk_counts(gr.disjoint_union(g, h), 10)
    a, b = walks.closed_walk_counts(g, 10), walks.closed_walk_counts(h, 10)
    assert u.counts == tuple(x + y for x, y in zip(a.counts, b.counts))


@settings(max_examples=100, deadline=None)
@given(graphs)
def test_float_cross_check(g):
    lam = spectra.eigenvalues(g).values
    c = walks.closed_walk_counts(g, 10)
    scale = max(1.0, lam[0])
    for k in range(1, 11):
        assert abs(c[k] - np.sum(lam ** k)) <= k * g.order * 1e-7 * scale ** k


def test_big_integers_do_not_overflow():
    c = walks.closed_walk_count(gr.complete(40), 30)
    # tr(A^k) for K_n is (n-1)^k + (n-1)(-1)^k
    assert c == 39 ** 30 + 39
    assert c > 2 ** 63


def test_batch_matches_single(rng):
    gs = [random_graph(rng, 7) for _ in range(40)]
    adj = np.stack([g.adjacency() for g in gs])
    for d in (8, 20):
        out = walks.batch_closed_walk_counts(adj, d)
        for g, row in zip(gs, out):
            assert [int(x) for x in row] == walks.closed_walk_counts(g, d).tolist()


def test_walk_length_must_be_positive():
    with pytest.raises(ValueError):
        walks.closed_walk_count(gr.complete(3), 0)
