import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treeconvex import (
    Hypergraph,
    NotAcyclicError,
    dual_hypergraph,
    gen_forest,
    instrumented_op_count,
    intern,
    primal_hypergraph,
    run_mcs,
)
from treeconvex.gen import GenConfig, batch, random_collection

from oracles import FIG1B, FIG2A, gyo_acyclic, is_join_forest, random_hypergraph

hypergraphs = st.integers(0, 2**32).map(lambda seed: random_hypergraph(random.Random(seed)))


def test_fig1b_primal_is_acyclic():
    assert run_mcs(primal_hypergraph(intern(FIG1B))).acyclic


def test_fig2a_primal_is_cyclic():
    assert not run_mcs(primal_hypergraph(intern(FIG2A))).acyclic


def test_fig2a_dual_is_acyclic():
    assert run_mcs(dual_hypergraph(intern(FIG2A))).acyclic


def test_single_edge():
    h = Hypergraph.from_edges(3, [[0, 1, 2]])
    r = run_mcs(h)
    assert r.acyclic
    assert r.k == 1
    assert r.gamma == (None,)
    assert sorted(r.alpha) == [1, 2, 3]
    f = gen_forest(h, r)
    assert f.nodes == {0} and f.edges == ()


def test_two_disjoint_edges_give_isolated_nodes():
    h = Hypergraph.from_edges(4, [[0, 1], [2, 3]])
    r = run_mcs(h)
    assert r.acyclic
    assert r.gamma == (None, None)
    f = gen_forest(h, r)
    assert f.edges == ()
    assert len(f.components()) == 2


def test_gen_forest_requires_acyclic():
    h = primal_hypergraph(intern(FIG2A))
    with pytest.raises(NotAcyclicError):
        gen_forest(h, run_mcs(h))


def test_triangle_is_cyclic():
    h = Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 2]])
    assert not run_mcs(h).acyclic
    assert not gyo_acyclic([{0, 1}, {1, 2}, {0, 2}])


def test_bucket_cursor_is_raised():
    # The second selection must come from bucket 2, above the cursor's previous value.
    h = Hypergraph.from_edges(5, [[0, 1], [0, 1, 2], [2, 3], [3, 4]])
    r = run_mcs(h)
    assert r.selection[:2] == (0, 1)
    assert r.acyclic


def check_mappings(h, r):
    """Re-derive beta and gamma from the selection order and compare."""
    k = r.k
    assert sorted(r.alpha) == list(range(1, h.num_vertices + 1))
    assert len(set(r.selection)) == k
    for i, e in enumerate(r.selection, start=1):
        assert r.beta_edge[e] == i
    for v in range(h.num_vertices):
        assert r.beta_vertex[v] == min(r.beta_edge[e] for e in h.incidence[v]
                                       if r.beta_edge[e] is not None)
    for e, edge in enumerate(h.edges):
        betas = [r.beta_vertex[v] for v in edge]
        if r.beta_edge[e] is None:
            assert r.gamma[e] == max(betas)
        else:
            earlier = [b for b in betas if b < r.beta_edge[e]]
            assert r.gamma[e] == (max(earlier) if earlier else None)
    # alpha decreases along the selection: vertices of earlier selections rank higher
    for u in range(h.num_vertices):
        for v in range(h.num_vertices):
            if r.beta_vertex[u] < r.beta_vertex[v]:
                assert r.alpha[u] > r.alpha[v]


def test_mcs_matches_gyo_sampled():
    rng = random.Random(1234)
    for _ in range(3000):
        h = random_hypergraph(rng)
        r = run_mcs(h)
        assert r.acyclic == gyo_acyclic([set(e) for e in h.edges]), h
        check_mappings(h, r)
        if r.acyclic:
            assert is_join_forest(h, gen_forest(h, r))


@settings(max_examples=300)
@given(hypergraphs, st.randoms(use_true_random=False))
def test_verdict_invariant_under_relabeling(h, rnd):
    verdict = run_mcs(h).acyclic
    perm_v = list(range(h.num_vertices))
    rnd.shuffle(perm_v)
    edges = [[perm_v[v] for v in e] for e in h.edges]
    rnd.shuffle(edges)
    assert run_mcs(Hypergraph.from_edges(h.num_vertices, edges)).acyclic == verdict


@settings(max_examples=300)
@given(hypergraphs, st.integers(0, 2**32))
def test_verdict_independent_of_tie_breaking(h, seed):
    r = run_mcs(h, rng=random.Random(seed))
    assert r.acyclic == run_mcs(h).acyclic
    check_mappings(h, r)
    if r.acyclic:
        assert is_join_forest(h, gen_forest(h, r))


def test_join_forest_is_tree_when_connected():
    rng = random.Random(99)
    checked = 0
    while checked < 300:
        h = random_hypergraph(rng, max_vertices=8, max_edges=6)
        r = run_mcs(h)
        if not r.acyclic:
            continue
        f = gen_forest(h, r)
        hyper_components = _edge_components(h)
        assert len(f.components()) == hyper_components
        checked += 1


def _edge_components(h):
    parent = list(range(h.num_edges))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for holders in h.incidence:
        for e in holders[1:]:
            parent[find(e)] = find(holders[0])
    return len({find(e) for e in range(h.num_edges)})


def test_op_count_deterministic_and_small():
    h = Hypergraph.from_edges(3, [[0, 1, 2]])
    count = instrumented_op_count(h)
    assert count == instrumented_op_count(h)
    assert count <= 10 * 3


def test_op_count_roughly_linear():
    def mean_ops(cfg, pos):
        total = size = 0
        for c in batch(cfg, 100, pos):
            s = random_collection(c)
            total += instrumented_op_count(dual_hypergraph(s))
            size += s.problem_size
        return total / 100, size / 100

    small_ops, small_size = mean_ops(GenConfig(100, 100, 2, 10, seed=5), 0)
    big_ops, big_size = mean_ops(GenConfig(200, 200, 2, 10, seed=5), 1)
    assert 1.8 < big_size / small_size < 2.2
    assert big_ops / small_ops <= 2.5
