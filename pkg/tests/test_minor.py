import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from minorcolor import (
    Graph,
    MinorModel,
    ResourceLimitExceeded,
    contract_set,
    edge_count_forces_minor,
    has_clique_minor,
    induced_subgraph,
    validate_model,
)
from minorcolor.generators import GenSpec, complete_multipartite, generate
from minorcolor.oracles import brute_force_has_minor

from conftest import graphs, petersen


def test_clique_detects_itself():
    model = has_clique_minor(Graph.complete(5), 5)
    assert model is not None
    assert sorted(sorted(s) for s in model.branch_sets) == [[0], [1], [2], [3], [4]]
    assert validate_model(Graph.complete(5), model)


def test_petersen_has_k5_minor():
    p = petersen()
    model = has_clique_minor(p, 5)
    assert model is not None
    assert validate_model(p, model)
    assert brute_force_has_minor(p, 5)


def test_petersen_has_no_k6_minor():
    assert has_clique_minor(petersen(), 6) is None


def test_octahedron_has_no_k5_minor():
    # planar, so K5 is out; brute force agrees
    octa = complete_multipartite((2, 2, 2))
    assert has_clique_minor(octa, 5) is None
    assert not brute_force_has_minor(octa, 5)


def test_extremal_block_is_k8_minor_free():
    block = complete_multipartite((2, 2, 2, 2, 2))
    assert has_clique_minor(block, 8) is None
    assert has_clique_minor(block, 7) is not None


def test_order_one_minor():
    assert has_clique_minor(Graph.empty(3), 1) is not None
    assert has_clique_minor(Graph(()), 1) is None


def test_invalid_order():
    with pytest.raises(ValueError):
        has_clique_minor(Graph.complete(2), 0)


def test_search_cap():
    g = Graph(range(50), max_vertices=64)
    with pytest.raises(ResourceLimitExceeded) as err:
        has_clique_minor(g, 2)
    assert err.value.cap == 40
    assert has_clique_minor(g, 2, cap=64) is None  # retry with larger cap


def test_validate_model_rejects_overlap():
    k5 = Graph.complete(5)
    good = MinorModel(tuple(frozenset({v}) for v in range(5)))
    assert validate_model(k5, good)
    overlapping = MinorModel((frozenset({0, 1}), frozenset({1, 2})))
    assert not validate_model(k5, overlapping)


def test_validate_model_path_as_k2():
    p4 = Graph.path(4)
    assert validate_model(p4, MinorModel((frozenset({0, 1}), frozenset({2, 3}))))


def test_validate_model_requires_connected_sets():
    p4 = Graph.path(4)
    assert not validate_model(p4, MinorModel((frozenset({0, 3}), frozenset({1, 2}))))


def test_validate_model_requires_pairwise_edges():
    g = Graph(range(4), [(0, 1), (2, 3)])
    assert not validate_model(g, MinorModel((frozenset({0, 1}), frozenset({2, 3}))))


def test_edge_count_shortcut_rows():
    # 41 edges on 10 vertices exceeds 6n-20
    g = Graph.complete(10)
    edges = g.edges()[:41]
    g41 = Graph(range(10), edges)
    assert edge_count_forces_minor(g41, 8)

    tri = generate(GenSpec("planar_triangulation", n=10, seed=0))
    assert tri.m == 24
    assert not edge_count_forces_minor(tri, 5)  # equality row is inconclusive

    block = complete_multipartite((2, 2, 2, 2, 2))
    assert edge_count_forces_minor(block, 7)  # 40 > 5*10-15
    assert not edge_count_forces_minor(block, 8)  # 40 = 6*10-20 exactly


def test_edge_count_out_of_range():
    with pytest.raises(ValueError):
        edge_count_forces_minor(Graph.complete(3), 4)
    with pytest.raises(ValueError):
        edge_count_forces_minor(Graph.complete(3), 12)


def test_edge_count_below_vertex_minimum_is_inconclusive():
    assert not edge_count_forces_minor(Graph.complete(3), 5)
    assert not edge_count_forces_minor(Graph.complete(4), 9)


@given(graphs(max_n=7), st.integers(2, 6))
@settings(max_examples=150, deadline=None)
def test_agrees_with_brute_force(g, t):
    model = has_clique_minor(g, t)
    assert (model is not None) == brute_force_has_minor(g, t)
    if model is not None:
        assert validate_model(g, model)


@given(graphs(min_n=8, max_n=8), st.integers(2, 5))
@settings(max_examples=60, deadline=None)
def test_agrees_with_brute_force_at_eight_vertices(g, t):
    assert (has_clique_minor(g, t) is not None) == brute_force_has_minor(g, t)


@given(graphs(max_n=7), st.integers(2, 5), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_minor_monotone_under_subgraphs_and_contractions(g, t, rng):
    if has_clique_minor(g, t) is not None:
        return
    verts = list(g.vertices)
    if len(verts) > 1:
        drop = rng.choice(verts)
        sub = induced_subgraph(g, [v for v in verts if v != drop])
        assert has_clique_minor(sub, t) is None
    edges = g.edges()
    if edges:
        u, v = rng.choice(edges)
        merged, _ = contract_set(g, [u, v])
        assert has_clique_minor(merged, t) is None


def test_pendant_and_isolated_vertices_do_not_change_answer():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 6)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = Graph(range(n), edges)
        # attach a pendant and an isolated vertex
        decorated = Graph(range(n + 2), edges + [(rng.randrange(n), n)])
        for t in (3, 4, 5):
            assert (has_clique_minor(g, t) is not None) == (
                has_clique_minor(decorated, t) is not None
            ), (edges, t)


def test_neighborhoods_of_minor_free_graphs_drop_one_order():
    # if g has no order-(t+1) minor, each neighborhood graph has no order-t
    block = complete_multipartite((2, 2, 2, 2, 2))
    assert has_clique_minor(block, 8) is None
    for v in block.vertices:
        h = induced_subgraph(block, block.neighbors(v))
        assert has_clique_minor(h, 7) is None
    octa = complete_multipartite((2, 2, 2))
    for v in octa.vertices:
        h = induced_subgraph(octa, octa.neighbors(v))
        assert has_clique_minor(h, 4) is None


def test_witness_serialization():
    model = MinorModel((frozenset({2, 1}), frozenset({3})))
    assert model.to_lines() == ["set_0: 1 2", "set_1: 3"]
