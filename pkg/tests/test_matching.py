import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphgram.errors import TooLargeForOracle, UnknownEdge
from graphgram.generators import cycle, demo_molecule, path, random_graph
from graphgram.graph import construct_graph, edge_type_of, format_key
from graphgram.matching import brute_force_matching_size, greedy_matching, is_matching, max_matching

from .conftest import petersen, small_graphs


def triangle():
    return construct_graph([(0, None), (1, None), (2, None)], [(0, 1), (1, 2), (0, 2)])


def test_triangle():
    assert max_matching(triangle()).size == 1
    assert brute_force_matching_size(triangle()) == 1


def test_path_of_four_takes_outer_edges():
    g = path(3, "n")
    assert max_matching(g).edge_ids == {0, 2}


def test_demo_molecule_ch_edges():
    g = demo_molecule()
    ch = [eid for eid in g.edges if format_key(edge_type_of(g, eid), g.types) == "C-H"]
    assert len(ch) == 4
    assert max_matching(g, ch).size == 2
    assert brute_force_matching_size(g, ch) == 2


def test_petersen_perfect():
    # frozen from brute_force_matching_size(petersen())
    assert brute_force_matching_size(petersen()) == 5
    assert max_matching(petersen()).size == 5


def test_oracle_small_cases():
    assert brute_force_matching_size(path(1, "n")) == 1
    assert brute_force_matching_size(cycle(5)) == 2


def test_oracle_refuses_large_input():
    with pytest.raises(TooLargeForOracle):
        brute_force_matching_size(path(21, "n"))


def test_unknown_filter_edge():
    with pytest.raises(UnknownEdge):
        max_matching(triangle(), [7])
    with pytest.raises(UnknownEdge):
        brute_force_matching_size(triangle(), [7])


def test_parallel_edges_use_lowest_id():
    g = construct_graph([(0, None), (1, None)], [(0, 1), (0, 1), (1, 0)])
    assert max_matching(g).edge_ids == {0}


def test_self_loops_never_match():
    g = construct_graph([(0, None), (1, None)], [(0, 1)])
    t = g.types.add_nonterminal("T", 2)
    h = g.add_node(t).id
    g.add_edge(h, h, "-", 0, 1)
    assert max_matching(g, [1]).size == 0
    assert max_matching(g).edge_ids == {0}


def test_augmenting_path_through_blossom():
    # triangle 1-2-3 with pendant 4: the warm start takes 1-2, and the only
    # augmenting path from 3 runs through the odd cycle
    g = construct_graph([(i, None) for i in range(1, 5)], [(1, 2), (1, 3), (1, 4), (2, 3)])
    result = max_matching(g)
    assert result.size == 2 == brute_force_matching_size(g)
    assert result.edge_ids == {2, 3}


@settings(max_examples=300, deadline=None)
@given(small_graphs())
def test_matches_oracle(g):
    result = max_matching(g)
    assert is_matching(g, result.edge_ids)
    assert result.size == brute_force_matching_size(g)


@settings(max_examples=100, deadline=None)
@given(small_graphs(), st.data())
def test_adding_an_edge_never_shrinks(g, data):
    if g.num_nodes < 2:
        return
    before = max_matching(g).size
    u, v = data.draw(st.sampled_from([(a, b) for a in g.nodes for b in g.nodes if a != b]))
    g.add_edge(u, v)
    assert max_matching(g).size >= before


@given(small_graphs())
def test_deterministic(g):
    assert max_matching(g).edge_ids == max_matching(g).edge_ids


@given(small_graphs())
def test_greedy_is_maximal_but_not_above_optimum(g):
    greedy = greedy_matching(g, g.edges)
    assert is_matching(g, greedy.edge_ids)
    assert greedy.size <= max_matching(g).size
    used = {x for eid in greedy.edge_ids for x in (g.edges[eid].u, g.edges[eid].v)}
    assert all(e.u in used or e.v in used for e in g.edges.values() if e.u != e.v)


@pytest.mark.parametrize("seed", range(5))
def test_agrees_with_networkx_at_scale(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(200, 800), p=0.01, seed=seed)
    ref = nx.Graph()
    ref.add_nodes_from(g.nodes)
    ref.add_edges_from((e.u, e.v) for e in g.edges.values())
    expected = len(nx.max_weight_matching(ref, maxcardinality=True))
    result = max_matching(g)
    assert is_matching(g, result.edge_ids)
    assert result.size == expected
