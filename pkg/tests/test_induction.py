import pytest
from hypothesis import given, settings

from graphgram.errors import InvalidMatching, InvalidParameters, TypeMismatch
from graphgram.generators import demo_molecule, path, star_forest, two_triangles
from graphgram.grammar import expand
from graphgram.graph import construct_graph, edge_multiset, format_key, same_graph
from graphgram.induction import (
    InductionConfig,
    SelectionStrategy,
    contract_matched,
    induce,
    score_edge_types,
    select_edge_type,
)
from graphgram.lexicon import build_lexicon
from graphgram.matching import MatchingResult, brute_force_matching_size

from .conftest import small_graphs

MATCHING = SelectionStrategy.MATCHING_COUNT
GREEDY = SelectionStrategy.RAW_FREQUENCY


def named_scores(g, strategy):
    lex = build_lexicon(g)
    return {format_key(k, g.types): s for k, s in score_edge_types(g, lex, strategy)}


def test_demo_scores_match_oracle():
    g = demo_molecule()
    lex = build_lexicon(g)
    oracle = {format_key(k, g.types): brute_force_matching_size(g, lex.edges(k)) for k in lex}
    assert oracle == {"C-C": 1, "C-H": 2, "H-H": 1}
    assert named_scores(g, MATCHING) == oracle


def test_demo_raw_scores():
    assert named_scores(demo_molecule(), GREEDY) == {"C-C": 1, "C-H": 4, "H-H": 1}


def test_star_scores_one():
    assert list(named_scores(star_forest(1, 3), MATCHING).values()) == [1]


def test_select_demo_picks_ch():
    g = demo_molecule()
    scores = score_edge_types(g, build_lexicon(g))
    assert format_key(select_edge_type(scores, InductionConfig()), g.types) == "C-H"


def test_select_nothing_below_support():
    g = demo_molecule()
    scores = [(k, 1) for k, _ in score_edge_types(g, build_lexicon(g))]
    assert select_edge_type(scores, InductionConfig()) is None


def test_select_tie_prefers_first_registered():
    g = demo_molecule()
    keys = list(build_lexicon(g))
    assert select_edge_type([(keys[0], 3), (keys[1], 3)], InductionConfig()) == keys[0]


def test_config_validation():
    with pytest.raises(InvalidParameters):
        InductionConfig(min_support=1)


def test_contract_single_edge():
    g = construct_graph([(0, "A"), (1, "B")], [(0, 1)])
    key = next(iter(build_lexicon(g)))
    g, prod, delta = contract_matched(g, key, MatchingResult(frozenset({0})))
    assert g.num_nodes == 1 and g.num_edges == 0
    assert g.types.name(prod.lhs) == "AB"
    assert prod.constituents == (0, 1)
    assert delta.removed == [0] and delta.added == []
    g.check()


def test_contract_parallel_edge_becomes_loop():
    g = construct_graph([(0, "A"), (1, "B")], [(0, 1), (0, 1)])
    key = next(iter(build_lexicon(g)))
    g, _, _ = contract_matched(g, key, MatchingResult(frozenset({0})))
    (loop,) = g.edges.values()
    assert loop.u == loop.v and (loop.port_u, loop.port_v) == (0, 1)


def test_contract_demo_molecule():
    g = demo_molecule()
    ch = next(k for k in build_lexicon(g) if format_key(k, g.types) == "C-H")
    # C1-H1 is edge 1, C2-H3 is edge 3
    g, prod, _ = contract_matched(g, ch, MatchingResult(frozenset({1, 3})))
    g.check()
    assert sorted(g.nodes) == [3, 5, 6, 7]
    assert {g.type_name(n) for n in (6, 7)} == {"CH"}
    assert edge_multiset(g) == {
        (6, 0, 7, 0, "-", False): 1,
        (3, None, 6, 0, "-", False): 1,
        (5, None, 7, 0, "-", False): 1,
        (3, None, 6, 1, "-", False): 1,
    }


def test_contract_rejects_wrong_type_and_bad_matching():
    g = demo_molecule()
    lex = build_lexicon(g)
    cc, ch = list(lex)[:2]
    with pytest.raises(TypeMismatch):
        contract_matched(g.copy(), cc, MatchingResult(frozenset({1})))
    with pytest.raises(InvalidMatching):
        contract_matched(g.copy(), ch, MatchingResult(frozenset({1, 2})))
    with pytest.raises(InvalidMatching):
        contract_matched(g.copy(), ch, MatchingResult(frozenset()))


def test_directed_contraction_keeps_orientation():
    g = construct_graph(
        [(0, "A"), (1, "B"), (2, "A"), (3, "B")],
        [(0, 1, None, True), (2, 3, None, True), (1, 2, None, True)],
    )
    result = induce(g)
    assert result.iterations == 1
    assert same_graph(expand(result.grammar), g)
    (e,) = result.grammar.residual.edges.values()
    assert e.directed and (e.port_u, e.port_v) == (1, 0)


def test_single_edge_no_iterations():
    g = construct_graph([(0, "A"), (1, "B")], [(0, 1)])
    result = induce(g)
    assert result.iterations == 0
    assert result.grammar.productions == []
    assert same_graph(result.grammar.residual, g)
    assert result.final_dl == result.source_dl == 3


def test_path_abab():
    g = path(3)
    result = induce(g)
    grammar = result.grammar
    assert len(grammar.productions) == 1
    assert [grammar.types.name(c) for c in grammar.productions[0].constituents] == ["A", "B"]
    assert grammar.residual.num_nodes == 2 and grammar.residual.num_edges == 1
    assert same_graph(expand(grammar), g)


def test_two_triangles_compress():
    g = two_triangles()
    result = induce(g)
    assert result.source_dl == 13
    assert result.final_dl < 13
    assert same_graph(expand(result.grammar), g)


def test_input_graph_not_mutated():
    g = demo_molecule()
    snapshot = edge_multiset(g)
    induce(g)
    assert edge_multiset(g) == snapshot and g.num_nodes == 6


def test_max_iterations_cap():
    result = induce(star_forest(2, 5), InductionConfig(max_iterations=2))
    assert result.iterations == 2


@settings(max_examples=200, deadline=None)
@given(small_graphs(labels="ABC"))
def test_lossless_both_strategies(g):
    for strategy in SelectionStrategy:
        for inline in (True, False):
            result = induce(g, InductionConfig(strategy=strategy, inline_single_use=inline))
            assert same_graph(expand(result.grammar), g)


@settings(max_examples=150, deadline=None)
@given(small_graphs(labels="AB"))
def test_progress_per_iteration(g):
    sizes = []

    def watch(graph, lex, record):
        sizes.append((graph.num_nodes, graph.num_edges, record.matching_size))

    induce(g, on_iteration=watch)
    prev_nodes, prev_edges = g.num_nodes, g.num_edges
    for nodes, edges, m in sizes:
        assert nodes == prev_nodes - m
        assert edges <= prev_edges - m
        prev_nodes, prev_edges = nodes, edges


@settings(max_examples=150, deadline=None)
@given(small_graphs(labels="AB"))
def test_matching_score_never_exceeds_raw(g):
    def check(graph, lex, record):
        raw = dict(score_edge_types(graph, lex, GREEDY))
        for key, score in score_edge_types(graph, lex, MATCHING):
            assert score <= raw[key]

    induce(g, on_iteration=check)


@settings(max_examples=100, deadline=None)
@given(small_graphs(labels="AB"))
def test_dl_never_grows_with_matching(g):
    result = induce(g)
    assert result.final_dl <= result.source_dl
    if result.iterations == 0:
        assert result.final_dl == result.source_dl
    for rec in result.trace:
        assert rec.matching_size >= 2


def test_star_strategies_differ():
    g = star_forest(1, 7)
    assert named_scores(g, MATCHING) == {"n-n": 1}
    assert named_scores(g, GREEDY) == {"n-n": 7}
    assert induce(g).iterations == 0
    greedy = induce(g, InductionConfig(strategy=GREEDY))
    assert greedy.iterations > 0
    assert greedy.final_dl > induce(g).final_dl


def test_deterministic_trace():
    a, b = induce(two_triangles()), induce(two_triangles())
    assert [(r.chosen, r.matching_size) for r in a.trace] == [(r.chosen, r.matching_size) for r in b.trace]
