"""Grammar induction by repeated bigram abstraction.

Each iteration scores every edge type by how many of its occurrences can be
contracted at once (a maximum matching on the subgraph of that type), picks
the best type, replaces each matched edge with a hyper-node and rewires the
edges around it. The loop stops once the best score drops below
``min_support``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .errors import InvalidMatching, InvalidParameters, TypeMismatch
from .grammar import (
    BodyEdge,
    GraphGrammar,
    Production,
    description_length,
    graph_description_length,
    inline_single_use,
)
from .graph import EdgeTypeKey, Graph, TypeTable, edge_key
from .lexicon import EdgeLexicon, apply_contraction_delta, build_lexicon
from .matching import MatchingResult, greedy_matching, is_matching, max_matching

MAX_COMPOUND_NAME = 12


class SelectionStrategy(enum.Enum):
    MATCHING_COUNT = "matching"
    RAW_FREQUENCY = "greedy"


@dataclass
class InductionConfig:
    min_support: int = 2
    max_iterations: int | None = None
    strategy: SelectionStrategy = SelectionStrategy.MATCHING_COUNT
    inline_single_use: bool = True

    def __post_init__(self):
        if self.min_support < 2:
            raise InvalidParameters(f"min_support must be >= 2, got {self.min_support}")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise InvalidParameters("max_iterations must be non-negative")
        self.strategy = SelectionStrategy(self.strategy)


@dataclass
class IterationRecord:
    chosen: EdgeTypeKey
    matching_size: int
    production: int
    scores: list[tuple[EdgeTypeKey, int]]
    # description length of the working grammar after this step, before inlining
    description_length: int


@dataclass
class ContractionDelta:
    removed: list[int]
    added: list[int]
    hyper_nodes: dict[int, tuple[int, int]] = field(default_factory=dict)


@dataclass
class GrammarResult:
    grammar: GraphGrammar
    trace: list[IterationRecord]
    source_dl: int
    final_dl: int

    @property
    def iterations(self) -> int:
        return len(self.trace)


def score_edge_types(
    graph: Graph,
    lexicon: EdgeLexicon,
    strategy: SelectionStrategy = SelectionStrategy.MATCHING_COUNT,
    cache: dict[EdgeTypeKey, MatchingResult] | None = None,
) -> list[tuple[EdgeTypeKey, int]]:
    """Score each type in lexicon order.

    MATCHING_COUNT uses the maximum matching size over the type's edges;
    RAW_FREQUENCY counts its non-loop occurrences. ``cache`` memoizes matchings
    per key; the caller must drop keys whose edge lists changed.
    """
    scores = []
    for key in lexicon:
        if strategy is SelectionStrategy.RAW_FREQUENCY:
            edges = lexicon.edges(key)
            score = sum(1 for eid in edges if not graph.edges[eid].is_loop)
        else:
            result = cache.get(key) if cache is not None else None
            if result is None:
                result = max_matching(graph, lexicon.edges(key))
                if cache is not None:
                    cache[key] = result
            score = result.size
        scores.append((key, score))
    return scores


def select_edge_type(scores: list[tuple[EdgeTypeKey, int]], config: InductionConfig) -> EdgeTypeKey | None:
    best_key, best = None, -1
    for key, score in scores:
        if score > best:
            best_key, best = key, score
    if best < config.min_support:
        return None
    return best_key


def _compound_name(types: TypeTable, a: int, b: int) -> str:
    name = types.name(a) + types.name(b)
    return name if len(name) <= MAX_COMPOUND_NAME else f"N{types.next_id}"


def contract_matched(
    graph: Graph,
    key: EdgeTypeKey,
    matching: MatchingResult,
    type_table: TypeTable | None = None,
) -> tuple[Graph, Production, ContractionDelta]:
    """Contract every matched edge of type ``key`` into a new hyper-node, in place.

    The endpoint in the key's first slot becomes constituent 0 (for identical
    slots, the lower node id). Other edges on constituent 0 attach to the
    hyper-node's ports ``0..k-1`` and edges on constituent 1 to ``k..``, where
    ``k`` is constituent 0's port count.
    """
    types = graph.types if type_table is None else type_table
    matched = sorted(matching.edge_ids)
    if not matched:
        raise InvalidMatching("nothing to contract")
    for eid in matched:
        if edge_key(graph, graph.edge(eid)) != key:
            raise TypeMismatch(f"edge {eid} is not of the chosen type")
    if not is_matching(graph, matched):
        raise InvalidMatching("matched edges share a node or form a loop")

    (ta, pa), (tb, pb) = key.a, key.b
    width_a = types.port_count(ta)
    lhs = types.add_nonterminal(_compound_name(types, ta, tb), width_a + types.port_count(tb))
    production = Production(lhs, (ta, tb), (BodyEdge(0, pa, 1, pb, key.label, key.directed),))

    placement: dict[int, tuple[int, int]] = {}
    delta = ContractionDelta([], [])
    for eid in matched:
        e = graph.edges[eid]
        first, second = e.u, e.v
        if not key.directed:
            end_u = (graph.nodes[e.u].type, e.port_u)
            end_v = (graph.nodes[e.v].type, e.port_v)
            if end_u == end_v:
                first, second = min(e.u, e.v), max(e.u, e.v)
            elif end_u != key.a:
                first, second = e.v, e.u
        hyper = graph.add_node(lhs).id
        placement[first] = (hyper, 0)
        placement[second] = (hyper, width_a)
        delta.hyper_nodes[hyper] = (first, second)

    def moved(node: int, port) -> tuple[int, int | None]:
        if node not in placement:
            return node, port
        hyper, offset = placement[node]
        return hyper, offset + (port or 0)

    matched_set = set(matched)
    delta.removed = sorted({eid for n in placement for eid in graph.adj[n]})
    for eid in delta.removed:
        e = graph.remove_edge(eid)
        if eid in matched_set:
            continue
        u, pu = moved(e.u, e.port_u)
        v, pv = moved(e.v, e.port_v)
        delta.added.append(graph.add_edge(u, v, e.label, pu, pv).id)
    for n in placement:
        graph.remove_node(n)
    return graph, production, delta


def induce(
    graph: Graph,
    config: InductionConfig | None = None,
    on_iteration: Callable[[Graph, EdgeLexicon, IterationRecord], None] | None = None,
) -> GrammarResult:
    """Run the abstraction loop to its fixpoint. ``graph`` itself is left untouched.

    ``on_iteration`` sees the working graph and lexicon after each contraction.
    """
    config = config or InductionConfig()
    g = graph.copy()
    source_dl = graph_description_length(g)
    lexicon = build_lexicon(g)
    cache: dict[EdgeTypeKey, MatchingResult] = {}
    productions: list[Production] = []
    derivation: dict[int, tuple[int, tuple[int, ...]]] = {}
    trace: list[IterationRecord] = []
    body_size = 0

    while config.max_iterations is None or len(trace) < config.max_iterations:
        scores = score_edge_types(g, lexicon, config.strategy, cache)
        key = select_edge_type(scores, config)
        if key is None:
            break
        if config.strategy is SelectionStrategy.MATCHING_COUNT:
            matching = cache[key]
        else:
            matching = greedy_matching(g, lexicon.edges(key))

        g, production, delta = contract_matched(g, key, matching)
        apply_contraction_delta(lexicon, delta.removed, delta.added, g)
        for k in lexicon.touched:
            cache.pop(k, None)

        productions.append(production)
        body_size += production.size()
        for hyper, parts in delta.hyper_nodes.items():
            derivation[hyper] = (production.lhs, parts)
        record = IterationRecord(
            chosen=key,
            matching_size=matching.size,
            production=production.lhs,
            scores=scores,
            description_length=g.num_nodes + g.num_edges + body_size,
        )
        trace.append(record)
        if on_iteration is not None:
            on_iteration(g, lexicon, record)

    grammar = GraphGrammar(g.types, productions, g, derivation)
    if config.inline_single_use:
        grammar = inline_single_use(grammar)
    return GrammarResult(grammar, trace, source_dl, description_length(grammar).total)
