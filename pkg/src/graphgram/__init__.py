"""Hierarchical graph grammar induction by lossless bigram compression."""

from .generators import GeneratorSpec, generate
from .grammar import (
    GraphGrammar,
    Production,
    description_length,
    expand,
    hierarchy_depth,
    inline_single_use,
    leaf_nodes,
    parse_grammar,
    serialize_grammar,
)
from .graph import EdgeTypeKey, Graph, construct_graph, edge_type_of, relabel_by_degree, same_graph
from .induction import GrammarResult, InductionConfig, SelectionStrategy, induce
from .lexicon import EdgeLexicon, build_lexicon
from .matching import MatchingResult, brute_force_matching_size, max_matching

__all__ = [
    "EdgeLexicon",
    "EdgeTypeKey",
    "GeneratorSpec",
    "Graph",
    "GrammarResult",
    "GraphGrammar",
    "InductionConfig",
    "MatchingResult",
    "Production",
    "SelectionStrategy",
    "brute_force_matching_size",
    "build_lexicon",
    "construct_graph",
    "description_length",
    "edge_type_of",
    "expand",
    "generate",
    "hierarchy_depth",
    "induce",
    "inline_single_use",
    "leaf_nodes",
    "max_matching",
    "parse_grammar",
    "relabel_by_degree",
    "same_graph",
    "serialize_grammar",
]
