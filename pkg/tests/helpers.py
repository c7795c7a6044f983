from graphgram.grammar import GraphGrammar
from graphgram.graph import Graph
from graphgram.induction import contract_matched
from graphgram.lexicon import build_lexicon
from graphgram.matching import max_matching


def contract_types(graph: Graph, picks) -> GraphGrammar:
    """Contract, in order, the edge types chosen by ``picks`` (callables key -> bool)."""
    g = graph.copy()
    productions, derivation = [], {}
    for pick in picks:
        lex = build_lexicon(g)
        key = next(k for k in lex if pick(k, g.types))
        g, prod, delta = contract_matched(g, key, max_matching(g, lex.edges(key)))
        productions.append(prod)
        for h, parts in delta.hyper_nodes.items():
            derivation[h] = (prod.lhs, parts)
    return GraphGrammar(g.types, productions, g, derivation)


def named(text):
    from graphgram.graph import format_key

    return lambda key, types: format_key(key, types) == text
