"""Edge lexicon: occurrences of every edge type, kept in first-appearance order."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import UnknownEdge, UnregisteredEdge
from .graph import EdgeTypeKey, Graph, edge_key


class EdgeLexicon:
    """Map ``EdgeTypeKey -> ordered edge ids``; a key disappears when its count hits 0.

    ``touched`` holds the keys whose occurrence list changed in the most recent
    :func:`apply_contraction_delta`, so callers can refresh cached scores.
    """

    def __init__(self) -> None:
        self._by_key: dict[EdgeTypeKey, dict[int, None]] = {}
        self._key_of: dict[int, EdgeTypeKey] = {}
        self.touched: set[EdgeTypeKey] = set()

    def __len__(self) -> int:
        return len(self._by_key)

    def __iter__(self) -> Iterator[EdgeTypeKey]:
        return iter(self._by_key)

    def __contains__(self, key: object) -> bool:
        return key in self._by_key

    def keys(self) -> list[EdgeTypeKey]:
        return list(self._by_key)

    def count(self, key: EdgeTypeKey) -> int:
        return len(self._by_key.get(key, ()))

    def edges(self, key: EdgeTypeKey) -> list[int]:
        return list(self._by_key.get(key, ()))

    def key_of(self, edge_id: int) -> EdgeTypeKey:
        try:
            return self._key_of[edge_id]
        except KeyError:
            raise UnregisteredEdge(edge_id) from None

    def counts(self) -> dict[EdgeTypeKey, int]:
        return {k: len(v) for k, v in self._by_key.items()}

    def total(self) -> int:
        return len(self._key_of)

    def register(self, graph: Graph, edge_id: int) -> EdgeTypeKey:
        if edge_id not in graph.edges:
            raise UnknownEdge(edge_id)
        key = edge_key(graph, graph.edges[edge_id])
        self._by_key.setdefault(key, {})[edge_id] = None
        self._key_of[edge_id] = key
        self.touched.add(key)
        return key

    def unregister(self, edge_id: int) -> EdgeTypeKey:
        key = self.key_of(edge_id)
        del self._key_of[edge_id]
        bucket = self._by_key[key]
        del bucket[edge_id]
        if not bucket:
            del self._by_key[key]
        self.touched.add(key)
        return key


def build_lexicon(graph: Graph) -> EdgeLexicon:
    """One pass over the edges in ascending id order."""
    lex = EdgeLexicon()
    for eid in sorted(graph.edges):
        lex.register(graph, eid)
    lex.touched.clear()
    return lex


def apply_contraction_delta(
    lexicon: EdgeLexicon,
    removed_edges: Iterable[int],
    added_edges: Iterable[int],
    graph: Graph,
) -> EdgeLexicon:
    """Update ``lexicon`` in place for edges removed from and added to ``graph``."""
    removed_edges = list(removed_edges)
    added_edges = list(added_edges)
    for eid in removed_edges:
        lexicon.key_of(eid)
    for eid in added_edges:
        if eid not in graph.edges:
            raise UnknownEdge(eid)

    lexicon.touched = set()
    for eid in removed_edges:
        lexicon.unregister(eid)
    for eid in added_edges:
        lexicon.register(graph, eid)
    return lexicon
