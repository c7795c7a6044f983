"""Maximum-cardinality matching on general graphs.

:func:`max_matching` runs Edmonds' blossom algorithm (augmenting paths found by
BFS, odd cycles shrunk to their base). :func:`brute_force_matching_size` is an
exhaustive oracle used only by tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import TooLargeForOracle, UnknownEdge
from .graph import Graph

ORACLE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class MatchingResult:
    edge_ids: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edge_ids)


def _simple_edges(graph: Graph, edge_filter: Iterable[int] | None) -> dict[tuple[int, int], int]:
    """Map each unordered node pair to its lowest edge id, dropping self-loops."""
    if edge_filter is None:
        ids = graph.edges.keys()
    else:
        ids = list(edge_filter)
        for eid in ids:
            if eid not in graph.edges:
                raise UnknownEdge(eid)
    pairs: dict[tuple[int, int], int] = {}
    for eid in sorted(ids):
        e = graph.edges[eid]
        if e.u == e.v:
            continue
        pair = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        if pair not in pairs:
            pairs[pair] = eid
    return pairs


def max_matching(graph: Graph, edge_filter: Iterable[int] | None = None) -> MatchingResult:
    """Maximum matching of the subgraph spanned by ``edge_filter`` (all edges if None).

    Direction is ignored, self-loops never match, and a bundle of parallel edges
    is represented by its lowest edge id. Vertices and neighbours are scanned in
    ascending id order, so the result is deterministic.
    """
    pairs = _simple_edges(graph, edge_filter)
    if not pairs:
        return MatchingResult(frozenset())
    verts = sorted({x for p in pairs for x in p})
    index = {v: i for i, v in enumerate(verts)}
    adj: list[list[int]] = [[] for _ in verts]
    for a, b in pairs:
        adj[index[a]].append(index[b])
        adj[index[b]].append(index[a])
    for nbrs in adj:
        nbrs.sort()

    mate = _edmonds(adj)
    chosen = set()
    for i, j in enumerate(mate):
        if j > i:
            chosen.add(pairs[(verts[i], verts[j])])
    return MatchingResult(frozenset(chosen))


def _edmonds(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    mate = [-1] * n
    # greedy warm start; augmentation only has to fix what this misses
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    base = list(range(n))
    parent = [-1] * n
    in_tree = [False] * n

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: set[int]) -> None:
        while base[v] != b:
            in_blossom.add(base[v])
            in_blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    touched: list[int] = []

    def find_path(root: int) -> int:
        touched.append(root)
        in_tree[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if base[v] == base[w] or mate[v] == w:
                    continue
                if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                    # w is an outer vertex: odd cycle, shrink it
                    cur = lca(v, w)
                    in_blossom: set[int] = set()
                    mark_path(v, cur, w, in_blossom)
                    mark_path(w, cur, v, in_blossom)
                    for i in touched:
                        if base[i] in in_blossom:
                            base[i] = cur
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[w] == -1:
                    parent[w] = v
                    touched.append(w)
                    if mate[w] == -1:
                        return w
                    m = mate[w]
                    touched.append(m)
                    in_tree[m] = True
                    queue.append(m)
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        end = find_path(root)
        if end != -1:
            v = end
            while v != -1:
                pv = parent[v]
                nxt = mate[pv]
                mate[v], mate[pv] = pv, v
                v = nxt
        for i in touched:
            base[i] = i
            parent[i] = -1
            in_tree[i] = False
        touched.clear()
    return mate


def greedy_matching(graph: Graph, edge_ids: Iterable[int]) -> MatchingResult:
    """First-come-first-served maximal matching along ``edge_ids`` in ascending order."""
    used: set[int] = set()
    chosen = []
    for eid in sorted(edge_ids):
        e = graph.edge(eid)
        if e.u == e.v or e.u in used or e.v in used:
            continue
        used.update((e.u, e.v))
        chosen.append(eid)
    return MatchingResult(frozenset(chosen))


def is_matching(graph: Graph, edge_ids: Iterable[int]) -> bool:
    seen: set[int] = set()
    for eid in edge_ids:
        e = graph.edge(eid)
        if e.u == e.v or e.u in seen or e.v in seen:
            return False
        seen.update((e.u, e.v))
    return True


def brute_force_matching_size(graph: Graph, edge_filter: Iterable[int] | None = None) -> int:
    """Exact matching number by exhaustive branching over edges (at most 20 edges)."""
    ids = list(graph.edges) if edge_filter is None else list(edge_filter)
    for eid in ids:
        if eid not in graph.edges:
            raise UnknownEdge(eid)
    edges = [(graph.edges[i].u, graph.edges[i].v) for i in sorted(ids)]
    edges = [(u, v) for u, v in edges if u != v]
    if len(edges) > ORACLE_EDGE_LIMIT:
        raise TooLargeForOracle(f"{len(edges)} edges exceeds the oracle limit of {ORACLE_EDGE_LIMIT}")

    best = 0

    def branch(i: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        if i == len(edges) or size + (len(edges) - i) <= best:
            return
        u, v = edges[i]
        if u not in used and v not in used:
            branch(i + 1, used | {u, v}, size + 1)
        branch(i + 1, used, size)

    branch(0, frozenset(), 0)
    return best
