"""Typed multigraph with stable node/edge ids, ports and canonical edge types.

Node types live in a :class:`TypeTable` shared by a graph and the grammar built
from it. Terminal types come from input labels; non-terminal types are
allocated by contraction. A hyper-node exposes one port per terminal leaf of
its expansion, numbered in leaf order, so every edge attached to it records
exactly which leaf it belongs to. Terminal endpoints always carry port ``None``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DanglingEndpoint,
    DuplicateNodeId,
    InvalidParameters,
    MixedDirectedness,
    SelfLoopInInput,
    UnknownEdge,
    UnknownType,
)

Port = int | None
DEFAULT_NODE_LABEL = "n"
DEFAULT_EDGE_LABEL = "-"


def check_label(label: str) -> str:
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise InvalidParameters(f"invalid label {label!r}: must be non-empty text without whitespace")
    return label


@dataclass(frozen=True)
class TypeEntry:
    id: int
    name: str
    terminal: bool
    port_count: int


class TypeTable:
    """Registry of node types. Ids are never reused."""

    def __init__(self) -> None:
        self._entries: dict[int, TypeEntry] = {}
        self._terminal_ids: dict[str, int] = {}
        self._next_id = 0

    def __contains__(self, type_id: int) -> bool:
        return type_id in self._entries

    def __iter__(self):
        return iter(sorted(self._entries.values(), key=lambda e: e.id))

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, type_id: int) -> TypeEntry:
        try:
            return self._entries[type_id]
        except KeyError:
            raise UnknownType(type_id) from None

    def terminal(self, label: str, type_id: int | None = None) -> int:
        """Return the id of terminal ``label``, registering it on first use."""
        if label in self._terminal_ids:
            return self._terminal_ids[label]
        tid = self._claim(type_id)
        self._entries[tid] = TypeEntry(tid, check_label(label), True, 1)
        self._terminal_ids[label] = tid
        return tid

    def add_nonterminal(self, name: str, port_count: int, type_id: int | None = None) -> int:
        tid = self._claim(type_id)
        self._entries[tid] = TypeEntry(tid, check_label(name), False, port_count)
        return tid

    def remove(self, type_id: int) -> None:
        entry = self[type_id]
        if entry.terminal:
            del self._terminal_ids[entry.name]
        del self._entries[type_id]

    def _claim(self, type_id: int | None) -> int:
        if type_id is None:
            type_id = self._next_id
        elif type_id in self._entries:
            raise InvalidParameters(f"type id {type_id} already registered")
        self._next_id = max(self._next_id, type_id + 1)
        return type_id

    @property
    def next_id(self) -> int:
        return self._next_id

    def name(self, type_id: int) -> str:
        return self[type_id].name

    def is_terminal(self, type_id: int) -> bool:
        return self[type_id].terminal

    def port_count(self, type_id: int) -> int:
        return self[type_id].port_count

    def copy(self) -> TypeTable:
        other = TypeTable()
        other._entries = dict(self._entries)
        other._terminal_ids = dict(self._terminal_ids)
        other._next_id = self._next_id
        return other


@dataclass(frozen=True)
class Node:
    id: int
    type: int
    provenance: str | None = None


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    port_u: Port
    v: int
    port_v: Port
    label: str = DEFAULT_EDGE_LABEL
    directed: bool = False

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, node_id: int) -> int:
        return self.v if node_id == self.u else self.u


class EdgeTypeKey(NamedTuple):
    """Canonical edge type: ((type, port), label, (type, port), directed)."""

    a: tuple[int, Port]
    label: str
    b: tuple[int, Port]
    directed: bool


@dataclass
class Graph:
    """Multigraph over typed nodes; directedness is uniform across edges."""

    types: TypeTable = field(default_factory=TypeTable)
    directed: bool = False
    nodes: dict[int, Node] = field(default_factory=dict)
    edges: dict[int, Edge] = field(default_factory=dict)
    adj: dict[int, set[int]] = field(default_factory=dict)
    next_node_id: int = 0
    next_edge_id: int = 0

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def add_node(self, type_id: int, node_id: int | None = None, provenance: str | None = None) -> Node:
        if type_id not in self.types:
            raise UnknownType(type_id)
        if node_id is None:
            node_id = self.next_node_id
        elif node_id in self.nodes:
            raise DuplicateNodeId(node_id)
        if node_id < 0:
            raise InvalidParameters(f"node id must be non-negative, got {node_id}")
        node = Node(node_id, type_id, provenance)
        self.nodes[node_id] = node
        self.adj[node_id] = set()
        self.next_node_id = max(self.next_node_id, node_id + 1)
        return node

    def add_edge(
        self,
        u: int,
        v: int,
        label: str = DEFAULT_EDGE_LABEL,
        port_u: Port = None,
        port_v: Port = None,
        edge_id: int | None = None,
    ) -> Edge:
        for x in (u, v):
            if x not in self.nodes:
                raise DanglingEndpoint(f"edge endpoint {x} is not a node")
        if edge_id is None:
            edge_id = self.next_edge_id
        elif edge_id in self.edges:
            raise InvalidParameters(f"edge id {edge_id} already used")
        edge = Edge(edge_id, u, port_u, v, port_v, check_label(label), self.directed)
        self.edges[edge_id] = edge
        self.adj[u].add(edge_id)
        self.adj[v].add(edge_id)
        self.next_edge_id = max(self.next_edge_id, edge_id + 1)
        return edge

    def remove_edge(self, edge_id: int) -> Edge:
        try:
            edge = self.edges.pop(edge_id)
        except KeyError:
            raise UnknownEdge(edge_id) from None
        self.adj[edge.u].discard(edge_id)
        self.adj[edge.v].discard(edge_id)
        return edge

    def remove_node(self, node_id: int) -> Node:
        if self.adj[node_id]:
            raise InvalidParameters(f"node {node_id} still has incident edges")
        del self.adj[node_id]
        return self.nodes.pop(node_id)

    def edge(self, edge_id: int) -> Edge:
        try:
            return self.edges[edge_id]
        except KeyError:
            raise UnknownEdge(edge_id) from None

    def incident(self, node_id: int) -> list[int]:
        return sorted(self.adj[node_id])

    def type_name(self, node_id: int) -> str:
        return self.types.name(self.nodes[node_id].type)

    def is_terminal_graph(self) -> bool:
        return all(self.types.is_terminal(n.type) for n in self.nodes.values())

    def copy(self) -> Graph:
        return Graph(
            types=self.types.copy(),
            directed=self.directed,
            nodes=dict(self.nodes),
            edges=dict(self.edges),
            adj={k: set(v) for k, v in self.adj.items()},
            next_node_id=self.next_node_id,
            next_edge_id=self.next_edge_id,
        )

    def check(self) -> None:
        """Assert the structural invariants (adjacency mirrors the edge table)."""
        mirror: dict[int, set[int]] = {n: set() for n in self.nodes}
        for e in self.edges.values():
            assert e.u in self.nodes and e.v in self.nodes, f"edge {e.id} has a dead endpoint"
            assert e.directed == self.directed, f"edge {e.id} has wrong directedness"
            mirror[e.u].add(e.id)
            mirror[e.v].add(e.id)
        assert mirror == self.adj, "adjacency index out of sync with edge table"
        for n in self.nodes.values():
            assert n.type in self.types, f"node {n.id} has unknown type {n.type}"


def construct_graph(
    node_specs: Iterable[tuple[int, str | None]],
    edge_specs: Iterable[Sequence],
) -> Graph:
    """Build a terminal graph from ``(id, label)`` nodes and ``(u, v[, label[, directed]])`` edges.

    Missing node labels become ``"n"``; missing edge labels become ``"-"``.
    Terminal type ids follow first appearance of each label.
    """
    node_specs = list(node_specs)
    edge_specs = [tuple(e) for e in edge_specs]

    modes = {bool(e[3]) if len(e) > 3 and e[3] is not None else False for e in edge_specs}
    if len(modes) > 1:
        raise MixedDirectedness("input mixes directed and undirected edges")
    graph = Graph(directed=modes.pop() if modes else False)

    for spec in node_specs:
        node_id, label = spec[0], spec[1] if len(spec) > 1 else None
        if node_id in graph.nodes:
            raise DuplicateNodeId(node_id)
        tid = graph.types.terminal(label if label is not None else DEFAULT_NODE_LABEL)
        graph.add_node(tid, node_id=node_id, provenance=spec[2] if len(spec) > 2 else None)

    for spec in edge_specs:
        u, v = spec[0], spec[1]
        label = spec[2] if len(spec) > 2 and spec[2] is not None else DEFAULT_EDGE_LABEL
        if u == v:
            raise SelfLoopInInput(f"self-loop on node {u} in input")
        graph.add_edge(u, v, label)
    return graph


def edge_type_of(graph: Graph, edge_id: int) -> EdgeTypeKey:
    edge = graph.edge(edge_id)
    return edge_key(graph, edge)


def edge_key(graph: Graph, edge: Edge) -> EdgeTypeKey:
    a = (graph.nodes[edge.u].type, edge.port_u)
    b = (graph.nodes[edge.v].type, edge.port_v)
    # Terminal types always carry port None and non-terminals an int, so equal
    # type ids never compare None against int here.
    if not edge.directed and b < a:
        a, b = b, a
    return EdgeTypeKey(a, edge.label, b, edge.directed)


def format_key(key: EdgeTypeKey, types: TypeTable) -> str:
    """Human-readable edge type, e.g. ``C-H`` or ``CH.0-H``."""

    def end(slot: tuple[int, Port]) -> str:
        name = types.name(slot[0])
        return name if slot[1] is None else f"{name}.{slot[1]}"

    if key.label == DEFAULT_EDGE_LABEL:
        conn = "->" if key.directed else "-"
    else:
        conn = f"-{key.label}->" if key.directed else f"-{key.label}-"
    return f"{end(key.a)}{conn}{end(key.b)}"


def relabel_by_degree(graph: Graph) -> Graph:
    """Replace every node's label with its degree: ``d<k>``, or ``i<in>o<out>`` when directed."""
    if not graph.is_terminal_graph():
        raise InvalidParameters("degree relabeling needs a graph of terminal nodes only")
    indeg: Counter[int] = Counter()
    outdeg: Counter[int] = Counter()
    for e in graph.edges.values():
        outdeg[e.u] += 1
        indeg[e.v] += 1

    out = Graph(directed=graph.directed)
    for nid in sorted(graph.nodes):
        if graph.directed:
            label = f"i{indeg[nid]}o{outdeg[nid]}"
        else:
            label = f"d{indeg[nid] + outdeg[nid]}"
        out.add_node(out.types.terminal(label), node_id=nid, provenance=graph.nodes[nid].provenance)
    for eid in sorted(graph.edges):
        e = graph.edges[eid]
        out.add_edge(e.u, e.v, e.label, e.port_u, e.port_v, edge_id=eid)
    out.next_node_id = graph.next_node_id
    out.next_edge_id = graph.next_edge_id
    return out


def edge_multiset(graph: Graph) -> Counter:
    """Edges as a multiset of ``(u, port_u, v, port_v, label, directed)``; undirected ends sorted."""
    out: Counter = Counter()
    for e in graph.edges.values():
        a, b = (e.u, e.port_u), (e.v, e.port_v)
        if not e.directed and (b[0], b[1] if b[1] is not None else -1) < (a[0], a[1] if a[1] is not None else -1):
            a, b = b, a
        out[(a[0], a[1], b[0], b[1], e.label, e.directed)] += 1
    return out


def node_labels(graph: Graph) -> dict[int, str]:
    return {nid: graph.types.name(n.type) for nid, n in graph.nodes.items()}


def same_graph(a: Graph, b: Graph) -> bool:
    """Equality by node ids, node type names, and the labeled edge multiset."""
    return (
        a.directed == b.directed
        and node_labels(a) == node_labels(b)
        and edge_multiset(a) == edge_multiset(b)
    )
