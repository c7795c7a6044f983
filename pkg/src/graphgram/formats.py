"""Edge-list and PDB-subset ingestion; DOT export.

Edge-list format, one record per line::

    # comment
    node <id> [<label>]
    edge <u> <v> [<label>] [>]

A trailing ``>`` marks the edge as directed; a document is either all directed
or all undirected.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DanglingEndpoint, ParseError, UnresolvedConect
from .grammar import GraphGrammar
from .graph import DEFAULT_EDGE_LABEL, Graph, construct_graph


def parse_edge_list(text: str) -> Graph:
    nodes: list[tuple[int, str | None]] = []
    edges: list[tuple[int, int, str | None, bool]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if toks[0] == "node":
                if len(toks) not in (2, 3):
                    raise ParseError("expected: node <id> [<label>]", lineno)
                nid = int(toks[1])
                nodes.append((nid, toks[2] if len(toks) == 3 else None))
            elif toks[0] == "edge":
                directed = toks[-1] == ">"
                if directed:
                    toks = toks[:-1]
                if len(toks) not in (3, 4):
                    raise ParseError("expected: edge <u> <v> [<label>] [>]", lineno)
                edges.append((int(toks[1]), int(toks[2]), toks[3] if len(toks) == 4 else None, directed))
                edge_lines.append(lineno)
            else:
                raise ParseError(f"unknown record {toks[0]!r}", lineno)
        except ValueError:
            raise ParseError(f"bad integer in {raw.strip()!r}", lineno) from None
    declared = {nid for nid, _ in nodes}
    for (u, v, _, _), lineno in zip(edges, edge_lines):
        for x in (u, v):
            if x not in declared:
                raise DanglingEndpoint(f"line {lineno}: node {x} not declared")
    return construct_graph(nodes, edges)


def serialize_edge_list(graph: Graph) -> str:
    if not graph.is_terminal_graph():
        raise ValueError("only terminal graphs can be written as an edge list")
    lines = [f"node {nid} {graph.type_name(nid)}" for nid in sorted(graph.nodes)]
    for eid in sorted(graph.edges):
        e = graph.edges[eid]
        lines.append(f"edge {e.u} {e.v} {e.label}" + (" >" if e.directed else ""))
    return "\n".join(lines) + "\n"


def _element(line: str) -> str:
    element = line[76:78].strip()
    if element:
        return element.capitalize()
    # no element column: first letter of the atom name
    name = line[12:16].strip()
    letters = "".join(c for c in name if c.isalpha())
    if not letters:
        raise ValueError("cannot infer element")
    return letters[0].upper()


def parse_pdb_subset(
    text: str,
    strip_elements: Iterable[str] = (),
    close_loop: Iterable[tuple[int, int]] = (),
) -> Graph:
    """Atoms and covalent bonds from ATOM/HETATM and CONECT records.

    Atoms whose element is in ``strip_elements`` are dropped with their bonds.
    ``close_loop`` lists extra atom-serial pairs to bond (e.g. 3' to 5' ends).
    Everything else in the file is ignored.
    """
    strip = {s.capitalize() for s in strip_elements}
    atoms: dict[int, tuple[str, str]] = {}
    conects: list[tuple[int, list[int], int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        record = line[:6].strip()
        try:
            if record in ("ATOM", "HETATM"):
                serial = int(line[6:11])
                atoms[serial] = (_element(line), line[12:16].strip())
            elif record == "CONECT":
                fields = [line[i : i + 5] for i in range(6, len(line.rstrip()), 5)]
                serials = [int(f) for f in fields if f.strip()]
                if not serials:
                    raise ValueError("empty CONECT")
                conects.append((serials[0], serials[1:], lineno))
        except ValueError as exc:
            raise ParseError(f"malformed {record} record: {exc}", lineno) from None

    bonds: set[tuple[int, int]] = set()
    for origin, partners, lineno in conects:
        for s in [origin, *partners]:
            if s not in atoms:
                raise UnresolvedConect(f"line {lineno}: atom serial {s} not declared")
        for p in partners:
            if p != origin:
                bonds.add((min(origin, p), max(origin, p)))
    for a, b in close_loop:
        for s in (a, b):
            if s not in atoms or atoms[s][0] in strip:
                raise UnresolvedConect(f"loop closure atom {s} not present")
        if a != b:
            bonds.add((min(a, b), max(a, b)))

    kept = {s for s, (el, _) in atoms.items() if el not in strip}
    nodes = [(s, atoms[s][0], atoms[s][1] or None) for s in sorted(kept)]
    edges = [(a, b) for a, b in sorted(bonds) if a in kept and b in kept]
    return construct_graph(nodes, edges)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_attrs(label: str, tail_port, head_port) -> str:
    attrs = []
    if label != DEFAULT_EDGE_LABEL:
        attrs.append(f"label={_quote(label)}")
    if tail_port is not None:
        attrs.append(f"taillabel={_quote(str(tail_port))}")
    if head_port is not None:
        attrs.append(f"headlabel={_quote(str(head_port))}")
    return f" [{', '.join(attrs)}]" if attrs else ""


def _graph_body(graph: Graph, prefix: str = "", indent: str = "  ") -> list[str]:
    conn = "->" if graph.directed else "--"
    lines = []
    for nid in sorted(graph.nodes):
        node = graph.nodes[nid]
        shape = "" if graph.types.is_terminal(node.type) else ", shape=box"
        lines.append(f"{indent}{prefix}{nid} [label={_quote(graph.types.name(node.type))}{shape}];")
    for eid in sorted(graph.edges):
        e = graph.edges[eid]
        lines.append(f"{indent}{prefix}{e.u} {conn} {prefix}{e.v}{_edge_attrs(e.label, e.port_u, e.port_v)};")
    return lines


def export_dot(obj: Graph | GraphGrammar) -> str:
    """DOT text for a graph, or for a grammar (one cluster per production plus the residual graph)."""
    if isinstance(obj, Graph):
        kind = "digraph" if obj.directed else "graph"
        return "\n".join([f"{kind} {{", *_graph_body(obj), "}"]) + "\n"

    grammar = obj
    types = grammar.types
    directed = grammar.residual.directed
    kind = "digraph" if directed else "graph"
    conn = "->" if directed else "--"
    lines = [f"{kind} {{", "  compound=true;"]
    for prod in grammar.productions:
        lhs = prod.lhs
        lines.append(f"  subgraph cluster_p{lhs} {{")
        lines.append(f"    label={_quote(f'{types.name(lhs)} (type {lhs})')};")
        for j, c in enumerate(prod.constituents):
            shape = "" if types.is_terminal(c) else ", shape=box"
            lines.append(f"    p{lhs}_{j} [label={_quote(types.name(c))}{shape}];")
        for be in prod.edges:
            lines.append(
                f"    p{lhs}_{be.a} {conn} p{lhs}_{be.b}{_edge_attrs(be.label, be.port_a, be.port_b)};"
            )
        lines.append("  }")
    lines.append("  subgraph cluster_residual {")
    lines.append('    label="residual";')
    lines += _graph_body(grammar.residual, prefix="r", indent="    ")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"

