"""Graph grammars: productions, expansion, description length, inlining, depth.

A production defines a non-terminal as a small body graph: an ordered list of
constituent types plus the edges joining them. Freshly induced productions have
two constituents and one edge; inlining splices single-use bodies into their
parent. A hyper-node's ports enumerate the terminal leaves of its body in
constituent order, so port ``p`` of the parent falls on the constituent whose
leaf range covers ``p``.

The grammar also keeps a derivation table: for every hyper-node instance, the
ids of the nodes it replaced. That is what lets expansion restore the input's
node ids exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple

from .errors import DanglingPort, ParseError, UndefinedNonTerminal, UnknownType
from .graph import Graph, Port, TypeTable


@dataclass(frozen=True)
class BodyEdge:
    """Edge inside a production body, between constituent indices ``a`` and ``b``."""

    a: int
    port_a: Port
    b: int
    port_b: Port
    label: str
    directed: bool


@dataclass(frozen=True)
class Production:
    lhs: int
    constituents: tuple[int, ...]
    edges: tuple[BodyEdge, ...]

    def size(self) -> int:
        return len(self.constituents) + len(self.edges)


@dataclass
class GraphGrammar:
    types: TypeTable
    productions: list[Production]
    residual: Graph
    # hyper-node id -> (type id, ids of the nodes it replaced, one per constituent)
    derivation: dict[int, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def production_map(self) -> dict[int, Production]:
        return {p.lhs: p for p in self.productions}

    def copy(self) -> GraphGrammar:
        residual = self.residual.copy()
        return GraphGrammar(residual.types, list(self.productions), residual, dict(self.derivation))


class DescriptionLength(NamedTuple):
    nodes: int
    edges: int
    productions: int
    total: int


def locate_port(types: TypeTable, production: Production, port: int) -> tuple[int, Port]:
    """Map a port of ``production.lhs`` to ``(constituent index, port on that constituent)``."""
    offset = 0
    for j, ctype in enumerate(production.constituents):
        width = types.port_count(ctype)
        if port < offset + width:
            return j, (None if types.is_terminal(ctype) else port - offset)
        offset += width
    raise DanglingPort(f"port {port} out of range for type {production.lhs}")


def constituent_offset(types: TypeTable, production: Production, index: int) -> int:
    return sum(types.port_count(c) for c in production.constituents[:index])


def _descend(grammar: GraphGrammar, prods: dict[int, Production], node_id: int, type_id: int, port: Port) -> int:
    types = grammar.types
    while not types.is_terminal(type_id):
        prod = prods.get(type_id)
        if prod is None:
            raise UndefinedNonTerminal(f"type {type_id} has no production")
        if port is None or not 0 <= port < types.port_count(type_id):
            raise DanglingPort(f"port {port} invalid on hyper-node {node_id}")
        record = grammar.derivation.get(node_id)
        if record is None or record[0] != type_id:
            raise DanglingPort(f"no derivation record for hyper-node {node_id}")
        j, port = locate_port(types, prod, port)
        node_id, type_id = record[1][j], prod.constituents[j]
    if port is not None:
        raise DanglingPort(f"terminal node {node_id} given port {port}")
    return node_id


def expand(grammar: GraphGrammar) -> Graph:
    """Replace every hyper-node by its body, recursively, yielding a terminal graph."""
    types = grammar.types
    prods = grammar.production_map()
    residual = grammar.residual

    out_types = TypeTable()
    for entry in types:
        if entry.terminal:
            out_types.terminal(entry.name, type_id=entry.id)
    out = Graph(types=out_types, directed=residual.directed)

    hyper: list[tuple[int, int]] = []
    stack = [(nid, residual.nodes[nid].type) for nid in sorted(residual.nodes, reverse=True)]
    while stack:
        nid, tid = stack.pop()
        if tid not in types:
            raise UndefinedNonTerminal(f"unknown type {tid} on node {nid}")
        if types.is_terminal(tid):
            out.add_node(tid, node_id=nid)
            continue
        prod = prods.get(tid)
        if prod is None:
            raise UndefinedNonTerminal(f"type {tid} has no production")
        record = grammar.derivation.get(nid)
        if record is None or record[0] != tid or len(record[1]) != len(prod.constituents):
            raise DanglingPort(f"no derivation record for hyper-node {nid}")
        hyper.append((nid, tid))
        for part, ctype in reversed(list(zip(record[1], prod.constituents))):
            stack.append((part, ctype))

    for nid, tid in hyper:
        prod = prods[tid]
        parts = grammar.derivation[nid][1]
        for be in prod.edges:
            u = _descend(grammar, prods, parts[be.a], prod.constituents[be.a], be.port_a)
            v = _descend(grammar, prods, parts[be.b], prod.constituents[be.b], be.port_b)
            out.add_edge(u, v, be.label)
    for eid in sorted(residual.edges):
        e = residual.edges[eid]
        u = _descend(grammar, prods, e.u, residual.nodes[e.u].type, e.port_u)
        v = _descend(grammar, prods, e.v, residual.nodes[e.v].type, e.port_v)
        out.add_edge(u, v, e.label)
    return out


def description_length(grammar: GraphGrammar) -> DescriptionLength:
    """Unit-cost size: residual nodes + residual edges + every production's constituents and edges."""
    nodes = grammar.residual.num_nodes
    edges = grammar.residual.num_edges
    body = sum(p.size() for p in grammar.productions)
    return DescriptionLength(nodes, edges, len(grammar.productions), nodes + edges + body)


def graph_description_length(graph: Graph) -> int:
    return graph.num_nodes + graph.num_edges


def reference_counts(grammar: GraphGrammar) -> dict[int, int]:
    refs = {p.lhs: 0 for p in grammar.productions}
    for p in grammar.productions:
        for c in p.constituents:
            if c in refs:
                refs[c] += 1
    for node in grammar.residual.nodes.values():
        if node.type in refs:
            refs[node.type] += 1
    return refs


def _splice(types: TypeTable, parent: Production, j: int, child: Production) -> Production:
    shift = len(child.constituents) - 1

    def remap(idx: int, port: Port) -> tuple[int, Port]:
        if idx < j:
            return idx, port
        if idx > j:
            return idx + shift, port
        k, local = locate_port(types, child, port)
        return j + k, local

    edges = []
    for be in parent.edges:
        a, pa = remap(be.a, be.port_a)
        b, pb = remap(be.b, be.port_b)
        edges.append(replace(be, a=a, port_a=pa, b=b, port_b=pb))
    # child's edges go in the parent's index space
    for be in child.edges:
        edges.append(replace(be, a=be.a + j, b=be.b + j))
    constituents = parent.constituents[:j] + child.constituents + parent.constituents[j + 1 :]
    return Production(parent.lhs, constituents, tuple(edges))


def inline_single_use(grammar: GraphGrammar) -> GraphGrammar:
    """Merge every non-terminal referenced once, from inside another body, into that body."""
    g = grammar.copy()
    while True:
        refs = reference_counts(g)
        target = None
        for pi, prod in enumerate(g.productions):
            for j, c in enumerate(prod.constituents):
                if refs.get(c) == 1:
                    target = (pi, j, c)
                    break
            if target:
                break
        if target is None:
            return g

        pi, j, child_type = target
        parent = g.productions[pi]
        child = next(p for p in g.productions if p.lhs == child_type)
        g.productions[pi] = _splice(g.types, parent, j, child)
        g.productions = [p for p in g.productions if p.lhs != child_type]

        for hid, (tid, parts) in list(g.derivation.items()):
            if tid != parent.lhs:
                continue
            inner = parts[j]
            inner_type, inner_parts = g.derivation.pop(inner)
            assert inner_type == child_type
            g.derivation[hid] = (tid, parts[:j] + inner_parts + parts[j + 1 :])
        g.types.remove(child_type)


def hierarchy_depth(grammar: GraphGrammar, type_id: int) -> int:
    """0 for terminals, otherwise 1 + the deepest constituent."""
    if type_id not in grammar.types:
        raise UnknownType(type_id)
    prods = grammar.production_map()
    memo: dict[int, int] = {}
    stack = [type_id]
    while stack:
        t = stack[-1]
        if t in memo:
            stack.pop()
            continue
        if grammar.types.is_terminal(t):
            memo[t] = 0
            stack.pop()
            continue
        if t not in prods:
            raise UndefinedNonTerminal(f"type {t} has no production")
        pending = [c for c in prods[t].constituents if c not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[t] = 1 + max(memo[c] for c in prods[t].constituents)
            stack.pop()
    return memo[type_id]


def leaf_nodes(grammar: GraphGrammar, node_id: int) -> frozenset[int]:
    """Input node ids a residual or intermediate hyper-node stands for."""
    out, stack = set(), [node_id]
    while stack:
        n = stack.pop()
        record = grammar.derivation.get(n)
        if record is None:
            out.add(n)
        else:
            stack.extend(record[1])
    return frozenset(out)


def max_hierarchy_depth(grammar: GraphGrammar) -> int:
    return max((hierarchy_depth(grammar, p.lhs) for p in grammar.productions), default=0)


# -- text format -------------------------------------------------------------


def _end(idx: int, port: Port) -> str:
    return str(idx) if port is None else f"{idx}.{port}"


def _parse_end(token: str, lineno: int) -> tuple[int, Port]:
    try:
        if "." in token:
            a, b = token.split(".", 1)
            return int(a), int(b)
        return int(token), None
    except ValueError:
        raise ParseError(f"bad endpoint {token!r}", lineno) from None


def serialize_grammar(grammar: GraphGrammar) -> str:
    """Deterministic line-oriented text; see :func:`parse_grammar`."""
    types = grammar.types
    res = grammar.residual
    lines = [f"G {'d' if res.directed else 'u'}"]
    entries = list(types)
    lines += [f"T {e.id} {e.name}" for e in entries if e.terminal]
    lines += [f"N {e.id} {e.name}" for e in entries if not e.terminal]
    for p in grammar.productions:
        consts = " ".join(f"{c}:{types.port_count(c)}" for c in p.constituents)
        edges = " ".join(
            f"{_end(be.a, be.port_a)} {_end(be.b, be.port_b)} {be.label} {'d' if be.directed else 'u'}"
            for be in p.edges
        )
        lines.append(f"P {p.lhs} | {consts} | {edges}".rstrip())
    for hid in sorted(grammar.derivation):
        tid, parts = grammar.derivation[hid]
        lines.append(f"H {hid} {tid} " + " ".join(map(str, parts)))
    for nid in sorted(res.nodes):
        lines.append(f"V {nid} {res.nodes[nid].type}")
    for eid in sorted(res.edges):
        e = res.edges[eid]
        lines.append(f"E {_end(e.u, e.port_u)} {_end(e.v, e.port_v)} {e.label} {'d' if e.directed else 'u'}")
    return "\n".join(lines) + "\n"


def parse_grammar(text: str) -> GraphGrammar:
    types = TypeTable()
    directed = False
    names: dict[int, tuple[str, int]] = {}
    raw_prods: list[tuple[int, list[tuple[int, int]], list[BodyEdge], int]] = []
    derivation: dict[int, tuple[int, tuple[int, ...]]] = {}
    nodes: list[tuple[int, int, int]] = []
    edges: list[tuple[tuple[int, Port], tuple[int, Port], str, bool, int]] = []

    def flag(tok: str, lineno: int) -> bool:
        if tok not in ("d", "u"):
            raise ParseError(f"expected d or u, got {tok!r}", lineno)
        return tok == "d"

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split(None, 1)
        body = rest[0] if rest else ""
        try:
            if tag == "G":
                directed = flag(body.strip(), lineno)
            elif tag == "T":
                tid, label = body.split()
                types.terminal(label, type_id=int(tid))
            elif tag == "N":
                tid, name = body.split()
                names[int(tid)] = (name, lineno)
            elif tag == "P":
                sections = [s.strip() for s in body.split("|")]
                if len(sections) != 3:
                    raise ParseError("production needs 3 '|'-separated sections", lineno)
                consts = []
                for tok in sections[1].split():
                    c, pc = tok.split(":")
                    consts.append((int(c), int(pc)))
                toks = sections[2].split()
                if len(toks) % 4:
                    raise ParseError("production edges need 4 tokens each", lineno)
                bes = []
                for i in range(0, len(toks), 4):
                    a, pa = _parse_end(toks[i], lineno)
                    b, pb = _parse_end(toks[i + 1], lineno)
                    bes.append(BodyEdge(a, pa, b, pb, toks[i + 2], flag(toks[i + 3], lineno)))
                raw_prods.append((int(sections[0]), consts, bes, lineno))
            elif tag == "H":
                hid, tid, *parts = map(int, body.split())
                derivation[hid] = (tid, tuple(parts))
            elif tag == "V":
                nid, tid = map(int, body.split())
                nodes.append((nid, tid, lineno))
            elif tag == "E":
                u, v, label, d = body.split()
                edges.append((_parse_end(u, lineno), _parse_end(v, lineno), label, flag(d, lineno), lineno))
            else:
                raise ParseError(f"unknown record {tag!r}", lineno)
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None

    productions = []
    for lhs, consts, bes, lineno in raw_prods:
        if lhs not in names:
            raise ParseError(f"production for undeclared non-terminal {lhs}", lineno)
        for c, pc in consts:
            if c not in types:
                raise UndefinedNonTerminal(f"line {lineno}: constituent type {c} not defined earlier")
            if types.port_count(c) != pc:
                raise ParseError(f"port count {pc} for type {c} disagrees with its definition", lineno)
        types.add_nonterminal(names[lhs][0], sum(pc for _, pc in consts), type_id=lhs)
        productions.append(Production(lhs, tuple(c for c, _ in consts), tuple(bes)))
    for tid, (_, lineno) in names.items():
        if tid not in types:
            raise UndefinedNonTerminal(f"line {lineno}: non-terminal {tid} has no production")

    residual = Graph(types=types, directed=directed)
    for nid, tid, lineno in nodes:
        if tid not in types:
            raise UndefinedNonTerminal(f"line {lineno}: unknown type {tid}")
        residual.add_node(tid, node_id=nid)
    for (u, pu), (v, pv), label, d, lineno in edges:
        if d != directed:
            raise ParseError("edge directedness disagrees with header", lineno)
        try:
            residual.add_edge(u, v, label, pu, pv)
        except Exception as exc:
            raise ParseError(str(exc), lineno) from None
    ids = list(residual.nodes) + list(derivation) + [p for _, parts in derivation.values() for p in parts]
    residual.next_node_id = max(ids, default=-1) + 1
    return GraphGrammar(types, productions, residual, derivation)
