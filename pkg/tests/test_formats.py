import pydot
import pytest
from hypothesis import given, settings

from graphgram.errors import DanglingEndpoint, MixedDirectedness, ParseError, UnresolvedConect
from graphgram.formats import export_dot, parse_edge_list, parse_pdb_subset, serialize_edge_list
from graphgram.generators import demo_molecule, nucleotide_chain, star_forest
from graphgram.graph import construct_graph, edge_multiset, same_graph
from graphgram.induction import induce

from .conftest import small_graphs


def atom(serial, name, element, record="ATOM"):
    line = f"{record:<6}{serial:5d} {name:<4} DG  A   1      0.000   0.000   0.000  1.00  0.00"
    return f"{line:<76}{element:>2}"


def conect(*serials):
    return "CONECT" + "".join(f"{s:5d}" for s in serials)


def test_parse_simple_edge_list():
    g = parse_edge_list("node 1 A\nnode 2 B\nedge 1 2\n")
    assert (g.num_nodes, g.num_edges, g.directed) == (2, 1, False)


def test_parse_comments_blank_lines_and_defaults():
    g = parse_edge_list("# header\n\nnode 1\nnode 2   # trailing\nedge 2 1 bond\n")
    assert {g.type_name(n) for n in g.nodes} == {"n"}
    assert g.edges[0].label == "bond"


def test_directed_marker():
    g = parse_edge_list("node 1 A\nnode 2 B\nedge 1 2 reg >\n")
    (e,) = g.edges.values()
    assert e.directed and e.label == "reg" and (e.u, e.v) == (1, 2)


def test_undeclared_node():
    with pytest.raises(DanglingEndpoint):
        parse_edge_list("edge 1 2\n")


def test_mixed_modes():
    with pytest.raises(MixedDirectedness):
        parse_edge_list("node 1\nnode 2\nnode 3\nedge 1 2 >\nedge 2 3\n")


@pytest.mark.parametrize("text", ["vertex 1\n", "node x A\n", "node 1 A B\n", "node 1\nedge 1\n"])
def test_syntax_errors(text):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line is not None


@settings(max_examples=150, deadline=None)
@given(small_graphs(labels="ABC"))
def test_edge_list_round_trip(g):
    text = serialize_edge_list(g)
    back = parse_edge_list(text)
    assert same_graph(back, g)
    assert serialize_edge_list(back) == text


def test_pdb_two_atoms():
    text = "\n".join([atom(1, "C1'", "C"), atom(2, "O4'", "O"), conect(1, 2)])
    g = parse_pdb_subset(text)
    assert (g.num_nodes, g.num_edges) == (2, 1)
    assert {g.type_name(n) for n in g.nodes} == {"C", "O"}
    assert g.nodes[1].provenance == "C1'"


def methane():
    return [atom(1, "C", "C")] + [atom(i, f"H{i}", "H") for i in range(2, 6)] + [conect(1, 2, 3, 4, 5)]


def test_pdb_strip_hydrogen():
    g = parse_pdb_subset("\n".join(methane()), strip_elements={"H"})
    assert (g.num_nodes, g.num_edges) == (1, 0)


def test_pdb_duplicate_conect_collapses():
    text = "\n".join([atom(1, "C", "C"), atom(2, "N", "N"), conect(1, 2), conect(2, 1)])
    assert parse_pdb_subset(text).num_edges == 1


def test_pdb_record_order_irrelevant():
    lines = methane() + [conect(2, 1)]
    a = parse_pdb_subset("\n".join(lines))
    b = parse_pdb_subset("\n".join(reversed(lines)))
    assert same_graph(a, b)
    assert serialize_edge_list(a) == serialize_edge_list(b)


def test_pdb_close_loop():
    text = "\n".join([atom(1, "P", "P"), atom(2, "C", "C"), atom(3, "O3'", "O"), conect(1, 2), conect(2, 3)])
    g = parse_pdb_subset(text, close_loop=[(3, 1)])
    assert g.num_edges == 3
    with pytest.raises(UnresolvedConect):
        parse_pdb_subset(text, close_loop=[(3, 9)])


def test_pdb_unresolved_conect():
    with pytest.raises(UnresolvedConect):
        parse_pdb_subset("\n".join([atom(1, "C", "C"), conect(1, 7)]))


def test_pdb_element_from_atom_name():
    line = f"HETATM{3:5d} N7   DG  A   1"
    g = parse_pdb_subset(line)
    assert g.type_name(3) == "N"


def test_pdb_malformed_serial():
    with pytest.raises(ParseError):
        parse_pdb_subset("ATOM  abcde C    DG")


def test_dot_small_graph():
    g = parse_edge_list("node 1 A\nnode 2 B\nedge 1 2\n")
    dot = export_dot(g)
    assert " ".join(dot.split()) == 'graph { 1 [label="A"]; 2 [label="B"]; 1 -- 2; }'


def test_dot_directed():
    dot = export_dot(star_forest(1, 2, directed=True))
    assert dot.startswith("digraph") and "0 -> 1;" in dot


def test_dot_empty():
    assert " ".join(export_dot(construct_graph([], [])).split()) == "graph { }"


def _parses(dot: str):
    graphs = pydot.graph_from_dot_data(dot)
    assert graphs and len(graphs) == 1
    return graphs[0]


@pytest.mark.parametrize("source", [demo_molecule, lambda: nucleotide_chain(4), lambda: star_forest(2, 3, True)])
def test_dot_is_valid(source):
    g = source()
    parsed = _parses(export_dot(g))
    assert len(parsed.get_edges()) == g.num_edges
    grammar = induce(g).grammar
    parsed = _parses(export_dot(grammar))
    clusters = [s.get_name() for s in parsed.get_subgraphs()]
    assert len(clusters) == len(grammar.productions) + 1
    assert export_dot(grammar) == export_dot(grammar)


def test_dot_marks_hyper_nodes():
    dot = export_dot(induce(demo_molecule()).grammar.residual)
    assert "shape=box" in dot
