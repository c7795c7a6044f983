import pytest
from hypothesis import strategies as st

from graphgram.generators import (
    cycle,
    demo_molecule,
    hex_grid,
    nested_tree,
    nucleotide_chain,
    path,
    random_graph,
    rect_grid,
    star_forest,
    two_triangles,
)
from graphgram.graph import construct_graph


@st.composite
def small_graphs(draw, max_nodes=9, max_edges=16, labels="AB", directed=None):
    n = draw(st.integers(1, max_nodes))
    node_labels = draw(st.lists(st.sampled_from(labels), min_size=n, max_size=n))
    is_directed = draw(st.booleans()) if directed is None else directed
    if n < 2:
        pairs = []
    else:
        pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
        pairs = draw(st.lists(pair, max_size=max_edges))
    return construct_graph(
        list(enumerate(node_labels)),
        [(u, v, None, is_directed) for u, v in pairs],
    )


def suite_graphs():
    """Named generator instances covering every kind, up to ~1000 nodes."""
    return {
        "two_triangles": two_triangles(),
        "demo_molecule": demo_molecule(),
        "path_AB_9": path(9),
        "path_ABC_60": path(60, "A,B,C"),
        "cycle_12": cycle(12),
        "cycle_AB_40": cycle(40, "A,B"),
        "rect_grid_6x6": rect_grid(6, 6),
        "rect_grid_30x30": rect_grid(30, 30),
        "hex_grid_5x5": hex_grid(5, 5),
        "nested_tree_d5": nested_tree(5),
        "nested_tree_d3_b4": nested_tree(3, 4),
        "star_forest_5x6": star_forest(5, 6),
        "star_forest_directed": star_forest(3, 4, directed=True),
        "nucleotide_chain_4": nucleotide_chain(4),
        "nucleotide_chain_16_loop": nucleotide_chain(16, loop=True),
        "nucleotide_chain_80": nucleotide_chain(80),
        "random_60": random_graph(60, p=0.08, seed=3, labels="A,B,C"),
        "random_1000": random_graph(1000, m=2500, seed=11, labels="C,N,O"),
    }


@pytest.fixture(scope="session")
def suite():
    return suite_graphs()


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return construct_graph([(i, None) for i in range(10)], outer + inner + spokes)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
