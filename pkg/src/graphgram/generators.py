"""Deterministic synthetic graph families."""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import InvalidParameters
from .graph import Graph, construct_graph

# Nucleotide proxy unit. Backbone: a five-membered sugar ring (C1' C2' C3' C4' O4')
# with C5' and a phosphate hanging off C4'. Bases: a five-ring attached to C1' by N.
BACKBONE_LABELS = ("C", "C", "C", "C", "O", "C", "P")
BACKBONE_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (5, 6))
BASE_VARIANTS = (("N", "C", "N", "C", "C"), ("N", "C", "O", "C", "C"))
BASE_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))
BASE_ANCHOR = 0  # sugar C1'
LINK_FROM, LINK_TO = 2, 6  # C3' of unit i -> P of unit i+1
UNIT_SIZE = len(BACKBONE_LABELS) + len(BASE_VARIANTS[0])


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise InvalidParameters(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def _labels(labels: Sequence[str] | str) -> tuple[str, ...]:
    if isinstance(labels, str):
        labels = labels.split(",")
    labels = tuple(labels)
    if not labels:
        raise InvalidParameters("at least one label is required")
    return labels


def two_triangles(label: str = "n") -> Graph:
    """Two triangles joined by one bridge edge: 6 nodes, 7 edges."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    return construct_graph([(i, label) for i in range(6)], edges)


def demo_molecule() -> Graph:
    """Small C/H molecule with edge kinds C-C (1), C-H (4) and H-H (1)."""
    names = ["C1", "C2", "H1", "H2", "H3", "H4"]
    nodes = [(i, name[0], name) for i, name in enumerate(names)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3)]
    return construct_graph(nodes, edges)


def path(n: int, labels: Sequence[str] | str = ("A", "B")) -> Graph:
    """Path with ``n`` edges; node ``i`` gets ``labels[i % len(labels)]``."""
    _positive("n", n)
    labels = _labels(labels)
    return construct_graph(
        [(i, labels[i % len(labels)]) for i in range(n + 1)],
        [(i, i + 1) for i in range(n)],
    )


def cycle(n: int, labels: Sequence[str] | str = ("n",)) -> Graph:
    _positive("n", n, 3)
    labels = _labels(labels)
    return construct_graph(
        [(i, labels[i % len(labels)]) for i in range(n)],
        [(i, (i + 1) % n) for i in range(n)],
    )


def rect_grid(rows: int, cols: int, label: str = "n") -> Graph:
    _positive("rows", rows)
    _positive("cols", cols)
    nodes = [(r * cols + c, label) for r in range(rows) for c in range(cols)]
    edges = []
    for r in range(rows):
        for c in range(cols):
            i = r * cols + c
            if c + 1 < cols:
                edges.append((i, i + 1))
            if r + 1 < rows:
                edges.append((i, i + cols))
    return construct_graph(nodes, edges)


def hex_grid(rows: int, cols: int, label: str = "n") -> Graph:
    """Honeycomb as a brick wall: ``rows`` x ``cols`` hexagons."""
    _positive("rows", rows)
    _positive("cols", cols)
    width = 2 * cols + 2
    nodes = [(r * width + j, label) for r in range(rows + 1) for j in range(width)]
    edges = []
    for r in range(rows + 1):
        for j in range(width - 1):
            edges.append((r * width + j, r * width + j + 1))
        if r < rows:
            for j in range(width):
                if (j + r) % 2 == 0:
                    edges.append((r * width + j, (r + 1) * width + j))
    return construct_graph(nodes, edges)


def nested_tree(depth: int, branching: int = 2, label: str = "n") -> Graph:
    """Complete ``branching``-ary tree of the given depth."""
    _positive("depth", depth)
    _positive("branching", branching, 2)
    nodes = [(0, label)]
    edges = []
    frontier = [0]
    for _ in range(depth):
        nxt = []
        for parent in frontier:
            for _ in range(branching):
                child = len(nodes)
                nodes.append((child, label))
                edges.append((parent, child))
                nxt.append(child)
        frontier = nxt
    return construct_graph(nodes, edges)


def star_forest(k: int, m: int, directed: bool = False, label: str = "n") -> Graph:
    """``k`` disjoint stars, hub ``h`` at id ``h*(m+1)`` followed by its ``m`` leaves."""
    _positive("k", k)
    _positive("m", m)
    nodes, edges = [], []
    for h in range(k):
        hub = h * (m + 1)
        nodes.append((hub, label))
        for leaf in range(hub + 1, hub + m + 1):
            nodes.append((leaf, label))
            edges.append((hub, leaf, None, directed))
    return construct_graph(nodes, edges)


def nucleotide_chain(n: int, loop: bool = False) -> Graph:
    """``n`` nucleotide proxy units, bases alternating between two variants.

    Unit ``i`` occupies ids ``[i*UNIT_SIZE, (i+1)*UNIT_SIZE)``: backbone first,
    then the base. Backbones are chained C3' -> P; ``loop`` also links the last
    unit back to the first.
    """
    _positive("n", n)
    if loop and n < 3:
        raise InvalidParameters("a closed chain needs at least 3 units")
    nodes, edges = [], []
    nb = len(BACKBONE_LABELS)
    for i in range(n):
        off = i * UNIT_SIZE
        base = BASE_VARIANTS[i % len(BASE_VARIANTS)]
        nodes += [(off + j, lab) for j, lab in enumerate(BACKBONE_LABELS)]
        nodes += [(off + nb + j, lab) for j, lab in enumerate(base)]
        edges += [(off + a, off + b) for a, b in BACKBONE_EDGES]
        edges += [(off + nb + a, off + nb + b) for a, b in BASE_EDGES]
        edges.append((off + BASE_ANCHOR, off + nb))
    links = n if loop else n - 1
    for i in range(links):
        j = (i + 1) % n
        edges.append((i * UNIT_SIZE + LINK_FROM, j * UNIT_SIZE + LINK_TO))
    return construct_graph(nodes, edges)


def unit_parts(n: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Node id sets ``(backbone, base)`` of each unit of ``nucleotide_chain(n)``."""
    nb = len(BACKBONE_LABELS)
    out = []
    for i in range(n):
        off = i * UNIT_SIZE
        out.append((frozenset(range(off, off + nb)), frozenset(range(off + nb, off + UNIT_SIZE))))
    return out


def random_graph(
    n: int,
    p: float | None = None,
    seed: int = 0,
    labels: Sequence[str] | str = ("n",),
    m: int | None = None,
) -> Graph:
    """Seeded random simple graph: G(n, p), or exactly ``m`` edges when ``m`` is given."""
    _positive("n", n)
    labels = _labels(labels)
    rng = _random.Random(seed)
    nodes = [(i, labels[rng.randrange(len(labels))]) for i in range(n)]
    if m is not None:
        if p is not None:
            raise InvalidParameters("give either p or m, not both")
        max_edges = n * (n - 1) // 2
        if not 0 <= m <= max_edges:
            raise InvalidParameters(f"m must lie in [0, {max_edges}]")
        chosen: set[tuple[int, int]] = set()
        while len(chosen) < m:
            u, v = rng.sample(range(n), 2) if n > 1 else (0, 0)
            chosen.add((min(u, v), max(u, v)))
        edges = sorted(chosen)
    else:
        if p is None or not 0.0 <= p <= 1.0:
            raise InvalidParameters(f"p must lie in [0, 1], got {p!r}")
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return construct_graph(nodes, edges)


GENERATORS: dict[str, Callable[..., Graph]] = {
    "two_triangles": two_triangles,
    "demo_molecule": demo_molecule,
    "path": path,
    "cycle": cycle,
    "rect_grid": rect_grid,
    "hex_grid": hex_grid,
    "nested_tree": nested_tree,
    "star_forest": star_forest,
    "nucleotide_chain": nucleotide_chain,
    "random": random_graph,
}


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)


def generate(spec: GeneratorSpec) -> Graph:
    try:
        fn = GENERATORS[spec.kind]
    except KeyError:
        raise InvalidParameters(f"unknown generator kind {spec.kind!r}") from None
    try:
        return fn(**spec.params)
    except TypeError as exc:
        raise InvalidParameters(f"{spec.kind}: {exc}") from None
