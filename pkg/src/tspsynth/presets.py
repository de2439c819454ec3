"""Named coupling graphs and the ``--graph`` argument parser.

``sun16`` and ``twosuns27`` are the public heavy-hex coupling maps of IBM's
16-qubit (ibmq_guadalupe) and 27-qubit (ibmq_mumbai and siblings) Falcon
devices: one or two 12-vertex cycles with pendant "tail" qubits.
"""

from __future__ import annotations

from pathlib import Path

from .graph import CouplingGraph, GraphError, parse_graph_text

SUN16_EDGES = (
    (0, 1), (1, 2), (1, 4), (2, 3), (3, 5), (4, 7), (5, 8), (6, 7),
    (7, 10), (8, 9), (8, 11), (10, 12), (11, 14), (12, 13), (12, 15), (13, 14),
)  # fmt: skip

TWOSUNS27_EDGES = SUN16_EDGES + (
    (14, 16), (15, 18), (16, 19), (17, 18), (18, 21), (19, 20), (19, 22), (21, 23),
    (22, 25), (23, 24), (24, 25), (25, 26),
)  # fmt: skip


def lnn(n: int) -> CouplingGraph:
    return CouplingGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> CouplingGraph:
    """Vertex 0 is the centre."""
    return CouplingGraph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> CouplingGraph:
    return CouplingGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> CouplingGraph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return CouplingGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def sun16() -> CouplingGraph:
    return CouplingGraph.from_edges(16, SUN16_EDGES)


def twosuns27() -> CouplingGraph:
    return CouplingGraph.from_edges(27, TWOSUNS27_EDGES)


FAMILIES = {"lnn": lnn, "star": star, "complete": complete, "cycle": cycle}
FIXED = {"sun16": sun16, "twosuns27": twosuns27}


def load_graph(spec: str) -> CouplingGraph:
    """``lnn:N``, ``star:N``, ``complete:N``, ``cycle:N``, ``sun16``, ``twosuns27`` or a file path."""
    if spec in FIXED:
        return FIXED[spec]()
    family, sep, size = spec.partition(":")
    if sep and family in FAMILIES:
        try:
            n = int(size)
        except ValueError:
            raise GraphError(f"bad size in graph spec {spec!r}") from None
        if n < 1:
            raise GraphError(f"graph size must be positive in {spec!r}")
        return FAMILIES[family](n)
    path = Path(spec)
    if not path.is_file():
        raise GraphError(f"unknown graph preset or missing file: {spec!r}")
    return parse_graph_text(path.read_text())
