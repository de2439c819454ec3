"""Coupling graphs, BFS shortest paths and the distance supergraph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

NULL = -1


class GraphError(ValueError):
    """Malformed or unusable coupling graph."""


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int, message: str | None = None):
        self.pair = (u, v)
        super().__init__(message or f"graph is disconnected: no path between vertices {u} and {v}")


@dataclass(frozen=True)
class CouplingGraph:
    """Undirected, unweighted, connected graph of physical qubits.

    Vertices are ``0..n-1``; ``edges`` holds each pair once as ``(low, high)``.
    Neighbor lists are sorted so every traversal is deterministic.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "CouplingGraph":
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        g = cls(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))
        _require_connected(g)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def induced(self, vertices: Iterable[int]) -> tuple["CouplingGraph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``, relabelled ``0..k-1`` in ascending order.

        Returns the subgraph and the label map ``local -> original``.
        Raises :class:`DisconnectedGraphError` (with original labels) if the
        induced subgraph is not connected.
        """
        labels = tuple(sorted(set(vertices)))
        if not labels:
            raise GraphError("induced subgraph needs at least one vertex")
        local = {v: i for i, v in enumerate(labels)}
        sub_edges = [(local[u], local[v]) for u, v in self.edges if u in local and v in local]
        try:
            sub = CouplingGraph.from_edges(len(labels), sub_edges)
        except DisconnectedGraphError as exc:
            a, b = exc.pair
            raise DisconnectedGraphError(
                labels[a],
                labels[b],
                f"active vertices are disconnected: vertex {labels[b]} is separated from {labels[a]}",
            ) from None
        return sub, labels


def _require_connected(g: CouplingGraph) -> None:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for r in g.adjacency[t]:
            if not seen[r]:
                seen[r] = True
                queue.append(r)
    for v in range(g.n):
        if not seen[v]:
            raise DisconnectedGraphError(0, v)


def parse_graph_text(text: str) -> CouplingGraph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphError("empty graph file")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    return CouplingGraph.from_edges(n, edges)


def format_graph_text(g: CouplingGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DistanceTables:
    """Hop distances ``W`` and BFS predecessors ``A`` (``A[v, u]`` precedes ``u`` on a
    shortest ``v -> u`` path; ``NULL`` on the diagonal)."""

    W: np.ndarray
    A: np.ndarray

    @property
    def n(self) -> int:
        return self.W.shape[0]


def shortest_paths(g: CouplingGraph) -> DistanceTables:
    n = g.n
    W = np.full((n, n), -1, dtype=np.int64)
    A = np.full((n, n), NULL, dtype=np.int64)
    for v in range(n):
        W[v, v] = 0
        queue = deque([v])
        while queue:
            t = queue.popleft()
            for r in g.adjacency[t]:
                if W[v, r] < 0:
                    A[v, r] = t
                    W[v, r] = W[v, t] + 1
                    queue.append(r)
    if (W < 0).any():
        v, u = (int(x) for x in np.argwhere(W < 0)[0])
        raise DisconnectedGraphError(v, u)
    W.flags.writeable = False
    A.flags.writeable = False
    return DistanceTables(W, A)


def get_path(t: DistanceTables, v: int, u: int) -> tuple[int, ...]:
    """Shortest path ``v -> u`` inclusive of both ends; ``(v,)`` when ``v == u``."""
    if v == u:
        return (v,)
    return (v,) + get_path_no_first(t, v, u)


def get_path_no_first(t: DistanceTables, v: int, u: int) -> tuple[int, ...]:
    if v == u:
        return ()
    path = [u]
    p = int(t.A[v, u])
    while p != v:
        path.append(p)
        p = int(t.A[v, p])
    path.reverse()
    return tuple(path)


@dataclass(frozen=True)
class Supergraph:
    """Complete metric graph whose edge weights are coupling-graph distances."""

    tables: DistanceTables

    @property
    def n(self) -> int:
        return self.tables.n

    @property
    def weight(self) -> np.ndarray:
        return self.tables.W

    def w(self, u: int, v: int) -> int:
        return int(self.tables.W[u, v])


def build_supergraph(g: CouplingGraph) -> Supergraph:
    return Supergraph(shortest_paths(g))


@dataclass(frozen=True)
class Walk:
    """Vertex sequence with consecutive adjacency; repeats allowed."""

    vertices: tuple[int, ...]
    closed: bool = False

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a walk has at least one vertex")
        if self.closed and self.vertices[0] != self.vertices[-1]:
            raise ValueError("closed walk must end where it starts")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def reversed(self) -> "Walk":
        return Walk(self.vertices[::-1], self.closed)

    def is_valid_in(self, g: CouplingGraph) -> bool:
        return all(g.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    def covers(self, vertices: Iterable[int]) -> bool:
        return set(vertices) <= set(self.vertices)

    @property
    def stay_count(self) -> int:
        """Positions ``j`` with ``walk[j] == walk[j + 2]``."""
        v = self.vertices
        return sum(1 for j in range(len(v) - 2) if v[j] == v[j + 2])
