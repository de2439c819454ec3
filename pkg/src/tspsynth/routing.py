"""Shortest covering walks through the supergraph TSP reduction.

Exact routing is a Held-Karp dynamic program over subsets of the active
vertices; the heuristic is first-improvement 2-opt. Either tour is turned into
a concrete walk in the coupling graph by expanding every supergraph hop into a
shortest path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import (
    CouplingGraph,
    DistanceTables,
    Supergraph,
    Walk,
    build_supergraph,
    get_path_no_first,
)

DEFAULT_EXACT_CAP = 20
ROUTERS = ("exact", "two_opt")

_INF = np.int32(10**8)


class ExactRouterInfeasible(ValueError):
    pass


@dataclass(frozen=True)
class TspTour:
    order: tuple[int, ...]
    kind: str  # "path" | "fixed_start" | "cycle"
    weight: int
    improvements: int = 0  # 2-opt moves applied; 0 for exact tours

    @property
    def closed(self) -> bool:
        return self.kind == "cycle"


def _active(s: Supergraph, active: Iterable[int] | None) -> list[int]:
    verts = sorted(set(range(s.n) if active is None else active))
    if not verts:
        raise ValueError("active set is empty")
    for v in verts:
        if not 0 <= v < s.n:
            raise ValueError(f"active vertex {v} out of range")
    return verts


def tour_weight(w, order: tuple[int, ...] | list[int], closed: bool) -> int:
    total = sum(int(w[a][b]) for a, b in zip(order, order[1:]))
    if closed and len(order) > 1:
        total += int(w[order[-1]][order[0]])
    return total


def _suffix_table(w: np.ndarray, base: np.ndarray) -> np.ndarray:
    """``f[mask, v]`` = cheapest path starting at ``v`` that visits exactly ``mask``.

    ``base[v]`` is the cost charged when the path ends at ``v`` (zero for open
    paths, the closing edge for cycles).
    """
    m = w.shape[0]
    size = 1 << m
    f = np.full((size, m), _INF, dtype=np.int32)
    for v in range(m):
        f[1 << v, v] = base[v]
    if m == 1:
        return f
    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int8)
    for v in range(m):
        popcount += ((masks >> v) & 1).astype(np.int8)
    w32 = w.astype(np.int32)
    for layer in range(2, m + 1):
        layer_masks = masks[popcount == layer]
        for v in range(m):
            sel = layer_masks[(layer_masks >> v) & 1 == 1]
            cand = f[sel ^ (1 << v)] + w32[v][None, :]
            f[sel, v] = cand.min(axis=1)
    return f


def _reconstruct(f: np.ndarray, w: np.ndarray, first: int) -> list[int]:
    m = w.shape[0]
    mask = (1 << m) - 1
    order = [first]
    cur = first
    while True:
        rest = mask ^ (1 << cur)
        if not rest:
            return order
        target = f[mask, cur]
        for u in range(m):
            if rest >> u & 1 and int(w[cur, u]) + int(f[rest, u]) == target:
                break
        else:  # pragma: no cover - table inconsistency
            raise RuntimeError("Held-Karp reconstruction failed")
        order.append(u)
        mask, cur = rest, u


def _check_cap(k: int, cap: int) -> None:
    if k > cap:
        raise ExactRouterInfeasible(
            f"exact router infeasible for {k} active vertices (cap {cap}); use the two_opt router"
        )


def tsp_path_exact(s: Supergraph, active: Iterable[int] | None = None, cap: int = DEFAULT_EXACT_CAP) -> TspTour:
    """Minimum-weight Hamiltonian path over the active vertices.

    Among optimal paths the lexicographically smallest vertex sequence wins.
    """
    verts = _active(s, active)
    _check_cap(len(verts), cap)
    w = s.weight[np.ix_(verts, verts)]
    f = _suffix_table(w, np.zeros(len(verts), dtype=np.int32))
    full = f[-1]
    first = int(np.argmin(full))  # argmin returns the smallest index among ties
    order = tuple(verts[i] for i in _reconstruct(f, w, first))
    return TspTour(order, "path", int(full[first]))


def tsp_path_exact_fixed_start(
    s: Supergraph, active: Iterable[int] | None, start: int, cap: int = DEFAULT_EXACT_CAP
) -> TspTour:
    verts = _active(s, active)
    if start not in verts:
        raise ValueError(f"start vertex {start} is not active")
    _check_cap(len(verts), cap)
    w = s.weight[np.ix_(verts, verts)]
    f = _suffix_table(w, np.zeros(len(verts), dtype=np.int32))
    first = verts.index(start)
    order = tuple(verts[i] for i in _reconstruct(f, w, first))
    return TspTour(order, "fixed_start", int(f[-1, first]))


def tsp_cycle_exact(s: Supergraph, active: Iterable[int] | None = None, cap: int = DEFAULT_EXACT_CAP) -> TspTour:
    """Minimum-weight Hamiltonian cycle, written from the smallest active vertex."""
    verts = _active(s, active)
    _check_cap(len(verts), cap)
    w = s.weight[np.ix_(verts, verts)]
    f = _suffix_table(w, w[:, 0].astype(np.int32))
    order = tuple(verts[i] for i in _reconstruct(f, w, 0))
    return TspTour(order, "cycle", int(f[-1, 0]))


def _two_opt(w: list[list[int]], order: list[int], closed: bool) -> int:
    """First-improvement 2-opt in place; returns the number of moves applied.

    Candidate pairs are scanned with ``k`` outer and ``j`` inner, restarting
    after every improvement. Open paths never move their first vertex; their
    free end acts as an edge of weight zero, so a move may reverse the whole
    suffix after position ``k`` (replacing edge ``(a, b)`` by ``(a, end)``).
    """
    n = len(order)
    moves = 0
    if n < 3:
        return moves
    k_end = n - 1 if closed else n - 2
    improved = True
    while improved:
        improved = False
        for k in range(k_end):
            a, b = order[k], order[k + 1]
            for j in range(k + 1, n):
                c = order[j]
                if closed or j + 1 < n:
                    d = order[(j + 1) % n]
                    gain = w[a][b] + w[c][d] - w[a][c] - w[b][d]
                else:
                    gain = w[a][b] - w[a][c]
                if gain > 0:
                    order[k + 1 : j + 1] = order[k + 1 : j + 1][::-1]
                    moves += 1
                    improved = True
                    break
            if improved:
                break
    return moves


def two_opt_cycle(s: Supergraph, active: Iterable[int] | None = None) -> TspTour:
    verts = _active(s, active)
    w = s.weight.tolist()
    order = list(verts)
    moves = _two_opt(w, order, closed=True)
    return TspTour(tuple(order), "cycle", tour_weight(w, order, True), moves)


def two_opt_path(s: Supergraph, active: Iterable[int] | None = None, start: int | None = None) -> TspTour:
    """2-opt Hamiltonian path; with ``start=None`` every start is tried.

    The initial order is the start followed by the remaining active vertices
    ascending. Across starts the lightest tour wins, ties going to the
    lexicographically smallest order.
    """
    verts = _active(s, active)
    w = s.weight.tolist()
    if start is not None:
        if start not in verts:
            raise ValueError(f"start vertex {start} is not active")
        starts = [start]
    else:
        starts = verts
    best: TspTour | None = None
    for v in starts:
        order = [v] + [u for u in verts if u != v]
        moves = _two_opt(w, order, closed=False)
        tour = TspTour(tuple(order), "path" if start is None else "fixed_start", tour_weight(w, order, False), moves)
        if best is None or (tour.weight, tour.order) < (best.weight, best.order):
            best = tour
    assert best is not None
    return best


def alpha_expand(tour: TspTour, t: DistanceTables) -> Walk:
    """Replace each supergraph hop by a concrete shortest path."""
    order = tour.order
    if not order:
        raise ValueError("empty tour")
    hops = list(order) + ([order[0]] if tour.closed and len(order) > 1 else [])
    verts: tuple[int, ...] = (hops[0],)
    for a, b in zip(hops, hops[1:]):
        verts += get_path_no_first(t, a, b)
    return Walk(verts, closed=tour.closed)


def shortest_covering_walk(
    g: CouplingGraph,
    active: Iterable[int] | None = None,
    *,
    start: int | None = None,
    closed: bool = False,
    router: str = "exact",
    cap: int = DEFAULT_EXACT_CAP,
) -> Walk:
    """Covering walk of the subgraph induced by ``active``.

    Distances are measured inside the induced subgraph, so the walk never
    touches an inactive vertex. ``start`` fixes the first vertex of an open
    walk; ``closed=True`` returns a closed walk.
    """
    if router not in ROUTERS:
        raise ValueError(f"unknown router {router!r}")
    if closed and start is not None:
        raise ValueError("a fixed start only applies to open walks")
    verts = range(g.n) if active is None else active
    sub, labels = g.induced(verts)
    local_start = None
    if start is not None:
        if start not in labels:
            raise ValueError(f"start vertex {start} is not active")
        local_start = labels.index(start)
    s = build_supergraph(sub)
    if router == "exact":
        if closed:
            tour = tsp_cycle_exact(s, cap=cap)
        elif local_start is None:
            tour = tsp_path_exact(s, cap=cap)
        else:
            tour = tsp_path_exact_fixed_start(s, None, local_start, cap=cap)
    else:
        tour = two_opt_cycle(s) if closed else two_opt_path(s, start=local_start)
    walk = alpha_expand(tour, s.tables)
    verts = tuple(labels[v] for v in walk)
    if not closed:
        verts = trim_covered_ends(verts, keep_start=start is not None)
    return Walk(verts, closed=closed)


def trim_covered_ends(verts: tuple[int, ...], keep_start: bool = False) -> tuple[int, ...]:
    """Drop end vertices that the rest of an open walk already visits.

    A heuristic tour may finish (or begin) on a vertex that an earlier hop
    already passed through. Trimming keeps the walk covering and valid, and
    guarantees the last vertex occurs only once, so removing it leaves the
    remaining vertices connected along the walk.
    """
    lo, hi = 0, len(verts)
    changed = True
    while changed and hi - lo > 1:
        changed = False
        if verts[hi - 1] in verts[lo : hi - 1]:
            hi -= 1
            changed = True
        elif not keep_start and verts[lo] in verts[lo + 1 : hi]:
            lo += 1
            changed = True
    return verts[lo:hi]


def covering_walk_length_bounds(n: int, closed: bool = False) -> tuple[float, float]:
    """Length range (in vertices) of a shortest covering walk on ``n`` vertices."""
    if closed:
        return n, 0.5 * n * n + 1.5 * n - 1
    return n, 0.5 * n * n + 0.5 * n
