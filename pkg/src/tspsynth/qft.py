"""Routed QFT as a sequence of cascades over shrinking covering walks.

Cascade ``r`` applies H to logical qubit ``r`` and then carries it along a
covering walk of the remaining vertices, picking up a controlled phase
``pi / 2**(w - r)`` from every logical qubit ``w > r`` it meets. The target
finishes on the walk's last vertex, which is removed before the next cascade.
No bit-reversal SWAPs are added; the output order is reported through the
final mapping instead (see :func:`qft_output_permutation`).

Logical qubits are numbered from 0; qubit 0 is the most significant bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .circuit import Circuit, Gate, MappingTrace, apply_swap_tracking, cnot_cost, cp, h, swap
from .graph import CouplingGraph, Walk
from .routing import DEFAULT_EXACT_CAP, shortest_covering_walk


def get_first_indexes(walk: Walk | Sequence[int]) -> tuple[int, ...]:
    """0-based positions where each vertex occurs for the first time, in walk order."""
    seen: set[int] = set()
    out = []
    for pos, v in enumerate(walk):
        if v not in seen:
            seen.add(v)
            out.append(pos)
    return tuple(out)


def phase_angle(target: int, control: int) -> float:
    """Controlled-phase angle between logical target ``r`` and control ``w > r``."""
    if control <= target:
        raise ValueError(f"control {control} must come after target {target}")
    return math.pi / 2 ** (control - target)


@dataclass(frozen=True)
class QftCascade:
    r: int
    walk: Walk
    circuit: Circuit
    before: MappingTrace
    after: MappingTrace
    deleted: frozenset[int]  # vertices removed before this cascade ran

    @property
    def cnot_cost(self) -> int:
        return cnot_cost(self.circuit)


@dataclass(frozen=True)
class QftPlan:
    """Initial walk and the placement it induces: logical ``r`` starts on the ``r``-th new vertex."""

    walk: Walk
    first_indexes: tuple[int, ...]
    initial: MappingTrace

    @property
    def n(self) -> int:
        return len(self.first_indexes)


def plan_qft(walk: Walk, n_wires: int | None = None) -> QftPlan:
    firsts = get_first_indexes(walk)
    n = n_wires if n_wires is not None else len(firsts)
    if len(firsts) != n or set(walk.vertices) != set(range(n)):
        raise ValueError("walk does not cover every wire")
    placement = tuple(walk[j] for j in firsts)
    return QftPlan(walk, firsts, MappingTrace.from_placement(placement, n))


def construct_qft_cascade(walk: Walk, r: int, trace: MappingTrace) -> tuple[Circuit, MappingTrace]:
    """Macro-form circuit of cascade ``r`` along ``walk``; returns the circuit and updated mapping.

    The walk must start on the vertex holding logical ``r`` and cover exactly
    the vertices holding logical qubits ``>= r``. Controls are tracked by
    logical index: a vertex revisited after the target has swapped past it
    holds an already-used qubit and is skipped.
    """
    seq = walk.vertices
    k = len(seq)
    n_wires = len(trace.T)
    if trace.T[seq[0]] != r:
        raise ValueError(f"cascade {r} walk must start on the vertex holding logical qubit {r}")
    gates: list[Gate] = [h(seq[0])]
    used: set[int] = set()
    j = 0
    while j <= k - 2:
        w = trace.T[seq[j + 1]]
        if w != r and w not in used:
            if w < r:
                raise ValueError(f"cascade {r} walk reaches finished qubit {w} on vertex {seq[j + 1]}")
            gates.append(cp(seq[j + 1], seq[j], phase_angle(r, w)))
            used.add(w)
        if j <= k - 3 and seq[j + 2] == seq[j]:
            j += 2
        else:
            if k != 2:
                gates.append(swap(seq[j], seq[j + 1]))
                trace = apply_swap_tracking(trace, seq[j], seq[j + 1])
            j += 1
    remaining = sum(1 for q in trace.T if q > r)
    if len(used) != remaining:
        raise ValueError(f"cascade {r} walk missed {remaining - len(used)} control qubit(s)")
    return Circuit(n_wires, gates), trace


@dataclass(frozen=True)
class QftSynthesis:
    circuit: Circuit
    plan: QftPlan
    cascades: tuple[QftCascade, ...]
    initial: MappingTrace
    final: MappingTrace

    @property
    def walk(self) -> Walk:
        return self.plan.walk

    @property
    def k(self) -> int:
        return len(self.plan.walk)

    @property
    def cnot_cost(self) -> int:
        return cnot_cost(self.circuit)

    @property
    def cascade_costs(self) -> tuple[int, ...]:
        return tuple(c.cnot_cost for c in self.cascades)

    @property
    def output_permutation(self) -> tuple[int, ...]:
        return qft_output_permutation(self.final)


def qft_output_permutation(final: MappingTrace) -> tuple[int, ...]:
    """Wire of output bit ``i`` of the DFT index (MSB first).

    Without bit-reversal SWAPs, output bit ``i`` is left on logical qubit ``n - 1 - i``.
    """
    n = len(final.Q)
    return tuple(final.Q[n - 1 - i] for i in range(n))


def construct_qft(
    g: CouplingGraph,
    router: str = "exact",
    *,
    walk: Walk | None = None,
    cap: int = DEFAULT_EXACT_CAP,
) -> QftSynthesis:
    """Full routed QFT on ``g``.

    Cascade 0 uses a free-start covering walk (``walk`` if given); cascade
    ``r >= 1`` routes from the vertex of logical ``r`` over the vertices not
    yet removed.
    """
    walk = walk or shortest_covering_walk(g, router=router, cap=cap)
    if not walk.is_valid_in(g):
        raise ValueError("walk uses a pair of vertices that is not an edge")
    plan = plan_qft(walk, g.n)
    trace = plan.initial
    deleted: set[int] = set()
    cascades = []
    gates: list[Gate] = []
    for r in range(g.n):
        if r > 0:
            active = [v for v in range(g.n) if v not in deleted]
            walk = shortest_covering_walk(g, active, start=trace.Q[r], router=router, cap=cap)
        before = trace
        circ, trace = construct_qft_cascade(walk, r, trace)
        cascades.append(QftCascade(r, walk, circ, before, trace, frozenset(deleted)))
        gates.extend(circ.gates)
        deleted.add(trace.Q[r])
    return QftSynthesis(Circuit(g.n, gates), plan, tuple(cascades), plan.initial, trace)


def fully_connected_qft_circuit(n: int) -> Circuit:
    """Textbook QFT gate stream on a complete register, without final SWAPs."""
    gates: list[Gate] = []
    for r in range(n):
        gates.append(h(r))
        for w in range(r + 1, n):
            gates.append(cp(w, r, phase_angle(r, w)))
    return Circuit(n, gates)


def qft_bound(k: int, n: int) -> int:
    return 3 * k * n - 2 * n


def qft_cost_range(n: int) -> tuple[float, float]:
    return 1.5 * n * n - 1.5 * n - 1, 1.5 * n**3 - 1.5 * n * n - 2 * n


def hamiltonian_qft_cost(n: int) -> float:
    return 1.5 * n * n - 1.5 * n - 1
