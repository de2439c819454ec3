"""Routed shallow quantum-hashing circuits.

The target qubit travels along a covering walk. At every position it picks up
the controlled-Ry rotation of the neighbouring control qubit (if that control
has not fired yet in the current step) and then either swaps forward or, when
the walk immediately returns (``walk[j + 2] == walk[j]``), stays put.

Logical numbering is 0-based: controls are ``0..n-2`` and the target is
``n - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .circuit import Circuit, Gate, MappingTrace, apply_swap_tracking, cnot_cost, cry, swap
from .graph import CouplingGraph, Walk
from .routing import shortest_covering_walk


@dataclass(frozen=True)
class HashingAngles:
    """One list of control angles (radians) per hashing step."""

    steps: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        steps = tuple(tuple(float(a) for a in s) for s in self.steps)
        if not steps:
            raise ValueError("at least one hashing step is required")
        width = len(steps[0])
        for i, s in enumerate(steps):
            if len(s) != width:
                raise ValueError(f"step {i} has {len(s)} angles, expected {width}")
            if not all(math.isfinite(a) for a in s):
                raise ValueError(f"step {i} has a non-finite angle")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def repeated(cls, angles: Sequence[float], n_steps: int) -> "HashingAngles":
        return cls((tuple(angles),) * n_steps)

    @property
    def n_controls(self) -> int:
        return len(self.steps[0])

    @property
    def n_steps(self) -> int:
        return len(self.steps)

    def step(self, s: int) -> tuple[float, ...]:
        return self.steps[s]


def parse_angle_file(text: str, n_controls: int, n_steps: int | None = None) -> HashingAngles:
    """One line per step, ``n_controls`` whitespace-separated radians; ``#`` comments.

    A single line is reused for every step when ``n_steps`` asks for more.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [float(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"angle file line {lineno}: not a list of numbers: {raw!r}") from None
        if len(row) != n_controls:
            raise ValueError(f"angle file line {lineno}: expected {n_controls} angles, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ValueError("angle file has no angle lines")
    if n_steps is not None and len(rows) != n_steps:
        if len(rows) != 1:
            raise ValueError(f"angle file has {len(rows)} lines but {n_steps} steps were requested")
        rows = rows * n_steps
    return HashingAngles(tuple(map(tuple, rows)))


def fingerprint_angles(K: Sequence[int], m: int) -> tuple[float, ...]:
    """Angles ``4*pi*k/m``: after ``g`` applications the target amplitude is ``cos(2*pi*k*g/m)``."""
    return tuple(4 * math.pi * k / m for k in K)


def accept_probability(K: Sequence[int], m: int, g: int) -> float:
    if m < 1 or not K:
        raise ValueError("need m >= 1 and a nonempty K")
    t = len(K)
    return sum(math.cos(2 * math.pi * k * g / m) for k in K) ** 2 / t**2


def is_good_set(K: Sequence[int], m: int, eps: float) -> bool:
    if m < 2:
        raise ValueError("m must be at least 2")
    return all(accept_probability(K, m, g) < eps for g in range(1, m))


@dataclass(frozen=True)
class HashingPlan:
    """Walk plus the initial placement of logical qubits on it.

    ``placement[q]`` is the vertex of logical qubit ``q``; controls are
    numbered in first-visit order along the walk, skipping the target vertex
    ``walk[1]``.
    """

    walk: Walk
    placement: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.placement)

    @property
    def target_vertex(self) -> int:
        return self.placement[-1]

    @property
    def control_of(self) -> dict[int, int]:
        return {v: q for q, v in enumerate(self.placement[:-1])}

    @property
    def b(self) -> int:
        return self.walk.stay_count

    def initial_trace(self, n_wires: int | None = None) -> MappingTrace:
        return MappingTrace.from_placement(self.placement, n_wires or self.n)


def plan_hashing(walk: Walk, n_wires: int | None = None) -> HashingPlan:
    verts = walk.vertices
    if len(verts) < 2:
        raise ValueError("hashing needs a walk with at least two vertices")
    n = n_wires if n_wires is not None else len(set(verts))
    if set(verts) != set(range(n)):
        raise ValueError("walk does not cover every wire")
    target = verts[1]
    order: list[int] = []
    for v in verts:
        if v != target and v not in order:
            order.append(v)
    return HashingPlan(walk, tuple(order) + (target,))


def _emit_cry(gates: list[Gate], c: int, t: int, theta: float, merge: bool) -> None:
    last = gates[-1] if gates else None
    if merge and last is not None and last.name == "cry" and last.wires == (c, t):
        gates[-1] = cry(c, t, last.angle + theta)
    else:
        gates.append(cry(c, t, theta))


def _travel(
    seq: Sequence[int],
    j: int,
    trace: MappingTrace,
    angles: Sequence[float],
    gates: list[Gate],
    *,
    check_behind: bool,
    merge: bool,
) -> tuple[int, MappingTrace]:
    """Run one hashing step with the target at ``seq[j]``; returns the final position.

    Controls fire once per step and are tracked by logical index, so a
    control that was swapped onto a previously seen vertex is not fired twice.
    """
    target = len(angles)
    used: set[int] = set()

    def visit(ctl: int, tgt: int) -> None:
        q = trace.T[ctl]
        if q != target and q not in used:
            _emit_cry(gates, ctl, tgt, angles[q], merge)
            used.add(q)

    if trace.T[seq[j]] != target:
        raise ValueError(f"target qubit is not on walk position {j} (vertex {seq[j]})")
    if check_behind:
        visit(seq[j - 1], seq[j])
    while True:
        if j + 1 < len(seq):
            visit(seq[j + 1], seq[j])
        if len(used) == target:
            return j, trace
        if j + 1 >= len(seq):
            raise ValueError("walk ended before every control qubit was reached")
        if j + 2 < len(seq) and seq[j + 2] == seq[j]:
            j += 2
        else:
            gates.append(swap(seq[j], seq[j + 1]))
            trace = apply_swap_tracking(trace, seq[j], seq[j + 1])
            j += 1


def construct_hash_step(
    plan: HashingPlan, angles: Sequence[float], trace: MappingTrace | None = None
) -> tuple[Circuit, MappingTrace]:
    """Macro-form circuit for one hashing step along ``plan.walk``."""
    if len(angles) != plan.n - 1:
        raise ValueError(f"expected {plan.n - 1} angles, got {len(angles)}")
    trace = trace or plan.initial_trace()
    gates: list[Gate] = []
    _, trace = _travel(plan.walk.vertices, 1, trace, angles, gates, check_behind=True, merge=True)
    return Circuit(len(trace.T), gates), trace


@dataclass(frozen=True)
class HashSynthesis:
    circuit: Circuit
    walk: Walk
    plan: HashingPlan
    initial: MappingTrace
    final: MappingTrace
    strategy: str
    n_steps: int

    @property
    def cnot_cost(self) -> int:
        return cnot_cost(self.circuit)

    @property
    def k(self) -> int:
        """Walk length in the sense of the cost bounds (closed walks drop the repeated end)."""
        return len(self.walk) - 1 if self.walk.closed else len(self.walk)


def construct_hash_repeated_path(
    g: CouplingGraph,
    angles: HashingAngles,
    router: str = "exact",
    *,
    walk: Walk | None = None,
    merge: bool = True,
) -> HashSynthesis:
    """``angles.n_steps`` hashing steps, alternating walk direction.

    Consecutive steps meet on the same controlled rotation, which is emitted
    once with the summed angle (disable with ``merge=False``).
    """
    if angles.n_controls != g.n - 1:
        raise ValueError(f"expected {g.n - 1} angles per step, got {angles.n_controls}")
    walk = walk or shortest_covering_walk(g, router=router)
    plan = plan_hashing(walk, g.n)
    trace = initial = plan.initial_trace(g.n)
    gates: list[Gate] = []
    fwd, back = walk.vertices, walk.vertices[::-1]
    target = g.n - 1
    for s in range(angles.n_steps):
        if s == 0:
            seq = fwd
        else:
            # the target ends next to the walk's last vertex, i.e. on position 1 of the reversed walk;
            # two-vertex walks keep their orientation
            seq = back if trace.T[back[1]] == target else fwd
            back, fwd = fwd, seq
        _, trace = _travel(seq, 1, trace, angles.step(s), gates, check_behind=True, merge=merge)
    return HashSynthesis(Circuit(g.n, gates), walk, plan, initial, trace, "path", angles.n_steps)


def construct_hash_repeated_cycle(
    g: CouplingGraph,
    angles: HashingAngles,
    router: str = "exact",
    *,
    walk: Walk | None = None,
    merge: bool = True,
) -> HashSynthesis:
    """Hashing steps along a closed covering walk.

    The first step is a single step on the opened walk. Later steps keep the
    target circulating around the closed walk, crossing the wrap-around edge
    instead of reversing; each step ends as soon as every control has fired.
    """
    if angles.n_controls != g.n - 1:
        raise ValueError(f"expected {g.n - 1} angles per step, got {angles.n_controls}")
    walk = walk or shortest_covering_walk(g, closed=True, router=router)
    if not walk.closed:
        raise ValueError("cycle strategy needs a closed walk")
    opened = walk.vertices[:-1]
    plan = plan_hashing(Walk(opened), g.n)
    trace = initial = plan.initial_trace(g.n)
    gates: list[Gate] = []
    seq = opened * (angles.n_steps + 2)
    j = 1
    for s in range(angles.n_steps):
        j, trace = _travel(seq, j, trace, angles.step(s), gates, check_behind=(s == 0), merge=merge)
    return HashSynthesis(Circuit(g.n, gates), walk, plan, initial, trace, "cycle", angles.n_steps)


def single_step_bound(k: int) -> int:
    return 3 * k - 2


def path_strategy_bound(k: int, n_steps: int) -> int:
    return (3 * k - 4) * n_steps + 2


def cycle_strategy_bound(k: int, n_steps: int) -> int:
    """``k + 1`` is the closed-walk length."""
    return (3 * k - 3) * (n_steps + 1) + 1


def single_step_range(n: int) -> tuple[float, float]:
    return 3 * n - 2, 1.5 * n * n + 1.5 * n - 2


def lnn_single_step_cost(n: int) -> int:
    return 3 * n - 5


def lnn_repeated_cost(n: int, n_steps: int) -> int:
    return 3 * n * n_steps - 7 * n_steps + 2
