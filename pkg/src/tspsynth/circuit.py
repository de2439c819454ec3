"""Gate streams, macro-to-basic decomposition, CNOT cost and wire mappings.

Macro gates are ``h``, ``x``, ``ry``, ``rz``, ``cx``, ``cry``, ``cp`` and
``swap``; the basic set is ``h``, ``x``, ``ry``, ``rz``, ``cx``. Two-qubit
gates list the control first. ``rz`` follows the usual convention
``diag(exp(-i t/2), exp(i t/2))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

ONE_QUBIT = frozenset({"h", "x", "ry", "rz"})
TWO_QUBIT = frozenset({"cx", "cry", "cp", "swap"})
ROTATIONS = frozenset({"ry", "rz", "cry", "cp"})
BASIC = frozenset({"h", "x", "ry", "rz", "cx"})

UNASSIGNED = -1


@dataclass(frozen=True)
class Gate:
    name: str
    wires: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if self.name in ONE_QUBIT:
            arity = 1
        elif self.name in TWO_QUBIT:
            arity = 2
        else:
            raise ValueError(f"unknown gate {self.name!r}")
        if len(self.wires) != arity:
            raise ValueError(f"{self.name} acts on {arity} wire(s), got {self.wires}")
        if arity == 2 and self.wires[0] == self.wires[1]:
            raise ValueError(f"{self.name} needs two distinct wires, got {self.wires}")
        if self.name in ROTATIONS:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"{self.name} needs a finite angle")
        elif self.angle is not None:
            raise ValueError(f"{self.name} takes no angle")

    def __str__(self):
        args = "" if self.angle is None else f"({self.angle:.6g})"
        return f"{self.name}{args} " + ",".join(map(str, self.wires))


def h(q):
    return Gate("h", (q,))


def ry(q, theta):
    return Gate("ry", (q,), float(theta))


def rz(q, theta):
    return Gate("rz", (q,), float(theta))


def cx(c, t):
    return Gate("cx", (c, t))


def cry(c, t, theta):
    return Gate("cry", (c, t), float(theta))


def cp(c, t, lam):
    return Gate("cp", (c, t), float(lam))


def swap(a, b):
    return Gate("swap", (a, b))


@dataclass(frozen=True)
class Circuit:
    n_wires: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in g.wires:
                if not 0 <= q < self.n_wires:
                    raise ValueError(f"gate {g} touches wire {q} outside 0..{self.n_wires - 1}")

    @property
    def form(self) -> str:
        return "basic" if all(g.name in BASIC for g in self.gates) else "macro"

    def __len__(self):
        return len(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.n_wires != self.n_wires:
            raise ValueError("wire counts differ")
        return Circuit(self.n_wires, self.gates + other.gates)

    def count(self, name: str) -> int:
        return sum(1 for g in self.gates if g.name == name)


def _cancel_push(out: list[Gate], g: Gate) -> None:
    if g.name == "cx" and out and out[-1] == g:
        out.pop()
    else:
        out.append(g)


def decompose(c: Circuit) -> Circuit:
    """Rewrite to basic gates and cancel adjacent identical CNOT pairs.

    A SWAP is expanded into three alternating CNOTs whose first orientation
    matches the CNOT directly before it when that CNOT acts on the same pair,
    so the pair annihilates (this is how a controlled rotation followed by a
    SWAP on the same wires costs three CNOTs). Cancellation is stack based and
    never moves a gate past another gate.
    """
    out: list[Gate] = []
    for g in c.gates:
        if g.name in BASIC:
            _cancel_push(out, g)
        elif g.name == "cry":
            ctl, tgt = g.wires
            for b in (ry(tgt, g.angle / 2), cx(ctl, tgt), ry(tgt, -g.angle / 2), cx(ctl, tgt)):
                _cancel_push(out, b)
        elif g.name == "cp":
            ctl, tgt = g.wires
            lam = g.angle
            for b in (rz(ctl, lam / 2), rz(tgt, lam / 2), cx(ctl, tgt), rz(tgt, -lam / 2), cx(ctl, tgt)):
                _cancel_push(out, b)
        elif g.name == "swap":
            u, v = g.wires
            prev = out[-1] if out else None
            if prev is not None and prev.name == "cx" and set(prev.wires) == {u, v}:
                u, v = prev.wires
            for b in (cx(u, v), cx(v, u), cx(u, v)):
                _cancel_push(out, b)
        else:  # pragma: no cover - Gate validates names
            raise ValueError(g.name)
    return Circuit(c.n_wires, out)


def cnot_cost(c: Circuit) -> int:
    return decompose(c).count("cx")


@dataclass(frozen=True)
class MappingTrace:
    """Logical-to-physical (``Q``) and physical-to-logical (``T``) assignment.

    ``T`` holds :data:`UNASSIGNED` for wires without a logical qubit.
    """

    Q: tuple[int, ...]
    T: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.T:
            n = max(self.Q, default=-1) + 1
            T = [UNASSIGNED] * n
            for r, p in enumerate(self.Q):
                T[p] = r
            object.__setattr__(self, "T", tuple(T))
        for r, p in enumerate(self.Q):
            if self.T[p] != r:
                raise ValueError("Q and T are not mutually inverse")
        if sum(1 for x in self.T if x != UNASSIGNED) != len(self.Q):
            raise ValueError("Q and T are not mutually inverse")

    @classmethod
    def identity(cls, n: int) -> "MappingTrace":
        return cls(tuple(range(n)), tuple(range(n)))

    @classmethod
    def from_placement(cls, placement: Sequence[int], n_wires: int) -> "MappingTrace":
        T = [UNASSIGNED] * n_wires
        for r, p in enumerate(placement):
            T[p] = r
        return cls(tuple(placement), tuple(T))

    def logical_at(self, wire: int) -> int:
        return self.T[wire]

    def wire_of(self, logical: int) -> int:
        return self.Q[logical]


def apply_swap_tracking(m: MappingTrace, u: int, v: int) -> MappingTrace:
    Q, T = list(m.Q), list(m.T)
    a, b = T[u], T[v]
    T[u], T[v] = b, a
    if a != UNASSIGNED:
        Q[a] = v
    if b != UNASSIGNED:
        Q[b] = u
    return MappingTrace(tuple(Q), tuple(T))


def replay_swaps(m: MappingTrace, gates: Iterable[Gate]) -> MappingTrace:
    """Apply the SWAPs of a gate stream to a mapping."""
    for g in gates:
        if g.name == "swap":
            m = apply_swap_tracking(m, *g.wires)
    return m
