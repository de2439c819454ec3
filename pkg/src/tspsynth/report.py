"""Synthesis driver: config in, basic-form circuit plus report out."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from . import hashing, qft
from .circuit import Circuit, decompose
from .graph import CouplingGraph
from .presets import load_graph
from .routing import DEFAULT_EXACT_CAP
from .sim import (
    MAX_UNITARY_WIRES,
    circuit_unitary,
    equivalent_up_to_permutation,
    hash_reference,
    qft_reference,
)

ALGORITHMS = ("qft", "hash")
STRATEGIES = ("path", "cycle")

# Published CNOT counts quoted for comparison only.
PRESET_TARGETS = {
    ("hash", "sun16"): 42,
    ("hash", "twosuns27"): 69,
    ("qft", "sun16"): 342,
    ("qft", "twosuns27"): 1009,
}
HAND_BUILT_QFT = {"sun16": 324, "twosuns27": 957}


@dataclass(frozen=True)
class SynthesisConfig:
    algorithm: str = "qft"
    graph: str = "lnn:5"
    router: str | None = None  # None: exact up to the exact cap, else two_opt
    hash_steps: int = 1
    hash_strategy: str = "path"
    angles: hashing.HashingAngles | None = None
    verify: bool = False

    def resolved_router(self, n: int) -> str:
        if self.router is not None:
            return self.router
        return "exact" if n <= DEFAULT_EXACT_CAP else "two_opt"


@dataclass(frozen=True)
class BoundCheck:
    name: str
    bound: float
    measured: int
    kind: str = "upper"  # "upper" or "lower"

    @property
    def passed(self) -> bool:
        return self.measured <= self.bound if self.kind == "upper" else self.measured >= self.bound

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "kind": self.kind, "bound": self.bound, "measured": self.measured, "passed": self.passed}


@dataclass
class SynthesisReport:
    algorithm: str
    graph: str
    n: int
    router: str
    cnot_cost: int
    walks: list[list[int]]
    initial_mapping: list[int]
    final_mapping: list[int]
    output_permutation: list[int]
    bounds: list[BoundCheck]
    comparisons: dict[str, float] = field(default_factory=dict)
    hash_steps: int | None = None
    hash_strategy: str | None = None
    cascade_costs: list[int] | None = None
    verification: dict[str, Any] | None = None

    @property
    def bounds_ok(self) -> bool:
        return all(b.passed for b in self.bounds)

    def as_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["bounds"] = [b.as_dict() for b in self.bounds]
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def default_angles(n: int, n_steps: int) -> hashing.HashingAngles:
    """Fingerprint angles for ``K = {1, ..., n-1}`` and ``m = 2**n``."""
    return hashing.HashingAngles.repeated(hashing.fingerprint_angles(range(1, n), 2**n), n_steps)


def hash_bounds(res: hashing.HashSynthesis) -> list[BoundCheck]:
    cost, k, ell = res.cnot_cost, res.k, res.n_steps
    checks = []
    if ell == 1 and res.strategy == "path":
        checks.append(BoundCheck("single step: 3k-2", hashing.single_step_bound(k), cost))
    if res.strategy == "path":
        checks.append(BoundCheck("path strategy: (3k-4)l+2", hashing.path_strategy_bound(k, ell), cost))
    else:
        checks.append(BoundCheck("cycle strategy: (3k-3)(l+1)+1", hashing.cycle_strategy_bound(k, ell), cost))
    return checks


def qft_bounds(res: qft.QftSynthesis, router: str) -> list[BoundCheck]:
    n = len(res.initial.Q)
    checks = [BoundCheck("qft: 3kn-2n", qft.qft_bound(res.k, n), res.cnot_cost)]
    if router == "exact":
        lo, hi = qft.qft_cost_range(n)
        checks.append(BoundCheck("qft range low: 1.5n^2-1.5n-1", lo, res.cnot_cost, "lower"))
        checks.append(BoundCheck("qft range high: 1.5n^3-1.5n^2-2n", hi, res.cnot_cost))
    return checks


def verify_hash(circuit: Circuit, res: hashing.HashSynthesis, angles: hashing.HashingAngles) -> bool:
    n = circuit.n_wires
    ref = np.eye(2**n, dtype=complex)
    for s in range(angles.n_steps):
        ref = hash_reference(n, angles.step(s)) @ ref
    return equivalent_up_to_permutation(circuit_unitary(circuit), ref, res.initial.Q, res.final.Q)


def verify_qft(circuit: Circuit, res: qft.QftSynthesis) -> bool:
    n = circuit.n_wires
    return equivalent_up_to_permutation(
        circuit_unitary(circuit), qft_reference(n), res.initial.Q, res.output_permutation
    )


def synthesize(cfg: SynthesisConfig, g: CouplingGraph | None = None) -> tuple[Circuit, SynthesisReport]:
    """Run one synthesis. Returns the basic-form circuit and its report."""
    if cfg.algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {cfg.algorithm!r}")
    g = g or load_graph(cfg.graph)
    if cfg.verify and g.n > MAX_UNITARY_WIRES:
        raise ValueError(f"--verify supports at most {MAX_UNITARY_WIRES} qubits, graph has {g.n}")
    router = cfg.resolved_router(g.n)
    comparisons: dict[str, float] = {}
    target = PRESET_TARGETS.get((cfg.algorithm, cfg.graph))
    if target is not None:
        comparisons["published_generic"] = target
    if cfg.algorithm == "hash":
        if g.n < 2:
            raise ValueError("hashing needs at least two qubits")
        if cfg.hash_strategy not in STRATEGIES:
            raise ValueError(f"unknown hash strategy {cfg.hash_strategy!r}")
        if cfg.hash_steps < 1:
            raise ValueError("hash steps must be positive")
        angles = cfg.angles or default_angles(g.n, cfg.hash_steps)
        if angles.n_steps != cfg.hash_steps:
            raise ValueError(f"angles cover {angles.n_steps} steps, {cfg.hash_steps} requested")
        build = (
            hashing.construct_hash_repeated_path
            if cfg.hash_strategy == "path"
            else hashing.construct_hash_repeated_cycle
        )
        res = build(g, angles, router)
        basic = decompose(res.circuit)
        if cfg.graph.startswith("lnn:"):
            comparisons["lnn_closed_form"] = hashing.lnn_repeated_cost(g.n, cfg.hash_steps)
        report = SynthesisReport(
            algorithm="hash",
            graph=cfg.graph,
            n=g.n,
            router=router,
            cnot_cost=basic.count("cx"),
            walks=[list(res.walk.vertices)],
            initial_mapping=list(res.initial.Q),
            final_mapping=list(res.final.Q),
            output_permutation=list(res.final.Q),
            bounds=hash_bounds(res),
            comparisons=comparisons,
            hash_steps=cfg.hash_steps,
            hash_strategy=cfg.hash_strategy,
        )
        if cfg.verify:
            report.verification = {"passed": verify_hash(basic, res, angles), "tolerance": 1e-9}
    else:
        res = qft.construct_qft(g, router)
        basic = decompose(res.circuit)
        n = g.n
        comparisons["hamiltonian_closed_form"] = qft.hamiltonian_qft_cost(n)
        if cfg.graph.startswith("lnn:"):
            comparisons["lnn_park_ahn"] = n * n + n - 4
            comparisons["lnn_hand_built"] = 1.5 * n * n - 2.5 * n + 1
        if cfg.graph in HAND_BUILT_QFT:
            comparisons["hand_built"] = HAND_BUILT_QFT[cfg.graph]
        report = SynthesisReport(
            algorithm="qft",
            graph=cfg.graph,
            n=n,
            router=router,
            cnot_cost=basic.count("cx"),
            walks=[list(c.walk.vertices) for c in res.cascades],
            initial_mapping=list(res.initial.Q),
            final_mapping=list(res.final.Q),
            output_permutation=list(res.output_permutation),
            bounds=qft_bounds(res, router),
            comparisons=comparisons,
            cascade_costs=list(res.cascade_costs),
        )
        if cfg.verify:
            report.verification = {"passed": verify_qft(basic, res), "tolerance": 1e-9}
    return basic, report

