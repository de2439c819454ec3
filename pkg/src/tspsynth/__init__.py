"""CNOT-aware synthesis of quantum hashing and QFT circuits on coupling graphs.

Both constructions move a target qubit along a shortest walk that visits
every vertex, found through a TSP over graph distances.
"""

from .circuit import Circuit, Gate, MappingTrace, cnot_cost, decompose
from .graph import CouplingGraph, DisconnectedGraphError, GraphError, Walk, parse_graph_text
from .hashing import (
    HashingAngles,
    construct_hash_repeated_cycle,
    construct_hash_repeated_path,
    construct_hash_step,
    plan_hashing,
)
from .presets import load_graph
from .qft import construct_qft, get_first_indexes
from .routing import ExactRouterInfeasible, shortest_covering_walk

__all__ = [
    "Circuit",
    "CouplingGraph",
    "DisconnectedGraphError",
    "ExactRouterInfeasible",
    "Gate",
    "GraphError",
    "HashingAngles",
    "MappingTrace",
    "Walk",
    "cnot_cost",
    "construct_hash_repeated_cycle",
    "construct_hash_repeated_path",
    "construct_hash_step",
    "construct_qft",
    "decompose",
    "get_first_indexes",
    "load_graph",
    "parse_graph_text",
    "plan_hashing",
    "shortest_covering_walk",
]
