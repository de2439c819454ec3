"""OpenQASM 2.0 text for basic-form circuits."""

from __future__ import annotations

from .circuit import Circuit


def _angle(theta: float) -> str:
    return format(theta, ".17g")


def to_qasm(c: Circuit) -> str:
    if c.form != "basic":
        raise ValueError("decompose the circuit before emitting QASM")
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.n_wires}];"]
    for g in c.gates:
        if g.name == "cx":
            lines.append(f"cx q[{g.wires[0]}],q[{g.wires[1]}];")
        elif g.angle is not None:
            lines.append(f"{g.name}({_angle(g.angle)}) q[{g.wires[0]}];")
        else:
            lines.append(f"{g.name} q[{g.wires[0]}];")
    return "\n".join(lines) + "\n"
