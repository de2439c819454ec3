"""Dense simulation used as the correctness oracle for synthesized circuits.

Wire 0 is the most significant bit of a basis index.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .circuit import Circuit, Gate

MAX_UNITARY_WIRES = 10
MAX_STATEVECTOR_WIRES = 20

_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_CX = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz_matrix(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def controlled(u: np.ndarray) -> np.ndarray:
    out = np.eye(4, dtype=complex)
    out[2:, 2:] = u
    return out


def gate_matrix(g: Gate) -> np.ndarray:
    """Matrix of ``g`` with its first wire as the more significant qubit."""
    if g.name == "h":
        return _H
    if g.name == "x":
        return _X
    if g.name == "ry":
        return ry_matrix(g.angle)
    if g.name == "rz":
        return rz_matrix(g.angle)
    if g.name == "cx":
        return _CX
    if g.name == "swap":
        return _SWAP
    if g.name == "cry":
        return controlled(ry_matrix(g.angle))
    if g.name == "cp":
        return np.diag([1, 1, 1, np.exp(1j * g.angle)])
    raise ValueError(g.name)


def _apply(state: np.ndarray, mat: np.ndarray, wires: Sequence[int], n: int) -> np.ndarray:
    """Apply ``mat`` to ``wires`` of a batch of states shaped ``(2,)*n + (batch,)``."""
    k = len(wires)
    op = mat.reshape((2,) * (2 * k))
    moved = np.tensordot(op, state, axes=(list(range(k, 2 * k)), list(wires)))
    return np.moveaxis(moved, list(range(k)), list(wires))


def apply_circuit(c: Circuit, states: np.ndarray) -> np.ndarray:
    """Apply ``c`` to the columns of ``states`` (shape ``2**n`` or ``(2**n, b)``)."""
    n = c.n_wires
    if n > MAX_STATEVECTOR_WIRES:
        raise ValueError(f"{n} wires exceeds the statevector cap of {MAX_STATEVECTOR_WIRES}")
    vec = states.ndim == 1
    batch = states.reshape(2**n, -1).astype(complex)
    t = batch.reshape((2,) * n + (batch.shape[1],))
    for g in c.gates:
        t = _apply(t, gate_matrix(g), g.wires, n)
    out = t.reshape(2**n, -1)
    return out[:, 0] if vec else out


def circuit_unitary(c: Circuit) -> np.ndarray:
    if c.n_wires > MAX_UNITARY_WIRES:
        raise ValueError(
            f"{c.n_wires} wires exceeds the unitary cap of {MAX_UNITARY_WIRES}; use apply_circuit on selected columns"
        )
    u = apply_circuit(c, np.eye(2**c.n_wires, dtype=complex))
    if not is_unitary(u, 1e-10):
        raise ArithmeticError("simulated circuit is not unitary")
    return u


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)


def qft_reference(n: int) -> np.ndarray:
    """``F[k, j] = exp(2*pi*i*j*k / 2**n) / sqrt(2**n)``."""
    if n > MAX_UNITARY_WIRES:
        raise ValueError(f"n={n} exceeds the unitary cap")
    d = 2**n
    jk = np.outer(np.arange(d), np.arange(d)) % d
    return np.exp(2j * np.pi * jk / d) / math.sqrt(d)


def hash_reference(n: int, angles: Sequence[float]) -> np.ndarray:
    """Controlled-Ry from each logical control ``c`` onto logical ``n - 1``.

    The gates commute, so the product is order free. The matrix is
    block-diagonal: for every control pattern the target sees
    ``Ry(sum of angles of the set controls)``.
    """
    if len(angles) != n - 1:
        raise ValueError(f"expected {n - 1} angles, got {len(angles)}")
    if n > MAX_UNITARY_WIRES:
        raise ValueError(f"n={n} exceeds the unitary cap")
    d = 2**n
    u = np.zeros((d, d), dtype=complex)
    for ctl_bits in range(2 ** (n - 1)):
        theta = sum(angles[c] for c in range(n - 1) if ctl_bits >> (n - 2 - c) & 1)
        base = ctl_bits << 1
        u[base : base + 2, base : base + 2] = ry_matrix(theta)
    return u


def _permute_index(x, sigma: Sequence[int], n: int):
    """Basis index (or array of indices) after moving logical bit ``i`` to wire ``sigma[i]``."""
    x = np.asarray(x, dtype=np.int64)
    y = np.zeros_like(x)
    for i in range(n):
        y |= ((x >> (n - 1 - i)) & 1) << (n - 1 - sigma[i])
    return y


def permutation_matrix(sigma: Sequence[int]) -> np.ndarray:
    """``E(sigma)``: moves the bit of logical position ``i`` to wire ``sigma[i]``."""
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"{sigma} is not a permutation")
    d = 2**n
    e = np.zeros((d, d))
    xs = np.arange(d)
    e[_permute_index(xs, sigma, n), xs] = 1
    return e


def _phase_aligned_error(u: np.ndarray, target: np.ndarray) -> float:
    idx = np.unravel_index(np.argmax(np.abs(target)), target.shape)
    if abs(u[idx]) < 1e-12:
        return float("inf")
    phase = u[idx] / target[idx]
    phase /= abs(phase)
    return float(np.max(np.abs(u - phase * target)))


def equivalent_up_to_permutation(
    u: np.ndarray,
    ref: np.ndarray,
    pin: Sequence[int] | None = None,
    pout: Sequence[int] | None = None,
    tol: float = 1e-9,
) -> bool:
    """True iff ``u == E(pout) @ ref @ E(pin)^-1`` up to a global phase.

    The phase is fixed on the largest-magnitude entry of the permuted
    reference.
    """
    if u.shape != ref.shape:
        return False
    n = int(round(math.log2(ref.shape[0])))
    pin = list(range(n)) if pin is None else list(pin)
    pout = list(range(n)) if pout is None else list(pout)
    target = permutation_matrix(pout) @ ref @ permutation_matrix(pin).T
    return _phase_aligned_error(u, target) <= tol


def equivalent_on_columns(
    c: Circuit,
    ref_column,
    pin: Sequence[int],
    pout: Sequence[int],
    columns: Sequence[int],
    tol: float = 1e-9,
) -> bool:
    """Column-wise check for registers too large for a full unitary.

    ``ref_column(x)`` returns column ``x`` of the logical reference. Each
    selected logical basis input is placed with ``pin``, simulated, and
    compared with the reference column routed through ``pout``.
    """
    n = c.n_wires
    d = 2**n
    inputs = np.zeros((d, len(columns)), dtype=complex)
    expected = np.zeros((d, len(columns)), dtype=complex)
    out_idx = _permute_index(np.arange(d), pout, n)
    for k, x in enumerate(columns):
        inputs[int(_permute_index(x, pin, n)), k] = 1
        expected[out_idx, k] = np.asarray(ref_column(x))
    got = apply_circuit(c, inputs)
    return _phase_aligned_error(got, expected) <= tol


def qft_column(n: int):
    d = 2**n

    def column(x: int) -> np.ndarray:
        return np.exp(2j * np.pi * ((x * np.arange(d)) % d) / d) / math.sqrt(d)

    return column


def hash_column(n: int, angles: Sequence[float]):
    """Column ``x`` of :func:`hash_reference` without building the matrix."""
    if len(angles) != n - 1:
        raise ValueError(f"expected {n - 1} angles, got {len(angles)}")

    def column(x: int) -> np.ndarray:
        ctl_bits = x >> 1
        theta = sum(angles[c] for c in range(n - 1) if ctl_bits >> (n - 2 - c) & 1)
        out = np.zeros(2**n, dtype=complex)
        base = ctl_bits << 1
        out[base : base + 2] = ry_matrix(theta)[:, x & 1]
        return out

    return column
