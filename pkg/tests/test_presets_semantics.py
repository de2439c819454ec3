"""Column-wise simulation of the full-size presets (beyond the dense-unitary cap)."""

import numpy as np
import pytest

from tspsynth.circuit import decompose
from tspsynth.hashing import HashingAngles, construct_hash_repeated_cycle, construct_hash_repeated_path
from tspsynth.presets import load_graph
from tspsynth.qft import construct_qft
from tspsynth.sim import equivalent_on_columns, hash_column, qft_column

COLUMNS = [0, 1, 2**15 - 1, 12345, 40000, 2**16 - 1]


@pytest.mark.parametrize("router", ["exact", "two_opt"])
def test_sun16_qft_columns(router):
    res = construct_qft(load_graph("sun16"), router)
    assert equivalent_on_columns(decompose(res.circuit), qft_column(16), res.initial.Q, res.output_permutation, COLUMNS)


@pytest.mark.parametrize("build", [construct_hash_repeated_path, construct_hash_repeated_cycle])
def test_sun16_hash_columns(build):
    rng = np.random.default_rng(16)
    angles = HashingAngles(tuple(tuple(rng.uniform(-3, 3, 15)) for _ in range(2)))
    res = build(load_graph("sun16"), angles)
    summed = [sum(a) for a in zip(*angles.steps)]  # controlled Ry rotations on one target add up
    assert equivalent_on_columns(decompose(res.circuit), hash_column(16, summed), res.initial.Q, res.final.Q, COLUMNS)


def test_column_check_detects_a_wrong_mapping():
    res = construct_qft(load_graph("sun16"))
    wrong = list(res.output_permutation)
    wrong[0], wrong[1] = wrong[1], wrong[0]
    assert not equivalent_on_columns(decompose(res.circuit), qft_column(16), res.initial.Q, wrong, COLUMNS)
