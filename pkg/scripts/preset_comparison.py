"""CNOT costs on the named architectures next to the published numbers.

    python3 scripts/preset_comparison.py [--steps 3]
"""

import argparse
import time

from tspsynth.hashing import HashingAngles, construct_hash_repeated_cycle, construct_hash_repeated_path
from tspsynth.presets import load_graph
from tspsynth.qft import construct_qft, hamiltonian_qft_cost
from tspsynth.report import HAND_BUILT_QFT, PRESET_TARGETS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=3, help="hashing steps for the repeated strategies")
    args = ap.parse_args()

    rows = []
    for spec in ("lnn:5", "lnn:10", "star:6", "cycle:8", "sun16", "twosuns27"):
        g = load_graph(spec)
        for router in ("exact", "two_opt"):
            if router == "exact" and g.n > 20:
                continue
            t0 = time.perf_counter()
            one = construct_hash_repeated_path(g, HashingAngles.repeated([0.5] * (g.n - 1), 1), router)
            many = HashingAngles.repeated([0.5] * (g.n - 1), args.steps)
            path = construct_hash_repeated_path(g, many, router)
            cyc = construct_hash_repeated_cycle(g, many, router)
            q = construct_qft(g, router)
            dt = time.perf_counter() - t0
            rows.append(
                (spec, router, len(one.walk), one.cnot_cost, PRESET_TARGETS.get(("hash", spec), "-"),
                 path.cnot_cost, cyc.cnot_cost, q.cnot_cost, PRESET_TARGETS.get(("qft", spec), "-"),
                 HAND_BUILT_QFT.get(spec, "-"), hamiltonian_qft_cost(g.n), f"{dt:.2f}")
            )  # fmt: skip

    head = ("graph", "router", "k", "hash", "pub", f"path x{args.steps}", f"cycle x{args.steps}",
            "qft", "pub", "hand", "1.5n^2-1.5n-1", "sec")  # fmt: skip
    widths = [max(len(str(r[i])) for r in rows + [head]) for i in range(len(head))]
    for r in [head] + rows:
        print("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))


if __name__ == "__main__":
    main()
