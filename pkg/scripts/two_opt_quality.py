"""2-opt against exact Held-Karp on random connected graphs.

Reports the differential ratio (worst - heuristic) / (worst - optimal) and
the standard ratio heuristic / optimal for closed tours, plus the extra QFT
cost caused by heuristic routing.

    python3 scripts/two_opt_quality.py --samples 200 --max-n 8 --seed 0
"""

import argparse
import itertools

import numpy as np

from tspsynth.graph import CouplingGraph, build_supergraph
from tspsynth.qft import construct_qft
from tspsynth.routing import tsp_cycle_exact, two_opt_cycle


def random_graph(rng, n):
    perm = rng.permutation(n)
    edges = {tuple(sorted((int(perm[i]), int(perm[rng.integers(i)])))) for i in range(1, n)}
    p = rng.uniform(0, 0.5)
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return CouplingGraph.from_edges(n, sorted(edges))


def worst_cycle(w):
    n = w.shape[0]
    best = 0
    for perm in itertools.permutations(range(1, n)):
        order = (0,) + perm
        best = max(best, sum(int(w[a, b]) for a, b in zip(order, order[1:] + (0,))))
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    diff, std, qft_gap = [], [], []
    for _ in range(args.samples):
        g = random_graph(rng, int(rng.integers(3, args.max_n + 1)))
        s = build_supergraph(g)
        w = np.asarray(s.weight)
        opt, heur = tsp_cycle_exact(s).weight, two_opt_cycle(s).weight
        worst = worst_cycle(w)
        diff.append(1.0 if worst == opt else (worst - heur) / (worst - opt))
        std.append(heur / opt)
        qft_gap.append(construct_qft(g, "two_opt").cnot_cost - construct_qft(g, "exact").cnot_cost)

    diff, std, qft_gap = map(np.asarray, (diff, std, qft_gap))
    print(f"samples {args.samples}, n in 3..{args.max_n}")
    print(f"differential ratio: min {diff.min():.3f}  mean {diff.mean():.3f}  (guarantee 0.5)")
    print(f"standard ratio:     max {std.max():.3f}  mean {std.mean():.3f}")
    print(f"QFT cost two_opt - exact: mean {qft_gap.mean():.2f}  max {qft_gap.max()}  fraction equal {np.mean(qft_gap == 0):.2f}")


if __name__ == "__main__":
    main()
