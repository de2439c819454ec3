"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graph import GraphError
from .hashing import parse_angle_file
from .presets import load_graph
from .qasm import to_qasm
from .report import ALGORITHMS, STRATEGIES, SynthesisConfig, synthesize
from .routing import ROUTERS, ExactRouterInfeasible


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tspsynth",
        description="Synthesize routed quantum hashing or QFT circuits for a coupling graph.",
    )
    p.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    p.add_argument(
        "--graph",
        required=True,
        help="edge-list file or preset: lnn:N, star:N, complete:N, cycle:N, sun16, twosuns27",
    )
    p.add_argument("--router", choices=ROUTERS, default=None, help="default: exact for n <= 20, else two_opt")
    p.add_argument("--hash-steps", type=int, default=1, metavar="L")
    p.add_argument("--hash-strategy", choices=STRATEGIES, default="path")
    p.add_argument("--angles", metavar="FILE", help="one line of n-1 radians per hashing step")
    p.add_argument("--emit", choices=("qasm", "json", "both"), default="both")
    p.add_argument("--verify", action="store_true", help="simulate and compare with the reference (n <= 10)")
    p.add_argument("--out", metavar="DIR", help="write circuit.qasm / report.json here instead of stdout")
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        g = load_graph(args.graph)
        angles = None
        if args.angles:
            if args.algorithm != "hash":
                raise ValueError("--angles only applies to --algorithm hash")
            angles = parse_angle_file(Path(args.angles).read_text(), g.n - 1, args.hash_steps)
        cfg = SynthesisConfig(
            algorithm=args.algorithm,
            graph=args.graph,
            router=args.router,
            hash_steps=args.hash_steps,
            hash_strategy=args.hash_strategy,
            angles=angles,
            verify=args.verify,
        )
        circuit, report = synthesize(cfg, g)
    except (GraphError, ExactRouterInfeasible, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    outputs = []
    if args.emit in ("qasm", "both"):
        outputs.append(("circuit.qasm", to_qasm(circuit)))
    if args.emit in ("json", "both"):
        outputs.append(("report.json", report.to_json()))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in outputs:
            (out / name).write_text(text)
    else:
        for _, text in outputs:
            sys.stdout.write(text)

    if report.verification is not None and not report.verification["passed"]:
        print("error: synthesized circuit does not match the reference", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
