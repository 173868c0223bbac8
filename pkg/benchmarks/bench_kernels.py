"""Compare the compiled scan kernels against their pure-Python twins.

Runs the box and shell scans on a few representative lattices at growing
bounds with each backend forced in turn, checks the outputs agree, and
prints a table of wall-clock times and speedups.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from conelab import get_lattice, kernels

CASES = [
    # (label, lattice name, kind, d, bound)
    ("U+<-2> walls  b=6", "U+<-2>", "box", -2, 6),
    ("U+<-2> walls  b=12", "U+<-2>", "box", -2, 12),
    ("rank5  walls  b=4", "diag(1,-1,-1,-1,-1)", "box", -2, 4),
    ("rank5  walls  b=6", "diag(1,-1,-1,-1,-1)", "box", -2, 6),
    ("U+<-2> shell  r=40", "U+<-2>", "shell", 0, 40),
    ("rank5  shell  r=8", "diag(1,-1,-1,-1,-1)", "shell", 0, 8),
]


def run_case(L, kind, d, bound):
    if kind == "box":
        return kernels.vectors_with_square_box(L.gram, d, bound)
    return kernels.isotropic_in_shell(L.gram, bound)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = ap.parse_args()

    backends = kernels.available_backends()
    print("backends:", ", ".join(backends))
    if "compiled" not in backends:
        print("compiled extension missing; timing the pure path only")

    header = "%-22s %12s %12s %9s" % ("case", "pure [ms]", "compiled [ms]", "speedup")
    print(header)
    print("-" * len(header))
    prev = kernels.active_mode()
    try:
        for label, name, kind, d, bound in CASES:
            L = get_lattice(name)
            times = {}
            outs = {}
            for mode in backends:
                kernels.use(mode)
                best = float("inf")
                for _ in range(args.repeat):
                    t0 = time.perf_counter()
                    out = run_case(L, kind, d, bound)
                    best = min(best, time.perf_counter() - t0)
                times[mode] = best
                outs[mode] = out
            if len(backends) == 2:
                assert outs["pure"] == outs["compiled"], label
                print(
                    "%-22s %12.2f %12.2f %8.1fx"
                    % (
                        label,
                        1e3 * times["pure"],
                        1e3 * times["compiled"],
                        times["pure"] / times["compiled"],
                    )
                )
            else:
                print("%-22s %12.2f %12s %9s" % (label, 1e3 * times["pure"], "-", "-"))
    finally:
        kernels.use(prev)


if __name__ == "__main__":
    main()
