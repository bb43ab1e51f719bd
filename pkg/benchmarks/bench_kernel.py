"""Time the compiled and pure-Python search kernels on the same instances.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--heavy]

``--heavy`` adds K5,5 in majority mode, where refuting three colors
visits about 38 million nodes (well under a second compiled, a good
half-minute in Python).
"""

from __future__ import annotations

import argparse
import time

import nsd_forge.exact as exact
from nsd_forge.exact import _kernel_py
from nsd_forge.graph import FamilySpec, generate

try:
    from nsd_forge.exact import _kernel as _native
except ImportError:
    _native = None

CASES = [
    ("C7 qm", FamilySpec("cycle", 7), "quasi_majority"),
    ("K5 qm", FamilySpec("complete", 5), "quasi_majority"),
    ("K3,3 majority", FamilySpec("complete_bipartite", 3, 3), "majority"),
    ("K4 majority", FamilySpec("complete", 4), "majority"),
    ("K6 majority", FamilySpec("complete", 6), "majority"),
    ("gnp(9, 1/2) qm", FamilySpec("random_gnp", 9, seed=4), "quasi_majority"),
]
HEAVY = [("K5,5 majority", FamilySpec("complete_bipartite", 5, 5), "majority")]


def timed(kernel, g, mode, repeat: int) -> tuple[float, int]:
    exact._kernel = kernel
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        res = exact.min_index(g, mode, workers=1)
        best = min(best, time.perf_counter() - t)
    return best, res.k


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--heavy", action="store_true")
    args = ap.parse_args()
    if _native is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'instance':<18}{'k':>3}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label, spec, mode in CASES + (HEAVY if args.heavy else []):
        g = generate(spec)
        py, k = timed(_kernel_py, g, mode, args.repeat)
        if _native is None:
            print(f"{label:<18}{k:>3}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        cy, k2 = timed(_native, g, mode, args.repeat)
        assert k == k2, (label, k, k2)
        print(f"{label:<18}{k:>3}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
