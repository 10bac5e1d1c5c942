"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends run the same inputs; their outputs are checked for equality.
"""

from __future__ import annotations

import argparse
import time

from fchromatic import _pure
from fchromatic.graph import ColorBudget
from fchromatic.theorems import random_bipartite_coloring

try:
    from fchromatic import _kernels
except ImportError:
    _kernels = None


def cases():
    G = random_bipartite_coloring(8, 8, list(range(20)), seed=9)
    n, eu, ev, ecol = G.kernel_arrays()
    for label, cap in (("f=1", 1), ("f=2", 2)):
        caps = ColorBudget.uniform(G.colors, cap).dense_caps(G)
        yield (f"violation search K_8,8 |C|=20 {label} w=1", "first_violation",
               (n, eu, ev, ecol, caps, 1))
    H = random_bipartite_coloring(20, 20, list(range(50)), seed=9)
    n, eu, ev, ecol = H.kernel_arrays()
    caps = ColorBudget.uniform(H.colors, 1).dense_caps(H)
    yield "intersection K_20,20 |C|=50 f=1", "intersect", (n, eu, ev, ecol, caps, n - 1)
    H = random_bipartite_coloring(30, 30, list(range(8)), seed=3)
    n, eu, ev, ecol = H.kernel_arrays()
    caps = ColorBudget.uniform(H.colors, 7).dense_caps(H)
    yield "intersection K_30,30 |C|=8 f=7", "intersect", (n, eu, ev, ecol, caps, n - 1)


def best_of(fn, args, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled extension not built; nothing to compare")
        return
    print(f"{'case':44} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for label, name, call in cases():
        t_pure, r_pure = best_of(getattr(_pure, name), call, args.repeat)
        t_comp, r_comp = best_of(getattr(_kernels, name), call, args.repeat)
        if r_pure != r_comp:
            raise SystemExit(f"backends disagree on {label}: {r_pure!r} vs {r_comp!r}")
        print(f"{label:44} {t_pure:10.4f} {t_comp:13.4f} {t_pure / max(t_comp, 1e-9):7.0f}x")


if __name__ == "__main__":
    main()
