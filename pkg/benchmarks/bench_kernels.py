"""Compare the pure-Python and compiled assignment kernels.

Usage: python benchmarks/bench_kernels.py [--sizes 25 50 100 200] [--repeat 3] [--seed 0]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from barcode_strata import _pykernels
from barcode_strata.barcode import Barcode
from barcode_strata.metrics import cost_matrix

try:
    from barcode_strata import _ckernels
except ImportError:
    _ckernels = None


def random_pair(rng: np.random.Generator, n: int) -> tuple[Barcode, Barcode]:
    def one():
        b = rng.random(n)
        return Barcode.from_arrays(b.tolist(), (b + 1.0 - rng.random(n)).tolist())
    return one(), one()


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 200])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = [_pykernels] + ([_ckernels] if _ckernels is not None else [])
    if _ckernels is None:
        print("compiled kernels not built; timing the Python fallback only")
    rng = np.random.default_rng(args.seed)
    header = f"{'n':>5} {'problem':<12}" + "".join(f"{k.NAME:>12}" for k in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in args.sizes:
        A, B = random_pair(rng, n)
        jobs = {
            "bottleneck": (cost_matrix(A, B, "bottleneck"), "bottleneck_assignment"),
            "wasserstein": (cost_matrix(A, B, "wasserstein"), "linear_assignment"),
        }
        for label, (C, name) in jobs.items():
            results = [getattr(k, name)(C) for k in backends]
            if len(results) == 2 and results[0] != results[1]:
                raise SystemExit(f"backends disagree on {label} at n={n}")
            times = [best_of(lambda k=k: getattr(k, name)(C), args.repeat) for k in backends]
            line = f"{n:>5} {label:<12}" + "".join(f"{t:>11.4f}s" for t in times)
            if len(times) == 2:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
