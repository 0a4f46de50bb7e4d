"""Compare the numba and numpy weight-histogram backends.

    python3 benchmarks/bench_kernels.py --k 20 22 24 --m 7 --threads 1 4
"""

import argparse
import time

import numpy as np

from wdx import kernels
from wdx.codewords import packed_generator
from wdx.construct import construct_polar


def bench(rows, n, backend, threads, repeat):
    kernels.weight_histogram(rows[: min(len(rows), 14)], n, threads=threads, backend=backend)
    best, hist = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        hist = kernels.weight_histogram(rows, n, threads=threads, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, hist


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--m", type=int, default=7)
    p.add_argument("--k", type=int, nargs="+", default=[18, 20, 22, 24])
    p.add_argument("--threads", type=int, nargs="+", default=[1, 4])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    print(f"{'K':>3} {'threads':>7} " + " ".join(f"{b:>10}" for b in backends) + "   speedup  Mwords/s(best)")
    for k in args.k:
        code = construct_polar(args.m, k)
        rows = packed_generator(code)
        for t in args.threads:
            times, hists = {}, {}
            for b in backends:
                times[b], hists[b] = bench(rows, code.n, b, t, args.repeat)
            if len(hists) == 2:
                assert np.array_equal(hists["numpy"], hists["numba"])
            best = min(times.values())
            speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
            print(f"{k:>3} {t:>7} " + " ".join(f"{times[b]:>9.4f}s" for b in backends)
                  + f"   {speed:>6.1f}x  {(1 << k) / best / 1e6:>10.1f}")


if __name__ == "__main__":
    main()
