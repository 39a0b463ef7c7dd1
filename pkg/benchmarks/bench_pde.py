"""Compiled vs numpy cell march on the same Goursat problems.

    python benchmarks/bench_pde.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from gradedtoda.pde import GoursatProblem, backend, field_names, random_edges, solve_goursat

CASES = [("scalar-liouville", 1 / 256), ("sinh2", 1 / 256), ("liouville8", 1 / 128), ("sinh8", 1 / 128),
         ("scalar-sinh", 1 / 512)]


def problem(model, h):
    names = field_names(model)
    centred = tuple(n for n in names if n in ("phi", "f00p", "f00m")) if "liouville" in model else ()
    data = random_edges(names, 0, scale=0.05, centred=centred)(1.0, 1.0)
    return GoursatProblem.from_function(model, data, (1.0, 2.0, 1.0, 2.0), h)


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    have = backend.available()
    print(f"{'model':18s} {'nodes':>9s} " + " ".join(f"{b:>10s}" for b in sorted(have)) + "   speedup   max|diff|")
    for model, h in CASES:
        p = problem(model, h)
        res = {b: best(lambda b=b: solve_goursat(p, b), args.repeat) for b in sorted(have)}
        cols = " ".join(f"{res[b][0] * 1e3:8.2f}ms" for b in sorted(have))
        if len(res) == 2:
            speed = res["python"][0] / res["cython"][0]
            diff = np.abs(res["python"][1].stack() - res["cython"][1].stack()).max()
            tail = f"{speed:8.1f}x   {diff:.1e}"
        else:
            tail = "    (compiled kernel not built)"
        print(f"{model:18s} {(p.nz + 1) * (p.nzb + 1):9d} {cols}  {tail}")


if __name__ == "__main__":
    main()
