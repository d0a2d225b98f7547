"""Time the pure-Python and compiled kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one row per kernel with the best-of-N time for each backend and the
speedup. Also times two end-to-end tasks (oracle and catalog assembly on an
eight-generator ideal) with each backend forced through the environment.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from morseres import _kernels


def inputs():
    rng = np.random.default_rng(0)
    gens = rng.integers(0, 4, size=(14, 5))
    mat = rng.integers(-1, 2, size=(120, 90))
    kgens = np.array([[2, 2, 1, 0, 1], [1, 0, 1, 2, 1], [0, 1, 2, 1, 1], [3, 0, 0, 1, 2],
                      [4, 0, 0, 0, 0], [0, 3, 0, 0, 0], [0, 0, 3, 0, 0], [0, 0, 0, 3, 0],
                      [0, 0, 0, 0, 3]])
    u = kgens.max(axis=0)
    q = 12
    partner = np.full(1 << q, -1, dtype=np.int64)
    for T in range(1, 1 << q, 3):
        S = T & (T - 1)
        if S and partner[T] < 0 and partner[S] < 0:
            partner[T], partner[S] = S, T
    allowed = np.ones(1 << q, dtype=np.uint8)
    return {
        "subset_labels (q=14)": lambda k: k.subset_labels(gens),
        "rank_mod_p (120x90, p=32749)": lambda k: k.rank_mod_p(mat, 32749),
        "koszul_homology (n=5)": lambda k: k.koszul_homology(kgens, u, 2),
        "find_cycle (q=12)": lambda k: k.find_cycle(partner, q),
        "reach (q=12)": lambda k: k.reach(partner, q, [(1 << q) - 1], allowed),
    }


END_TO_END = (
    "import morseres as m;"
    "I = m.artinian_reduction(m.MonomialIdeal(((2,2,0,0),(1,0,1,0),(3,0,0,1),(1,1,0,1))));"
    "import time; t=time.perf_counter();"
    "m.minimal_betti(I); a=time.perf_counter()-t; t=time.perf_counter();"
    "M = m.assemble_matching(I); m.verify_bw(I, M); b=time.perf_counter()-t;"
    "print(f'{a:.4f} {b:.4f}')"
)


def best(fn, kern, repeat):
    number = 1
    while timeit.timeit(lambda: fn(kern), number=number) < 0.05 and number < 10**5:
        number *= 4
    return min(timeit.repeat(lambda: fn(kern), number=number, repeat=repeat)) / number


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["MORSERES_PURE_PYTHON"] = "1"
    else:
        env.pop("MORSERES_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True,
                         text=True, check=True)
    return [float(x) for x in out.stdout.split()]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels.compiled is None:
        print("compiled kernels are not built; only the pure backend is available")
    print(f"{'kernel':34} {'python':>12} {'cython':>12} {'speedup':>9}")
    for name, fn in inputs().items():
        tp = best(fn, _kernels.pure, args.repeat)
        if _kernels.compiled is None:
            print(f"{name:34} {tp * 1e3:10.3f}ms")
            continue
        tc = best(fn, _kernels.compiled, args.repeat)
        print(f"{name:34} {tp * 1e3:10.3f}ms {tc * 1e3:10.3f}ms {tp / tc:8.1f}x")
    if _kernels.compiled is not None:
        (pa, pb), (ca, cb) = end_to_end(True), end_to_end(False)
        print(f"{'oracle, 8 generators':34} {pa * 1e3:10.1f}ms {ca * 1e3:10.1f}ms {pa / ca:8.1f}x")
        print(f"{'catalog + verify, 8 generators':34} {pb * 1e3:10.1f}ms {cb * 1e3:10.1f}ms {pb / cb:8.1f}x")


if __name__ == "__main__":
    main()
