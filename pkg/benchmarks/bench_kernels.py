"""Time the brute-force enumeration with the compiled and the numpy kernel.

    python3 benchmarks/bench_kernels.py --sizes 10 14 16 18 --repeat 3
"""
import argparse
import random
import time

from saitotree import kernels
from saitotree.dicriticity import saito_bruteforce
from saitotree.tree import random_tree


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 14, 16, 18])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    backends = ["numpy"] + (["cython"] if kernels._ckernels is not None else [])
    print(f"{'N':>3} {'masks':>8} " + " ".join(f"{b + ' [s]':>12}" for b in backends) + "  speedup")
    for N in args.sizes:
        tree = random_tree(rng, N)
        n = tuple(rng.randint(0, 4) for _ in range(N))
        res = {b: best_of(lambda b=b: saito_bruteforce(tree, n, backend=b), args.repeat)
               for b in backends}
        speed = f"{res['numpy'] / res['cython']:7.1f}x" if "cython" in res else "      -"
        print(f"{N:>3} {2 ** N:>8} " + " ".join(f"{res[b]:12.5f}" for b in backends) + "  " + speed)


if __name__ == "__main__":
    main()
