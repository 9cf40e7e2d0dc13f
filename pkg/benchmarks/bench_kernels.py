"""Time the numba kernels against their pure-numpy fallbacks.

    python benchmarks/bench_kernels.py --rows 100000 --m 5 --repeats 5
"""
import argparse
import time

import numpy as np

from mipoison import _kernels


def best_of(fn, repeats):
    fn()  # warm-up (triggers JIT compilation for numba)
    best = float("inf")
    for _ in range(repeats):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--rows", type=int, default=100_000)
    ap.add_argument("--m", type=int, default=5)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    c = rng.dirichlet(np.ones(args.m), size=args.rows)
    delta = rng.uniform(-0.3, 0.3, size=c.shape)
    imgs_a = rng.random((args.rows // 10, 784))
    imgs_b = rng.random((args.rows // 10, 784))
    cases = {
        "normalize_rows": lambda b: _kernels.normalize_rows(c + delta, backend=b),
        "project_argmax_rows": lambda b: _kernels.project_argmax_rows(c, c + delta, backend=b),
        "reverse_rows": lambda b: _kernels.reverse_rows(c, False, backend=b),
        "reverse_rows(swap)": lambda b: _kernels.reverse_rows(c, True, backend=b),
        "per_sample_mse": lambda b: _kernels.per_sample_mse(imgs_a, imgs_b, backend=b),
    }
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    print(f"rows={args.rows} m={args.m} repeats={args.repeats} default backend={_kernels.BACKEND}")
    print(f"{'kernel':<22}" + "".join(f"{b + ' (ms)':>14}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases.items():
        times = [best_of(lambda: fn(b), args.repeats) * 1e3 for b in backends]
        speed = f"{times[0] / times[1]:>9.2f}x" if len(times) == 2 else ""
        print(f"{name:<22}" + "".join(f"{t:>14.2f}" for t in times) + speed)


if __name__ == "__main__":
    main()
