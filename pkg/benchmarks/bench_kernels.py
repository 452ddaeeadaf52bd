"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs once untimed per path (JIT warm-up), then ``--repeat``
timed calls; the best wall time is reported along with a check that both
paths return the same result.
"""
import argparse
import time

import numpy as np

from exceedcast import kernels
from exceedcast._accel import HAVE_NUMBA, use_numba


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(rng):
    n, p = 5000, 19
    X = rng.normal(size=(n, p))
    y = X @ rng.normal(size=p) + rng.normal(size=n)
    Xs = (X - X.mean(0)) / X.std(0)
    gram = Xs.T @ Xs / n
    xty = Xs.T @ (y - y.mean()) / n
    active = np.ones(p, dtype=np.bool_)
    yield "lasso_cd", lambda: kernels.coordinate_descent_gram(gram, xty, 0.01, 0.0, active)[0]

    sample = rng.integers(0, n, n).astype(np.int64)
    keys = rng.random((2 * (n // 5), p))
    yield "grow_tree", lambda: kernels.grow_tree(X, y, sample, keys, 7, -1, 5)[1]

    tree = kernels.grow_tree(X, y, sample, keys, 7, -1, 5)
    Q = rng.normal(size=(20000, p))
    yield "apply_tree", lambda: kernels.apply_tree(Q, *tree)

    yield "knn", lambda: kernels.nearest_neighbors(X, Q[:2000], 10)[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':<12}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}  same")
    for name, fn in cases(np.random.default_rng(args.seed)):
        use_numba(True)
        t_nb, out_nb = best_of(fn, args.repeat)
        use_numba(False)
        t_np, out_np = best_of(fn, args.repeat)
        use_numba(True)
        same = np.allclose(out_nb, out_np, rtol=1e-9, atol=1e-12)
        print(f"{name:<12}{t_nb * 1e3:>12.2f}{t_np * 1e3:>12.2f}{t_np / t_nb:>9.1f}x  {same}")


if __name__ == "__main__":
    main()
