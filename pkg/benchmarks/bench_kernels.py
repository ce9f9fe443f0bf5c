"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row runs the same call on both backends, checks the results agree and
prints the best-of-N wall time.
"""

import argparse
import time

from tighttri import kernels
from tighttri.fixtures import get_fixture

CASES = [
    ("size_sums", "torus-7", 2),
    ("size_sums", "lutz-l", 2),
    ("size_sums", "icosahedron", 3),
    ("first_noninjective", "emch-p", 2),
    ("first_noninjective", "lutz-l", 2),
    ("first_noninjective", "walkup-k", 3),
    ("b0_size_sums", "icosahedron", None),
    ("b0_size_sums", "random-stacked:16", None),
]


def run_case(op, X, p, backend):
    n = X.n_vertices
    if op == "b0_size_sums":
        return kernels.b0_size_sums(X.adjacency, n, backend)
    masks, bnd = X.chain_data
    K = kernels.chain_kernel(masks, bnd, p, n, backend)
    if op == "size_sums":
        return K.size_sums(n)
    return K.first_noninjective(kernels.subsets_by_size(n, True))


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.COMPILED_AVAILABLE:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation`")
    print(f"{'operation':<20}{'fixture':<20}{'p':>3}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for op, name, p in CASES:
        X = get_fixture(name)
        X.chain_data  # build the face lattice outside the timed region
        t_py, r_py = best_time(lambda: run_case(op, X, p, "python"), args.repeat)
        t_cy, r_cy = best_time(lambda: run_case(op, X, p, "cython"), args.repeat)
        if r_py != r_cy:
            raise SystemExit(f"backends disagree on {op} {name}")
        print(f"{op:<20}{name:<20}{p if p else '-':>3}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
