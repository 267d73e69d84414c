"""Compare the compiled elimination kernel with the pure-Python fallback.

Run with ``python benchmarks/bench_kernel.py``.  Both kernels receive the
same integer rows and must agree on rank and echelon form.
"""

from __future__ import annotations

import argparse
import random
import time

from walg.coeffs import _kernel_py
from walg.coeffs.linalg import _integer_rows
from walg.coeffs.matrix import vstack
from walg.rootsys import build_algebra
from walg.screening import q_power

try:
    from walg.coeffs import _kernel as _kernel_c
except ImportError:
    _kernel_c = None


def random_rows(n: int, m: int, density: float, bound: int, rng: random.Random) -> list[dict]:
    rows = []
    for _ in range(n):
        row = {j: rng.randint(-bound, bound) for j in range(m) if rng.random() < density}
        rows.append({j: v for j, v in row.items() if v})
    return rows


def screening_rows(label: str, lam: tuple, mu: tuple, d: int) -> list[dict]:
    g = build_algebra(label)
    mats = [q_power(g, i, mu[i], lam[i] + 1, d) for i in range(g.rank)]
    return _integer_rows(vstack(mats))


def timed(kernel, rows, repeat: int) -> tuple[float, int]:
    best = float("inf")
    r = None
    for _ in range(repeat):
        start = time.perf_counter()
        r = kernel.rank([dict(x) for x in rows])
        best = min(best, time.perf_counter() - start)
    return best, r


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    rng = random.Random(args.seed)
    workloads = [
        ("random 60x60 dense", random_rows(60, 60, 0.9, 50, rng)),
        ("random 200x200 sparse", random_rows(200, 200, 0.05, 9, rng)),
        ("A2 screening, degree 8", screening_rows("A2", (1, 1), (0, 0), 8)),
        ("B2 screening, degree 7", screening_rows("B2", (1, 1), (0, 1), 7)),
    ]
    if _kernel_c is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'workload':28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, rows in workloads:
        t_py, r_py = timed(_kernel_py, rows, args.repeat)
        if _kernel_c is None:
            print(f"{name:28} {t_py:10.4f} {'-':>10} {'-':>8}")
            continue
        t_c, r_c = timed(_kernel_c, rows, args.repeat)
        assert r_c == r_py, f"rank mismatch on {name}"
        assert _kernel_c.echelon([dict(x) for x in rows]) == _kernel_py.echelon([dict(x) for x in rows])
        print(f"{name:28} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:8.2f}x")


if __name__ == "__main__":
    main()
