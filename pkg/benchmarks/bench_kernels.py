"""Compare the compiled and pure-Python subset-scan kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Workloads are the brute-force oracles on real inputs: maximal discrete
subsets of Q̄ and cuts of Q̃ for the all-forward triangulation of rank n.
"""

import argparse
import timeit

from typea_cluster import _kernels_py
from typea_cluster.geometry import triangulation_from_orientation
from typea_cluster.matchings import conflict_pairs
from typea_cluster.qp import build_qp
from typea_cluster.quiver import quiver_of_triangulation

try:
    from typea_cluster import _kernels as compiled
except ImportError:
    compiled = None


def discrete_workload(n):
    Q = quiver_of_triangulation(triangulation_from_orientation(n, "F" * (n - 1)))
    ids, bad = conflict_pairs(Q)
    pos = {x: p for p, x in enumerate(ids)}
    conf = [0] * len(ids)
    for pair in bad:
        xs = list(pair) * 2
        conf[pos[xs[0]]] |= 1 << pos[xs[1]]
        conf[pos[xs[1]]] |= 1 << pos[xs[0]]
    allowed = sum(1 << p for p in range(len(ids)) if not conf[p] >> p & 1)
    return "maximal_independent_masks", (conf, allowed), len(ids)


def cut_workload(n):
    qp = build_qp(triangulation_from_orientation(n, "F" * (n - 1)))
    masks = [sum(1 << a for a in c.arrows) for c in qp.potential]
    return "exact_one_masks", (masks, len(qp.arrows)), len(qp.arrows)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        print("compiled kernel not built; only the Python backend is available")
    work = [discrete_workload(n) for n in (3, 4, 5, 6)] + [cut_workload(n) for n in (2, 3, 4)]
    print(f"{'kernel':<28}{'bits':>5}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for name, fargs, bits in work:
        py = min(timeit.repeat(lambda: getattr(_kernels_py, name)(*fargs),
                               number=1, repeat=args.repeat))
        if compiled is not None:
            assert getattr(compiled, name)(*fargs) == getattr(_kernels_py, name)(*fargs)
            cy = min(timeit.repeat(lambda: getattr(compiled, name)(*fargs),
                                   number=1, repeat=args.repeat))
            print(f"{name:<28}{bits:>5}{py:>12.4f}{cy:>12.5f}{py / cy:>8.0f}x")
        else:
            print(f"{name:<28}{bits:>5}{py:>12.4f}{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()
