"""Time the compiled kernels against the pure-Python reference.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from gorlat import _kernels_py, kernels
from gorlat.simplex import LatticeSimplex, facet_presentation, lambda_group
from gorlat.families import OneRowSpec, one_row_simplex

try:
    from gorlat import _speedups
except ImportError:
    _speedups = None


def _box_case():
    simplex = LatticeSimplex([(0, 0, 0, 0), (9, 0, 0, 0), (0, 9, 0, 0), (0, 0, 9, 0), (1, 2, 3, 9)])
    dilate = simplex.scaled(2)
    f = facet_presentation(dilate)
    d = dilate.dim
    lo = [min(v[j] for v in dilate.vertices) for j in range(d)]
    hi = [max(v[j] for v in dilate.vertices) for j in range(d)]
    return ([list(n) for n in f.normals], list(f.offsets), lo, hi, True, 10**9)


def _group_case():
    g = lambda_group(LatticeSimplex([(0, 0, 0, 0), (6, 0, 0, 0), (0, 10, 0, 0), (0, 0, 14, 0), (0, 0, 0, 9)]))
    M = g.exponent
    gens = [[int(x * M) for x in gen] for gen in g.generators]
    return (gens, list(g.invariant_factors), M)


def _bary_case():
    simplex = one_row_simplex(OneRowSpec((1, 2, 2, 2, 2, 4)))
    g = lambda_group(simplex)
    return (list(g.numerators()), g.exponent, 7, 10**9)


CASES = {
    "scan_box": _box_case,
    "group_elements": _group_case,
    "barycentric_interior": _bary_case,
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"dispatcher backend: {kernels.BACKEND}")
    if _speedups is None:
        print("compiled extension not built; only the Python timings are shown")
    print(f"{'kernel':<22}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, make in CASES.items():
        call_args = make()
        ref = getattr(_kernels_py, name)(*call_args)
        t_py = min(timeit.repeat(lambda: getattr(_kernels_py, name)(*call_args), number=1, repeat=args.repeat))
        if _speedups is not None:
            fast = getattr(_speedups, name)(*call_args)
            assert fast == ref, f"{name}: backends disagree"
            t_cy = min(timeit.repeat(lambda: getattr(_speedups, name)(*call_args), number=1, repeat=args.repeat))
            print(f"{name:<22}{t_py * 1e3:>14.2f}{t_cy * 1e3:>14.2f}{t_py / t_cy:>9.1f}x")
        else:
            print(f"{name:<22}{t_py * 1e3:>14.2f}{'-':>14}{'-':>10}")
    print(f"(outputs identical; sizes: {', '.join(f'{k}={len(getattr(_kernels_py, k)(*CASES[k]()))}' for k in CASES)})")


if __name__ == "__main__":
    main()
