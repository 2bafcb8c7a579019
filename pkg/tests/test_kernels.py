import random

import pytest

from gorlat import _kernels_py, kernels
from gorlat.families import OneRowSpec, one_row_simplex
from gorlat.simplex import LatticeSimplex, facet_presentation, lambda_group

_speedups = pytest.importorskip("gorlat._speedups")


def box_args(simplex, strict):
    f = facet_presentation(simplex)
    d = simplex.dim
    lo = [min(v[j] for v in simplex.vertices) for j in range(d)]
    hi = [max(v[j] for v in simplex.vertices) for j in range(d)]
    return [list(n) for n in f.normals], list(f.offsets), lo, hi, strict


def naive_box(normals, offsets, lo, hi, strict):
    from itertools import product
    out = []
    for x in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        vals = [sum(a * b for a, b in zip(n, x)) for n in normals]
        if all(v < b if strict else v <= b for v, b in zip(vals, offsets)):
            out.append(x)
    return out


def random_simplex(rng, d):
    while True:
        try:
            return LatticeSimplex([tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(d + 1)])
        except ValueError:
            pass


@pytest.mark.parametrize("seed", range(30))
def test_scan_box_backends_agree(seed):
    rng = random.Random(seed)
    s = random_simplex(rng, rng.randint(1, 4))
    for strict in (True, False):
        args = box_args(s, strict)
        want = naive_box(*args)
        assert _kernels_py.scan_box(*args, 10**9) == want
        assert _speedups.scan_box(*args, 10**9) == want
        if len(want) > 2:
            assert _speedups.scan_box(*args, 2) == want[:2]


@pytest.mark.parametrize("seed", range(20))
def test_group_elements_backends_agree(seed):
    rng = random.Random(1000 + seed)
    g = lambda_group(random_simplex(rng, rng.randint(1, 4)))
    M = g.exponent
    gens = [[int(x * M) for x in gen] for gen in g.generators]
    a = _kernels_py.group_elements(gens, list(g.invariant_factors), M)
    b = _speedups.group_elements(gens, list(g.invariant_factors), M)
    assert a == b
    assert len(set(a)) == g.order


@pytest.mark.parametrize("A,r", [((1, 3), 1), ((1, 3), 3), ((1, 1, 2), 2), ((1, 2, 2, 4), 4), ((2, 5), 2)])
def test_barycentric_backends_agree(A, r):
    g = lambda_group(one_row_simplex(OneRowSpec(A)))
    elems = list(g.numerators())
    a = _kernels_py.barycentric_interior(elems, g.exponent, r, 10**9)
    assert a == _speedups.barycentric_interior(elems, g.exponent, r, 10**9)
    assert a[:1] == _speedups.barycentric_interior(elems, g.exponent, r, 1)
    assert all(sum(x) == r * g.exponent and min(x) > 0 for x in a)


def test_dispatcher_routes_big_numbers_to_python():
    big = 1 << 70
    assert kernels._impl(big) is _kernels_py
    assert kernels.scan_box([[1], [-1]], [big, big], [big - 3], [big + 3], True, 100) == \
        [(big - 3 + i,) for i in range(7) if big - 3 + i < big]


def test_backend_reported():
    assert kernels.BACKEND in {"cython", "python"}


def test_pure_python_fallback_end_to_end():
    import os
    import subprocess
    import sys

    code = (
        "from gorlat import kernels; from gorlat.oracle import cross_check;"
        "assert kernels.BACKEND == 'python';"
        "assert cross_check(3, 4, 'prime-squared').passed;"
        "assert cross_check(3, 2, 'prime').passed"
    )
    env = dict(os.environ, GORLAT_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
