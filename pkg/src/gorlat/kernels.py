"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``GORLAT_PURE_PYTHON=1`` to force the fallback. Calls whose integers
could overflow 64 bits are routed to the Python version regardless.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("GORLAT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _speedups
except ImportError:
    _speedups = None

BACKEND = "cython" if _speedups is not None else "python"

_SAFE = 1 << 62


def _impl(bound: int):
    return _speedups if _speedups is not None and bound < _SAFE else _kernels_py


def scan_box(normals, offsets, lo, hi, strict: bool, limit: int):
    d = len(lo)
    coord = max(max(abs(v) for v in lo), max(abs(v) for v in hi), 1)
    coef = max((abs(a) for row in normals for a in row), default=1)
    off = max((abs(b) for b in offsets), default=0)
    bound = (d + 1) * coef * coord + off + 1
    return _impl(bound).scan_box(normals, offsets, lo, hi, strict, limit)


def group_elements(gens, orders, modulus: int):
    return _impl(2 * modulus).group_elements(gens, orders, modulus)


def barycentric_interior(elements, modulus: int, r: int, limit: int):
    n = len(elements[0]) if elements else 1
    bound = (r + 2) * modulus * (n + 1)
    return _impl(bound).barycentric_interior(elements, modulus, r, limit)
