"""Reflexivity, Gorenstein index, certificates and dual simplices."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels
from .errors import CapacityError, DimensionError, PreconditionError
from .exact import det, inverse_rational
from .simplex import (
    LambdaGroup,
    LatticeSimplex,
    facet_presentation,
    lambda_group,
    normalized_volume,
)

DEFAULT_BOX_CAP = 10**8


def box_cap() -> int:
    return int(os.environ.get("GORLAT_MAX_BOX", DEFAULT_BOX_CAP))


@dataclass(frozen=True)
class RationalSimplex:
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def to_lattice(self) -> LatticeSimplex:
        if not self.is_integral():
            raise PreconditionError("simplex has non-integral vertices")
        return LatticeSimplex([tuple(int(x) for x in v) for v in self.vertices])

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class GorensteinCertificate:
    """``reflexive == index * simplex - translate`` is reflexive with dual ``dual``."""

    index: int
    translate: tuple[int, ...]
    reflexive_simplex: LatticeSimplex
    dual: LatticeSimplex
    dual_volume: int


def gorenstein_index(simplex: LatticeSimplex) -> Optional[tuple[int, tuple[int, ...]]]:
    """Least ``r`` with an integral ``t`` making ``r*simplex - t`` reflexive.

    ``r*simplex - t`` has facets ``<a, x> <= r*b - <a, t>``, so it is
    reflexive exactly when ``<a, t> = r*b - 1`` for every primitive facet
    pair ``(a, b)``. Any ``d`` facet normals of a simplex are independent,
    so the first ``d`` equations give ``t = r*u - w`` and the last one is a
    consistency check. ``r`` never needs to exceed ``d + 1``.
    """
    facets = facet_presentation(simplex)
    d = simplex.dim
    normals, offsets = facets.normals, facets.offsets
    inv = inverse_rational([list(n) for n in normals[:d]])
    u = [sum(inv[i][k] * offsets[k] for k in range(d)) for i in range(d)]
    w = [sum(inv[i][k] for k in range(d)) for i in range(d)]
    last, b_last = normals[d], offsets[d]
    for r in range(1, d + 2):
        t = [r * a - b for a, b in zip(u, w)]
        if any(x.denominator != 1 for x in t):
            continue
        if sum(a * x for a, x in zip(last, t)) != r * b_last - 1:
            continue
        return r, tuple(int(x) for x in t)
    return None


def _require_origin_interior(facets) -> None:
    if any(b <= 0 for b in facets.offsets):
        raise PreconditionError("origin is not in the interior of the simplex")


def reflexive_check(P: LatticeSimplex) -> bool:
    """True iff every primitive facet inequality of ``P`` reads ``<a, x> <= 1``.

    With all offsets equal to one the dual vertices are the normals
    themselves (hence integral), and any interior lattice point would need
    ``<a, x> <= 0`` on every facet, which only the origin satisfies.
    """
    facets = facet_presentation(P)
    _require_origin_interior(facets)
    return all(b == 1 for b in facets.offsets)


def dual_polytope(P: LatticeSimplex) -> RationalSimplex:
    """Vertices ``a/b`` of the dual, one per facet, in facet order."""
    facets = facet_presentation(P)
    _require_origin_interior(facets)
    return RationalSimplex(
        tuple(tuple(Fraction(a, b) for a in n) for n, b in zip(facets.normals, facets.offsets))
    )


def dual_normalized_volume(P: LatticeSimplex) -> int:
    dual = dual_polytope(P)
    if not dual.is_integral():
        raise PreconditionError("dual simplex is not a lattice simplex")
    w0 = dual.vertices[0]
    return abs(det([[int(a - b) for a, b in zip(w, w0)] for w in dual.vertices[1:]]))


def interior_lattice_points(P: LatticeSimplex, cap: Optional[int] = None,
                            limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """Integer points strictly inside ``P`` by scanning its bounding box.

    Raises :class:`CapacityError` if the box has more than ``cap`` points.
    At most ``limit`` points are returned (all of them by default).
    """
    cap = box_cap() if cap is None else cap
    d = P.dim
    lo = [min(v[j] for v in P.vertices) for j in range(d)]
    hi = [max(v[j] for v in P.vertices) for j in range(d)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
    if size > cap:
        raise CapacityError(f"bounding box has {size} points, cap is {cap}")
    facets = facet_presentation(P)
    lim = size + 1 if limit is None else limit
    if lim <= 0:
        return []
    return kernels.scan_box(
        [list(n) for n in facets.normals], list(facets.offsets), lo, hi, True, lim
    )


def interior_points_dilate(simplex: LatticeSimplex, r: int, limit: Optional[int] = None,
                           group: Optional[LambdaGroup] = None) -> list[tuple[int, ...]]:
    """Interior lattice points of ``r * simplex`` via barycentric coordinates.

    A point ``sum beta_i v_i`` with ``sum beta_i = r`` is a lattice point
    iff ``beta mod 1`` lies in the simplex's group, and is interior iff
    every ``beta_i > 0``. This enumerates group cosets instead of a box.
    """
    group = group or lambda_group(simplex)
    M = group.exponent
    lim = limit if limit is not None else 10**9
    betas = kernels.barycentric_interior(list(group.numerators()), M, r, lim)
    d = simplex.dim
    pts = []
    for beta in betas:
        pt = []
        for j in range(d):
            s = sum(beta[i] * simplex.vertices[i][j] for i in range(d + 1))
            if s % M:
                raise AssertionError("barycentric point is not integral")
            pt.append(s // M)
        pts.append(tuple(pt))
    return sorted(pts)


def verify_certificate(simplex: LatticeSimplex, cert: GorensteinCertificate) -> None:
    """Raise ``AssertionError`` unless ``cert`` is internally consistent."""
    P = simplex.scaled(cert.index).translated([-x for x in cert.translate])
    if P != cert.reflexive_simplex:
        raise AssertionError("reflexive simplex is not r*simplex - t")
    if not reflexive_check(P):
        raise AssertionError("translate is not reflexive")
    for i, w in enumerate(cert.dual.vertices):
        values = [sum(a * b for a, b in zip(w, x)) for x in P.vertices]
        if max(values) != 1 or sum(1 for k, v in enumerate(values) if v == 1 and k != i) != P.dim:
            raise AssertionError(f"dual vertex {w} does not support facet {i}")


def certificate(simplex: LatticeSimplex) -> Optional[GorensteinCertificate]:
    found = gorenstein_index(simplex)
    if found is None:
        return None
    r, t = found
    P = simplex.scaled(r).translated([-x for x in t])
    if not reflexive_check(P):
        raise AssertionError("linear-system translate failed the reflexivity check")
    dual = dual_polytope(P).to_lattice()
    cert = GorensteinCertificate(r, t, P, dual, dual_normalized_volume(P))
    verify_certificate(simplex, cert)
    return cert


def is_gorenstein(simplex: LatticeSimplex) -> bool:
    return gorenstein_index(simplex) is not None


def translate_to_origin(simplex: LatticeSimplex, r: int, t: Sequence[int]) -> LatticeSimplex:
    if len(t) != simplex.dim:
        raise DimensionError("translate has wrong length")
    return simplex.scaled(r).translated([-x for x in t])


__all__ = [
    "GorensteinCertificate",
    "RationalSimplex",
    "certificate",
    "dual_normalized_volume",
    "dual_polytope",
    "gorenstein_index",
    "interior_lattice_points",
    "interior_points_dilate",
    "is_gorenstein",
    "normalized_volume",
    "reflexive_check",
    "translate_to_origin",
    "verify_certificate",
]
