"""Lattice simplices and their finite abelian groups.

For a simplex with vertices ``v_0, ..., v_d`` the group consists of the
tuples ``lam`` in ``(Q/Z)^(d+1)`` with ``sum(lam_i * (v_i, 1))`` integral.
Group elements are tuples of :class:`~fractions.Fraction` in ``[0, 1)``.
Internally a group stores its elements as integer numerators over its
exponent, which is what the enumeration kernels consume.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import (
    CapacityError,
    DegenerateSimplexError,
    DimensionError,
    InvalidHermError,
    SingularMatrixError,
)
from .exact import (
    IntMatrix,
    adjugate_pivot,
    det,
    hnf_decompose,
    inverse_rational,
    is_hermite,
    smith_decompose,
)

GroupElement = tuple[Fraction, ...]

DEFAULT_ELEMENT_CAP = 10**6


def element_cap() -> int:
    return int(os.environ.get("GORLAT_MAX_ELEMENTS", DEFAULT_ELEMENT_CAP))


def reduce_mod1(values: Iterable) -> GroupElement:
    """Reduce each coordinate into ``[0, 1)``."""
    out = []
    for v in values:
        f = Fraction(v)
        out.append(f - (f.numerator // f.denominator))
    return tuple(out)


def element_order(elem: Sequence[Fraction]) -> int:
    m = 1
    for x in elem:
        den = Fraction(x).denominator
        m = m * den // gcd(m, den)
    return m


@dataclass(frozen=True)
class LatticeSimplex:
    """A full-dimensional lattice simplex given by an ordered vertex list."""

    vertices: tuple[tuple[int, ...], ...]

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = tuple(tuple(int(x) for x in v) for v in vertices)
        if len(verts) < 2:
            raise DegenerateSimplexError("a simplex needs at least two vertices")
        d = len(verts) - 1
        if any(len(v) != d for v in verts):
            raise DegenerateSimplexError(
                f"{len(verts)} vertices must live in dimension {d}"
            )
        object.__setattr__(self, "vertices", verts)
        if det(self.edge_matrix()) == 0:
            raise DegenerateSimplexError("vertices are affinely dependent")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def edge_matrix(self) -> IntMatrix:
        v0 = self.vertices[0]
        return tuple(tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:])

    def homogenized(self) -> IntMatrix:
        """Rows ``(v_i, 1)``."""
        return tuple(v + (1,) for v in self.vertices)

    def scaled(self, r: int) -> "LatticeSimplex":
        return LatticeSimplex([tuple(r * x for x in v) for v in self.vertices])

    def translated(self, t: Sequence[int]) -> "LatticeSimplex":
        if len(t) != self.dim:
            raise DimensionError("translation has wrong length")
        return LatticeSimplex([tuple(x + y for x, y in zip(v, t)) for v in self.vertices])

    def transformed(self, U: Sequence[Sequence[int]]) -> "LatticeSimplex":
        """Image under ``v -> v U``."""
        return LatticeSimplex(
            [tuple(sum(v[i] * U[i][j] for i in range(len(v))) for j in range(len(U[0])))
             for v in self.vertices]
        )

    def permuted(self, order: Sequence[int]) -> "LatticeSimplex":
        return LatticeSimplex([self.vertices[i] for i in order])


def normalized_volume(simplex: LatticeSimplex) -> int:
    """``d!`` times the Euclidean volume, i.e. ``|det(v_i - v_0)|``."""
    return abs(det(simplex.edge_matrix()))


@dataclass(frozen=True)
class HnfSimplexForm:
    H: IntMatrix
    nonstandard_rows: int

    @property
    def last_nonstandard(self) -> Optional[int]:
        """1-based index of the last row with diagonal entry > 1."""
        rows = [i + 1 for i in range(len(self.H)) if self.H[i][i] > 1]
        return rows[-1] if rows else None


def count_nonstandard(H: Sequence[Sequence[int]]) -> int:
    return sum(1 for i in range(len(H)) if H[i][i] > 1)


def to_hnf_form(simplex: LatticeSimplex) -> HnfSimplexForm:
    H = hnf_decompose(simplex.edge_matrix()).H
    return HnfSimplexForm(H, count_nonstandard(H))


def simplex_from_hnf(H: Sequence[Sequence[int]]) -> LatticeSimplex:
    """The simplex with vertices the origin followed by the rows of ``H``."""
    if not is_hermite(H):
        raise InvalidHermError(f"not a Hermite normal form matrix: {H!r}")
    d = len(H)
    return LatticeSimplex([(0,) * d] + [tuple(row) for row in H])


class LambdaGroup:
    """A finite subgroup of ``(Q/Z)^n`` given by independent generators.

    ``generators[k]`` has order ``invariant_factors[k]`` and the factors
    form a divisibility chain, so every element is uniquely
    ``sum c_k * generators[k]`` with ``0 <= c_k < invariant_factors[k]``.
    The trivial group has no generators and an empty factor list.
    """

    def __init__(self, ambient_len: int, generators: Sequence[Sequence], invariant_factors: Sequence[int]):
        self.ambient_len = ambient_len
        self.generators = tuple(reduce_mod1(g) for g in generators)
        self.invariant_factors = tuple(int(x) for x in invariant_factors)
        if len(self.generators) != len(self.invariant_factors):
            raise DimensionError("one invariant factor per generator")
        order = 1
        for f in self.invariant_factors:
            order *= f
        self.order = order
        self.exponent = self.invariant_factors[-1] if self.invariant_factors else 1

    @classmethod
    def from_generators(cls, ambient_len: int, gens: Iterable[Sequence]) -> "LambdaGroup":
        """The subgroup generated by arbitrary elements, in canonical form."""
        gens = [reduce_mod1(g) for g in gens]
        for g in gens:
            if len(g) != ambient_len:
                raise DimensionError("generator has wrong length")
        n = ambient_len
        N = 1
        for g in gens:
            N = N * element_order(g) // gcd(N, element_order(g))
        rows = [[int(x * N) for x in g] for g in gens]
        rows += [[N * int(i == j) for j in range(n)] for i in range(n)]
        B = _row_basis(rows, n)
        # Z^n in coordinates of the basis B/N
        X = [[int(x) for x in row] for row in _mat_scale(inverse_rational(B), N)]
        snf = smith_decompose(X)
        Qinv = [[int(x) for x in row] for row in inverse_rational(snf.R)]
        basis = [[Fraction(x, N) for x in row] for row in B]
        out_g, out_f = [], []
        for k, f in enumerate(snf.factors):
            if f > 1:
                g = [sum(Qinv[k][i] * basis[i][j] for i in range(n)) for j in range(n)]
                out_g.append(g)
                out_f.append(f)
        return cls(n, out_g, out_f)

    @cached_property
    def _numerators(self) -> tuple[tuple[int, ...], ...]:
        if self.order > element_cap():
            raise CapacityError(
                f"group of order {self.order} exceeds the enumeration cap {element_cap()}"
            )
        M = self.exponent
        gens = [[int(x * M) for x in g] for g in self.generators]
        if not gens:
            return (tuple([0] * self.ambient_len),)
        return tuple(kernels.group_elements(gens, list(self.invariant_factors), M))

    def numerators(self) -> tuple[tuple[int, ...], ...]:
        """All elements as integer numerators over :attr:`exponent`."""
        return self._numerators

    @cached_property
    def _numerator_set(self) -> frozenset:
        return frozenset(self._numerators)

    def elements(self) -> list[GroupElement]:
        M = self.exponent
        return [tuple(Fraction(x, M) for x in e) for e in self._numerators]

    def __contains__(self, elem) -> bool:
        elem = reduce_mod1(elem)
        if len(elem) != self.ambient_len:
            return False
        M = self.exponent
        scaled = [x * M for x in elem]
        if any(s.denominator != 1 for s in scaled):
            return False
        return tuple(int(s) for s in scaled) in self._numerator_set

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaGroup):
            return NotImplemented
        return (
            self.ambient_len == other.ambient_len
            and self.invariant_factors == other.invariant_factors
            and all(g in other for g in self.generators)
        )

    def __hash__(self):
        return hash((self.ambient_len, self.invariant_factors))

    def __repr__(self) -> str:
        gens = ", ".join("(" + ",".join(str(x) for x in g) + ")" for g in self.generators)
        return f"LambdaGroup(order={self.order}, factors={list(self.invariant_factors)}, gens=[{gens}])"

    def permuted(self, perm: Sequence[int]) -> "LambdaGroup":
        """Group with coordinates reordered: new coordinate ``i`` is old ``perm[i]``."""
        return LambdaGroup(
            self.ambient_len,
            [tuple(g[p] for p in perm) for g in self.generators],
            self.invariant_factors,
        )


def _mat_scale(M, c):
    return [[x * c for x in row] for row in M]


def _row_basis(rows: list[list[int]], n: int) -> list[list[int]]:
    """Upper-triangular basis of the row lattice of a full-rank integer matrix."""
    rows = [list(r) for r in rows if any(r)]
    basis = []
    for c in range(n):
        active = [r for r in rows if r[c] != 0]
        rest = [r for r in rows if r[c] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[c]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[c] // piv[c]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[c] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        if not active:
            raise SingularMatrixError("generating set does not span full rank")
        piv = active[0]
        if piv[c] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        rows = rest
    return basis


def lambda_group(simplex: LatticeSimplex) -> LambdaGroup:
    """The finite abelian group attached to ``simplex``.

    With ``W`` the matrix of rows ``(v_i, 1)`` the group is ``Z^(d+1) W^-1``
    modulo ``Z^(d+1)``. A Smith decomposition ``L W R = S`` turns the rows
    of ``S^-1 L`` into independent generators of orders ``S_kk``.
    """
    W = simplex.homogenized()
    n = len(W)
    snf = smith_decompose(W)
    gens, factors = [], []
    for k, f in enumerate(snf.factors):
        if f > 1:
            gens.append(reduce_mod1(Fraction(x, f) for x in snf.L[k]))
            factors.append(f)
    group = LambdaGroup(n, gens, factors)
    for g in group.generators:
        if not satisfies_membership(simplex, g):
            raise AssertionError(f"generator {g} fails the membership condition")
    return group


def satisfies_membership(simplex: LatticeSimplex, elem: Sequence) -> bool:
    """True iff ``sum(elem_i * (v_i, 1))`` is an integer vector."""
    W = simplex.homogenized()
    if len(elem) != len(W):
        return False
    for j in range(len(W[0])):
        s = sum(Fraction(elem[i]) * W[i][j] for i in range(len(W)))
        if s.denominator != 1:
            return False
    return True


def is_lattice_pyramid(simplex: LatticeSimplex, group: Optional[LambdaGroup] = None) -> Optional[int]:
    """Least coordinate index on which the whole group vanishes, else ``None``."""
    group = group or lambda_group(simplex)
    for i in range(group.ambient_len):
        if all(g[i] == 0 for g in group.generators):
            return i
    return None


def pyramid(simplex: LatticeSimplex) -> LatticeSimplex:
    """``conv(simplex x {0}, e_{d+1})``."""
    d = simplex.dim
    return LatticeSimplex([v + (0,) for v in simplex.vertices] + [(0,) * d + (1,)])


@dataclass(frozen=True)
class FacetPresentation:
    """Facet ``i`` (opposite vertex ``i``) is ``<normals[i], x> <= offsets[i]``.

    Normals are primitive and outward. ``heights[i]`` is the lattice
    distance from vertex ``i`` to its opposite facet.
    """

    normals: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    heights: tuple[int, ...]

    def __iter__(self):
        return iter(zip(self.normals, self.offsets))

    def __len__(self):
        return len(self.normals)

    def evaluate(self, x: Sequence) -> tuple:
        return tuple(sum(a * xi for a, xi in zip(n, x)) for n in self.normals)


def facet_presentation(simplex: LatticeSimplex) -> FacetPresentation:
    """Primitive outward facet inequalities from the barycentric functionals.

    Column ``i`` of ``W^-1`` gives the affine function ``beta_i`` that
    vanishes on facet ``i`` and is ``1`` at vertex ``i``; clearing its
    denominators and flipping the sign gives the outward normal.
    """
    D, X = adjugate_pivot(simplex.homogenized())
    sign = 1 if D > 0 else -1
    d = simplex.dim
    normals, offsets, heights = [], [], []
    for i in range(d + 1):
        # column i of W^-1 is col / |D|
        col = [sign * X[k][i] for k in range(d + 1)]
        g = 0
        for x in col[:d]:
            g = gcd(g, x)
        height, rem = divmod(abs(D), g)
        normal = tuple(-x // g for x in col[:d])
        assert rem == 0 and col[d] % g == 0
        normals.append(normal)
        offsets.append(col[d] // g)
        heights.append(height)
    return FacetPresentation(tuple(normals), tuple(offsets), tuple(heights))


def _coordinate_signatures(elems, n):
    return [tuple(sorted(e[i] for e in elems)) for i in range(n)]


def find_group_equivalence(G1: LambdaGroup, G2: LambdaGroup) -> Optional[tuple[int, ...]]:
    """A permutation ``perm`` with ``G1.permuted(perm) == G2``, or ``None``.

    Backtracking over coordinate assignments; a partial assignment survives
    only if the projections of both element sets onto the assigned
    coordinates agree, and a coordinate may only map to one with the same
    multiset of values.
    """
    if G1.ambient_len != G2.ambient_len:
        raise DimensionError("groups live in different dimensions")
    if G1.invariant_factors != G2.invariant_factors:
        return None
    n = G1.ambient_len
    E1 = G1.numerators()
    E2 = G2.numerators()
    sig1 = _coordinate_signatures(E1, n)
    sig2 = _coordinate_signatures(E2, n)
    if sorted(sig1) != sorted(sig2):
        return None
    # perm[j] = source coordinate in G1 placed at position j of G2
    order2 = sorted(range(n), key=lambda j: (sum(s == sig2[j] for s in sig2), j))
    perm = [None] * n
    used = [False] * n
    assigned: list[int] = []

    def projections(elems, coords):
        return {tuple(e[c] for c in coords) for e in elems}

    def search(k):
        if k == n:
            return True
        j = order2[k]
        for i in range(n):
            if used[i] or sig1[i] != sig2[j]:
                continue
            perm[j] = i
            used[i] = True
            assigned.append(j)
            src = [perm[c] for c in assigned]
            if projections(E1, src) == projections(E2, assigned) and search(k + 1):
                return True
            assigned.pop()
            used[i] = False
            perm[j] = None
        return False

    if not search(0):
        return None
    return tuple(perm)


def groups_equivalent(G1: LambdaGroup, G2: LambdaGroup) -> bool:
    return find_group_equivalence(G1, G2) is not None


def unimodular_equivalent(a: LatticeSimplex, b: LatticeSimplex) -> bool:
    """Decide unimodular equivalence by comparing groups up to vertex reordering."""
    if a.dim != b.dim:
        raise DimensionError(f"cannot compare dimensions {a.dim} and {b.dim}")
    Ga, Gb = lambda_group(a), lambda_group(b)
    if Ga.order != Gb.order:
        return False
    return groups_equivalent(Ga, Gb)


def cyclic_generator(group: LambdaGroup) -> Optional[GroupElement]:
    """An element whose order is the group order, if the group is cyclic."""
    if len(group.invariant_factors) > 1:
        # a chain with two nontrivial factors is never cyclic; still scan to honour the cap
        group.numerators()
        return None
    M = group.exponent
    for e in group.numerators():
        g = M
        for x in e:
            g = gcd(g, x)
        if M // g == group.order:
            return tuple(Fraction(x, M) for x in e)
    return None
