"""Exact integer and rational matrix algorithms.

Matrices are plain nested sequences of Python ints (arbitrary precision);
results are returned as tuples of tuples so they can be hashed and shared.
Rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import DimensionError, SingularMatrixError

IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]
RatVector = tuple[Fraction, ...]


def as_int_matrix(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Validate a rectangular integer matrix and freeze it."""
    rows = tuple(tuple(int(x) for x in row) for row in M)
    if not rows or not rows[0]:
        raise DimensionError("matrix must have at least one row and column")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionError("matrix rows have unequal length")
    for row, orig in zip(rows, M):
        for x, y in zip(row, orig):
            if x != y:
                raise DimensionError(f"non-integer entry {y!r}")
    return rows


def _square(M) -> IntMatrix:
    A = as_int_matrix(M)
    if len(A) != len(A[0]):
        raise DimensionError(f"expected a square matrix, got {len(A)}x{len(A[0])}")
    return A


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A, B):
    """Exact product of two matrices (ints or Fractions)."""
    if len(A[0]) != len(B):
        raise DimensionError("inner dimensions differ")
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def vecmat(v, M):
    """Row vector times matrix."""
    if len(v) != len(M):
        raise DimensionError("vector length does not match matrix rows")
    return tuple(sum(v[i] * M[i][j] for i in range(len(v))) for j in range(len(M[0])))


def transpose(M):
    return tuple(zip(*M))


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    Every intermediate value is an integer minor of ``M``.
    """
    A = [list(r) for r in _square(M)]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class HnfDecomposition:
    """``M @ U == H`` with ``U`` unimodular and ``H`` in lower Hermite form."""

    M: IntMatrix
    U: IntMatrix
    H: IntMatrix


def hnf_decompose(M: Sequence[Sequence[int]]) -> HnfDecomposition:
    """Column-style Hermite normal form of a nonsingular square matrix.

    Returns ``(M, U, H)`` with ``M U = H``, ``|det U| = 1``, ``H`` lower
    triangular with positive diagonal and ``0 <= H[i][j] < H[i][i]`` for
    ``j < i``. Only column operations are used; within a row the pivot is
    the entry of least absolute value (leftmost on ties) and the others are
    reduced by floor division until they vanish.
    """
    M = _square(M)
    n = len(M)
    A = [list(r) for r in M]
    U = [list(r) for r in identity(n)]

    def col_swap(j, k):
        for X in (A, U):
            for row in X:
                row[j], row[k] = row[k], row[j]

    def col_axpy(dst, q, src):
        # column dst -= q * column src
        if q:
            for X in (A, U):
                for row in X:
                    row[dst] -= q * row[src]

    def col_neg(j):
        for X in (A, U):
            for row in X:
                row[j] = -row[j]

    for i in range(n):
        row = A[i]
        while True:
            nz = [j for j in range(i, n) if row[j] != 0]
            if not nz:
                raise SingularMatrixError("matrix is singular")
            piv = min(nz, key=lambda j: (abs(row[j]), j))
            if piv != i:
                col_swap(i, piv)
            if len(nz) == 1:
                break
            for j in range(i + 1, n):
                if row[j]:
                    col_axpy(j, row[j] // row[i], i)
        if row[i] < 0:
            col_neg(i)
        for j in range(i):
            col_axpy(j, row[j] // row[i], i)

    return HnfDecomposition(M, tuple(map(tuple, U)), tuple(map(tuple, A)))


def is_hermite(H: Sequence[Sequence[int]]) -> bool:
    """True if ``H`` is square, lower triangular, and satisfies the Herm bounds."""
    try:
        H = _square(H)
    except DimensionError:
        return False
    n = len(H)
    for i in range(n):
        if H[i][i] <= 0:
            return False
        for j in range(n):
            if j > i and H[i][j] != 0:
                return False
            if j < i and not 0 <= H[i][j] < H[i][i]:
                return False
    return True


@dataclass(frozen=True)
class SmithDecomposition:
    """``L @ M @ R == diag(factors)`` with ``L`` and ``R`` unimodular."""

    factors: tuple[int, ...]
    L: IntMatrix
    R: IntMatrix


def smith_decompose(M: Sequence[Sequence[int]]) -> SmithDecomposition:
    M = _square(M)
    n = len(M)
    S = [list(r) for r in M]
    L = [list(r) for r in identity(n)]
    R = [list(r) for r in identity(n)]

    def row_swap(i, k):
        S[i], S[k] = S[k], S[i]
        L[i], L[k] = L[k], L[i]

    def col_swap(j, k):
        for X in (S, R):
            for row in X:
                row[j], row[k] = row[k], row[j]

    def row_axpy(dst, q, src):
        if q:
            for X in (S, L):
                X[dst] = [a - q * b for a, b in zip(X[dst], X[src])]

    def col_axpy(dst, q, src):
        if q:
            for X in (S, R):
                for row in X:
                    row[dst] -= q * row[src]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    v = S[i][j]
                    if v and (best is None or abs(v) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                raise SingularMatrixError("matrix is singular")
            if best[0] != t:
                row_swap(t, best[0])
            if best[1] != t:
                col_swap(t, best[1])
            p = S[t][t]
            for i in range(t + 1, n):
                row_axpy(i, S[i][t] // p, t)
            for j in range(t + 1, n):
                col_axpy(j, S[t][j] // p, t)
            if any(S[i][t] for i in range(t + 1, n)) or any(S[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_axpy(t, -1, bad)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            L[t] = [-x for x in L[t]]

    factors = tuple(S[i][i] for i in range(n))
    return SmithDecomposition(factors, tuple(map(tuple, L)), tuple(map(tuple, R)))


def snf_invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors ``d1 | d2 | ... | dn`` of a nonsingular matrix."""
    return list(smith_decompose(M).factors)


def adjugate_pivot(M: Sequence[Sequence[int]]) -> tuple[int, IntMatrix]:
    """``(D, X)`` with ``M X = D I`` and ``D = +-det M``, all in integers.

    Fraction-free Gauss-Jordan: every division by the previous pivot is
    exact, so no rationals appear until the caller divides by ``D``.
    """
    A = _square(M)
    n = len(A)
    aug = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    prev = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        pc = aug[c]
        p = pc[c]
        for r in range(n):
            if r == c:
                continue
            row = aug[r]
            f = row[c]
            aug[r] = [(p * x - f * y) // prev for x, y in zip(row, pc)]
        prev = p
    # earlier pivot rows were left at their own pivot scale; bring them to prev
    X = []
    for r in range(n):
        scale = aug[r][r]
        X.append(tuple(x * prev // scale for x in aug[r][n:]))
    return prev, tuple(X)


def inverse_rational(M: Sequence[Sequence[int]]) -> RatMatrix:
    """Exact inverse over the rationals."""
    D, X = adjugate_pivot(M)
    return tuple(tuple(Fraction(x, D) for x in row) for row in X)


def solve_linear(M, b) -> Optional[RatVector]:
    """Solve ``M x = b`` exactly; ``None`` if the system is inconsistent.

    Overdetermined consistent systems of full column rank return their
    unique solution. Underdetermined systems return the solution with all
    free variables set to zero.
    """
    rows = [[Fraction(x) for x in r] for r in M]
    if not rows:
        raise DimensionError("empty system")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionError("matrix rows have unequal length")
    if len(b) != len(rows):
        raise DimensionError(f"rhs has length {len(b)}, expected {len(rows)}")
    aug = [r + [Fraction(x)] for r, x in zip(rows, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return tuple(x)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise DimensionError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def lcm_denominators(values) -> int:
    out = 1
    for x in values:
        d = Fraction(x).denominator
        out = out * d // gcd(out, d)
    return out
