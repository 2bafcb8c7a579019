"""Explicit Gorenstein families and the classifiers built from them.

Indices follow the usual convention for these families: vectors are
1-based in the formulas (``a_1 ... a_d``, ``e_1 ... e_d``) and group
elements carry coordinate ``0`` for the origin vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import prod
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    InvalidSpecError,
    NotCyclicNormalizableError,
    NotGorensteinError,
    PreconditionError,
)
from .gorenstein import certificate
from .simplex import (
    GroupElement,
    LambdaGroup,
    LatticeSimplex,
    element_order,
    lambda_group,
    reduce_mod1,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(*ps: int) -> None:
    for p in ps:
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")


def _unit(n: int, d: int, i: int) -> tuple[int, ...]:
    # e_i in Z^d, 1-based
    return tuple(n if j == i else 0 for j in range(1, d + 1))


def _close_sum(coords: Sequence[Fraction]) -> GroupElement:
    """Prepend coordinate 0 so the entries sum to an integer."""
    s = sum(coords, Fraction(0))
    return reduce_mod1([-s, *coords])


# --------------------------------------------------------------------------
# one nonstandard row


@dataclass(frozen=True)
class OneRowSpec:
    """``A = (a_1, ..., a_{d-1}, a_d)`` with ``1 <= a_i <= a_d``."""

    A: tuple[int, ...]
    kind: str = field(default="one_row", init=False)

    def __post_init__(self):
        A = tuple(int(a) for a in self.A)
        object.__setattr__(self, "A", A)
        if not A:
            raise InvalidSpecError("A must be nonempty")
        ad = A[-1]
        if ad < 1 or any(not 1 <= a <= ad for a in A[:-1]):
            raise InvalidSpecError(f"need 1 <= a_i <= a_d, got {A}")

    @property
    def d(self) -> int:
        return len(self.A)

    @property
    def ad(self) -> int:
        return self.A[-1]

    @property
    def a0(self) -> int:
        """Unique ``a_0`` in ``[1, a_d]`` with ``a_d | a_0 + ... + a_{d-1} + 1``."""
        r = (-(sum(self.A[:-1]) + 1)) % self.ad
        return r if r else self.ad

    @property
    def coefficients(self) -> tuple[int, ...]:
        """``(a_0, a_1, ..., a_{d-1})``."""
        return (self.a0,) + self.A[:-1]

    def is_non_pyramid(self) -> bool:
        return all(1 <= a < self.ad for a in self.coefficients)


def one_row_simplex(spec: OneRowSpec) -> LatticeSimplex:
    d, ad = spec.d, spec.ad
    verts = [(0,) * d] + [_unit(1, d, i) for i in range(1, d)]
    verts.append(tuple(ad - spec.A[j - 1] for j in range(1, d)) + (ad,))
    return LatticeSimplex(verts)


def one_row_lambda_generator(spec: OneRowSpec) -> GroupElement:
    ad = spec.ad
    return reduce_mod1([Fraction(a, ad) for a in spec.coefficients] + [Fraction(1, ad)])


def one_row_gorenstein(spec: OneRowSpec) -> Optional[int]:
    """Index ``r`` when every ``a_i`` divides ``a_d``, else ``None``.

    Requires ``1 <= a_0, ..., a_{d-1} < a_d`` (the simplex is not a pyramid).
    """
    if not spec.is_non_pyramid():
        raise PreconditionError(f"{spec} describes a lattice pyramid")
    if any(spec.ad % a for a in spec.coefficients):
        return None
    total = sum(spec.coefficients) + 1
    if total % spec.ad:
        return None
    return total // spec.ad


def _require_one_row_r(spec: OneRowSpec, r: int) -> None:
    if one_row_gorenstein(spec) != r:
        raise PreconditionError(f"{spec} is not Gorenstein of index {r}")


def one_row_translate(spec: OneRowSpec) -> tuple[int, ...]:
    return (1,) * spec.d


def one_row_dual(spec: OneRowSpec, r: int) -> LatticeSimplex:
    """Vertices of the dual of ``r * simplex - (1, ..., 1)``."""
    _require_one_row_r(spec, r)
    d, ad = spec.d, spec.ad
    a0 = spec.a0
    verts = [_unit(-1, d, d)]
    for i in range(1, d):
        ai = spec.A[i - 1]
        verts.append(tuple(
            -ad // ai if j == i else (ad - ai) // ai if j == d else 0 for j in range(1, d + 1)
        ))
    last_num = (r - d + 1) * ad - a0
    if last_num % a0:
        raise AssertionError("non-integral dual vertex")
    verts.append((ad // a0,) * (d - 1) + (last_num // a0,))
    return LatticeSimplex(verts)


def one_row_dual_volume(spec: OneRowSpec, r: int) -> int:
    _require_one_row_r(spec, r)
    return r * prod(spec.ad // a for a in spec.coefficients)


def normalize_generator(g: Sequence) -> tuple[OneRowSpec, tuple[int, ...]]:
    """Realise a cyclic group element as a one-row simplex.

    Returns ``(spec, perm)`` where coordinate ``k`` of the simplex's group
    generator corresponds to coordinate ``perm[k]`` of ``g``. Candidates are
    tried by coordinate index ascending; the chosen coordinate is scaled to
    ``1/m`` and moved last.
    """
    g = reduce_mod1(g)
    n = len(g)
    if n < 2:
        raise PreconditionError("group elements need at least two coordinates")
    if sum(g) % 1:
        raise PreconditionError(f"coordinates of {g} do not sum to an integer")
    m = element_order(g)
    if m == 1:
        return OneRowSpec((1,) * (n - 1)), tuple(range(n))
    for k in range(n):
        if g[k].denominator != m:
            continue
        u = pow(g[k].numerator, -1, m)
        scaled = reduce_mod1(u * x for x in g)
        perm = tuple(i for i in range(n) if i != k) + (k,)
        moved = [scaled[i] for i in perm]
        nums = [int(x * m) or m for x in moved[:-1]]
        spec = OneRowSpec(tuple(nums[1:]) + (m,))
        if spec.a0 != nums[0]:
            continue
        group = lambda_group(one_row_simplex(spec))
        if group.order == m and tuple(moved) in group:
            return spec, perm
    raise NotCyclicNormalizableError(f"no coordinate of {g} has denominator {m}")


def generator_to_one_row(g: Sequence) -> OneRowSpec:
    return normalize_generator(g)[0]


# --------------------------------------------------------------------------
# two nonstandard rows


@dataclass(frozen=True)
class TwoRowSpec:
    """Rows ``s`` and ``d`` nonstandard: ``A = (a_1..a_s)``, ``B = (b_1..b_d)``."""

    s: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    kind: str = field(default="two_row", init=False)

    def __post_init__(self):
        A = tuple(int(a) for a in self.A)
        B = tuple(int(b) for b in self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        s, d = self.s, len(B)
        if not 1 <= s < d:
            raise InvalidSpecError(f"need 1 <= s < d, got s={s}, d={d}")
        if len(A) != s:
            raise InvalidSpecError(f"A must have length s={s}")
        if A[-1] < 1 or any(not 0 <= a < A[-1] for a in A[:-1]):
            raise InvalidSpecError(f"need 0 <= a_i < a_s, got {A}")
        if B[-1] < 1 or any(not 0 <= b < B[-1] for b in B[:-1]):
            raise InvalidSpecError(f"need 0 <= b_i < b_d, got {B}")

    @property
    def d(self) -> int:
        return len(self.B)

    @property
    def a_s(self) -> int:
        return self.A[-1]

    @property
    def b_d(self) -> int:
        return self.B[-1]

    @property
    def b_s(self) -> int:
        return self.B[self.s - 1]


def two_row_simplex(spec: TwoRowSpec) -> LatticeSimplex:
    d, s = spec.d, spec.s
    verts = [(0,) * d]
    for i in range(1, d + 1):
        if i == s:
            verts.append(tuple(spec.A) + (0,) * (d - s))
        elif i == d:
            verts.append(tuple(spec.B))
        else:
            verts.append(_unit(1, d, i))
    return LatticeSimplex(verts)


def two_row_bs_reduction(spec: TwoRowSpec) -> Optional[OneRowSpec]:
    """Reduce a prime-diagonal two-row simplex to one row when possible.

    Returns ``None`` when ``b_s = 0`` (the two-row shape is essential) and a
    one-row spec ``C`` with an equivalent simplex when ``b_s = q - 1``.
    Any other ``b_s`` rules out the Gorenstein property and raises
    :class:`NotGorensteinError`.
    """
    p, q = spec.a_s, spec.b_d
    _require_prime(p, q)
    s, d = spec.s, spec.d
    if spec.b_s == 0:
        return None
    if spec.b_s != q - 1:
        raise NotGorensteinError(f"b_s = {spec.b_s} is neither 0 nor q - 1 = {q - 1}")
    pq = p * q
    coords = [Fraction(pq - spec.A[i - 1] - p * spec.B[i - 1], pq) for i in range(1, s)]
    coords.append(Fraction(1, pq))
    coords += [Fraction(q - spec.B[i - 1], q) for i in range(s + 1, d)]
    coords.append(Fraction(1, q))
    elem = _close_sum(coords)
    if elem not in lambda_group(two_row_simplex(spec)):
        raise AssertionError(f"{elem} is not in the group of {spec}")
    return generator_to_one_row(elem)


# --------------------------------------------------------------------------
# power family


def _power_columns(s: Sequence[int], i: int) -> list[int]:
    """Columns ``j`` carrying a coefficient in row ``i`` (1-based)."""
    earlier = set(s[: i - 1])
    return [j for j in range(1, s[i - 1]) if j not in earlier]


@dataclass(frozen=True)
class PowerSpec:
    """``ell`` nonstandard rows at positions ``s`` with diagonal ``p``.

    ``a[i-1]`` lists the coefficients of row ``i`` at the columns
    ``j < s_i`` that are not earlier nonstandard positions, in increasing
    ``j``.
    """

    p: int
    s: tuple[int, ...]
    a: tuple[tuple[int, ...], ...]
    kind: str = field(default="power", init=False)

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        a = tuple(tuple(int(x) for x in row) for row in self.a)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "a", a)
        p = self.p
        if not is_prime(p):
            raise InvalidSpecError(f"{p} is not prime")
        if not s or s[0] < 1 or any(x >= y for x, y in zip(s, s[1:])):
            raise InvalidSpecError(f"positions must be increasing and positive: {s}")
        if len(a) != len(s):
            raise InvalidSpecError("one coefficient row per nonstandard row")
        for i in range(1, len(s) + 1):
            cols = _power_columns(s, i)
            if len(a[i - 1]) != len(cols):
                raise InvalidSpecError(f"row {i} needs {len(cols)} coefficients")
            if any(not 1 <= x <= p - 1 for x in a[i - 1]):
                raise InvalidSpecError(f"coefficients must lie in [1, {p - 1}]")
        if (self.d + 1) % p:
            raise InvalidSpecError(f"d + 1 = {self.d + 1} is not a multiple of {p}")
        for j, total in self._column_sums().items():
            if (total + 1) % p:
                raise InvalidSpecError(f"column {j} sums to {total}, not t*p - 1")

    @property
    def d(self) -> int:
        return self.s[-1]

    @property
    def ell(self) -> int:
        return len(self.s)

    @property
    def r(self) -> int:
        return (self.d + 1) // self.p

    def coefficient(self, i: int, j: int) -> Optional[int]:
        cols = _power_columns(self.s, i)
        if j in cols:
            return self.a[i - 1][cols.index(j)]
        return None

    def _column_sums(self) -> dict[int, int]:
        sums = {}
        for j in range(1, self.d):
            if j in self.s:
                continue
            sums[j] = sum(c for i in range(1, self.ell + 1)
                          if (c := self.coefficient(i, j)) is not None)
        return sums

    def t(self) -> dict[int, int]:
        """``t_j`` with ``sum_i a_ij = t_j p - 1`` for non-nonstandard ``j < d``."""
        return {j: (total + 1) // self.p for j, total in self._column_sums().items()}


def power_generators(spec: PowerSpec) -> list[GroupElement]:
    p, d = spec.p, spec.d
    gens = []
    for i in range(1, spec.ell + 1):
        cols = _power_columns(spec.s, i)
        coords = []
        for j in range(1, d + 1):
            if j == spec.s[i - 1]:
                coords.append(Fraction(1, p))
            elif j in cols:
                coords.append(Fraction(p - spec.coefficient(i, j), p))
            else:
                coords.append(Fraction(0))
        gens.append(_close_sum(coords))
    return gens


def power_translate(spec: PowerSpec) -> tuple[int, ...]:
    t = spec.t()
    return tuple(1 if j in spec.s else t[j] for j in range(1, spec.d + 1))


def power_simplex(spec: PowerSpec, check: bool = True) -> tuple[LatticeSimplex, int]:
    """The explicit simplex of the family and its Gorenstein index.

    With ``check`` the group is compared against :func:`power_generators`
    and the index against a freshly computed certificate.
    """
    d = spec.d
    verts = [(0,) * d]
    for i in range(1, d + 1):
        if i in spec.s:
            k = spec.s.index(i) + 1
            verts.append(tuple(
                spec.p if j == i else (spec.coefficient(k, j) or 0) for j in range(1, d + 1)
            ))
        else:
            verts.append(_unit(1, d, i))
    simplex = LatticeSimplex(verts)
    if check:
        expected = LambdaGroup.from_generators(d + 1, power_generators(spec))
        if lambda_group(simplex) != expected:
            raise AssertionError(f"group of {spec} does not match its generators")
        cert = certificate(simplex)
        if cert is None or cert.index != spec.r:
            raise AssertionError(f"{spec} is not Gorenstein of index {spec.r}")
    return simplex, spec.r


def power_dual(spec: PowerSpec) -> LatticeSimplex:
    """Dual vertices of ``r * simplex - t'``, in the order of the family's list."""
    p, d, s = spec.p, spec.d, spec.s
    verts = [_unit(-1, d, sk) for sk in s]
    bounds = (0,) + s
    for k in range(len(s)):
        for i in range(bounds[k] + 1, bounds[k + 1]):
            v = [0] * d
            v[i - 1] = -p
            for jrow in range(k + 1, len(s) + 1):
                v[s[jrow - 1] - 1] += spec.coefficient(jrow, i)
            verts.append(tuple(v))
    last = [0] * d
    for j in range(1, d):
        if j not in s:
            last[j - 1] = p
    for k in range(1, len(s) + 1):
        last[s[k - 1] - 1] = 1 - sum(spec.a[k - 1])
    verts.append(tuple(last))
    return LatticeSimplex(verts)


def enumerate_power_specs(p: int, d: int, ell: int) -> Iterator[PowerSpec]:
    """Every valid power-family record for fixed ``p``, ``d`` and ``ell``."""
    if (d + 1) % p or not 1 <= ell <= d:
        return
    for head in combinations(range(1, d), ell - 1):
        s = head + (d,)
        shapes = [len(_power_columns(s, i)) for i in range(1, ell + 1)]
        total = sum(shapes)
        for flat in product(range(1, p), repeat=total):
            rows, pos = [], 0
            for n in shapes:
                rows.append(tuple(flat[pos:pos + n]))
                pos += n
            try:
                yield PowerSpec(p, s, tuple(rows))
            except InvalidSpecError:
                continue


# --------------------------------------------------------------------------
# classifiers


@dataclass(frozen=True)
class PrimeSpec:
    """Non-pyramid Gorenstein simplex of prime volume ``p``, ``d = r p - 1``."""

    p: int
    d: int
    r: int
    kind: str = field(default="prime", init=False)

    def generators(self) -> list[GroupElement]:
        return [tuple(Fraction(1, self.p) for _ in range(self.d + 1))]


def classify_prime(p: int, d: int) -> list[tuple[int, GroupElement]]:
    _require_prime(p)
    if d < 1 or (d + 1) % p:
        return []
    return [((d + 1) // p, tuple(Fraction(1, p) for _ in range(d + 1)))]


@dataclass(frozen=True)
class PpSpec:
    """Volume ``p^2`` record; ``case`` 1 is cyclic, ``case`` 2 has two generators."""

    p: int
    d: int
    r: int
    case: int
    s: int
    a: tuple[int, ...] = ()
    kind: str = field(default="pp", init=False)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        p, d, r, s = self.p, self.d, self.r, self.s
        if not is_prime(p):
            raise InvalidSpecError(f"{p} is not prime")
        if self.case == 1:
            if not 0 <= s <= d - 1 or r * p * p - 1 != (d - s) + p * s or self.a:
                raise InvalidSpecError(f"invalid case-1 record {self}")
        elif self.case == 2:
            if d != r * p - 1 or not 1 <= s <= d - 1 or len(self.a) != s - 1:
                raise InvalidSpecError(f"invalid case-2 record {self}")
            if any(not 1 <= x <= p - 1 for x in self.a):
                raise InvalidSpecError("case-2 coefficients must lie in [1, p-1]")
        else:
            raise InvalidSpecError(f"unknown case {self.case}")

    def generators(self) -> list[GroupElement]:
        p, d, s = self.p, self.d, self.s
        if self.case == 1:
            return [reduce_mod1([Fraction(1, p)] * s + [Fraction(1, p * p)] * (d - s + 1))]
        total = sum(self.a)
        g1 = ([Fraction(2 - total, p)] + [Fraction(x + 1, p) for x in self.a]
              + [Fraction(0)] + [Fraction(1, p)] * (d - s))
        g2 = ([Fraction(total - 1, p)] + [Fraction(p - x, p) for x in self.a]
              + [Fraction(1, p)] + [Fraction(0)] * (d - s))
        return [reduce_mod1(g1), reduce_mod1(g2)]

    def two_row(self) -> TwoRowSpec:
        """The two-row record realising case 2 with the identity vertex order."""
        if self.case != 2:
            raise PreconditionError("only case-2 records have a two-row form")
        p, d, s = self.p, self.d, self.s
        A = self.a + (p,)
        B = tuple(p - 1 - x for x in self.a) + (0,) + (p - 1,) * (d - s - 1) + (p,)
        return TwoRowSpec(s, A, B)


def classify_prime_squared(p: int, d: int) -> list[PpSpec]:
    _require_prime(p)
    out = []
    for s in range(0, d):
        num = (d - s) + p * s + 1
        if num % (p * p) == 0:
            out.append(PpSpec(p, d, num // (p * p), 1, s))
    if (d + 1) % p == 0:
        r = (d + 1) // p
        for s in range(1, d):
            for a in product(range(1, p), repeat=s - 1):
                out.append(PpSpec(p, d, r, 2, s, a))
    return out


@dataclass(frozen=True)
class PqSpec:
    p: int
    q: int
    s1: int
    s2: int
    s3: int
    r: int
    kind: str = field(default="pq", init=False)

    def __post_init__(self):
        p, q = self.p, self.q
        if p == q or not (is_prime(p) and is_prime(q)):
            raise InvalidSpecError(f"need distinct primes, got {p}, {q}")
        if min(self.s1, self.s2, self.s3) < 0 or self.d < 1:
            raise InvalidSpecError("s-values must be nonnegative with d >= 1")
        if self.r * p * q != self.s1 * q + self.s2 * p + self.s3:
            raise InvalidSpecError(f"r p q != s1 q + s2 p + s3 for {self}")
        if not (self.s3 >= 1 or (self.s1 >= 1 and self.s2 >= 1)):
            raise InvalidSpecError(f"generator of {self} does not have order p q")

    @property
    def d(self) -> int:
        return self.s1 + self.s2 + self.s3 - 1

    def generators(self) -> list[GroupElement]:
        p, q = self.p, self.q
        return [tuple([Fraction(1, p)] * self.s1 + [Fraction(1, q)] * self.s2
                      + [Fraction(1, p * q)] * self.s3)]

    def two_row(self) -> TwoRowSpec:
        """Two-row realisation when ``s3 == 0`` (needs ``s1 >= 1``, ``s2 >= 2``)."""
        if self.s3 != 0:
            raise PreconditionError("only s3 == 0 records have a two-row form")
        p, q, s1, s2 = self.p, self.q, self.s1, self.s2
        A = (p - 1,) * (s1 - 1) + (p,)
        B = (0,) * s1 + (q - 1,) * (s2 - 2) + (q,)
        return TwoRowSpec(s1, A, B)


def classify_pq(p: int, q: int, d: int) -> list[PqSpec]:
    _require_prime(p, q)
    if p == q:
        raise PreconditionError("p and q must differ")
    out = []
    n = d + 1
    for s1 in range(n + 1):
        for s2 in range(n - s1 + 1):
            s3 = n - s1 - s2
            total = s1 * q + s2 * p + s3
            if total % (p * q):
                continue
            if not (s3 >= 1 or (s1 >= 1 and s2 >= 1)):
                continue
            out.append(PqSpec(p, q, s1, s2, s3, total // (p * q)))
    return out


FamilyInstance = Union[OneRowSpec, PrimeSpec, PpSpec, PqSpec, PowerSpec]


def realize(instance: FamilyInstance) -> LatticeSimplex:
    """A simplex whose group is the instance's displayed group up to reordering."""
    if isinstance(instance, OneRowSpec):
        return one_row_simplex(instance)
    if isinstance(instance, PowerSpec):
        return power_simplex(instance, check=False)[0]
    if isinstance(instance, PpSpec) and instance.case == 2:
        return two_row_simplex(instance.two_row())
    if isinstance(instance, PqSpec) and instance.s3 == 0:
        return two_row_simplex(instance.two_row())
    if isinstance(instance, (PrimeSpec, PpSpec, PqSpec)):
        return one_row_simplex(generator_to_one_row(instance.generators()[0]))
    raise InvalidSpecError(f"unknown family instance {instance!r}")


def predicted_dual_volume(instance: FamilyInstance) -> int:
    """Closed-form normalized volume of the dual reflexive simplex."""
    if isinstance(instance, OneRowSpec):
        r = one_row_gorenstein(instance)
        if r is None:
            raise PreconditionError(f"{instance} is not Gorenstein")
        return one_row_dual_volume(instance, r)
    if isinstance(instance, PrimeSpec):
        return instance.r * instance.p ** instance.d
    if isinstance(instance, PowerSpec):
        return instance.r * instance.p ** (instance.d - instance.ell + 1)
    if isinstance(instance, PpSpec):
        if instance.case == 1:
            return instance.r * instance.p ** (2 * instance.d - instance.s)
        return instance.r * instance.p ** (instance.d - 1)
    if isinstance(instance, PqSpec):
        x = instance
        return x.r * x.p ** (x.s1 + x.s3 - 1) * x.q ** (x.s2 + x.s3 - 1)
    raise InvalidSpecError(f"unknown family instance {instance!r}")


def stated_volume(instance: FamilyInstance) -> int:
    if isinstance(instance, OneRowSpec):
        return instance.ad
    if isinstance(instance, PrimeSpec):
        return instance.p
    if isinstance(instance, PowerSpec):
        return instance.p ** instance.ell
    if isinstance(instance, PpSpec):
        return instance.p ** 2
    if isinstance(instance, PqSpec):
        return instance.p * instance.q
    raise InvalidSpecError(f"unknown family instance {instance!r}")


def stated_index(instance: FamilyInstance) -> Optional[int]:
    if isinstance(instance, OneRowSpec):
        return one_row_gorenstein(instance)
    return instance.r


def displayed_group(instance: FamilyInstance) -> LambdaGroup:
    if isinstance(instance, OneRowSpec):
        gens = [one_row_lambda_generator(instance)]
    elif isinstance(instance, PowerSpec):
        gens = power_generators(instance)
    else:
        gens = instance.generators()
    return LambdaGroup.from_generators(len(gens[0]), gens)


__all__ = [
    "FamilyInstance",
    "OneRowSpec",
    "PowerSpec",
    "PpSpec",
    "PqSpec",
    "PrimeSpec",
    "TwoRowSpec",
    "classify_pq",
    "classify_prime",
    "classify_prime_squared",
    "displayed_group",
    "enumerate_power_specs",
    "generator_to_one_row",
    "is_prime",
    "normalize_generator",
    "one_row_dual",
    "one_row_dual_volume",
    "one_row_gorenstein",
    "one_row_lambda_generator",
    "one_row_simplex",
    "one_row_translate",
    "power_dual",
    "power_generators",
    "power_simplex",
    "power_translate",
    "predicted_dual_volume",
    "realize",
    "stated_index",
    "stated_volume",
    "two_row_bs_reduction",
    "two_row_simplex",
]
