"""Exhaustive ground truth over Hermite normal forms.

Everything here is deliberately slow and simple: Gorenstein-ness is decided
by enumerating interior lattice points of dilates, never by the linear
system used in :mod:`gorlat.gorenstein`, so the two deciders can be played
against each other.
"""

from __future__ import annotations

import csv
import json
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .errors import CapacityError, PreconditionError
from .exact import IntMatrix
from .families import (
    FamilyInstance,
    OneRowSpec,
    PowerSpec,
    PrimeSpec,
    classify_pq,
    classify_prime,
    classify_prime_squared,
    enumerate_power_specs,
    is_prime,
    one_row_gorenstein,
    displayed_group,
    power_dual,
    power_simplex,
    power_translate,
    predicted_dual_volume,
    realize,
    stated_volume,
)
from .gorenstein import GorensteinCertificate, certificate, interior_points_dilate, reflexive_check
from .simplex import (
    LambdaGroup,
    LatticeSimplex,
    find_group_equivalence,
    is_lattice_pyramid,
    lambda_group,
    normalized_volume,
    simplex_from_hnf,
)

DEFAULT_ENUM_CAP = 10**7


def enum_cap() -> int:
    return int(os.environ.get("GORLAT_MAX_ENUM", DEFAULT_ENUM_CAP))


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def count_herm(d: int, m: int) -> int:
    """``|Herm(d, m)|``: sum over the last diagonal entry ``h`` of ``h^(d-1) |Herm(d-1, m/h)|``."""
    if d == 0:
        return int(m == 1)
    return sum(h ** (d - 1) * count_herm(d - 1, m // h) for h in _divisors(m))


def _diagonals(d: int, m: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        yield (m,)
        return
    for h in _divisors(m):
        for rest in _diagonals(d - 1, m // h):
            yield (h,) + rest


def _fillings(diag: Sequence[int]) -> Iterator[list[list[int]]]:
    d = len(diag)
    cells = [(i, j) for i in range(d) for j in range(i)]
    ranges = [range(diag[i]) for i, _ in cells]

    def rec(k, H):
        if k == len(cells):
            yield H
            return
        i, j = cells[k]
        for v in ranges[k]:
            H[i][j] = v
            yield from rec(k + 1, H)
        H[i][j] = 0

    base = [[diag[i] if i == j else 0 for j in range(d)] for i in range(d)]
    yield from rec(0, base)


def herm_key(H: Sequence[Sequence[int]]) -> tuple:
    """Sort key: diagonal first, then sub-diagonal entries row by row."""
    d = len(H)
    return (tuple(H[i][i] for i in range(d)), tuple(H[i][j] for i in range(d) for j in range(i)))


def enumerate_herm(d: int, m: int) -> Iterator[IntMatrix]:
    """Every matrix of ``Herm(d, m)`` once, increasing in :func:`herm_key`."""
    if d < 1 or m < 1:
        raise PreconditionError("need d >= 1 and m >= 1")
    for diag in _diagonals(d, m):
        for H in _fillings(diag):
            yield tuple(tuple(row) for row in H)


def herm_recursive(d: int, m: int) -> Iterator[IntMatrix]:
    """Second generator: extend each ``Herm(d-1, m/h)`` by a last row with diagonal ``h``."""
    if d == 0:
        if m == 1:
            yield ()
        return
    for h in _divisors(m):
        for top in herm_recursive(d - 1, m // h):
            for tail in _all_rows(d - 1, h):
                rows = [tuple(r) + (0,) for r in top]
                yield tuple(rows) + (tuple(tail) + (h,),)


def _all_rows(n: int, h: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for head in _all_rows(n - 1, h):
        for v in range(h):
            yield head + (v,)


# --------------------------------------------------------------------------
# brute-force Gorenstein test


def brute_force_gorenstein(simplex: LatticeSimplex,
                           group: Optional[LambdaGroup] = None) -> Optional[tuple[int, tuple[int, ...]]]:
    """Least ``r`` whose dilate has one interior point ``t`` with ``r*simplex - t`` reflexive."""
    group = group or lambda_group(simplex)
    for r in range(1, simplex.dim + 2):
        pts = interior_points_dilate(simplex, r, limit=2, group=group)
        if len(pts) != 1:
            continue
        t = pts[0]
        if reflexive_check(simplex.scaled(r).translated([-x for x in t])):
            return r, t
    return None


@dataclass
class CatalogEntry:
    H: IntMatrix
    dim: int
    volume: int
    pyramid: Optional[int]
    certificate: Optional[GorensteinCertificate]
    invariant_factors: tuple[int, ...]
    generators: tuple
    class_id: int = -1

    @property
    def gorenstein(self) -> bool:
        return self.certificate is not None

    @property
    def index(self) -> Optional[int]:
        return self.certificate.index if self.certificate else None

    @property
    def dual_volume(self) -> Optional[int]:
        return self.certificate.dual_volume if self.certificate else None

    def simplex(self) -> LatticeSimplex:
        return simplex_from_hnf(self.H)


class DeciderMismatch(AssertionError):
    """The interior-point and linear-system deciders disagree."""


def analyze_herm(H: Sequence[Sequence[int]]) -> CatalogEntry:
    simplex = simplex_from_hnf(H)
    group = lambda_group(simplex)
    brute = brute_force_gorenstein(simplex, group)
    cert = certificate(simplex)
    lin = (cert.index, cert.translate) if cert else None
    if brute != lin:
        raise DeciderMismatch(f"H={H}: interior points give {brute}, linear system gives {lin}")
    return CatalogEntry(
        H=tuple(tuple(r) for r in H),
        dim=simplex.dim,
        volume=normalized_volume(simplex),
        pyramid=is_lattice_pyramid(simplex, group),
        certificate=cert,
        invariant_factors=group.invariant_factors,
        generators=group.generators,
    )


def _bucket_key(entry: CatalogEntry, group: LambdaGroup) -> tuple:
    elems = group.numerators()
    sigs = sorted(tuple(sorted(e[i] for e in elems)) for i in range(group.ambient_len))
    return (entry.invariant_factors, entry.pyramid is None, entry.index, entry.dual_volume, tuple(sigs))


def _group_of(entry: CatalogEntry) -> LambdaGroup:
    return LambdaGroup(entry.dim + 1, entry.generators, entry.invariant_factors)


def deduplicate(entries: Sequence[CatalogEntry]) -> list[CatalogEntry]:
    """Assign ``class_id`` (position of the class representative) and return representatives.

    ``entries`` must be in :func:`herm_key` order so the first member of
    each class is its least ``H``.
    """
    buckets: dict[tuple, list[tuple[int, LambdaGroup]]] = {}
    reps: list[CatalogEntry] = []
    for pos, entry in enumerate(entries):
        group = _group_of(entry)
        bucket = buckets.setdefault(_bucket_key(entry, group), [])
        for rep_pos, rep_group in bucket:
            if find_group_equivalence(rep_group, group) is not None:
                entry.class_id = rep_pos
                break
        else:
            entry.class_id = pos
            bucket.append((pos, group))
            reps.append(entry)
    return reps


def brute_force_catalog(d: int, m: int, dedupe: bool = False) -> list[CatalogEntry]:
    """Analyze every ``H`` in ``Herm(d, m)``; with ``dedupe`` keep class representatives only."""
    total = count_herm(d, m)
    cap = enum_cap()
    if total > cap:
        raise CapacityError(f"|Herm({d},{m})| = {total} exceeds the cap {cap}")
    entries = [analyze_herm(H) for H in enumerate_herm(d, m)]
    reps = deduplicate(entries)
    return reps if dedupe else entries


# --------------------------------------------------------------------------
# differential comparison


Classifier = Callable[[int, int], list]


def _factor_prime(m: int) -> int:
    if not is_prime(m):
        raise PreconditionError(f"{m} is not prime")
    return m


def prime_classifier(d: int, m: int) -> list[FamilyInstance]:
    p = _factor_prime(m)
    return [PrimeSpec(p, d, r) for r, _ in classify_prime(p, d)]


def prime_squared_classifier(d: int, m: int) -> list[FamilyInstance]:
    p = round(m ** 0.5)
    while p * p > m:
        p -= 1
    while (p + 1) ** 2 <= m:
        p += 1
    if p * p != m or not is_prime(p):
        raise PreconditionError(f"{m} is not the square of a prime")
    return list(classify_prime_squared(p, d))


def pq_classifier(d: int, m: int) -> list[FamilyInstance]:
    for p in range(2, m):
        if m % p == 0 and is_prime(p):
            q = m // p
            if q != p and is_prime(q):
                return list(classify_pq(p, q, d))
            break
    raise PreconditionError(f"{m} is not a product of two distinct primes")


CLASSIFIERS: dict[str, Classifier] = {
    "prime": prime_classifier,
    "prime-squared": prime_squared_classifier,
    "pq": pq_classifier,
}


@dataclass
class CrossCheckReport:
    d: int
    m: int
    classifier: str
    matched: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    unpredicted: list = field(default_factory=list)
    invalid_predictions: list = field(default_factory=list)
    dual_volume_mismatches: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def discrepancies(self) -> int:
        return (len(self.missing) + len(self.unpredicted)
                + len(self.invalid_predictions) + len(self.dual_volume_mismatches))

    @property
    def passed(self) -> bool:
        return self.discrepancies == 0

    def summary(self) -> str:
        status = "ok" if self.passed else "FAIL"
        classes = len({H for _, H in self.matched})
        return (f"{self.classifier} d={self.d} m={self.m}: {len(self.matched)} predictions "
                f"matched {classes} classes, "
                f"{len(self.missing)} missing, {len(self.unpredicted)} unpredicted, "
                f"{len(self.invalid_predictions)} invalid, "
                f"{len(self.dual_volume_mismatches)} dual-volume mismatches [{status}]")


def cross_check(d: int, m: int, classifier: Classifier | str,
                catalog: Optional[list[CatalogEntry]] = None) -> CrossCheckReport:
    """Compare non-pyramid Gorenstein classes of ``Herm(d, m)`` with a classifier.

    ``classifier`` maps ``(d, m)`` to family instances (or names one in
    :data:`CLASSIFIERS`). Each instance is realised as a simplex, checked
    against its stated volume and index, and matched to a catalog class by
    group equivalence.
    """
    start = time.perf_counter()
    name = classifier if isinstance(classifier, str) else getattr(classifier, "__name__", "classifier")
    fn = CLASSIFIERS[classifier] if isinstance(classifier, str) else classifier
    report = CrossCheckReport(d, m, name)
    reps = catalog if catalog is not None else brute_force_catalog(d, m, dedupe=True)
    targets = [e for e in reps if e.gorenstein and e.pyramid is None]
    hit = [False] * len(targets)
    for inst in fn(d, m):
        simplex = realize(inst)
        if simplex.dim != d:
            report.invalid_predictions.append((inst, ["dimension"]))
            continue
        group = lambda_group(simplex)
        cert = certificate(simplex)
        problems = []
        if normalized_volume(simplex) != stated_volume(inst) or stated_volume(inst) != m:
            problems.append("volume")
        if is_lattice_pyramid(simplex, group) is not None:
            problems.append("pyramid")
        if cert is None or cert.index != inst.r:
            problems.append("index")
        if problems:
            report.invalid_predictions.append((inst, problems))
            continue
        if predicted_dual_volume(inst) != cert.dual_volume:
            report.dual_volume_mismatches.append((inst, predicted_dual_volume(inst), cert.dual_volume))
        for k, entry in enumerate(targets):
            if entry.invariant_factors == group.invariant_factors and \
                    find_group_equivalence(_group_of(entry), group) is not None:
                hit[k] = True
                report.matched.append((inst, entry.H))
                break
        else:
            report.missing.append(inst)
    report.unpredicted = [e for k, e in enumerate(targets) if not hit[k]]
    report.seconds = time.perf_counter() - start
    return report


def power_problems(spec: PowerSpec) -> list[str]:
    """Checks for one power-family record; empty when everything holds."""
    problems = []
    simplex, r = power_simplex(spec, check=False)
    cert = certificate(simplex)
    if cert is None or cert.index != r or spec.d != r * spec.p - 1:
        return ["index"]
    if normalized_volume(simplex) != spec.p ** spec.ell:
        problems.append("volume")
    if lambda_group(simplex) != displayed_group(spec):
        problems.append("group")
    if cert.translate != power_translate(spec):
        problems.append("translate")
    if set(cert.dual.vertices) != set(power_dual(spec).vertices):
        problems.append("dual-vertices")
    if cert.dual_volume != predicted_dual_volume(spec):
        problems.append("dual-volume")
    return problems


# --------------------------------------------------------------------------
# random family instances


def random_one_row(rng: random.Random, max_dim: int = 6, max_ad: int = 12,
                   tries: int = 10_000) -> OneRowSpec:
    """A random Gorenstein, non-pyramid one-row spec by rejection sampling."""
    for _ in range(tries):
        d = rng.randint(2, max_dim)
        ad = rng.randint(2, max_ad)
        proper = [x for x in range(1, ad) if ad % x == 0]
        A = tuple(rng.choice(proper) for _ in range(d - 1)) + (ad,)
        spec = OneRowSpec(A)
        if spec.is_non_pyramid() and one_row_gorenstein(spec) is not None:
            return spec
    raise CapacityError("no Gorenstein one-row spec found")


def random_family_instance(rng: random.Random) -> FamilyInstance:
    kind = rng.choice(["one_row", "power", "pq"])
    if kind == "one_row":
        return random_one_row(rng)
    if kind == "power":
        while True:
            p = rng.choice([2, 3])
            d = rng.choice([x for x in range(p - 1, 8) if (x + 1) % p == 0 and x >= 1])
            ell = rng.randint(1, min(3, d))
            specs = list(enumerate_power_specs(p, d, ell))
            if specs:
                return rng.choice(specs)
    while True:
        p, q = rng.choice([(2, 3), (2, 5), (3, 5)])
        d = rng.randint(1, 7)
        specs = classify_pq(p, q, d)
        if specs:
            return rng.choice(specs)


def sample_family_instances(n: int, seed: int) -> list[FamilyInstance]:
    rng = random.Random(seed)
    return [random_family_instance(rng) for _ in range(n)]


# --------------------------------------------------------------------------
# output


def write_catalog_jsonl(entries: Sequence[CatalogEntry], path: str) -> None:
    from .serialize import catalog_entry_to_json

    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(json.dumps(catalog_entry_to_json(e), sort_keys=True) + "\n")
    os.replace(tmp, path)


CSV_FIELDS = ["H", "dim", "volume", "pyramid", "r", "dual_volume", "invariant_factors", "class_id"]


def write_catalog_csv(entries: Sequence[CatalogEntry], path: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_FIELDS)
        for e in entries:
            w.writerow([
                " ".join(str(x) for row in e.H for x in row),
                e.dim,
                e.volume,
                "" if e.pyramid is None else e.pyramid,
                "" if e.index is None else e.index,
                "" if e.dual_volume is None else e.dual_volume,
                " ".join(str(f) for f in e.invariant_factors),
                e.class_id,
            ])
    os.replace(tmp, path)


__all__ = [
    "CLASSIFIERS",
    "CatalogEntry",
    "CrossCheckReport",
    "DeciderMismatch",
    "analyze_herm",
    "brute_force_catalog",
    "brute_force_gorenstein",
    "count_herm",
    "cross_check",
    "deduplicate",
    "enumerate_herm",
    "herm_key",
    "herm_recursive",
    "power_problems",
    "sample_family_instances",
    "write_catalog_csv",
    "write_catalog_jsonl",
]
