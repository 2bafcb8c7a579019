from fractions import Fraction
from itertools import product

import pytest

from gorlat.errors import (
    InvalidSpecError,
    NotCyclicNormalizableError,
    NotGorensteinError,
    PreconditionError,
)
from gorlat.families import (
    OneRowSpec,
    PowerSpec,
    PpSpec,
    PqSpec,
    PrimeSpec,
    TwoRowSpec,
    classify_pq,
    classify_prime,
    classify_prime_squared,
    displayed_group,
    enumerate_power_specs,
    generator_to_one_row,
    normalize_generator,
    one_row_dual,
    one_row_dual_volume,
    one_row_gorenstein,
    one_row_lambda_generator,
    one_row_simplex,
    power_dual,
    power_generators,
    power_simplex,
    power_translate,
    predicted_dual_volume,
    realize,
    two_row_bs_reduction,
    two_row_simplex,
)
from gorlat.gorenstein import certificate, gorenstein_index
from gorlat.simplex import (
    LatticeSimplex,
    groups_equivalent,
    is_lattice_pyramid,
    lambda_group,
    normalized_volume,
    unimodular_equivalent,
)

F = Fraction


def frac(*xs):
    return tuple(F(x) if isinstance(x, int) else F(*x) for x in xs)


# one row


def test_one_row_simplex_examples():
    assert one_row_simplex(OneRowSpec((3,))) == LatticeSimplex([(0,), (3,)])
    assert one_row_simplex(OneRowSpec((1, 3))) == LatticeSimplex([(0, 0), (1, 0), (2, 3)])
    assert one_row_simplex(OneRowSpec((1, 1, 2))) == LatticeSimplex(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])


def test_one_row_spec_validation():
    with pytest.raises(InvalidSpecError):
        OneRowSpec((4, 3))
    with pytest.raises(InvalidSpecError):
        OneRowSpec((0, 3))


def test_one_row_generator_examples():
    assert OneRowSpec((1, 3)).a0 == 1
    assert one_row_lambda_generator(OneRowSpec((1, 3))) == (F(1, 3),) * 3
    assert OneRowSpec((1, 1, 2)).a0 == 1
    assert one_row_lambda_generator(OneRowSpec((1, 1, 2))) == (F(1, 2),) * 4
    spec = OneRowSpec((1, 2))
    assert spec.a0 == 2
    assert one_row_lambda_generator(spec) == (0, F(1, 2), F(1, 2))
    assert is_lattice_pyramid(one_row_simplex(spec)) == 0


def test_one_row_gorenstein_examples():
    assert one_row_gorenstein(OneRowSpec((1, 3))) == 1
    assert one_row_gorenstein(OneRowSpec((1, 1, 2))) == 2
    assert one_row_gorenstein(OneRowSpec((2, 3, 4))) is None
    with pytest.raises(PreconditionError):
        one_row_gorenstein(OneRowSpec((1, 2)))


def test_one_row_dual_examples():
    assert set(one_row_dual(OneRowSpec((1, 3)), 1).vertices) == {(0, -1), (-3, 2), (3, -1)}
    assert one_row_gorenstein(OneRowSpec((3,))) is None
    spec = OneRowSpec((1, 1, 2))
    c = certificate(one_row_simplex(spec))
    assert set(one_row_dual(spec, 2).vertices) == set(c.dual.vertices)
    assert one_row_dual_volume(OneRowSpec((1, 3)), 1) == 9
    assert one_row_dual_volume(spec, 2) == 16
    with pytest.raises(PreconditionError):
        one_row_dual(spec, 1)


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)])
def test_one_row_all_ones_dual_volume(p, r):
    d = r * p - 1
    spec = OneRowSpec((1,) * (d - 1) + (p,))
    assert one_row_gorenstein(spec) == r
    assert one_row_dual_volume(spec, r) == r * p ** d


@pytest.mark.parametrize("d", range(1, 6))
def test_one_row_theorem_exhaustive(d):
    for ad in range(1, 9):
        for head in product(range(1, ad + 1), repeat=d - 1):
            spec = OneRowSpec(head + (ad,))
            simplex = one_row_simplex(spec)
            assert normalized_volume(simplex) == ad
            assert one_row_lambda_generator(spec) in lambda_group(simplex)
            if not spec.is_non_pyramid():
                continue
            r = one_row_gorenstein(spec)
            found = gorenstein_index(simplex)
            assert (r is None) == (found is None)
            if r is None:
                continue
            assert found == (r, (1,) * d)
            c = certificate(simplex)
            assert set(one_row_dual(spec, r).vertices) == set(c.dual.vertices)
            assert one_row_dual_volume(spec, r) == c.dual_volume


# generator normalization


def test_generator_to_one_row_examples():
    assert generator_to_one_row(frac((1, 3), (1, 3), (1, 3))) == OneRowSpec((1, 3))
    spec = generator_to_one_row(frac(0, (1, 2), (1, 2)))
    assert spec == OneRowSpec((1, 2)) and spec.a0 == 2


def test_generator_to_one_row_mixed_denominators():
    g = frac((1, 2), (1, 4), (1, 4))
    spec, perm = normalize_generator(g)
    assert spec == OneRowSpec((1, 4)) and spec.a0 == 2
    G = lambda_group(one_row_simplex(spec))
    assert tuple(g[i] for i in perm) in G


def test_generator_to_one_row_rejects():
    with pytest.raises(PreconditionError):
        generator_to_one_row(frac((1, 3), (1, 3)))
    # order 6 but no coordinate has denominator 6
    with pytest.raises(NotCyclicNormalizableError):
        generator_to_one_row(frac((1, 2), (1, 2), (1, 3), (2, 3)))


def test_generator_round_trip(rng):
    for _ in range(100):
        d = rng.randint(1, 5)
        ad = rng.randint(2, 9)
        spec = OneRowSpec(tuple(rng.randint(1, ad) for _ in range(d - 1)) + (ad,))
        g = one_row_lambda_generator(spec)
        back, perm = normalize_generator(g)
        G = lambda_group(one_row_simplex(back))
        assert G.order == ad
        assert tuple(g[i] for i in perm) in G
        assert unimodular_equivalent(one_row_simplex(spec), one_row_simplex(back))


# two rows


def test_two_row_examples():
    s = two_row_simplex(TwoRowSpec(2, (1, 2), (0, 0, 2)))
    assert s == LatticeSimplex([(0, 0, 0), (1, 0, 0), (1, 2, 0), (0, 0, 2)])
    assert normalized_volume(s) == 4
    assert normalized_volume(two_row_simplex(TwoRowSpec(1, (2,), (0, 3)))) == 6
    assert normalized_volume(two_row_simplex(TwoRowSpec(2, (1, 2), (0, 0, 2, 3)))) == 6


def test_two_row_validation():
    with pytest.raises(InvalidSpecError):
        TwoRowSpec(2, (1, 2), (0, 2))
    with pytest.raises(InvalidSpecError):
        TwoRowSpec(1, (2,), (3, 3))


def test_bs_reduction():
    with pytest.raises(NotGorensteinError):
        two_row_bs_reduction(TwoRowSpec(1, (2,), (1, 3)))
    assert two_row_bs_reduction(TwoRowSpec(1, (2,), (0, 3))) is None
    spec = TwoRowSpec(1, (2,), (2, 3))
    C = two_row_bs_reduction(spec)
    assert C.ad == 6
    assert unimodular_equivalent(two_row_simplex(spec), one_row_simplex(C))
    with pytest.raises(PreconditionError):
        two_row_bs_reduction(TwoRowSpec(1, (4,), (3, 4)))


def test_bs_reduction_agrees_with_geometry():
    # every prime-diagonal two-row record: b_s outside {0, q-1} is never Gorenstein
    for p, q in [(2, 3), (3, 2), (2, 2), (3, 3), (2, 5)]:
        for d in range(2, 5):
            for s in range(1, d):
                for A in product(range(p), repeat=s - 1):
                    for B in product(range(q), repeat=d - 1):
                        spec = TwoRowSpec(s, A + (p,), B + (q,))
                        simplex = two_row_simplex(spec)
                        try:
                            C = two_row_bs_reduction(spec)
                        except NotGorensteinError:
                            assert gorenstein_index(simplex) is None
                            continue
                        if C is not None:
                            assert unimodular_equivalent(simplex, one_row_simplex(C))


# classifiers


def test_classify_prime_examples():
    assert classify_prime(3, 2) == [(1, (F(1, 3),) * 3)]
    assert classify_prime(2, 2) == []
    assert classify_prime(2, 3) == [(2, (F(1, 2),) * 4)]
    with pytest.raises(PreconditionError):
        classify_prime(4, 3)


def test_classify_prime_squared_examples():
    out = classify_prime_squared(2, 3)
    case1 = [x for x in out if x.case == 1]
    case2 = [x for x in out if x.case == 2]
    assert [(x.r, x.s) for x in case1] == [(1, 0)]
    assert case1[0].generators() == [(F(1, 4),) * 4]
    assert sorted(x.s for x in case2) == [1, 2] and all(x.r == 2 for x in case2)
    s1 = next(x for x in case2 if x.s == 1)
    assert set(s1.generators()) == {frac((1, 2), (1, 2), 0, 0), frac(0, 0, (1, 2), (1, 2))}
    two = classify_prime_squared(2, 2)
    assert [(x.case, x.r, x.s) for x in two] == [(1, 1, 1)]
    assert two[0].generators() == [frac((1, 2), (1, 4), (1, 4))]
    three = classify_prime_squared(3, 2)
    assert [(x.case, x.r, x.s, x.a) for x in three] == [(2, 1, 1, ())]


def test_classify_pq_examples():
    out = classify_pq(2, 3, 2)
    assert [(x.r, x.s1, x.s2, x.s3) for x in out] == [(1, 1, 1, 1)]
    assert out[0].generators() == [frac((1, 2), (1, 3), (1, 6))]
    assert any((x.r, x.s1, x.s2, x.s3) == (1, 0, 0, 6) for x in classify_pq(2, 3, 5))
    assert classify_pq(2, 3, 1) == []
    with pytest.raises(PreconditionError):
        classify_pq(3, 3, 2)
    with pytest.raises(InvalidSpecError):
        PqSpec(2, 3, 0, 3, 0, 1)


@pytest.mark.parametrize("inst", [
    *[PrimeSpec(p, r * p - 1, r) for p, r in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]],
    *classify_prime_squared(2, 3), *classify_prime_squared(2, 5), *classify_prime_squared(3, 5),
    *classify_pq(2, 3, 4), *classify_pq(2, 5, 6), *classify_pq(3, 5, 6),
], ids=repr)
def test_classifier_outputs_are_realised(inst):
    simplex = realize(inst)
    group = lambda_group(simplex)
    assert is_lattice_pyramid(simplex, group) is None
    assert group.order == normalized_volume(simplex)
    assert groups_equivalent(group, displayed_group(inst))
    c = certificate(simplex)
    assert c.index == inst.r
    assert c.dual_volume == predicted_dual_volume(inst)


def test_pp_two_row_realisation_is_exact():
    for inst in classify_prime_squared(3, 5):
        if inst.case == 2:
            assert lambda_group(two_row_simplex(inst.two_row())) == displayed_group(inst)


# power family


def test_power_example_p2():
    spec = PowerSpec(2, (1, 3), ((), (1,)))
    assert spec.t() == {2: 1} and spec.r == 2 and spec.ell == 2
    assert set(power_generators(spec)) == {frac((1, 2), (1, 2), 0, 0), frac(0, 0, (1, 2), (1, 2))}
    simplex, r = power_simplex(spec)
    assert r == 2 and normalized_volume(simplex) == 4
    c = certificate(simplex)
    assert c.translate == power_translate(spec)
    assert set(power_dual(spec).vertices) == set(c.dual.vertices)
    assert c.dual_volume == predicted_dual_volume(spec) == 8


def test_power_example_p3():
    specs = list(enumerate_power_specs(3, 5, 2))
    assert specs
    for spec in specs:
        simplex, r = power_simplex(spec)
        assert r == 2 and normalized_volume(simplex) == 9


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_power_ell_one_is_prime_case(p, r):
    d = r * p - 1
    (spec,) = enumerate_power_specs(p, d, 1)
    gens = power_generators(spec)
    assert gens == [(F(1, p),) * (d + 1)]
    one = OneRowSpec((1,) * (d - 1) + (p,))
    assert set(power_dual(spec).vertices) == set(one_row_dual(one, r).vertices)


def test_power_validation():
    with pytest.raises(InvalidSpecError):
        PowerSpec(2, (1, 3), ((), (2,)))
    with pytest.raises(InvalidSpecError):
        PowerSpec(2, (2, 3), ((1,), (1,)))
    with pytest.raises(InvalidSpecError):
        PowerSpec(4, (3,), ((1, 1),))


# dual volumes


def test_predicted_dual_volume_examples():
    assert predicted_dual_volume(PqSpec(2, 3, 1, 1, 1, 1)) == 6
    assert predicted_dual_volume(PpSpec(2, 2, 1, 1, 1)) == 8
    assert predicted_dual_volume(PpSpec(2, 3, 2, 2, 1)) == 8
    assert predicted_dual_volume(PrimeSpec(3, 2, 1)) == 9
    with pytest.raises(InvalidSpecError):
        predicted_dual_volume("nope")


def test_pp_validation():
    with pytest.raises(InvalidSpecError):
        PpSpec(2, 3, 1, 1, 1)
    with pytest.raises(InvalidSpecError):
        PpSpec(2, 3, 2, 2, 2, (1, 1))
    with pytest.raises(InvalidSpecError):
        PpSpec(2, 3, 2, 3, 1)
