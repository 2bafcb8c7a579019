from fractions import Fraction

import pytest

from gorlat.errors import CapacityError, PreconditionError
from gorlat.gorenstein import (
    certificate,
    dual_normalized_volume,
    dual_polytope,
    gorenstein_index,
    interior_lattice_points,
    interior_points_dilate,
    is_gorenstein,
    reflexive_check,
    verify_certificate,
)
from gorlat.oracle import brute_force_gorenstein, enumerate_herm
from gorlat.simplex import LatticeSimplex, pyramid, simplex_from_hnf

UNIT2 = LatticeSimplex([(0, 0), (1, 0), (0, 1)])
TRI = LatticeSimplex([(0, 0), (1, 0), (2, 3)])
TRI_REFLEXIVE = LatticeSimplex([(-1, -1), (0, -1), (1, 2)])


def box_gorenstein(simplex, cap=10**6):
    """Index by bounding-box scan of each dilate: one interior point, reflexive translate."""
    for r in range(1, simplex.dim + 2):
        dilate = simplex.scaled(r)
        pts = interior_lattice_points(dilate, cap=cap, limit=2)
        if len(pts) == 1 and reflexive_check(dilate.translated([-x for x in pts[0]])):
            return r, pts[0]
    return None


def test_index_examples():
    assert gorenstein_index(UNIT2) == (3, (1, 1))
    assert gorenstein_index(TRI) == (1, (1, 1))
    r, _ = gorenstein_index(LatticeSimplex([(0, 0), (1, 0), (1, 2)]))
    assert r == 2


def test_non_gorenstein_example():
    # a_0 = 2 for A = (2, 3, 4), and 3 does not divide 4
    s = LatticeSimplex([(0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 1, 4)])
    assert certificate(s) is None
    assert not is_gorenstein(s)
    assert box_gorenstein(s) is None


def test_reflexive_check_examples():
    assert reflexive_check(TRI_REFLEXIVE)
    assert reflexive_check(LatticeSimplex([(-1, -1), (2, -1), (-1, 2)]))
    assert not reflexive_check(LatticeSimplex([(-1, -1), (3, -1), (-1, 3)]))
    with pytest.raises(PreconditionError):
        reflexive_check(UNIT2)


def test_dual_polytope_examples():
    F = Fraction
    dual = dual_polytope(TRI_REFLEXIVE)
    assert dual.vertex_set() == {(F(0), F(-1)), (F(-3), F(2)), (F(3), F(-1))}
    d2 = dual_polytope(LatticeSimplex([(-1, -1), (2, -1), (-1, 2)]))
    assert d2.vertex_set() == {(F(-1), F(0)), (F(0), F(-1)), (F(1), F(1))}
    # origin on the boundary
    with pytest.raises(PreconditionError):
        dual_polytope(LatticeSimplex([(-1, -1), (1, -1), (-1, 1)]))


def test_biduality():
    for P in (TRI_REFLEXIVE, LatticeSimplex([(-1, -1), (2, -1), (-1, 2)])):
        back = dual_polytope(dual_polytope(P).to_lattice())
        assert back.to_lattice().vertices and back.vertex_set() == {tuple(map(Fraction, v)) for v in P.vertices}


def test_dual_volumes():
    assert dual_normalized_volume(TRI_REFLEXIVE) == 9
    assert dual_normalized_volume(LatticeSimplex([(-1,), (1,)])) == 2
    with pytest.raises(PreconditionError):
        dual_normalized_volume(LatticeSimplex([(-1, -1), (3, -1), (-1, 3)]))


def test_certificate_examples():
    c = certificate(TRI)
    assert (c.index, c.translate, c.dual_volume) == (1, (1, 1), 9)
    seg = certificate(LatticeSimplex([(0,), (1,)]))
    assert (seg.index, seg.translate, seg.dual_volume) == (2, (1,), 2)
    assert set(seg.dual.vertices) == {(1,), (-1,)}


def test_certificate_tamper_detected():
    c = certificate(TRI)
    bad = type(c)(c.index, (0, 1), c.reflexive_simplex, c.dual, c.dual_volume)
    with pytest.raises(AssertionError):
        verify_certificate(TRI, bad)


def test_interior_points_examples():
    assert interior_lattice_points(UNIT2) == []
    assert interior_lattice_points(UNIT2.scaled(3)) == [(1, 1)]
    assert interior_lattice_points(TRI_REFLEXIVE) == [(0, 0)]


def test_interior_points_capacity():
    with pytest.raises(CapacityError):
        interior_lattice_points(UNIT2.scaled(50), cap=100)


def test_interior_points_capacity_env(monkeypatch):
    monkeypatch.setenv("GORLAT_MAX_BOX", "10")
    with pytest.raises(CapacityError):
        interior_lattice_points(UNIT2.scaled(5))


@pytest.mark.parametrize("d,m", [(d, m) for d in (1, 2, 3) for m in range(1, 7)])
def test_box_and_barycentric_interior_points_agree(d, m):
    for H in enumerate_herm(d, m):
        s = simplex_from_hnf(H)
        for r in range(1, d + 2):
            assert interior_points_dilate(s, r) == interior_lattice_points(s.scaled(r))


@pytest.mark.parametrize("d,m", [(d, m) for d in (1, 2, 3, 4) for m in range(1, 9)])
def test_linear_system_matches_interior_point_decider(d, m):
    for H in enumerate_herm(d, m):
        s = simplex_from_hnf(H)
        assert gorenstein_index(s) == brute_force_gorenstein(s)


@pytest.mark.parametrize("d,m", [(d, m) for d in (1, 2, 3, 4) for m in range(1, 9)])
def test_linear_system_matches_box_scan(d, m):
    for H in enumerate_herm(d, m):
        s = simplex_from_hnf(H)
        assert gorenstein_index(s) == box_gorenstein(s, cap=10**7)


def test_certificate_invariants_on_catalog():
    for H in enumerate_herm(3, 6):
        s = simplex_from_hnf(H)
        c = certificate(s)
        if c is None:
            continue
        assert interior_lattice_points(c.reflexive_simplex) == [(0,) * s.dim]
        for w in c.dual.vertices:
            assert max(sum(a * b for a, b in zip(w, x)) for x in c.reflexive_simplex.vertices) == 1


def test_pyramid_raises_index():
    for H in enumerate_herm(3, 4):
        s = simplex_from_hnf(H)
        c = certificate(s)
        if c is None:
            assert certificate(pyramid(s)) is None
        else:
            assert certificate(pyramid(s)).index == c.index + 1
