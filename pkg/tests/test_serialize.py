import json
from fractions import Fraction

import pytest

from gorlat.families import OneRowSpec, PowerSpec, PpSpec, PqSpec, PrimeSpec, TwoRowSpec
from gorlat.gorenstein import certificate
from gorlat.serialize import (
    ParseError,
    certificate_from_json,
    certificate_to_json,
    dec_int,
    dec_rat,
    enc_rat,
    group_from_json,
    group_to_json,
    simplex_from_json,
    simplex_to_json,
    spec_from_json,
    spec_to_json,
)
from gorlat.simplex import LatticeSimplex, lambda_group

TRI = LatticeSimplex([(0, 0), (1, 0), (2, 3)])


def test_scalars():
    assert dec_int("-12") == -12
    assert dec_int(7) == 7
    huge = 10**40 + 1
    assert dec_int(str(huge)) == huge
    assert enc_rat(Fraction(-2, 4)) == "-1/2"
    assert dec_rat("3/6") == Fraction(1, 2)
    assert dec_rat("5") == 5
    for bad in (True, "1.5", "x", None):
        with pytest.raises(ParseError):
            dec_int(bad)
    with pytest.raises(ParseError):
        dec_rat("1/0")


def test_simplex_round_trip():
    doc = simplex_to_json(TRI)
    assert doc == {"dim": "2", "vertices": [["0", "0"], ["1", "0"], ["2", "3"]]}
    assert simplex_from_json(json.loads(json.dumps(doc))) == TRI
    with pytest.raises(ParseError):
        simplex_from_json({"dim": "3", "vertices": doc["vertices"]})
    with pytest.raises(ParseError):
        simplex_from_json({"vertices": [["0", "0"], ["1", "0"]]})
    with pytest.raises(ParseError):
        simplex_from_json([1, 2])


def test_group_round_trip():
    g = lambda_group(TRI)
    doc = group_to_json(g)
    assert doc == {"order": "3", "invariant_factors": ["3"], "generators": [["1/3", "1/3", "1/3"]]}
    assert group_from_json(doc) == g
    with pytest.raises(ParseError):
        group_from_json({**doc, "order": "4"})


def test_certificate_json():
    doc = certificate_to_json(certificate(TRI))
    assert doc["index"] == 1
    assert doc["dual_volume"] == "9"
    assert doc["translate"] == ["1", "1"]
    back = certificate_from_json(json.loads(json.dumps(doc)))
    assert back["dual_vertices"] == ((3, -1), (-3, 2), (0, -1))
    with pytest.raises(ParseError):
        certificate_from_json({**doc, "index": "1"})


@pytest.mark.parametrize("spec", [
    OneRowSpec((1, 2, 2, 4)),
    TwoRowSpec(2, (1, 2), (0, 0, 2)),
    PowerSpec(2, (1, 3), ((), (1,))),
    PqSpec(2, 3, 1, 1, 1, 1),
    PpSpec(2, 3, 2, 2, 2, (1,)),
    PrimeSpec(3, 2, 1),
])
def test_spec_round_trip(spec):
    doc = json.loads(json.dumps(spec_to_json(spec)))
    assert doc["kind"] == spec.kind
    assert spec_from_json(doc) == spec


def test_unknown_kind():
    with pytest.raises(ParseError):
        spec_from_json({"kind": "triangle"})
