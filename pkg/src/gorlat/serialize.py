"""JSON encodings.

Integers are decimal strings and rationals are ``"num/den"`` strings, so
documents survive any JSON parser without precision loss. The Gorenstein
index and position indices are plain JSON integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .errors import InvalidSpecError
from .families import OneRowSpec, PowerSpec, PpSpec, PqSpec, PrimeSpec, TwoRowSpec
from .gorenstein import GorensteinCertificate
from .simplex import LambdaGroup, LatticeSimplex


class ParseError(ValueError):
    """Malformed JSON document."""


def enc_int(n: int) -> str:
    return str(int(n))


def dec_int(x: Any) -> int:
    if isinstance(x, bool):
        raise ParseError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip(), 10)
        except ValueError:
            pass
    raise ParseError(f"expected a decimal integer string, got {x!r}")


def enc_rat(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def dec_rat(x: Any) -> Fraction:
    if isinstance(x, str) and "/" in x:
        num, _, den = x.partition("/")
        d = dec_int(den)
        if d == 0:
            raise ParseError(f"zero denominator in {x!r}")
        return Fraction(dec_int(num), d)
    return Fraction(dec_int(x))


def enc_vec(v: Sequence[int]) -> list[str]:
    return [enc_int(x) for x in v]


def enc_matrix(M: Sequence[Sequence[int]]) -> list[list[str]]:
    return [enc_vec(row) for row in M]


def _list(x: Any, what: str) -> list:
    if not isinstance(x, list):
        raise ParseError(f"{what} must be a JSON array")
    return x


def dec_vec(x: Any) -> tuple[int, ...]:
    return tuple(dec_int(v) for v in _list(x, "vector"))


def dec_matrix(x: Any) -> tuple[tuple[int, ...], ...]:
    return tuple(dec_vec(row) for row in _list(x, "matrix"))


def _field(obj: Any, key: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if key not in obj:
        raise ParseError(f"missing field {key!r}")
    return obj[key]


# simplices and groups


def simplex_to_json(s: LatticeSimplex) -> dict:
    return {"dim": enc_int(s.dim), "vertices": enc_matrix(s.vertices)}


def simplex_from_json(obj: Any) -> LatticeSimplex:
    """Parse a simplex document; degenerate vertex sets raise from :class:`LatticeSimplex`."""
    verts = dec_matrix(_field(obj, "vertices"))
    if "dim" in obj:
        d = dec_int(obj["dim"])
        if len(verts) != d + 1 or any(len(v) != d for v in verts):
            raise ParseError(f"a {d}-simplex needs {d + 1} vertices of length {d}")
    elif any(len(v) != len(verts) - 1 for v in verts):
        raise ParseError("vertex count must be one more than the coordinate length")
    return LatticeSimplex(verts)


def group_to_json(g: LambdaGroup) -> dict:
    return {
        "order": enc_int(g.order),
        "invariant_factors": enc_vec(g.invariant_factors),
        "generators": [[enc_rat(x) for x in gen] for gen in g.generators],
    }


def group_from_json(obj: Any, ambient_len: int | None = None) -> LambdaGroup:
    gens = [tuple(dec_rat(x) for x in _list(gen, "generator"))
            for gen in _list(_field(obj, "generators"), "generators")]
    factors = dec_vec(_field(obj, "invariant_factors"))
    n = ambient_len if ambient_len is not None else (len(gens[0]) if gens else 0)
    if gens and n == 0:
        raise ParseError("cannot infer ambient dimension")
    group = LambdaGroup(n, gens, factors)
    if "order" in obj and dec_int(obj["order"]) != group.order:
        raise ParseError("order does not match the invariant factors")
    return group


def certificate_to_json(c: GorensteinCertificate) -> dict:
    return {
        "index": c.index,
        "translate": enc_vec(c.translate),
        "dual_vertices": enc_matrix(c.dual.vertices),
        "dual_volume": enc_int(c.dual_volume),
    }


def certificate_from_json(obj: Any) -> dict:
    """Decoded fields; rebuilding the full certificate needs the simplex."""
    index = _field(obj, "index")
    if isinstance(index, bool) or not isinstance(index, int):
        raise ParseError("certificate index must be a JSON integer")
    return {
        "index": index,
        "translate": dec_vec(_field(obj, "translate")),
        "dual_vertices": dec_matrix(_field(obj, "dual_vertices")),
        "dual_volume": dec_int(_field(obj, "dual_volume")),
    }


# family specs


def spec_to_json(spec) -> dict:
    if isinstance(spec, OneRowSpec):
        return {"kind": "one_row", "A": enc_vec(spec.A)}
    if isinstance(spec, TwoRowSpec):
        return {"kind": "two_row", "s": enc_int(spec.s), "A": enc_vec(spec.A), "B": enc_vec(spec.B)}
    if isinstance(spec, PowerSpec):
        return {"kind": "power", "p": enc_int(spec.p), "s": enc_vec(spec.s),
                "a": [enc_vec(row) for row in spec.a]}
    if isinstance(spec, PqSpec):
        return {"kind": "pq", **{k: enc_int(getattr(spec, k)) for k in ("p", "q", "s1", "s2", "s3", "r")}}
    if isinstance(spec, PpSpec):
        return {"kind": "pp", **{k: enc_int(getattr(spec, k)) for k in ("p", "d", "r", "case", "s")},
                "a": enc_vec(spec.a)}
    if isinstance(spec, PrimeSpec):
        return {"kind": "prime", **{k: enc_int(getattr(spec, k)) for k in ("p", "d", "r")}}
    raise InvalidSpecError(f"cannot serialize {spec!r}")


def spec_from_json(obj: Any):
    kind = _field(obj, "kind")
    f = lambda k: dec_int(_field(obj, k))  # noqa: E731
    if kind == "one_row":
        return OneRowSpec(dec_vec(_field(obj, "A")))
    if kind == "two_row":
        return TwoRowSpec(f("s"), dec_vec(_field(obj, "A")), dec_vec(_field(obj, "B")))
    if kind == "power":
        return PowerSpec(f("p"), dec_vec(_field(obj, "s")), dec_matrix(_field(obj, "a")))
    if kind == "pq":
        return PqSpec(f("p"), f("q"), f("s1"), f("s2"), f("s3"), f("r"))
    if kind == "pp":
        return PpSpec(f("p"), f("d"), f("r"), f("case"), f("s"), dec_vec(obj.get("a", [])))
    if kind == "prime":
        return PrimeSpec(f("p"), f("d"), f("r"))
    raise ParseError(f"unknown family kind {kind!r}")


def catalog_entry_to_json(e) -> dict:
    return {
        "H": enc_matrix(e.H),
        "dim": enc_int(e.dim),
        "volume": enc_int(e.volume),
        "pyramid": e.pyramid,
        "group": {
            "order": enc_int(e.volume),
            "invariant_factors": enc_vec(e.invariant_factors),
            "generators": [[enc_rat(x) for x in g] for g in e.generators],
        },
        "certificate": certificate_to_json(e.certificate) if e.certificate else None,
        "class_id": e.class_id,
    }
