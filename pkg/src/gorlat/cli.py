"""``gorlat`` command line.

Exit codes: 0 pass, 1 theorem discrepancy, 2 usage or parse error,
3 degenerate input, 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from . import families as fam
from .errors import (
    CapacityError,
    DegenerateSimplexError,
    DimensionError,
    GorlatError,
    InvalidSpecError,
    PreconditionError,
    SingularMatrixError,
)
from .exact import det, hnf_decompose, smith_decompose
from .gorenstein import certificate
from .oracle import (
    brute_force_catalog,
    cross_check,
    power_problems,
    sample_family_instances,
    write_catalog_csv,
    write_catalog_jsonl,
)
from .serialize import (
    ParseError,
    certificate_to_json,
    dec_matrix,
    enc_int,
    enc_matrix,
    enc_vec,
    group_to_json,
    simplex_from_json,
    simplex_to_json,
    spec_from_json,
    spec_to_json,
)
from .simplex import is_lattice_pyramid, lambda_group, normalized_volume, to_hnf_form

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_DEGENERATE, EXIT_CAPACITY = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _load_json(src: str) -> Any:
    """A file path, ``-`` for stdin, or an inline JSON document."""
    try:
        if src == "-":
            return json.load(sys.stdin)
        if os.path.exists(src):
            with open(src, encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(src)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {src!r}: {exc}") from exc


def _emit(doc: Any, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        tmp = f"{out}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    else:
        sys.stdout.write(text)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


# commands


def analysis_report(simplex) -> dict:
    group = lambda_group(simplex)
    form = to_hnf_form(simplex)
    cert = certificate(simplex)
    return {
        "simplex": simplex_to_json(simplex),
        "volume": enc_int(normalized_volume(simplex)),
        "hnf": {"H": enc_matrix(form.H), "nonstandard_rows": enc_int(form.nonstandard_rows)},
        "group": group_to_json(group),
        "pyramid_index": is_lattice_pyramid(simplex, group),
        "certificate": certificate_to_json(cert) if cert else None,
    }


def cmd_analyze(args) -> int:
    doc = _load_json(args.simplex)
    # a previous report is accepted too, so reports round-trip
    if isinstance(doc, dict) and "simplex" in doc:
        doc = doc["simplex"]
    _emit(analysis_report(simplex_from_json(doc)), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    entries = brute_force_catalog(args.dim, args.volume, dedupe=args.dedupe)
    if args.out:
        write_catalog_jsonl(entries, args.out)
    if args.csv:
        write_catalog_csv(entries, args.csv)
    gor = [e for e in entries if e.gorenstein]
    essential = [e for e in gor if e.pyramid is None]
    label = "classes" if args.dedupe else "matrices"
    print(f"d={args.dim} m={args.volume}: {len(entries)} {label}, {len(gor)} Gorenstein, "
          f"{len(essential)} non-pyramid Gorenstein")
    return EXIT_OK


def _verify_classifier(name: str, moduli: list[int], dmin: int, dmax: int) -> tuple[bool, list[str]]:
    ok, lines = True, []
    for m in moduli:
        for d in range(dmin, dmax + 1):
            report = cross_check(d, m, name)
            lines.append(report.summary())
            if not report.passed:
                ok = False
                for inst in report.missing:
                    lines.append(f"  missing: {json.dumps(spec_to_json(inst))}")
                for e in report.unpredicted:
                    lines.append(f"  unpredicted: H={e.H} r={e.index}")
                for inst, why in report.invalid_predictions:
                    lines.append(f"  invalid ({','.join(why)}): {json.dumps(spec_to_json(inst))}")
                for inst, want, got in report.dual_volume_mismatches:
                    lines.append(f"  dual volume {got} != predicted {want}: {json.dumps(spec_to_json(inst))}")
    return ok, lines


def _verify_power(p: int, dmax: int, ell_max: int) -> tuple[bool, list[str]]:
    ok, lines = True, []
    for d in range(1, dmax + 1):
        for ell in range(1, min(ell_max, d) + 1):
            n = bad = 0
            for spec in fam.enumerate_power_specs(p, d, ell):
                n += 1
                problems = power_problems(spec)
                if problems:
                    bad += 1
                    ok = False
                    lines.append(f"  {','.join(problems)}: {json.dumps(spec_to_json(spec))}")
            if n:
                lines.append(f"power p={p} d={d} ell={ell}: {n} instances, {bad} failing")
    return ok, lines


def _verify_dual_volume(samples: int, seed: int) -> tuple[bool, list[str]]:
    ok, lines = True, []
    for inst in sample_family_instances(samples, seed):
        cert = certificate(fam.realize(inst))
        want = fam.predicted_dual_volume(inst)
        got = cert.dual_volume if cert else None
        if got != want:
            ok = False
            lines.append(f"  dual volume {got} != predicted {want}: {json.dumps(spec_to_json(inst))}")
    lines.append(f"dual-volume: {samples} samples (seed {seed}) [{'ok' if ok else 'FAIL'}]")
    return ok, lines


def cmd_verify(args) -> int:
    t = args.theorem
    if t == "prime":
        if args.p is None:
            raise ParseError("--p is required")
        ok, lines = _verify_classifier("prime", [args.p], args.dmin, args.dmax)
    elif t == "prime-squared":
        if args.p is None:
            raise ParseError("--p is required")
        ok, lines = _verify_classifier("prime-squared", [args.p ** 2], args.dmin, args.dmax)
    elif t == "pq":
        if args.p is None or args.q is None:
            raise ParseError("--p and --q are required")
        ok, lines = _verify_classifier("pq", [args.p * args.q], args.dmin, args.dmax)
    elif t == "power":
        if args.p is None:
            raise ParseError("--p is required")
        ok, lines = _verify_power(args.p, args.dmax, args.ell_max)
    else:
        ok, lines = _verify_dual_volume(args.samples, args.seed)
    print("\n".join(lines))
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_DISCREPANCY


def _spec_from_flags(args) -> Any:
    k = args.kind
    need = lambda *names: [n for n in names if getattr(args, n) is None]  # noqa: E731
    required = {
        "one_row": ("A",), "two_row": ("s", "A", "B"), "power": ("p", "s", "a"),
        "pq": ("p", "q", "s1", "s2", "s3"), "pp": ("p", "d", "case", "s"),
    }[k]
    missing = need(*required)
    if missing:
        raise ParseError(f"--kind {k} needs " + ", ".join(f"--{m}" for m in missing))
    if k == "one_row":
        return fam.OneRowSpec(_ints(args.A))
    if k == "two_row":
        return fam.TwoRowSpec(int(args.s), _ints(args.A), _ints(args.B))
    if k == "power":
        rows = tuple(_ints(row) for row in args.a.split(";"))
        return fam.PowerSpec(args.p, _ints(args.s), rows)
    if k == "pq":
        total = args.s1 * args.q + args.s2 * args.p + args.s3
        if total % (args.p * args.q):
            raise InvalidSpecError("s1 q + s2 p + s3 is not a multiple of p q")
        return fam.PqSpec(args.p, args.q, args.s1, args.s2, args.s3, total // (args.p * args.q))
    a = _ints(args.a) if args.a else ()
    r = _pp_index(args.p, args.d, args.case, int(args.s))
    return fam.PpSpec(args.p, args.d, r, args.case, int(args.s), a)


def _pp_index(p: int, d: int, case: int, s: int) -> int:
    if case == 1:
        num = (d - s) + p * s + 1
        if num % (p * p):
            raise InvalidSpecError("(d - s) + p s + 1 is not a multiple of p^2")
        return num // (p * p)
    if (d + 1) % p:
        raise InvalidSpecError("d + 1 is not a multiple of p")
    return (d + 1) // p


def cmd_family(args) -> int:
    spec = spec_from_json(_load_json(args.spec)) if args.spec else _spec_from_flags(args)
    if isinstance(spec, fam.TwoRowSpec):
        simplex = fam.two_row_simplex(spec)
    else:
        simplex = fam.realize(spec)
    group = lambda_group(simplex)
    cert = certificate(simplex)
    doc = {
        "spec": spec_to_json(spec),
        "simplex": simplex_to_json(simplex),
        "group": group_to_json(group),
        "certificate": certificate_to_json(cert) if cert else None,
    }
    if cert is not None and not isinstance(spec, fam.TwoRowSpec):
        doc["predicted_dual_volume"] = enc_int(fam.predicted_dual_volume(spec))
    _emit(doc, args.out)
    return EXIT_OK


def cmd_hnf(args) -> int:
    M = dec_matrix(_load_json(args.matrix))
    hnf = hnf_decompose(M)
    snf = smith_decompose(M)
    _emit({
        "det": enc_int(det(M)),
        "H": enc_matrix(hnf.H),
        "U": enc_matrix(hnf.U),
        "smith": {"factors": enc_vec(snf.factors), "L": enc_matrix(snf.L), "R": enc_matrix(snf.R)},
    }, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gorlat", description="Gorenstein lattice simplices with exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="report volume, group and certificate of a simplex")
    p.add_argument("simplex", help="simplex JSON: path, '-' or inline")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="brute-force catalog of Herm(d, m)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--volume", type=int, required=True)
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("--out", help="JSON-lines catalog")
    p.add_argument("--csv", help="CSV summary")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check a classification against brute force")
    p.add_argument("--theorem", required=True,
                   choices=["prime", "prime-squared", "pq", "power", "dual-volume"])
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--ell-max", type=int, default=3)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="construct a family instance")
    p.add_argument("--spec", help="family JSON with a 'kind' field")
    p.add_argument("--kind", choices=["one_row", "two_row", "power", "pq", "pp"])
    p.add_argument("--A", help="comma-separated")
    p.add_argument("--B", help="comma-separated")
    p.add_argument("--s", help="integer, or comma-separated positions for power")
    p.add_argument("--a", help="coefficients; rows separated by ';' for power")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--case", type=int, choices=[1, 2])
    p.add_argument("--s1", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--s3", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("hnf", help="Hermite and Smith decompositions of a matrix")
    p.add_argument("matrix", help="matrix JSON: path, '-' or inline")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hnf)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "family" and not args.spec and not args.kind:
        parser.error("family needs --spec or --kind")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"gorlat: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DegenerateSimplexError, SingularMatrixError) as exc:
        print(f"gorlat: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ParseError, DimensionError, InvalidSpecError, PreconditionError, KeyError, ValueError) as exc:
        print(f"gorlat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GorlatError as exc:
        print(f"gorlat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
