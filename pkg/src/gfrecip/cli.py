"""Command-line surface.

Every operation is exposed as a subcommand with reproducible,
machine-readable output: JSON on stdout (CSV for census sweeps on
request), diagnostics on stderr.  Exit codes: 0 ok, 1 domain error,
2 verification failure, 3 resource/budget error.  Identical inputs and
seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, census, recip, verify
from .errors import DomainError, ResourceError, VerificationError
from .factor import DEFAULT_SEED, factor_count, factorize
from .field import Field, parse_field_spec
from .poly import Poly

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_RESOURCE = 3


def _field_from_args(args) -> Field:
    fld = parse_field_spec(args.field)
    modulus = getattr(args, "modulus", None)
    if modulus is not None:
        coeffs = [int(tok) for tok in modulus.split(",")]
        fld = Field(fld.p, fld.e, coeffs)
    return fld


def _parse_a(fld: Field, text: str):
    a = fld.parse(text)
    if not a:
        raise DomainError("the parameter a must be nonzero")
    return a


def _emit(args, payload: dict, extra_meta: dict | None = None) -> None:
    meta = {"field": getattr(args, "field", None) or getattr(args, "fields", None),
            "version": __version__}
    if getattr(args, "modulus", None):
        meta["modulus"] = args.modulus
    if extra_meta:
        meta.update(extra_meta)
    doc = {
        "status": "ok",
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "payload": payload,
        "metadata": meta,
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _cmd_recip(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    f = Poly.from_string(fld, args.poly)
    out = recip.a_reciprocal(f, a)
    _emit(args, {
        "input": f.to_string(),
        "a": str(a),
        "result": out.to_string(),
        "pretty": out.pretty(),
    })
    return EXIT_OK


def _cmd_classify(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    f = Poly.from_string(fld, args.poly)
    kind = recip.classify(f, a)
    _emit(args, {
        "poly": f.to_string(),
        "a": str(a),
        "verdict": kind.verdict.value,
        "half_degree": kind.half_degree,
    })
    return EXIT_OK


def _cmd_parity(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    f = Poly.from_string(fld, args.poly)
    verdict = recip.parity_indicator(f, a)
    payload = {
        "poly": f.to_string(),
        "a": str(a),
        "verdict": verdict.verdict.value,
        "indicator": str(verdict.indicator),
        "reason": verdict.reason,
    }
    if args.verify:
        r = factor_count(f, with_multiplicity=True, seed=args.seed)
        oracle = {"factor_count_with_multiplicity": r}
        if verdict.verdict is not recip.Parity.NOT_APPLICABLE:
            expected = recip.Parity.EVEN if r % 2 == 0 else recip.Parity.ODD
            oracle["agrees"] = verdict.verdict is expected
        payload["oracle"] = oracle
    _emit(args, payload, {"seed": args.seed} if args.verify else None)
    return EXIT_OK


def _cmd_transform(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    f = Poly.from_string(fld, args.poly)
    out = recip.quadratic_transform(f, a)
    _emit(args, {"input": f.to_string(), "a": str(a),
                 "result": out.to_string(), "pretty": out.pretty()})
    return EXIT_OK


def _cmd_invtransform(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    f = Poly.from_string(fld, args.poly)
    out = recip.inverse_quadratic_transform(f, a)
    _emit(args, {"input": f.to_string(), "a": str(a),
                 "result": out.to_string(), "pretty": out.pretty()})
    return EXIT_OK


def _cmd_factor(args) -> int:
    fld = _field_from_args(args)
    f = Poly.from_string(fld, args.poly)
    result = factorize(f, seed=args.seed)
    _emit(args, {
        "input": f.to_string(),
        "unit": str(result.unit),
        "factors": [{"poly": g.to_string(), "pretty": g.pretty(), "multiplicity": m}
                    for g, m in result.factors],
        "count_distinct": result.count(False),
        "count_with_multiplicity": result.count(True),
    }, {"seed": args.seed})
    return EXIT_OK


def _cmd_count(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    row = census.census_row(fld, a, args.n, enumerate_too=args.enumerate)
    _emit(args, {
        "q": row.q,
        "a": str(row.a),
        "n": row.n,
        "delta": row.delta,
        "si_formula": row.si_formula,
        "si_enumerated": row.si_enumerated,
        "agreement": row.agreement,
    })
    return EXIT_OK


def _cmd_census(args) -> int:
    fields = [parse_field_spec(tok) for tok in args.fields.split(",")]
    rows = census.census_sweep(fields, args.nmax)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(census.census_csv(rows))
        _emit(args, {"rows": len(rows), "out": args.out,
                     "all_agree": all(row.agreement for row in rows)})
    elif args.csv:
        sys.stdout.write(census.census_csv(rows))
    else:
        _emit(args, {"rows": [{
            "q": row.q, "a": str(row.a), "n": row.n, "delta": row.delta,
            "si_formula": row.si_formula, "si_enumerated": row.si_enumerated,
            "agreement": row.agreement,
        } for row in rows]})
    if not all(row.agreement for row in rows):
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_verify(args) -> int:
    fld = _field_from_args(args)
    a = _parse_a(fld, args.a)
    report = verify.run_check(args.theorem, fld, a, args.n,
                              seed=args.seed, budget=args.budget)
    _emit(args, {
        "check": report.check,
        "description": verify.CHECK_DESCRIPTIONS[report.check],
        "ok": report.ok,
        "checked": report.checked,
        "failures": report.failures,
        "note": report.note,
    }, {"seed": args.seed})
    return EXIT_OK if report.ok else EXIT_VERIFY


def _add_field_args(sub, with_a=True, with_modulus=True):
    sub.add_argument("--field", required=True,
                     help="field spec: a prime p or p^e, e.g. 5 or 3^2")
    if with_a:
        sub.add_argument("--a", required=True,
                         help="nonzero parameter, element text form (e.g. 4 or 1+2*t)")
    if with_modulus:
        sub.add_argument("--modulus", default=None,
                         help="override the extension modulus: comma-separated "
                              "prime-field coefficients, ascending, monic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfrecip",
        description="Scaled-reciprocal polynomial toolkit over odd finite fields")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("recip", help="apply the a-reciprocal operator")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True, help="comma-separated ascending coefficients")
    sub.set_defaults(func=_cmd_recip)

    sub = subs.add_parser("classify", help="self-reciprocal classification")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True)
    sub.set_defaults(func=_cmd_classify)

    sub = subs.add_parser("parity", help="parity of the irreducible factor count")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True)
    sub.add_argument("--verify", action="store_true",
                     help="also factor with the oracle and compare")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.set_defaults(func=_cmd_parity)

    sub = subs.add_parser("transform", help="quadratic transform x^n f(x + a/x)")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True)
    sub.set_defaults(func=_cmd_transform)

    sub = subs.add_parser("invtransform", help="invert the quadratic transform")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True)
    sub.set_defaults(func=_cmd_invtransform)

    sub = subs.add_parser("factor", help="factor a polynomial with the oracle")
    _add_field_args(sub, with_a=False)
    sub.add_argument("--poly", required=True)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.set_defaults(func=_cmd_factor)

    sub = subs.add_parser("count", help="count a-srim polynomials of degree 2n")
    _add_field_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--enumerate", action="store_true",
                     help="also count by exhaustive enumeration")
    sub.set_defaults(func=_cmd_count)

    sub = subs.add_parser("census", help="sweep counts over fields, a and n")
    sub.add_argument("--fields", required=True, help="comma-separated field specs")
    sub.add_argument("--nmax", type=int, required=True)
    sub.add_argument("--out", default=None, help="write the CSV to this path")
    sub.add_argument("--csv", action="store_true", help="emit CSV on stdout")
    sub.set_defaults(func=_cmd_census)

    sub = subs.add_parser("verify", help="run a named structural check")
    _add_field_args(sub)
    sub.add_argument("--theorem", required=True, choices=sorted(verify.CHECKS),
                     metavar="CHECK", dest="theorem",
                     help="check id: " + "; ".join(
                         f"{k}: {v}" for k, v in verify.CHECK_DESCRIPTIONS.items()))
    sub.add_argument("--n", type=int, default=None,
                     help="sweep size parameter (see README; default 2)")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--budget", type=int, default=census.DEGREE_BUDGET,
                     help="degree ceiling for the master polynomials "
                          f"(default {census.DEGREE_BUDGET})")
    sub.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())
