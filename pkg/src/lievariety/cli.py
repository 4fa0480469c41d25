"""Command-line front end: ``lievariety {degrees,check-jacobi,classify,sample}``.

Exit codes: 0 ok, 1 Jacobi identity fails, 2 parse or usage error,
3 internal cross-check mismatch, 4 genericity budget exhausted.

Structure constants are read and written as JSON::

    {"dim": 4, "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "1/2", "0", "0"]}]}

Coefficients are strings ``"p"`` or ``"p/q"``; unlisted pairs are zero.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import liealg
from .lie4degrees import ComponentTag, CrossCheckError, DegreeReport, degree_report
from .liealg import GenericityError, StructureConstants

__all__ = ["ParseError", "loads_structure", "dumps_structure", "main"]

EXIT_OK = 0
EXIT_JACOBI = 1
EXIT_PARSE = 2
EXIT_CROSSCHECK = 3
EXIT_GENERICITY = 4

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


class ParseError(ValueError):
    """Malformed structure-constants document."""


def _parse_rational(s: Any) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s.strip()):
        raise ParseError(f"coefficient {s!r} is not a rational string 'p' or 'p/q'")
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise ParseError(f"coefficient {s!r} has zero denominator") from None


def _int_field(obj: Dict[str, Any], key: str) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"field {key!r} must be an integer")
    return v


def _exact_keys(obj: Any, keys: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be a JSON object")
    extra = set(obj) - keys
    missing = keys - set(obj)
    if extra:
        raise ParseError(f"{where}: unexpected field(s) {sorted(extra)}")
    if missing:
        raise ParseError(f"{where}: missing field(s) {sorted(missing)}")


def loads_structure(text: str) -> StructureConstants:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    _exact_keys(doc, {"dim", "brackets"}, "document")
    n = _int_field(doc, "dim")
    if not 2 <= n <= 4:
        raise ParseError(f"dim must be between 2 and 4, got {n}")
    if not isinstance(doc["brackets"], list):
        raise ParseError("brackets must be a list")
    brackets = {}
    for k, entry in enumerate(doc["brackets"]):
        _exact_keys(entry, {"i", "j", "coeffs"}, f"brackets[{k}]")
        i, j = _int_field(entry, "i"), _int_field(entry, "j")
        if not 0 <= i < j < n:
            raise ParseError(f"brackets[{k}]: need 0 <= i < j < {n}, got i={i}, j={j}")
        if (i, j) in brackets:
            raise ParseError(f"brackets[{k}]: pair ({i}, {j}) listed twice")
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != n:
            raise ParseError(f"brackets[{k}]: coeffs must list exactly {n} entries")
        brackets[(i, j)] = [_parse_rational(c) for c in coeffs]
    return StructureConstants(n, brackets)


def dumps_structure(omega: StructureConstants) -> str:
    entries = [
        {"i": i, "j": j, "coeffs": [str(c) for c in v]}
        for (i, j), v in omega.pairs()
        if any(v)
    ]
    return json.dumps({"dim": omega.dim, "brackets": entries}, indent=2) + "\n"


def _read(path: str) -> StructureConstants:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_structure(text)


# -- commands ----------------------------------------------------------------------

def _print_report(report: DegreeReport, args, out) -> None:
    if args.json:
        doc: Dict[str, Any] = report.as_dict()
        if args.verbose:
            doc["reference"] = {t.value: int(d) for t, d in report.reference.items()}
            doc["intermediates"] = {k: str(v) for k, v in report.intermediates.items()}
            doc["checks"] = [{"name": c.name, "ok": c.ok, "lhs": str(c.lhs), "rhs": str(c.rhs)} for c in report.checks]
        print(json.dumps(doc), file=out)
        return
    print(f"{'component':<10}{'degree':>8}{'reference':>11}", file=out)
    for t in ComponentTag:
        print(f"{t.value:<10}{int(report.degrees[t]):>8}{int(report.reference[t]):>11}", file=out)
    print(f"{'total':<10}{int(report.total):>8}{int(report.reference_total):>11}", file=out)
    if args.verbose:
        print("", file=out)
        for name, value in report.intermediates.items():
            print(f"{name} = {value}", file=out)
        print("", file=out)
        for c in report.checks:
            print(c, file=out)


def cmd_degrees(args) -> int:
    try:
        report = degree_report(strict=True)
    except CrossCheckError as exc:
        _print_report(exc.report, args, sys.stdout)
        print(f"error: {exc}", file=sys.stderr)
        for c in exc.report.failures:
            print(f"  {c}", file=sys.stderr)
        return EXIT_CROSSCHECK
    _print_report(report, args, sys.stdout)
    return EXIT_OK


def cmd_check_jacobi(args) -> int:
    omega = _read(args.path)
    defect = liealg.jacobi_defect(omega)
    n = omega.dim
    bad = []
    for t, triple in enumerate(itertools.combinations(range(n), 3)):
        chunk = defect[t * n:(t + 1) * n]
        if any(chunk):
            bad.append((triple, chunk))
    if args.json:
        print(json.dumps({
            "jacobi_ok": not bad,
            "violations": [{"triple": list(tr), "defect": [str(x) for x in v]} for tr, v in bad],
        }))
    elif not bad:
        print("Jacobi identity holds")
    else:
        print("Jacobi identity fails")
        for (i, j, k), v in bad:
            print(f"  (e{i}, e{j}, e{k}): {' '.join(str(x) for x in v)}")
    return EXIT_JACOBI if bad else EXIT_OK


def cmd_classify(args) -> int:
    profile = liealg.classify(_read(args.path))
    if args.json:
        print(json.dumps({
            "jacobi_ok": profile.jacobi_ok,
            "derived_dim": profile.derived_dim,
            "derived_type": profile.derived_type,
            "component": profile.component,
            "is_abelian": profile.is_abelian,
            "center_dim": profile.center_dim,
        }))
    else:
        print(profile.describe())
        if args.verbose:
            print(f"derived dimension {profile.derived_dim}, centre dimension {profile.center_dim}")
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        omega = liealg.sample(args.component, args.seed, generic=args.generic, random_basis=args.random_basis)
    except GenericityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    text = dumps_structure(omega)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _component(s: str) -> str:
    try:
        return ComponentTag.parse(s).value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="show intermediate values")

    parser = argparse.ArgumentParser(prog="lievariety", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degrees", parents=[common], help="degree table of the four components")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("check-jacobi", parents=[common], help="verify the Jacobi identity")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_jacobi)

    p = sub.add_parser("classify", parents=[common], help="derived algebra and component")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sample", parents=[common], help="draw a point of a component")
    p.add_argument("--component", required=True, type=_component, help="C1, C2, C3 or C4")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--generic", action="store_true", help="re-draw until the sample classifies to the component")
    p.add_argument("--random-basis", action="store_true", help="apply a random change of basis")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.verbose = getattr(args, "verbose", False)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
