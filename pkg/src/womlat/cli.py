"""
Check finite lattices with a unary operation: identities, implications,
residuation and generalized measures.

Exit status: 0 when the checked property holds (or the command succeeded),
1 when it fails and a counterexample was printed, 2 on usage, parse or
validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, fixtures, implication, measures, residuation, search, terms
from .algebra import CheckReport, UnaryAlgebra
from .errors import FormatError, LatticeError
from .latfile import binary_section, format_lat, format_msr, load_lat, load_msr, to_dot

CHECK_PROPS = {
    "wom": algebra.is_weakly_orthomodular,
    "dwom": algebra.is_dually_weakly_orthomodular,
    "dnl": algebra.satisfies_double_negation,
    "wdnl": algebra.satisfies_weak_double_negation,
    "comp": algebra.is_complementation,
    "ortho": algebra.is_orthocomplementation,
    "om": algebra.is_orthomodular,
    "demorgan": algebra.satisfies_de_morgan,
    "antitone": algebra.is_antitone,
    "involution": algebra.is_involution,
    "lemma-bounds": algebra.check_lemma_bounds,
}

LATTICE_THEOREMS = {
    "d-bijection": implication.verify_d_bijection,
    "family-bijection": implication.verify_family_bijection,
    "w-bijection": implication.verify_w_bijection,
}

ALGEBRA_THEOREMS = {
    "sasaki": implication.verify_sasaki_theorem,
    "half-adjunction": residuation.check_half_adjunction,
    "weak-dnl-residuation": residuation.check_weak_dnl_residuation,
    "residuation": residuation.verify_residuation,
    "measures": measures.verify_measure_theorem,
    "d-properties": implication.d_implication_properties,
    "w-properties": implication.w_implication_properties,
}

THEOREMS = sorted([*LATTICE_THEOREMS, *ALGEBRA_THEOREMS, "converse"])


def _emit_report(report: CheckReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=False))
    else:
        print("\n".join(report.lines()))
    return 0 if report.holds else 1


def cmd_check(args):
    unary = load_lat(args.file).require_unary()
    return _emit_report(CHECK_PROPS[args.prop](unary), args.json)


def cmd_holds(args):
    report = terms.holds(args.formula, load_lat(args.file).structure())
    return _emit_report(report, args.json)


def _parse_assign(text):
    out = {}
    for item in (text or "").split(","):
        if not item.strip():
            continue
        name, sep, value = item.partition("=")
        if not sep:
            raise FormatError(f"assignment must be name=label, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def cmd_eval(args):
    lf = load_lat(args.file)
    value = terms.evaluate(args.expr, lf.structure(), _parse_assign(args.assign))
    print(lf.lattice.names[value])
    return 0


def cmd_derive(args):
    lf = load_lat(args.file)
    unary = lf.require_unary()
    if args.impl == "d":
        table = implication.d_implication_from_complement(unary)
    elif args.impl == "w":
        table = implication.w_implication_from_complement(unary)
    elif args.impl == "sasaki":
        table = implication.sasaki_implication(unary)
    else:
        table = residuation.sasaki_product(unary)
    if args.out:
        arrow = table if table.tag == "implication" else lf.arrow
        prod = table if table.tag == "product" else lf.prod
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_lat(lf.lattice, unary, arrow, prod))
    print(binary_section(table))
    return 0


def cmd_verify(args):
    lf = load_lat(args.file)
    if args.theorem in LATTICE_THEOREMS:
        report = LATTICE_THEOREMS[args.theorem](lf.lattice)
    elif args.theorem == "converse":
        if lf.arrow is not None and lf.prod is not None:
            g = residuation.LGroupoid(lf.lattice, lf.prod, lf.arrow)
        else:
            g = residuation.build_lgroupoid(lf.require_unary())
        report = residuation.verify_converse(g)
    else:
        report = ALGEBRA_THEOREMS[args.theorem](lf.require_unary())
    return _emit_report(report, args.json)


def cmd_search(args):
    want = search.parse_constraints(args.want or "")
    if args.lattice:
        lattices = [load_lat(args.lattice).lattice]
    else:
        lattices = search.all_lattices(args.all_n)
    shown = 0
    for lat in lattices:
        for a in search.iter_unary(lat, want):
            if args.limit is not None and shown >= args.limit:
                return 0
            if shown:
                print()
            print(f"# match {shown + 1}: {len(lat)} elements")
            print(format_lat(lat, a), end="")
            shown += 1
    if not shown:
        scope = args.lattice if args.lattice else f"all lattices with at most {args.all_n} elements"
        print(f"no algebra found over {scope}")
        return 1
    return 0


def cmd_measure(args):
    unary = load_lat(args.file).require_unary()
    lat = unary.lattice
    if args.witness:
        kind, sep, label = args.witness.partition(":")
        if not sep or kind not in ("filter", "ideal"):
            raise FormatError("--witness expects filter:<x> or ideal:<x>")
        build = measures.witness_measure_filter if kind == "filter" else measures.witness_measure_ideal
        print(format_msr(lat, build(unary, lat.index(label))), end="")
        return 0
    if not args.s or not args.check:
        raise FormatError("measure needs --s and --check, or --witness")
    s = load_msr(args.s, lat)
    check = {
        "s1": measures.in_S1,
        "s2": measures.in_S2,
        "conditions": measures.check_conditions,
        "proposition": measures.verify_conditions_proposition,
    }[args.check]
    return _emit_report(check(unary, s), args.json)


def cmd_dot(args):
    print(to_dot(load_lat(args.file).lattice), end="")
    return 0


def cmd_fixtures(args):
    if args.action == "list":
        for name in fixtures.NAMES:
            print(name)
        return 0
    if not args.name:
        raise FormatError("fixtures emit needs a name")
    fx = fixtures.fixture(args.name)
    if isinstance(fx, UnaryAlgebra):
        print(format_lat(fx.lattice, fx), end="")
    else:
        print(format_lat(fx), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="womlat", description=" ".join(__doc__.strip().split("\n\n")[0].split()))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check a structural property of the unary operation")
    p.add_argument("file")
    p.add_argument("--prop", required=True, choices=sorted(CHECK_PROPS))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("holds", help="check an identity or quasi-identity")
    p.add_argument("file")
    p.add_argument("-f", "--formula", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_holds)

    p = sub.add_parser("eval", help="evaluate a term under an assignment")
    p.add_argument("file")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("--assign", default="")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("derive", help="derive a binary operation table")
    p.add_argument("file")
    p.add_argument("--impl", required=True, choices=["d", "w", "sasaki", "product"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", help="verify a theorem on the given lattice or algebra")
    p.add_argument("file")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="enumerate unary operations meeting constraints")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--lattice")
    where.add_argument("--all-n", type=int)
    p.add_argument("--want", default="")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("measure", help="generalized measures")
    p.add_argument("file")
    p.add_argument("--s")
    p.add_argument("--check", choices=["s1", "s2", "conditions", "proposition"])
    p.add_argument("--witness")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("dot", help="Hasse diagram in Graphviz DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("fixtures", help="list or emit built-in examples")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
