"""Command-line front-end.

Exit codes: 0 all requested checks pass, 1 a mathematical check failed or a
domain error was raised, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import classification, fibration, serialize
from .eisenstein import as_e_module, hermitian_gram, is_unimodular_over_E
from .errors import EisenlatError, ParseError
from .isometry import (
    coinvariant_sublattice,
    find_order3_isometry,
    fixed_sublattice,
    make_isometry,
    verify_isometry,
)
from .intmat import smith_normal_form
from .lattice import (
    Lattice,
    discriminant_form,
    discriminant_group,
    make_lattice,
    orthogonal_complement,
)


def _load_lattice(path: str) -> Lattice:
    gram, name = serialize.load_matrix_file(path)
    return make_lattice(gram, name=name)


def _load_matrix(path: str):
    mat, _ = serialize.load_matrix_file(path)
    return mat


def _emit(data, args, text_fn):
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text_fn(data), end="")


# --- lattice ---------------------------------------------------------------

def cmd_lattice_info(args) -> int:
    lat = _load_lattice(args.path)
    data = serialize.lattice_to_dict(lat)
    def text(d):
        lines = [
            f"name\t{d['name'] or '-'}",
            f"rank\t{d['rank']}",
            f"det\t{d['det']}",
            f"signature\t{d['signature'][0]} {d['signature'][1]} {d['signature'][2]}",
        ]
        fac = d["invariant_factors"]
        lines.append("invariant_factors\t" + (" ".join(map(str, fac)) if fac else
                                              ("-" if fac is None else "trivial")))
        return "\n".join(lines) + "\n"
    _emit(data, args, text)
    return 0


def cmd_lattice_snf(args) -> int:
    mat = _load_matrix(args.path)
    d, u, v = smith_normal_form(mat)
    if args.json:
        print(json.dumps({"D": serialize.matrix_to_dict(d),
                          "U": serialize.matrix_to_dict(u),
                          "V": serialize.matrix_to_dict(v)}, indent=2, sort_keys=True))
    else:
        for label, block in (("D", d), ("U", u), ("V", v)):
            print(serialize.format_int_matrix_text(block, comment=label), end="")
    return 0


def cmd_lattice_disc(args) -> int:
    lat = _load_lattice(args.path)
    group = discriminant_group(lat)
    form = discriminant_form(lat)
    data = {
        "invariant_factors": list(group.invariant_factors),
        "order": group.order,
        "generators": [[serialize.frac_str(x) for x in gen] for gen in group.generators],
        "gauss_signature_mod8": form.signature_mod8(),
    }
    def text(d):
        return (
            "invariant_factors\t" + (" ".join(map(str, d["invariant_factors"])) or "trivial")
            + f"\norder\t{d['order']}\ngauss_signature_mod8\t{d['gauss_signature_mod8']}\n"
        )
    _emit(data, args, text)
    return 0


def cmd_lattice_complement(args) -> int:
    lat = _load_lattice(args.path)
    span = _parse_span(args.span, lat.rank)
    basis, comp = orthogonal_complement(lat, span)
    data = {"basis": [list(v) for v in basis],
            "complement": serialize.lattice_to_dict(comp)}
    def text(d):
        lines = [f"rank\t{len(d['basis'])}"]
        for v in d["basis"]:
            lines.append("basis\t" + " ".join(map(str, v)))
        lines.append("gram:")
        return "\n".join(lines) + "\n" + serialize.format_int_matrix_text(comp.gram)
    _emit(data, args, text)
    return 0


def _parse_span(spec: str, rank: int):
    vectors = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            vec = tuple(int(x) for x in chunk.replace(",", " ").split())
        except ValueError:
            raise ParseError(f"bad vector {chunk!r} in --span") from None
        if len(vec) != rank:
            raise ParseError(f"vector {chunk!r} has length {len(vec)}, expected {rank}")
        vectors.append(vec)
    return vectors


# --- isometry ---------------------------------------------------------------

def cmd_isometry_verify(args) -> int:
    lat = _load_lattice(args.lattice)
    mat = _load_matrix(args.matrix)
    check = verify_isometry(lat, mat)
    order = check.order if check.order is not None else ">12"
    if args.json:
        print(json.dumps({"valid": check.valid, "order": check.order}, sort_keys=True))
    else:
        print(f"valid\t{str(check.valid).lower()}\norder\t{order}")
    return 0 if check.valid else 1


def cmd_isometry_fixed(args) -> int:
    lat = _load_lattice(args.lattice)
    iso = make_isometry(lat, _load_matrix(args.matrix))
    if args.coinvariant:
        basis, sub = coinvariant_sublattice(lat, iso)
    else:
        basis, sub = fixed_sublattice(lat, iso)
    data = {"basis": [list(v) for v in basis], "lattice": serialize.lattice_to_dict(sub)}
    def text(d):
        lines = [f"rank\t{len(d['basis'])}"]
        for v in d["basis"]:
            lines.append("basis\t" + " ".join(map(str, v)))
        return "\n".join(lines) + "\n" + serialize.format_int_matrix_text(sub.gram, comment="gram")
    _emit(data, args, text)
    return 0


def cmd_isometry_find(args) -> int:
    lat = _load_lattice(args.lattice)
    iso = find_order3_isometry(
        lat,
        require_fpf=not args.allow_fixed,
        require_trivial_disc=args.trivial_disc,
        budget=args.budget,
    )
    if args.json:
        print(json.dumps(serialize.matrix_to_dict(iso.matrix), sort_keys=True))
    else:
        print(serialize.format_int_matrix_text(iso.matrix, comment="order-3 isometry"), end="")
    return 0


# --- eisenstein --------------------------------------------------------------

def cmd_eisenstein_hermitian(args) -> int:
    lat = _load_lattice(args.lattice)
    mod = as_e_module(lat, make_isometry(lat, _load_matrix(args.matrix)))
    gram = hermitian_gram(mod)
    data = {
        "e_rank": mod.e_rank,
        "e_basis": [list(v) for v in mod.e_basis],
        "hermitian_gram": [[serialize.eisnum_to_dict(x) for x in row] for row in gram],
    }
    print(json.dumps(data, indent=2, sort_keys=True))
    return 0


def cmd_eisenstein_unimodular(args) -> int:
    lat = _load_lattice(args.lattice)
    mod = as_e_module(lat, make_isometry(lat, _load_matrix(args.matrix)))
    result = is_unimodular_over_E(mod)
    print("true" if result else "false")
    return 0 if result else 1


# --- classify ----------------------------------------------------------------

def cmd_classify_table1(args) -> int:
    if args.json:
        rows = [
            {"n": r.n, "k": r.k, "g": r.g, "m": r.m, "a": r.a}
            for r in classification.enumerate_table1()
        ]
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        print(classification.render_table1_tsv(), end="")
    return 0


def _report_dict(report) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "passed": report.passed,
        "clauses": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.clauses
        ],
    }


def cmd_classify_table2(args) -> int:
    print(classification.render_table2_tsv(), end="")
    if not args.verify:
        return 0
    reports = [classification.verify_row(n, k) for n, k in sorted(classification.TABLE2)]
    if args.json:
        print(json.dumps([_report_dict(r) for r in reports], indent=2, sort_keys=True))
    else:
        for rep in reports:
            status = "pass" if rep.passed else "FAIL"
            print(f"verify ({rep.n},{rep.k})\t{status}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_classify_verify_row(args) -> int:
    report = classification.verify_row(args.n, args.k)
    if args.json:
        print(json.dumps(_report_dict(report), indent=2, sort_keys=True))
    else:
        for c in report.clauses:
            print(f"{c.name}\t{'pass' if c.passed else 'FAIL'}\t{c.detail}")
    return 0 if report.passed else 1


# --- fibration ----------------------------------------------------------------

def _parse_mults(spec: str):
    spec = spec.strip()
    if not spec:
        return ()
    try:
        return tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise ParseError(f"bad multiplicity list {spec!r}") from None


def _fibration_report_dict(rep) -> dict:
    return {
        "multiplicities": list(rep.config.multiplicities),
        "simple_roots": rep.config.simple_roots,
        "fibers": [[t, c] for t, c in rep.fibers],
        "n": rep.n,
        "k": rep.k,
        "genus": rep.genus,
        "euler_total": rep.euler_total,
        "valid": rep.valid,
    }


def cmd_fibration_analyze(args) -> int:
    try:
        cfg = fibration.FiberConfig(_parse_mults(args.mults))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rep = fibration.analyze_config(cfg)
    if args.json:
        print(json.dumps(_fibration_report_dict(rep), indent=2, sort_keys=True))
    else:
        fibers = " ".join(f"{c}x{t}" for t, c in rep.fibers)
        print(f"fibers\t{fibers}\nn\t{rep.n}\nk\t{rep.k}\ngenus\t{rep.genus}"
              f"\neuler\t{rep.euler_total}\nvalid\ttrue")
    return 0


def cmd_fibration_enumerate(args) -> int:
    reports = fibration.enumerate_valid_configs()
    if args.json:
        print(json.dumps([_fibration_report_dict(r) for r in reports],
                         indent=2, sort_keys=True))
    else:
        print("mults\tn\tk\tg")
        for rep in reports:
            mults = ",".join(map(str, rep.config.multiplicities)) or "-"
            print(f"{mults}\t{rep.n}\t{rep.k}\t{rep.genus}")
    return 0


# --- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenlat",
        description="Exact lattice arithmetic for the order-3 fixed-locus classification.",
    )
    parser.add_argument("--seed", type=int, default=0,
                        help="seed the global RNG (deterministic commands ignore it)")
    sub = parser.add_subparsers(dest="group", required=True)

    lat = sub.add_parser("lattice", help="Gram matrix computations").add_subparsers(
        dest="cmd", required=True)
    p = lat.add_parser("info", help="rank, det, signature, discriminant invariants")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice_info)
    p = lat.add_parser("snf", help="Smith normal form D = U M V")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice_snf)
    p = lat.add_parser("disc", help="discriminant group and form")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice_disc)
    p = lat.add_parser("complement", help="orthogonal complement of --span")
    p.add_argument("path")
    p.add_argument("--span", required=True,
                   help="semicolon-separated integer vectors, e.g. '1,0,0,0;0,1,0,0'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice_complement)

    iso = sub.add_parser("isometry", help="isometry checks and search").add_subparsers(
        dest="cmd", required=True)
    p = iso.add_parser("verify", help="check M^T G M = G and report the order")
    p.add_argument("lattice")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_isometry_verify)
    p = iso.add_parser("fixed", help="fixed (or coinvariant) sublattice")
    p.add_argument("lattice")
    p.add_argument("matrix")
    p.add_argument("--coinvariant", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_isometry_fixed)
    p = iso.add_parser("find", help="search an order-3 isometry")
    p.add_argument("lattice")
    p.add_argument("--allow-fixed", action="store_true",
                   help="do not require the isometry to be fixed-point free")
    p.add_argument("--trivial-disc", action="store_true",
                   help="require trivial action on the discriminant group")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_isometry_find)

    eis = sub.add_parser("eisenstein", help="hermitian module structure").add_subparsers(
        dest="cmd", required=True)
    p = eis.add_parser("hermitian", help="E-basis and hermitian Gram matrix")
    p.add_argument("lattice")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_eisenstein_hermitian)
    p = eis.add_parser("unimodular", help="is the hermitian determinant a unit?")
    p.add_argument("lattice")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_eisenstein_unimodular)

    cls = sub.add_parser("classify", help="fixed-locus tables").add_subparsers(
        dest="cmd", required=True)
    p = cls.add_parser("table1", help="the 24 admissible (n,k,g,m,a) rows")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true", help="TSV output (the default)")
    p.set_defaults(func=cmd_classify_table1)
    p = cls.add_parser("table2", help="lattice pairs T(n,k), N(n,k)")
    p.add_argument("--verify", action="store_true", help="run the seven-clause check per row")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify_table2)
    p = cls.add_parser("verify-row", help="seven-clause verification of one row")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify_verify_row)

    fib = sub.add_parser("fibration", help="Weierstrass multiplicity dictionary").add_subparsers(
        dest="cmd", required=True)
    p = fib.add_parser("analyze", help="classify one multiplicity profile")
    p.add_argument("--mults", required=True,
                   help="comma-separated multiplicities of the multiple roots ('' for none)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fibration_analyze)
    p = fib.add_parser("enumerate", help="all valid profiles with their (n,k,g)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true", help="TSV output (the default)")
    p.set_defaults(func=cmd_fibration_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EisenlatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
