"""Command-line front end: fgl check | fgl nseries | powerop | chern | obstruct."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .chern import ChernSeries, computation_one
from .coefficients import IntegerRing
from .fgl import ViolatedAxiom, builtin_law, validate_law
from .obstruction import (
    _monomial_label,
    _symbolic_twin,
    exhaustive_search,
    extract_relations,
)
from .powerops import PowerOpContext, standard_context, standard_ring
from .series import series_from_json, series_to_json

_BUILTIN_LAWS = ("additive", "multiplicative")


def _trunc_cap() -> int:
    return int(os.environ.get("FGLOPS_TRUNC_MAX", "64"))


def _check_trunc(*degrees: int) -> None:
    cap = _trunc_cap()
    for d in degrees:
        if d > cap:
            raise ValueError(f"truncation degree {d} exceeds FGLOPS_TRUNC_MAX={cap}")
        if d < 1:
            raise ValueError(f"truncation degree {d} must be positive")


def _load_series(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return series_from_json(json.load(handle))


def _load_law(name_or_path: str, degree: int):
    if name_or_path in _BUILTIN_LAWS:
        return builtin_law(name_or_path, IntegerRing(), degree)
    return validate_law(_load_series(name_or_path))


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_fgl_check(args) -> int:
    _check_trunc(args.degree)
    try:
        law = _load_law(args.law, args.degree)
    except ViolatedAxiom as exc:
        if args.json:
            _emit_json({"valid": False, "axiom": exc.axiom, "monomial": exc.monomial})
        else:
            print(str(exc))
        return 1
    if args.json:
        _emit_json({"valid": True, "degree": law.degree})
    else:
        print(f"valid to degree {law.degree}")
    return 0


def cmd_fgl_nseries(args) -> int:
    _check_trunc(args.degree)
    if args.n < 0:
        raise ValueError(f"n must be non-negative, got {args.n}")
    law = _load_law(args.law, args.degree)
    result = law.n_series(args.n)
    if args.json:
        _emit_json(series_to_json(result))
    else:
        print(str(result))
    return 0


def cmd_powerop(args) -> int:
    _check_trunc(args.t_trunc, args.z_trunc)
    f = _load_series(args.series)
    ring = standard_ring(f.ring.coeff_ring, args.t_trunc, args.z_trunc)
    positions = {i for exps in f.terms for i, e in enumerate(exps) if e}
    if len(positions) > 1:
        raise ValueError("power operation input must be univariate")
    pos = next(iter(positions)) if positions else 0
    lifted = ring.from_terms({(exps[pos], 0): c for exps, c in f.terms.items()})
    law = builtin_law(args.fgl, ring.coeff_ring) if args.fgl in _BUILTIN_LAWS else _load_law(args.fgl, 20)
    ctx = PowerOpContext(ring, law, ring.coeff_ring.coefficient(args.tau))
    result = ctx.power_op(lifted)
    if args.json:
        _emit_json(series_to_json(result))
    else:
        print(str(result))
    return 0


def cmd_chern(args) -> int:
    _check_trunc(args.t_trunc, args.z_trunc)
    if (args.coeffs is None) == (args.symbolic is None):
        raise ValueError("exactly one of --coeffs and --symbolic is required")
    if args.symbolic is not None:
        candidate = ChernSeries.symbolic(args.symbolic)
        coeff_ring = candidate.coeff_ring
    else:
        values = [int(part) for part in args.coeffs.split(",")]
        coeff_ring = IntegerRing()
        candidate = ChernSeries(values, coeff_ring)
    ring = standard_ring(coeff_ring, args.t_trunc, args.z_trunc)
    result = computation_one(candidate, ring)
    if args.json:
        _emit_json(series_to_json(result))
    else:
        print(str(result))
    return 0


def cmd_obstruct(args) -> int:
    _check_trunc(args.t_trunc, args.z_trunc)
    if args.symbolic == args.search:
        raise ValueError("exactly one of --symbolic and --search is required")
    ctx = standard_context(IntegerRing(), args.t_trunc, args.z_trunc)
    ring = ctx.ring
    if args.symbolic:
        sym_candidate, sym_ring, sym_ctx = _symbolic_twin(ctx, args.degree)
        relations = extract_relations(sym_candidate, sym_ring, sym_ctx)
        if args.json:
            _emit_json(
                {
                    "truncation": {"z": args.z_trunc, "t": args.t_trunc},
                    "relations": [
                        {"monomial": _monomial_label(ring, exps), "poly": str(poly)}
                        for exps, poly in relations
                    ],
                }
            )
        else:
            for exps, poly in relations:
                print(f"{_monomial_label(ring, exps)}: {poly}")
        return 0

    report = exhaustive_search(args.degree, ring, ctx)
    if args.json:
        _emit_json(report.to_json())
    elif report.verdict == "unsatisfiable":
        total = len(report.failures)
        print(f"UNSATISFIABLE: {total}/{total} candidates fail")
        for cand, mono in report.failures:
            print(f"  [{','.join(map(str, cand))}] fails at {_monomial_label(ring, mono)}")
    else:
        print(f"SATISFIABLE: witness [{','.join(map(str, report.witness))}]")
    return 0 if report.verdict == "unsatisfiable" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fglops",
        description="exact arithmetic for truncated series, formal group laws, "
        "quadratic power operations and obstruction certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fgl = sub.add_parser("fgl", help="formal group law utilities")
    fgl_sub = fgl.add_subparsers(dest="fgl_command", required=True)

    check = fgl_sub.add_parser("check", help="validate the law axioms")
    check.add_argument("law", help="built-in name (additive, multiplicative) or JSON file")
    check.add_argument("--degree", type=int, default=20)
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=cmd_fgl_check)

    nseries = fgl_sub.add_parser("nseries", help="print the n-fold formal sum [n](x)")
    nseries.add_argument("law")
    nseries.add_argument("n", type=int)
    nseries.add_argument("--degree", type=int, default=20)
    nseries.add_argument("--json", action="store_true")
    nseries.set_defaults(func=cmd_fgl_nseries)

    powerop = sub.add_parser("powerop", help="apply the quadratic power operation")
    powerop.add_argument("series", help="JSON file with a univariate series")
    powerop.add_argument("--fgl", default="additive")
    powerop.add_argument("--tau", type=int, default=2)
    powerop.add_argument("--t-trunc", type=int, default=5)
    powerop.add_argument("--z-trunc", type=int, default=3)
    powerop.add_argument("--json", action="store_true")
    powerop.set_defaults(func=cmd_powerop)

    chern = sub.add_parser("chern", help="evaluate r(t+z)r(t)/r(z) for a candidate r")
    chern.add_argument("--coeffs", help="comma-separated integers a1,a2,...")
    chern.add_argument("--symbolic", type=int, help="generic candidate of this degree")
    chern.add_argument("--t-trunc", type=int, default=5)
    chern.add_argument("--z-trunc", type=int, default=3)
    chern.add_argument("--json", action="store_true")
    chern.set_defaults(func=cmd_chern)

    obstruct = sub.add_parser("obstruct", help="relation table or exhaustive certificate")
    obstruct.add_argument("--degree", type=int, default=3)
    obstruct.add_argument("--t-trunc", type=int, default=5)
    obstruct.add_argument("--z-trunc", type=int, default=3)
    obstruct.add_argument("--symbolic", action="store_true")
    obstruct.add_argument("--search", action="store_true")
    obstruct.add_argument("--json", action="store_true")
    obstruct.set_defaults(func=cmd_obstruct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
