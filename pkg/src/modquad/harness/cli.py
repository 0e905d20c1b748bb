"""Command line entry point: ``modquad`` (or ``python3 -m modquad``)."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from ..catalogue.models import CatalogueError, builtin_catalogue, load_catalogue, on_curve
from .config import ConfigError, load_config
from .registry import TAGS, UnknownCheck, exit_status, registry, run_checks
from .report import emit_report, plain


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(plain(obj), sort_keys=True, indent=2) + "\n")


def _catalogue(args):
    return load_catalogue(args.catalogue) if getattr(args, "catalogue", None) else builtin_catalogue()


# -- verify --------------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.jobs is not None:
        cfg = replace(cfg, jobs=args.jobs)
    if args.list:
        for name, c in sorted(registry().items()):
            print(f"{name:34s} {','.join(sorted(c.tags)):24s} {c.statement}")
        return 0
    names = None if args.all else args.check
    try:
        results = run_checks(names, cfg, tags=None if args.all else args.tag)
    except UnknownCheck as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(results, "human", cfg).decode())
    path = args.json or cfg.report_path
    if path:
        emit_report(results, "json", cfg, path=path, timings=args.timings)
    return exit_status(results)


# -- catalogue -----------------------------------------------------------------------

def cmd_catalogue(args) -> int:
    try:
        C = _catalogue(args)
    except CatalogueError as e:
        print(f"invalid catalogue: {e}", file=sys.stderr)
        return 1
    if args.action == "list":
        for M in C:
            print(f"{M.label:10s} {M.kind:16s} genus {M.genus}  {M.name}")
        return 0
    if args.action == "validate":
        bad = {M.label: [P.tag for P in M.points if not on_curve(M, P.coords)] for M in C}
        bad = {k: v for k, v in bad.items() if v}
        print(f"{len(C)} entries valid" if not bad else f"points off their curves: {bad}")
        return 1 if bad else 0
    if not args.label:
        print("catalogue show needs a LABEL", file=sys.stderr)
        return 2
    M = C[args.label]
    info = {"label": M.label, "name": M.name, "kind": M.kind, "genus": M.genus, "claim": M.claim,
            "cited": M.cited, "reference": M.reference,
            "involutions": [w.label for w in M.involutions],
            "points": {P.tag: [str(c) for c in P.coords] for P in M.points},
            "divisors": {D.tag: [list(t) for t in D.terms] for D in M.divisors}}
    if M.jmap is not None:
        info["jmap"] = f"({M.jmap.num}) / ({M.jmap.den})"
    if M.f is not None:
        info["f"] = str(M.f)
    if M.equation is not None:
        info["equation"] = str(M.equation)
    if M.a is not None:
        info["a"] = [str(v) for v in M.a]
    _dump(info)
    return 0


# -- ell -----------------------------------------------------------------------------

def cmd_ell(args) -> int:
    from ..elliptic.curve import EllCurve, count_points_fp
    from ..elliptic.torsion import torsion
    M = _catalogue(args)[args.curve]
    if M.kind != "Weierstrass":
        print(f"{M.label} is not a Weierstrass model", file=sys.stderr)
        return 2
    E = EllCurve(M.a)
    if args.action == "count":
        _dump({"label": M.label, "p": args.prime, "count": count_points_fp(E, args.prime)})
        return 0
    T = torsion(E, args.field)
    _dump({"label": M.label, "field": args.field or 1, "structure": list(T.structure),
           "generators": [str(P) for P in T.generators], "status": T.status,
           "witnesses": {"bound": T.bound, "counts": T.counts, "injective": T.witnesses}})
    return 0


# -- jac -----------------------------------------------------------------------------

def cmd_jac(args) -> int:
    from ..jacobians.counting import count_curve, lpoly
    from ..jacobians.plane import quartic_class_order
    M = _catalogue(args)[args.curve]
    if args.action == "count":
        _dump({"label": M.label, "p": args.prime, "k": args.ext, "count": count_curve(M, args.prime, args.ext)})
    elif args.action == "lpoly":
        L = lpoly(M, args.prime)
        _dump({"label": M.label, "p": args.prime, "coefficients": list(L.coeffs),
               "jacobian_order": L.jacobian_order})
    else:
        if not args.divisor:
            print("jac order needs --divisor", file=sys.stderr)
            return 2
        r = quartic_class_order(M, args.divisor, args.prime, args.cap)
        _dump({"label": M.label, "divisor": r.label, "p": r.p, "order": r.order,
               "jacobian_order": r.jacobian_order, "notes": list(r.notes)})
    return 0


# -- classify-image ------------------------------------------------------------------

def cmd_classify(args) -> int:
    from ..gl2.classify import classify_image
    from ..gl2.groups import closure, parse_mat
    gens = [parse_mat(s, args.p) for s in args.gens.split(";") if s.strip()]
    G = closure(gens, args.p)
    _dump(classify_image(G).as_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modquad", description="exact checks for quadratic points on small modular curves")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    sel = v.add_mutually_exclusive_group()
    sel.add_argument("--all", action="store_true")
    sel.add_argument("--check", nargs="+", metavar="NAME")
    sel.add_argument("--tag", nargs="+", choices=TAGS)
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=int)
    v.add_argument("--config", metavar="FILE")
    v.add_argument("--timings", action="store_true", help="include runtimes in the JSON report")
    v.add_argument("--list", action="store_true", help="list checks and exit")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalogue", help="inspect the curve catalogue")
    c.add_argument("action", choices=("list", "show", "validate"))
    c.add_argument("label", nargs="?")
    c.add_argument("--catalogue", metavar="FILE", help="use this catalogue file instead of the built-in one")
    c.set_defaults(func=cmd_catalogue)

    e = sub.add_parser("ell", help="elliptic curve computations")
    e.add_argument("action", choices=("count", "torsion"))
    e.add_argument("--curve", required=True)
    e.add_argument("--prime", type=int)
    e.add_argument("--field", type=int, help="squarefree d for Q(sqrt d)")
    e.set_defaults(func=cmd_ell)

    j = sub.add_parser("jac", help="Jacobian computations")
    j.add_argument("action", choices=("count", "lpoly", "order"))
    j.add_argument("--curve", required=True)
    j.add_argument("--prime", type=int, required=True)
    j.add_argument("--ext", type=int, default=1)
    j.add_argument("--divisor")
    j.add_argument("--cap", type=int, default=60)
    j.set_defaults(func=cmd_jac)

    g = sub.add_parser("classify-image", help="classify a subgroup of GL2(F_p)")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--gens", required=True, help='generators "a,b,c,d;a,b,c,d;..."')
    g.set_defaults(func=cmd_classify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "ell" and args.action == "count" and args.prime is None:
        print("ell count needs --prime", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (KeyError, ValueError, ConfigError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
