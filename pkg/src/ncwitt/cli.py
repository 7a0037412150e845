"""Command-line entry point: ``ncwitt <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import GeneratorSet, MatrixAssignment, ParseError, eval_matrix, format_poly, parse
from .ghost import IntWittVector, witt_add_int, witt_mul_int
from .necklace import project
from .verify import CHECKS, poly_json, run_check, sweep


def _gens(text: str) -> GeneratorSet:
    return GeneratorSet(s.strip() for s in text.split(","))


def _ints(text: str):
    return tuple(int(s) for s in text.split(","))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_ghost(args) -> int:
    from .ghost import ghost_map

    gens = _gens(args.gens)
    coords = [parse(t, gens) for t in args.coords.split(";")]
    if args.trunc is not None:
        if len(coords) > args.trunc:
            raise SystemExit(f"error: {len(coords)} coordinates given for truncation {args.trunc}")
        coords += [gens.zero()] * (args.trunc - len(coords))
    g = ghost_map(coords, args.prime)
    _emit({"ghost": [poly_json(c) for c in g]})
    return 0


def cmd_necklace(args) -> int:
    f = project(parse(args.poly, _gens(args.gens), args.mod))
    _emit({"text": format_poly(f), "terms": poly_json(f)})
    return 0


def cmd_witt(args) -> int:
    a = IntWittVector(args.prime, _ints(args.a))
    b = IntWittVector(args.prime, _ints(args.b))
    op = witt_add_int if args.command == "witt-add" else witt_mul_int
    c = op(a, b)
    _emit({"coords": [str(x) for x in c.coords]})
    return 0


def _report_out(reports, fmt, single):
    if fmt == "text":
        print("\n".join(r.render_text() for r in reports))
    elif single:
        _emit(reports[0].to_dict())
    else:
        _emit([r.to_dict() for r in reports])
    return 0 if all(r.holds for r in reports) else 1


def cmd_verify(args) -> int:
    return _report_out([run_check(args.theorem, args.prime, args.trunc)], args.format, True)


def cmd_sweep(args) -> int:
    return _report_out(sweep(args.max_prime, args.trunc, args.jobs), args.format, False)


def load_assignment(path: str):
    with open(path) as fh:
        spec = json.load(fh)
    modulus = spec.get("modulus", "int")
    modulus = None if modulus == "int" else int(modulus)
    return MatrixAssignment(int(spec["dimension"]), modulus, spec["assign"])


def cmd_eval(args) -> int:
    asg = load_assignment(args.matrices)
    gens = _gens(args.gens) if args.gens else GeneratorSet(asg.matrices)
    f = parse(args.poly, gens)
    m = eval_matrix(f, asg)
    _emit({"matrix": [[str(x) for x in row] for row in m]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncwitt", description="Witt vector calculus over free algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("ghost", help="ghost components of Witt coordinates, projected to A/[A,A]")
    g.add_argument("--prime", type=int, required=True)
    g.add_argument("--trunc", type=int)
    g.add_argument("--coords", required=True, help='";"-separated polynomials')
    g.add_argument("--gens", default="X,Y")
    g.set_defaults(func=cmd_ghost)

    nk = sub.add_parser("necklace", help="canonical form in A/[A,A]")
    nk.add_argument("--mod", type=int)
    nk.add_argument("--gens", default="X,Y")
    nk.add_argument("poly")
    nk.set_defaults(func=cmd_necklace)

    for name in ("witt-add", "witt-mul"):
        w = sub.add_parser(name, help="classical integer Witt vector arithmetic")
        w.add_argument("--prime", type=int, required=True)
        w.add_argument("--a", required=True)
        w.add_argument("--b", required=True)
        w.set_defaults(func=cmd_witt)

    v = sub.add_parser("verify", help="run one verification check")
    v.add_argument("--theorem", choices=CHECKS, required=True)
    v.add_argument("--prime", type=int, required=True)
    v.add_argument("--trunc", type=int, default=2)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("verify-sweep", help="all checks for every prime up to a bound")
    s.add_argument("--max-prime", type=int, required=True)
    s.add_argument("--trunc", type=int, default=2)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("eval", help="evaluate a polynomial at matrices")
    e.add_argument("--matrices", required=True, help="JSON assignment file")
    e.add_argument("--gens", help="generator order (default: keys of the assignment)")
    e.add_argument("poly")
    e.set_defaults(func=cmd_eval)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
