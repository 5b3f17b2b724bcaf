"""Command line front end.

Exit codes: 0 ok, 1 input error, 2 not a hypersurface, 3 internal
inconsistency, 4 verification failure.
"""

import argparse
import json
import logging
import sys

from .degree import degree_from_polygon, degree_ps, degree_tropical
from .errors import InconsistencyError, InputError, NotHypersurfaceError, VerificationError
from .formats import instance_text, load_instance, polygon_to_json
from .generate import generate
from .implicitize import ImplicitPolynomial, implicitize, verify_vanishing
from .pluecker import build_pluecker
from .polygon import Classification, edge_matrix, newton_polygon
from .valuation import build_valuation

EXIT_OK, EXIT_INPUT, EXIT_NOT_HYPERSURFACE, EXIT_INCONSISTENT, EXIT_VERIFY = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_newton(args) -> int:
    inst = load_instance(_read(args.file))
    pd = build_pluecker(inst.A)
    V = build_valuation(inst.f)
    poly = newton_polygon(inst, pd, V)
    if args.format == "json":
        print(json.dumps(polygon_to_json(poly)))
        return EXIT_OK
    print(f"classification: {poly.classification.value}")
    print("vertices:")
    for v in poly.vertices:
        print(f"  {_vec(v)}")
    print("edges:")
    for e in poly.edges:
        print(f"  {_vec(e)}")
    print(f"lattice points: {len(poly.lattice_points)}")
    return EXIT_OK


def cmd_implicitize(args) -> int:
    inst = load_instance(_read(args.file))
    res = implicitize(inst, method=args.method)
    p = res.polynomial
    if args.format == "json":
        doc = p.to_json()
        doc.update(degree=p.degree, num_terms=len(p.terms), map_degree=res.map_degree, seconds=round(res.seconds, 6))
        print(json.dumps(doc))
    else:
        print(p.to_text())
        print(f"degree: {p.degree}")
        print(f"terms: {len(p.terms)}")
        if res.map_degree > 1:
            print(f"map degree: {res.map_degree} (polygon is {res.map_degree} times the Newton polygon)")
        print(f"time: {res.seconds:.3f}s")
    return EXIT_OK


def cmd_degree(args) -> int:
    inst = load_instance(_read(args.file))
    pd = build_pluecker(inst.A)
    V = build_valuation(inst.f)
    if edge_matrix(pd, V).classification is Classification.NOT_HYPERSURFACE:
        raise NotHypersurfaceError("not a hypersurface")
    methods = ["polygon", "tropical", "ps"] if args.method == "all" else [args.method]
    values = []
    for m in methods:
        if m == "polygon":
            values.append(degree_from_polygon(newton_polygon(inst, pd, V)))
        elif m == "tropical":
            values.append(degree_tropical(pd, V, seed=args.seed))
        else:
            values.append(degree_ps(inst.A, pd, V).degree)
    line = " ".join(str(v) for v in values)
    if len(values) > 1:
        if len(set(values)) != 1:
            print(line + " disagree")
            return EXIT_INCONSISTENT
        line += " agree"
    print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = load_instance(_read(args.file))
    if args.poly:
        text = _read(args.poly)
        try:
            p = ImplicitPolynomial.from_json(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"bad polynomial file: {exc}") from None
        if p.nvars != len(inst.A[0]):
            raise VerificationError(f"polynomial has {p.nvars} variables, instance needs {len(inst.A[0])}")
    else:
        p = implicitize(inst).polynomial
    report = verify_vanishing(p, inst, trials=args.trials, seed=args.seed)
    status = "pass" if report.passed else "fail"
    print(f"symbolic: {'pass' if report.symbolic else 'fail'}")
    print(f"random: {report.random_passed}/{report.random_trials}")
    if report.witness:
        print(f"witness: {json.dumps(report.witness)}")
    print(status)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_gen(args) -> int:
    text = instance_text(generate(args.n, args.d, args.k, args.seed))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="almosttoric", description="Newton polygons and implicit equations of almost-toric hypersurfaces")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("newton", help="classify and print the Newton polygon")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("implicitize", help="compute the implicit polynomial")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--method", choices=["auto", "exact", "modular"], default="auto")
    p.set_defaults(func=cmd_implicitize)

    p = sub.add_parser("degree", help="degree of the hypersurface")
    p.add_argument("file")
    p.add_argument("--method", choices=["polygon", "tropical", "ps", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="check that a polynomial vanishes on the parameterization")
    p.add_argument("file")
    p.add_argument("--poly", help="polynomial JSON file; computed from the instance when omitted")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotHypersurfaceError:
        print("not a hypersurface")
        return EXIT_NOT_HYPERSURFACE
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except VerificationError as exc:
        print(f"verification failed: {exc}")
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
