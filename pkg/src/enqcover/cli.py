"""Command-line interface.

Every command prints one JSON document.  Exit status: 0 on success, 1
when a verification fails or a point is rejected, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import QQ, DomainError, PolyError
from .serialize import (
    FormatError,
    dumps,
    forms_to_doc,
    loads,
    model_from_doc,
    model_to_doc,
    point_to_doc,
    quadrics_to_doc,
    record_doc,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return QQ.coerce(text)
    except (DomainError, ValueError) as e:
        raise UsageError(f"not an exact rational: {text!r}") from e


def _vector(text: str, n: int = 5) -> tuple:
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError(f"expected {n} comma-separated rationals, got {text!r}")
    return tuple(_rational(x) for x in parts)


def _family(args):
    """('hesse', (a, b)) or ('u1', lambdas) from --a/--b or --lambda."""
    has_ab = args.a is not None or args.b is not None
    if has_ab and args.lam is not None:
        raise UsageError("give either --a and --b or --lambda, not both")
    if args.lam is not None:
        return "u1", _vector(args.lam)
    if args.a is None or args.b is None:
        raise UsageError("give --a and --b, or --lambda")
    return "hesse", (_rational(args.a), _rational(args.b))


def _add_family(p):
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--lambda", dest="lam", metavar="L0,L1,L2,L3,L4")


# -- commands -----------------------------------------------------------------
def cmd_hesse(args, out):
    from .models import hesse_model

    out(model_to_doc(hesse_model(_rational(args.a), _rational(args.b))))
    return EXIT_OK


def cmd_u1(args, out):
    from .models import u1_model

    out(model_to_doc(u1_model(_vector(args.lam))))
    return EXIT_OK


def cmd_pfaffians(args, out):
    from .models import pfaffians

    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    except OSError as e:
        raise UsageError(str(e)) from e
    m = model_from_doc(loads(text))
    out(quadrics_to_doc(pfaffians(m)))
    return EXIT_OK


def _invariant_record(fam, vals):
    from .covariants.invariants import discrete_invariants, u1_invariants

    return discrete_invariants(*vals) if fam == "hesse" else u1_invariants(vals)


def cmd_invariants(args, out):
    fam, vals = _family(args)
    rec = _invariant_record(fam, vals)
    values = {"c4": rec.c4, "c6": rec.c6, "Delta": rec.Delta, "j": rec.j}
    if fam == "hesse":
        values = {"D": rec.D, **values}
    out(record_doc("invariants", values, extra={"singular": rec.singular}))
    return EXIT_OK


def _covering_data(fam, vals):
    from .covering import covering_data_hesse, covering_data_u1

    return covering_data_hesse(*vals) if fam == "hesse" else covering_data_u1(vals)


def cmd_covariants(args, out):
    from .covering import zxy

    fam, vals = _family(args)
    which = tuple(x.strip() for x in args.which.split(",") if x.strip())
    if not which or any(x not in ("Z", "X", "Y") for x in which):
        raise UsageError("--which takes a comma-separated subset of Z,X,Y")
    t = zxy(_covering_data(fam, vals), which=which)
    forms = {n: getattr(t, n) for n in which}
    out(forms_to_doc(forms))
    return EXIT_OK


def cmd_map(args, out):
    from .covering import zxy
    from .curve import CurveError, jacobian, map_point
    from .models import hesse_model, pfaffians, u1_model

    fam, vals = _family(args)
    point = _vector(args.point)
    if all(x == 0 for x in point):
        raise UsageError("the zero vector is not a point")
    rec = _invariant_record(fam, vals)
    curve = jacobian(rec.c4, rec.c6)
    model = hesse_model(*vals) if fam == "hesse" else u1_model(vals)
    triple = zxy(_covering_data(fam, vals), which=("Z", "X", "Y"))
    try:
        P = map_point(triple, point, curve, pfaffians(model))
    except CurveError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    out(point_to_doc(P, QQ, {"curve": str(curve), "singular_curve": curve.singular}))
    return EXIT_OK


def cmd_enumerate(args, out):
    from .finite import enumerate_points, prime_field
    from .models import hesse_model, u1_model

    fam, vals = _family(args)
    try:
        F = prime_field(args.p)
        vals = tuple(F.coerce(x) for x in vals)
    except DomainError as e:
        raise UsageError(str(e)) from e
    model = hesse_model(*vals, domain=F) if fam == "hesse" else u1_model(vals, domain=F)
    pts = enumerate_points(model, F.p)
    out({"field": F.descriptor(), "kind": "points", "count": len(pts), "points": [[str(x) for x in P] for P in pts]})
    return EXIT_OK


def cmd_verify(args, out):
    from .verify import SUITE_NAMES, verify_suite

    if args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}")
    rep = verify_suite(args.suite, args.seed)
    for line in rep.lines():
        print(line, file=sys.stderr)
    out(
        {
            "field": QQ.descriptor(),
            "kind": "report",
            "suite": rep.suite,
            "seed": rep.seed,
            "ok": rep.ok,
            "checks": [{"name": c.name, "ok": c.ok, "counterexample": c.counterexample} for c in rep.checks],
        }
    )
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="enqcover", description="Exact genus one quintic covariants and covering maps.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hesse", help="the Hesse model u(a, b)")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(fn=cmd_hesse)

    s = sub.add_parser("u1", help="the model u1(l0, ..., l4)")
    s.add_argument("--lambda", dest="lam", required=True, metavar="L0,L1,L2,L3,L4")
    s.set_defaults(fn=cmd_u1)

    s = sub.add_parser("pfaffians", help="the five quadrics of a model file ('-' for stdin)")
    s.add_argument("file")
    s.set_defaults(fn=cmd_pfaffians)

    s = sub.add_parser("invariants", help="D, c4, c6, Delta and j")
    _add_family(s)
    s.set_defaults(fn=cmd_invariants)

    s = sub.add_parser("covariants", help="the covariants Z, X, Y as forms in w")
    _add_family(s)
    s.add_argument("--which", default="Z,X,Y")
    s.set_defaults(fn=cmd_covariants)

    s = sub.add_parser("map", help="image of a point of the curve on the Jacobian")
    _add_family(s)
    s.add_argument("--point", required=True, metavar="W0,W1,W2,W3,W4")
    s.set_defaults(fn=cmd_map)

    s = sub.add_parser("enumerate", help="points of the curve over F_p")
    _add_family(s)
    s.add_argument("--p", required=True, type=int)
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("verify", help="run a group of identity checks")
    s.add_argument("--suite", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    def out(doc):
        sys.stdout.write(dumps(doc) + "\n")

    try:
        return args.fn(args, out)
    except (UsageError, FormatError, DomainError, PolyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
