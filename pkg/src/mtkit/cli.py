"""Command-line interface: ``mtkit <command> ...``.

Exit codes: 0 success, 1 validation error, 2 theorem violation, 3 schema error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import census, summary
from .completions import FinPoset, boolean_envelope, macneille, mt_from_frame
from .core import FinSpace, points_of
from .errors import BoundExceeded, SchemaError, ValidationError
from .frames import FiniteLattice, frame_profile, points, validate_frame
from .functors import functor_O, soberify
from .io import lattice_document, load, serialize, space_document
from .separation import classify, urysohn_family
from .theorems import THEOREM_IDS, run_theorem_suite

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION, EXIT_SCHEMA = 0, 1, 2, 3


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _want(obj, *types, what: str):
    if not isinstance(obj, types):
        raise ValidationError(f"expected a {what} document, got {type(obj).__name__}", None)
    return obj


def _frame_of(obj):
    """A space stands for its frame of opens; a lattice must be distributive."""
    if isinstance(obj, FinSpace):
        return functor_O(obj)
    return validate_frame(_want(obj, FiniteLattice, what="space or lattice"))


def cmd_validate(args) -> int:
    obj = load(args.file)
    _emit({"valid": True, "document": serialize(obj)})
    return EXIT_OK


def cmd_classify(args) -> int:
    M = _want(load(args.file), FinSpace, what="space")
    prof = classify(M)
    _emit({"profile": prof.as_dict(),
           "witnesses": {k: {"witness": _plain(w), "reason": r} for k, (w, r) in prof.witnesses.items()},
           "frame_profile": frame_profile(functor_O(M))})
    return EXIT_OK


def _plain(w):
    if isinstance(w, tuple):
        return [_plain(x) for x in w]
    if isinstance(w, int) and not isinstance(w, bool):
        return list(points_of(w))
    return w


def cmd_frame(args) -> int:
    M = _want(load(args.file), FinSpace, what="space")
    L = functor_O(M)
    doc = lattice_document(L)
    doc["labels"] = [list(points_of(u)) for u in L.labels]
    _emit(doc)
    return EXIT_OK


def cmd_points(args) -> int:
    L = _frame_of(load(args.file))
    pts = points(L)
    _emit({"points": [sorted(p.filter) for p in pts],
           "meet_irreducibles": list(L.meet_irreducibles)})
    return EXIT_OK


def cmd_complete(args) -> int:
    obj = load(args.file)
    if isinstance(obj, FiniteLattice):
        obj = FinPoset(obj.m, obj.up)
    P = _want(obj, FinPoset, what="poset or lattice")
    lat, embed = macneille(P)
    doc = lattice_document(lat)
    doc["embedding"] = list(embed)
    _emit(doc)
    return EXIT_OK


def cmd_envelope(args) -> int:
    L = _frame_of(load(args.file))
    env = boolean_envelope(L)
    M = mt_from_frame(L)
    doc = space_document(M)
    doc["join_irreducibles"] = list(env.joins)
    doc["embedding"] = [list(points_of(e)) for e in env.embed]
    _emit(doc)
    return EXIT_OK


def cmd_soberify(args) -> int:
    X = _want(load(args.file), FinSpace, what="space")
    _emit(space_document(soberify(X)))
    return EXIT_OK


def _mask(text: str) -> int:
    return int(text, 0)


def cmd_urysohn(args) -> int:
    M = _want(load(args.file), FinSpace, what="space")
    fam = urysohn_family(M, args.closed, args.open, args.depth)
    _emit({"depth": fam.depth,
           "members": [[str(p), list(points_of(u))] for p, u in sorted(fam.members.items())]})
    return EXIT_OK


def cmd_census(args) -> int:
    rows = census(args.n)
    out = {"n": args.n, "summary": summary(rows)}
    if not args.summary_only:
        out["rows"] = [r.as_dict() for r in rows]
    _emit(out)
    return EXIT_OK


def cmd_theorems(args) -> int:
    ids = args.only or None
    reports = run_theorem_suite(args.n, ids=ids, cumulative=args.cumulative)
    total = sum(len(r.violations) for r in reports)
    for r in reports:
        d = r.as_dict()
        d.pop("elapsed")
        _emit(d)
    _emit({"theorems": len(reports), "violations": total})
    return EXIT_VIOLATION if total else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtkit", description="Finite MT-algebras, frames and separation axioms.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("validate", cmd_validate, "check a space, lattice or poset document"),
        ("classify", cmd_classify, "separation profile and frame profile of a space"),
        ("frame", cmd_frame, "emit O(M) of a space as a lattice document"),
        ("points", cmd_points, "points of a frame (or of the opens of a space)"),
        ("complete", cmd_complete, "MacNeille completion of a poset"),
        ("envelope", cmd_envelope, "MT-algebra built from the Boolean envelope of a frame"),
        ("soberify", cmd_soberify, "soberification pt(Ω(X)) of a space"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("urysohn", help="dyadic Urysohn family between a closed and an open element")
    sp.add_argument("file")
    sp.add_argument("--closed", type=_mask, required=True, help="bitmask of the closed element")
    sp.add_argument("--open", type=_mask, required=True, help="bitmask of the open element")
    sp.add_argument("--depth", type=int, default=4)
    sp.set_defaults(func=cmd_urysohn)

    sp = sub.add_parser("census", help="classify every labeled topology on n points")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--summary-only", action="store_true")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("theorems", help="run the theorem suite on every topology on n points")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cumulative", action="store_true", help="include all smaller point counts")
    sp.add_argument("--only", action="append", choices=THEOREM_IDS, help="restrict to a theorem id")
    sp.set_defaults(func=cmd_theorems)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (ValidationError, BoundExceeded) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
