"""Command-line front end.

Exit status: 0 when every check passes, 1 when an axiom fails, 2 on input
errors (unreadable or malformed bundles, unknown axioms, cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bundle import (
    AXIOMS,
    Bundle,
    BundleError,
    dumps_bundle,
    load_bundle,
    structures,
    verify_bundle,
)
from .cocycle import obstructors, verify_obstructors, verify_regularity
from .errors import CapExceededError, SemistatError, VerificationError
from .exact_linalg import FieldSpec, is_idempotent, reflexive_ginverse
from .report import Report
from .search import SolutionCatalog, recheck_catalog, search_regular_ybe
from .textform import matrix_from_text, matrix_to_text
from .ybop import verify_algebra, verify_coalgebra, verify_yb_operator

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _format_matrix(m) -> str:
    width = max((len(m.field.format(x)) for x in m.entries), default=1)
    return "\n".join("  [" + " ".join(m.field.format(x).rjust(width) for x in m.row(i)) + "]"
                     for i in range(m.rows))


def _emit(args, report: Report, extra: dict | None = None):
    if args.report_format == "structured":
        doc = report.to_dict()
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(report.render())


def _load(args, path) -> Bundle:
    return load_bundle(path, args.field)


def cmd_verify(args) -> int:
    b = _load(args, args.bundle)
    axioms = None
    if args.axioms:
        axioms = [a.strip() for a in args.axioms.split(",") if a.strip()]
    report = verify_bundle(b, axioms, strict_stars=args.strict_stars)
    _emit(args, report, {"kind": b.kind})
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_obstructor(args) -> int:
    b = _load(args, args.bundle)
    if b.kind != "cocycle":
        raise InputError(f"obstructor needs a cocycle bundle, got {b.kind!r}")
    c = structures(b)["cocycle"]
    reg = verify_regularity(c)
    if not reg.passed:
        bad = reg.first_failure()
        w = bad.witness
        print(f"error: regularity equation {bad.level} fails at entry ({w.row},{w.col}): {w.lhs} != {w.rhs}",
              file=sys.stderr)
        _emit(args, reg)
        return EXIT_FAIL
    obs = obstructors(c)
    checks = verify_obstructors(c, obs)
    if args.report_format == "structured":
        doc = {"obstructors": [matrix_to_text(e) for e in obs],
               "idempotent": [is_idempotent(e) for e in obs], "passed": checks.passed}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for n, e in enumerate(obs):
            print(f"e[{n}] ({'idempotent' if is_idempotent(e) else 'NOT idempotent'}):")
            print(_format_matrix(e))
    return EXIT_OK if checks.passed else EXIT_FAIL


def cmd_ginverse(args) -> int:
    if args.matrix is not None:
        F = args.field or FieldSpec.rationals()
        try:
            raw = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise InputError(f"inline matrix is not JSON: {exc}") from None
        m = matrix_from_text(F, raw)
    elif args.bundle is not None:
        b = _load(args, args.bundle)
        if b.kind != "matrix":
            raise InputError(f"ginverse needs a matrix bundle, got {b.kind!r}")
        m = b.payload["M"]
    else:
        raise InputError("give a bundle path or --matrix")
    x = reflexive_ginverse(m)
    mxm, xmx = m @ x @ m, x @ m @ x
    ok = mxm == m and xmx == x
    if args.report_format == "structured":
        print(json.dumps({"field": str(m.field), "ginverse": matrix_to_text(x), "MXM": matrix_to_text(mxm),
                          "XMX": matrix_to_text(xmx), "passed": ok}, indent=2, sort_keys=True))
    else:
        print(f"X over {m.field}:")
        print(_format_matrix(x))
        print("M X M:")
        print(_format_matrix(mxm))
        print("X M X:")
        print(_format_matrix(xmx))
        print(f"{'PASS' if mxm == m else 'FAIL'} M X M = M")
        print(f"{'PASS' if xmx == x else 'FAIL'} X M X = X")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args) -> int:
    b = _load(args, args.bundle)
    if b.kind != "search_spec":
        raise InputError(f"search needs a search_spec bundle, got {b.kind!r}")
    if args.workers is not None:
        b.payload["workers"] = args.workers
    if args.override:
        b.payload["override"] = True
    try:
        spec = structures(b)["spec"]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    cat = search_regular_ybe(spec)
    text = json.dumps(cat.to_document(), indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    print(cat.summary(), file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK


def cmd_catalog_check(args) -> int:
    try:
        doc = json.loads(Path(args.catalog).read_text())
        cat = SolutionCatalog.from_document(doc)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, SemistatError, ValueError) as exc:
        raise InputError(f"cannot read catalog {args.catalog}: {exc}") from None
    problems = recheck_catalog(cat)
    for line in problems:
        print(f"FAIL {line}")
    print(f"{'PASS' if not problems else 'FAIL'} catalog {len(cat)} solutions re-verified")
    return EXIT_OK if not problems else EXIT_FAIL


def cmd_twist(args) -> int:
    b = _load(args, args.bundle)
    if b.kind != "yb_operator" or not ({"m", "Delta"} & set(b.payload)):
        raise InputError("twist needs a yb_operator bundle carrying m and/or Delta")
    s = structures(b)
    pre = verify_yb_operator(s["carrier"], s["operator"])
    if "algebra" in s:
        pre.extend(verify_algebra(s["algebra"]))
    if "coalgebra" in s:
        pre.extend(verify_coalgebra(s["coalgebra"]))
    if not pre.passed:
        print("error: input structures do not verify", file=sys.stderr)
        _emit(args, pre)
        return EXIT_FAIL
    payload = dict(b.payload)
    R = s["operator"].operators
    notes = []
    if "m" in payload:
        payload["m"] = [m @ r for m, r in zip(payload["m"], R)]
    if "Delta" in payload:
        payload["Delta"] = [r @ d for d, r in zip(payload["Delta"], R)]
    out = Bundle(b.kind, b.field, payload, dict(b.metadata))
    # keep (co)associativity claims only where they survive the twist
    for flag in ("associative", "coassociative"):
        if payload.get(flag):
            rep = verify_bundle(out, [flag.replace("ive", "ivity")])
            if not rep.passed:
                payload[flag] = False
                notes.append(f"{flag} claim dropped: it does not survive the twist")
    post = verify_bundle(out, strict_stars=args.strict_stars)
    text = dumps_bundle(out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    for n in notes:
        print(f"note: {n}", file=sys.stderr)
    return EXIT_OK if post.passed else EXIT_FAIL


def cmd_axioms(args) -> int:
    for kind, names in AXIOMS.items():
        print(f"{kind}: {', '.join(names) or '-'}")
    return EXIT_OK


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except SemistatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=argparse.SUPPRESS,
                        help="field override, e.g. Q or GF(3)")
    common.add_argument("--strict-stars", action=argparse.BooleanOptionalAction, default=argparse.SUPPRESS,
                        help="require B* o B o B* = B* for stored braiding stars (default on)")
    common.add_argument("--report-format", choices=("text", "structured"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="semistat", parents=[common],
                                     description="Verify and search regular braidings, YB operators and Hopf structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check every axiom of a bundle")
    p.add_argument("bundle")
    p.add_argument("--axioms", help="comma-separated subset of axiom names")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("obstructor", parents=[common], help="print the obstructors of a cocycle")
    p.add_argument("bundle")
    p.set_defaults(func=cmd_obstructor)

    p = sub.add_parser("ginverse", parents=[common], help="reflexive generalized inverse")
    p.add_argument("bundle", nargs="?")
    p.add_argument("--matrix", help='inline JSON rows, e.g. "[[1,1],[1,1]]"')
    p.set_defaults(func=cmd_ginverse)

    p = sub.add_parser("search", parents=[common], help="exhaustive regular-YBE search")
    p.add_argument("bundle")
    p.add_argument("-o", "--output")
    p.add_argument("--workers", type=int)
    p.add_argument("--override", action="store_true", help="ignore the candidate cap")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("twist", parents=[common], help="twist m by R (m o R) and/or Delta (R o Delta)")
    p.add_argument("bundle")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("catalog-check", parents=[common], help="re-verify a written catalog")
    p.add_argument("catalog")
    p.set_defaults(func=cmd_catalog_check)

    p = sub.add_parser("axioms", parents=[common], help="list axiom names per bundle kind")
    p.set_defaults(func=cmd_axioms)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors map to the input-error code
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    for name, default in (("field", None), ("strict_stars", True), ("report_format", "text")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc.count} candidates exceed the cap of {exc.cap}; pass --override to proceed",
              file=sys.stderr)
        return EXIT_INPUT
    except (InputError, BundleError, VerificationError, SemistatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL if isinstance(exc, VerificationError) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
