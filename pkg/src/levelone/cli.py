"""Command-line surface.

Subcommands: verify, classify, recognize, invariants, transport, random,
canonical.  Exit codes are a stable contract:

    0  pass / success
    1  verification failed, no limit, or input not recognized
    2  usage error, unreadable or malformed input
    3  domain precondition violated (abelian classify input, pole at the
       evaluation point)

All commands are deterministic given their flags; randomness enters only
through an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import invariant_vector, random_algebra
from .canonical import CanonicalForm, Tag, construct
from .classify import ClassifierConfig, classify
from .errors import AbelianInput, NoLimit, ParseError, PoleAtPoint
from .jsonio import (
    algebra_from_dict,
    algebra_to_dict,
    canonical_form_from_dict,
    dumps,
    family_from_dict,
    family_to_dict,
    invariants_to_dict,
    load_path,
    parse_rational,
    recognition_to_dict,
    report_to_dict,
    save_path,
    witness_to_dict,
)
from .recognize import recognize
from .transport import (
    Witness,
    random_family,
    transport,
    transport_limit,
    verify_degeneration,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelone",
        description="Exact workbench for structure-constant algebras, "
        "degeneration witnesses and the level-one canonical forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a degeneration witness exactly")
    p.add_argument("--algebra", required=True, help="algebra JSON file")
    p.add_argument("--family", required=True, help="family JSON file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", help="canonical-form JSON file")
    group.add_argument(
        "--target-canonical",
        metavar="SPEC",
        help="inline target, e.g. lambda2:5 or nu:4:2/3",
    )
    p.add_argument("--up-to-iso", action="store_true",
                   help="compare via recognition instead of entrywise")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="produce a verified degeneration witness")
    p.add_argument("--algebra", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the witness JSON here instead of stdout")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("recognize", help="match an algebra against the canonical forms")
    p.add_argument("--algebra", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("invariants", help="basis-change invariants of an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("transport", help="apply a parametric family to an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--family", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--limit", action="store_true", help="entrywise limit at t = 0")
    group.add_argument("--at", metavar="T0", help="specialize at a rational point")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("random", help="seed-deterministic random inputs")
    p.add_argument("--kind", choices=("algebra", "family"), default="algebra")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--density", type=float, default=0.4, help="algebra kind only")
    p.add_argument("--pole-bound", type=int, default=1, help="family kind only")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--non-abelian", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("canonical", help="emit a canonical algebra")
    p.add_argument("--name", required=True, choices=[t.value for t in Tag])
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--alpha", help="rational scalar, nu only")
    p.add_argument("--out")
    p.set_defaults(func=cmd_canonical)

    return parser


def parse_canonical_spec(spec: str) -> CanonicalForm:
    parts = spec.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"bad target spec {spec!r}, want name:dim[:alpha]")
    tag = Tag(parts[0])
    dim = int(parts[1])
    alpha = parse_rational(parts[2]) if len(parts) == 3 else None
    return CanonicalForm(tag, dim, alpha)


def _emit(doc: dict, out: str | None) -> None:
    if out:
        save_path(out, doc)
    else:
        sys.stdout.write(dumps(doc))


def cmd_verify(args) -> int:
    a = algebra_from_dict(load_path(args.algebra))
    family = family_from_dict(load_path(args.family))
    if args.target:
        target = canonical_form_from_dict(load_path(args.target))
    else:
        target = parse_canonical_spec(args.target_canonical)
    report = verify_degeneration(a, Witness(family, target), up_to_iso=args.up_to_iso)
    if args.json:
        sys.stdout.write(dumps(report_to_dict(report)))
    else:
        print(report.summary())
    return 0 if report.passed else 1


def cmd_classify(args) -> int:
    a = algebra_from_dict(load_path(args.algebra))
    witness = classify(a, ClassifierConfig(seed=args.seed))
    report = verify_degeneration(a, witness)
    if not report.passed:  # classify() re-verifies, so this is unreachable
        print(report.summary(), file=sys.stderr)
        return 1
    _emit(witness_to_dict(witness), args.out)
    print(
        f"classified onto {witness.target.describe()}; witness verified",
        file=sys.stderr,
    )
    return 0


def cmd_recognize(args) -> int:
    a = algebra_from_dict(load_path(args.algebra))
    result = recognize(a)
    if args.json:
        sys.stdout.write(dumps(recognition_to_dict(result)))
    elif result.recognized:
        note = f" ({result.reason})" if result.reason else ""
        print(f"recognized: {result.form.describe()}{note}")
    else:
        print(f"not canonical: {result.reason}")
    return 0 if result.recognized else 1


def cmd_invariants(args) -> int:
    a = algebra_from_dict(load_path(args.algebra))
    iv = invariant_vector(a)
    doc = invariants_to_dict(iv)
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        for key in ("dim", "power_dims", "commutative", "anticommutative",
                    "nilpotent", "sym_rank", "skew_rank"):
            if key in doc:
                print(f"{key}: {doc[key]}")
    return 0


def cmd_transport(args) -> int:
    a = algebra_from_dict(load_path(args.algebra))
    family = family_from_dict(load_path(args.family))
    if args.at is not None:
        t0 = parse_rational(args.at)
        specialized = transport(a, family).eval_at(t0)
        _emit(algebra_to_dict(specialized), None)
        return 0
    try:
        limit = transport_limit(a, family)
    except NoLimit as exc:
        doc = {"limit": None, "poles": [list(e) for e in exc.entries]}
        if args.json:
            sys.stdout.write(dumps(doc))
        else:
            print(str(exc))
        return 1
    _emit(algebra_to_dict(limit), None)
    return 0


def cmd_random(args) -> int:
    if args.dim < 1:
        raise ValueError("--dim must be positive")
    if args.kind == "algebra":
        a = random_algebra(args.dim, args.density, args.seed, args.non_abelian)
        _emit(algebra_to_dict(a), args.out)
    else:
        pm = random_family(args.dim, args.pole_bound, args.seed)
        _emit(family_to_dict(pm), args.out)
    return 0


def cmd_canonical(args) -> int:
    alpha = parse_rational(args.alpha) if args.alpha is not None else None
    form = CanonicalForm(Tag(args.name), args.dim, alpha)
    _emit(algebra_to_dict(construct(form)), args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except AbelianInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PoleAtPoint as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
