"""Command-line surface: ``python3 -m fuzzylab <command> ...``.

Exit status: 0 success, 1 findings (a check failed), 2 usage or parse
errors, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classical import af_to_fas, clab_to_flab
from .errors import FuzzyLabError, ResourceError
from .extensions import ExtensionKind, enumerate_fextensions, ext_to_flab, flab_to_ext
from .io import (
    parse_af,
    parse_classical_labeling,
    parse_fas,
    parse_fextension,
    parse_labeling,
    render_fas,
    render_fextension,
    render_labeling,
    render_report,
)
from .postulates import Postulate, check_profile
from .principles import InstanceFamily, Principle, PrincipleLab
from .semantics import PROFILES, Semantics, characteristic_values, default_max_enum, is_labeling, solve

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _postulates(text: str) -> tuple:
    return tuple(Postulate(p.strip().upper()).value for p in text.split(",") if p.strip())


def cmd_check(args) -> int:
    fas = parse_fas(_read(args.fas)).fas
    lab = parse_labeling(_read(args.labeling)).labeling
    context = {"command": "check"}
    if args.postulates:
        profile = _postulates(args.postulates)
    else:
        s = Semantics.parse(args.semantics)
        context["semantics"] = s.value
        if s not in PROFILES:
            member = is_labeling(fas, lab, s, max_args=args.max_enum)
            context["member"] = member
            profile = PROFILES[Semantics.COMPLETE]
            reports = check_profile(fas, lab, profile)
            sys.stdout.write(render_report(reports, args.pretty, context))
            return EXIT_OK if member else EXIT_FINDINGS
        profile = PROFILES[s]
    reports = check_profile(fas, lab, profile)
    sys.stdout.write(render_report(reports, args.pretty, context))
    return EXIT_OK if all(r.satisfied for r in reports.values()) else EXIT_FINDINGS


def cmd_solve(args) -> int:
    fas = parse_fas(_read(args.fas)).fas
    if args.fext:
        kind = ExtensionKind.parse(args.fext)
        result = enumerate_fextensions(fas, kind, max_args=args.max_enum)
        context = {"command": "solve", "fextension": kind.value}
    else:
        s = Semantics.parse(args.semantics)
        result = solve(fas, s, max_args=args.max_enum)
        context = {"command": "solve", "semantics": s.value}
    sys.stdout.write(render_report(result, args.pretty, context))
    return EXIT_OK


def cmd_convert(args) -> int:
    wanted = 2 if args.mode == "ext2lab" else 1
    if len(args.inputs) != wanted:
        raise _Usage(f"{args.mode} takes {wanted} input file(s)")
    if args.mode == "lab2ext":
        lab = parse_labeling(_read(args.inputs[0])).labeling
        out = render_fextension(flab_to_ext(lab), lab.names)
    elif args.mode == "ext2lab":
        fas = parse_fas(_read(args.inputs[0])).fas
        out = render_labeling(ext_to_flab(fas, parse_fextension(_read(args.inputs[1]))))
    elif args.mode == "af2fas":
        out = render_fas(af_to_fas(parse_af(_read(args.inputs[0]))))
    else:
        out = render_labeling(clab_to_flab(parse_classical_labeling(_read(args.inputs[0]))))
    sys.stdout.write(out)
    return EXIT_OK


def cmd_principles(args) -> int:
    family = InstanceFamily(seed=args.seed, count=args.count, max_args=args.max_args)
    lab = PrincipleLab(family, max_enum=args.max_enum)
    semantics = [Semantics.parse(s) for s in args.semantics] if args.semantics else None
    principles = [Principle(p.upper()) for p in args.principle] if args.principle else None
    table = lab.sweep(semantics, principles)
    sys.stdout.write(render_report(table, args.pretty, {"command": "principles"}))
    return EXIT_OK


def cmd_values(args) -> int:
    fas = parse_fas(_read(args.fas)).fas
    sys.stdout.write(render_report(characteristic_values(fas), args.pretty, {"command": "enumerate-values"}))
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-enum", type=int, default=None, metavar="N",
                        help="enumeration cap in arguments (default: $FLAB_MAX_ENUM or 10)")
    common.add_argument("--pretty", action="store_true", help="aligned tables instead of JSON")

    parser = argparse.ArgumentParser(prog="fuzzylab", description="Fuzzy labeling semantics toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check a labeling against a semantics or postulates")
    p.add_argument("fas")
    p.add_argument("labeling")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--semantics", "-s")
    group.add_argument("--postulates", "-p", help="comma separated, e.g. BP,RP,SWP")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", parents=[common], help="enumerate labelings or f-extensions")
    p.add_argument("fas")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--semantics", "-s")
    group.add_argument("--fext", help="f-extension kind")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("convert", parents=[common], help="translate between representations")
    p.add_argument("mode", choices=["lab2ext", "ext2lab", "af2fas", "clab2flab"])
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("principles", parents=[common], help="sweep the principle table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-args", type=int, default=5)
    p.add_argument("--semantics", "-s", action="append")
    p.add_argument("--principle", action="append")
    p.set_defaults(func=cmd_principles)

    p = sub.add_parser("enumerate-values", parents=[common], help="print the characteristic value set")
    p.add_argument("fas")
    p.set_defaults(func=cmd_values)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.max_enum is None:
        try:
            args.max_enum = default_max_enum()
        except FuzzyLabError as exc:
            print(f"fuzzylab: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"fuzzylab: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FuzzyLabError, _Usage, OSError, ValueError) as exc:
        print(f"fuzzylab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
