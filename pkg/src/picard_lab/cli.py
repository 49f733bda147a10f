"""``picard-lab`` command line entry point."""
from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .cohomology import GROUPS

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _table(results: list[suites.SuiteResult]) -> str:
    rows = [(r.suite, c.name, c.status, c.detail) for r in results for c in r.checks]
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(("suite", "check", "status"))]
    lines = [f"{'suite':<{widths[0]}}  {'check':<{widths[1]}}  {'status':<{widths[2]}}  detail"]
    lines.append("-" * len(lines[0]))
    for suite, check, status, detail in rows:
        lines.append(f"{suite:<{widths[0]}}  {check:<{widths[1]}}  {status:<{widths[2]}}  {detail}".rstrip())
    lines.append("")
    for r in results:
        n_ok = sum(c.ok for c in r.checks)
        lines.append(f"{r.suite}: {n_ok}/{len(r.checks)} passed in {r.wall_time:.2f}s")
    return "\n".join(lines)


def _records(results: list[suites.SuiteResult]) -> str:
    records = [rec for r in results for rec in r.records()]
    return json.dumps(records, sort_keys=True, indent=2, ensure_ascii=True)


def _curve_report(args) -> int:
    from .transform import apply_transform, parse_transform
    from .weierstrass import NotEllipticError, b_invariants, c4, classify, discriminant, j_invariant, parse_curve

    curve = parse_curve(args.curve)
    if args.transform:
        curve = apply_transform(curve, parse_transform(args.transform))
    print(f"curve         {curve}")
    print(f"b2,b4,b6,b8   {', '.join(str(b) for b in b_invariants(curve))}")
    print(f"c4            {c4(curve)}")
    print(f"discriminant  {discriminant(curve)}")
    try:
        print(f"j             {j_invariant(curve)}")
    except NotEllipticError:
        print("j             undefined (discriminant is zero)")
    try:
        print(f"class         {classify(curve).value}")
    except TypeError:
        pass
    return EXIT_OK


def _aut_report(args) -> int:
    from .autgroups import differential_character, enumerate_automorphisms, normalized_generator
    from .weierstrass import parse_curve

    group = enumerate_automorphisms(parse_curve(args.curve))
    print(f"order {group.order}{' (cyclic)' if group.is_cyclic() else ''}")
    for g in group.elements:
        print(f"  {g}")
    try:
        gen = normalized_generator(group)
        print(f"generator {gen.element} <-> {gen.root}; differential exponent {differential_character(group, gen)}")
    except ValueError as exc:
        print(f"no character normalization: {exc}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picard-lab", description="Exact verification suites for Weierstrass-curve computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of: {', '.join(suites.SUITES + ('all',))}")
    v.add_argument("--precision", "-N", type=int, default=24, help="series truncation N (default 24)")
    v.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    v.add_argument("--json", action="store_true", help="emit one JSON record per check")
    v.add_argument("--group", choices=GROUPS, help="restrict the cohomology suite to one group")

    c = sub.add_parser("curve", help="invariants of a curve given as a1,a2,a3,a4,a6@ring")
    c.add_argument("curve")
    c.add_argument("--transform", help="apply u,r,s,t@ring first")

    a = sub.add_parser("aut", help="automorphism group of a curve over a finite field")
    a.add_argument("curve")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("curve", "aut"):
        try:
            return _curve_report(args) if args.command == "curve" else _aut_report(args)
        except (ValueError, TypeError) as exc:
            print(f"picard-lab: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    opts = suites.Options(precision=args.precision, seed=args.seed, group=args.group)
    problem = suites.validate(args.suite, opts)
    if problem:
        parser.print_usage(sys.stderr)
        print(f"picard-lab: error: {problem}", file=sys.stderr)
        return EXIT_USAGE
    results = suites.run(args.suite, opts)
    print(_records(results) if args.json else _table(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
