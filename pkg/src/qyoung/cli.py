"""Command-line interface: ``qyoung verify | expand | matrix | solve``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .clifford import Multivector
from .field import FieldError
from .parser import Context, EvaluationError, ParseError, evaluate_text
from .suites import MODES, SAMPLES, SUITES, UnknownSuiteError, run_suite


def _hecke_element(name: str):
    """A named operator, basis word or Hecke expression as an element of H(3,q)."""
    from .hecke import hecke_algebra
    from .parser import parse_hecke
    from .young import NAMED_OPERATORS, named_operator

    H = hecke_algebra(3)
    if name in NAMED_OPERATORS:
        return named_operator(name, H)
    return parse_hecke(name, H)


def _family_json(fam) -> dict:
    return {
        "dimension": fam.dimension,
        "particular": fam.particular.as_dict(),
        "directions": [d.as_dict() for d in fam.directions],
    }


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.mode, args.seed, samples=args.samples)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code


def cmd_expand(args) -> int:
    value = evaluate_text(args.expr, Context(args.n))
    if args.hecke:
        from .hecke import hecke_algebra

        H = hecke_algebra(3, "q", args.n)
        mv = value if isinstance(value, Multivector) else Multivector.scalar(2 * args.n, value)
        print(H.to_hecke_coords(mv))
    else:
        print(value)
    return 0


def cmd_matrix(args) -> int:
    x = _hecke_element(args.name)
    if args.basis == "young":
        from .repmat import left_regular_matrix

        M = left_regular_matrix(x)
        labels = ["S1", "S2", "S3", "S4", "S5", "S6"]
    else:
        M = x.algebra.left_matrix(x)
        labels = list(x.algebra.names)
    rows = M.to_lists()
    if args.format == "json":
        print(json.dumps({"element": args.name, "basis": args.basis, "labels": labels, "rows": rows},
                         indent=2))
    else:
        for i, row in enumerate(rows):
            print(f"[{labels[i]}]")
            for j, entry in enumerate(row):
                if entry != "0":
                    print(f"  ({i + 1},{j + 1}) {entry}")
    return 0


def cmd_solve(args) -> int:
    from . import garnir
    from .young import young_n2, young_operators3

    if args.what == "garnir":
        from .young import mixed_young

        fam = garnir.solve_right_annihilator(mixed_young((1, 2, 3)))
        out = {"system": "Y21_123 * G = 0", **_family_json(fam)}
    else:
        if not args.pair:
            raise SystemExit("solve intertwiner needs --pair A,B")
        a, _, b = args.pair.partition(",")
        ops = {k: v.element for k, v in young_operators3().items()}
        Y2, Y11 = young_n2()
        ops.update({"Y2": Y2.element, "Y11": Y11.element})
        missing = [n for n in (a, b) if n not in ops]
        if missing:
            raise SystemExit(f"unknown Young operator(s) {missing}; choose from {sorted(ops)}")
        fam = garnir.solve_intertwiner(ops[a], ops[b])
        out = {"system": f"T * {a} = {b} * T", **_family_json(fam),
               "annihilating": garnir.check_no_intertwiner(ops[a], ops[b])}
    print(json.dumps(out, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qyoung", description="Exact q-Young operator toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, all")
    v.add_argument("--mode", choices=MODES, default="exact")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=SAMPLES)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("expand", help="evaluate an expression to its Grassmann expansion")
    e.add_argument("expr")
    e.add_argument("--n", type=int, default=4)
    e.add_argument("--hecke", action="store_true", help="print coordinates in the Hecke word basis")
    e.set_defaults(func=cmd_expand)

    m = sub.add_parser("matrix", help="left-regular matrix of an element of H(3,q)")
    m.add_argument("name", help="named operator, basis word or Hecke expression")
    m.add_argument("--basis", choices=("young", "hecke"), default="young")
    m.add_argument("--format", choices=("json", "pretty"), default="pretty")
    m.set_defaults(func=cmd_matrix)

    s = sub.add_parser("solve", help="solve a defining linear system")
    s.add_argument("what", choices=("garnir", "intertwiner"))
    s.add_argument("--pair", help="A,B for T A = B T, e.g. Y21_123,Y21_132")
    s.set_defaults(func=cmd_solve)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        text = exc.text or ""
        print(f"syntax error: {exc.msg}", file=sys.stderr)
        if text:
            print(f"  {text}\n  {' ' * exc.offset}^", file=sys.stderr)
        return 2
    except UnknownSuiteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EvaluationError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
