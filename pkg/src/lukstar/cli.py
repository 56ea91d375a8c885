"""Command-line front end.

Exit codes: 0 when a verdict was computed, 1 when a verification found
failures (an invalid formula, a failed check report, a failed reproduction),
2 on usage errors. Every subcommand takes --json for machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .acceptance import CRITERIA, run_all
from .axioms import check_hilbert_axioms, check_lambda_equations
from .chain import Chain
from .classify import classification, pi_below
from .formulas import (
    BudgetExceeded, Matrix, ParseError, evaluate, is_valid, consequence, parse,
)
from .igstar import (
    AbstractIGChain, MalformedSequence, SkSeq, fixed_point, is_representable,
    skeleton, validate_igstar,
)
from .subalgebra import all_subalgebras, generated, is_strictly_simple
from .terms import NotTermEquivalent, UnaryTerm, synth_delta, synth_luk_imp


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _cmd_table(args) -> int:
    chain = Chain(args.n)
    rows = {
        "x": [x.num for x in chain.universe],
        "~x": [x.neg().num for x in chain.universe],
        "*x": [x.star().num for x in chain.universe],
        "+x": [x.plus().num for x in chain.universe],
        "Dx": [x.baaz().num for x in chain.universe],
    }
    if args.json:
        print(json.dumps({"n": chain.n, "rows": rows}))
        return 0
    width = max(len(str(x)) for x in chain.universe) + 1
    for name, nums in rows.items():
        cells = "".join(str(Chain(args.n).elem(k)).rjust(width) for k in nums)
        print(f"{name:>4} |{cells}")
    return 0


def _cmd_subalgebras(args) -> int:
    subs = all_subalgebras(Chain(args.n))
    if args.json:
        print(json.dumps([json.loads(s.to_json()) for s in subs]))
    else:
        for s in subs:
            print(s)
    return 0


def _cmd_strictly_simple(args) -> int:
    verdict = is_strictly_simple(Chain(args.n))
    _emit(args, {"n": args.n, "strictly_simple": verdict},
          f"the {args.n + 1}-element chain is {'strictly simple' if verdict else 'not strictly simple'}")
    return 0


def _cmd_classify(args) -> int:
    if args.below is not None:
        members = pi_below(args.below)
        _emit(args, {"below": args.below, "members": members},
              ", ".join(str(n) for n in members))
        return 0
    info = classification(args.n)
    text = (f"n={info['n']}: prime={info['prime']} in_pi={info['in_pi']} "
            f"term_equivalent={info['term_equivalent']} fermat={info['fermat']}")
    if "witness_m" in info:
        text += f" (2^{info['witness_m']} = {info['sign']:+d} mod {info['n']})"
    _emit(args, info, text)
    return 0


def _cmd_synth_delta(args) -> int:
    chain = Chain(args.n)
    a = chain.elem(args.a)
    term = synth_delta(chain, a)
    if isinstance(term, UnaryTerm):
        values = [term.apply(chain, x).num for x in chain.universe]
        payload = {"n": args.n, "a": args.a, "term": str(term),
                   "ops": json.loads(term.to_json())["ops"], "values": values}
    else:
        values = [evaluate(term, chain, {0: x}).num for x in chain.universe]
        payload = {"n": args.n, "a": args.a, "formula": str(term), "values": values}
    if args.json:
        print(json.dumps(payload))
        return 0
    print(payload.get("term", payload.get("formula")))
    width = max(len(str(x)) for x in chain.universe) + 1
    print("   x |" + "".join(str(x).rjust(width) for x in chain.universe))
    name = f"D[{args.a}/{args.n}]"
    print(f"{name} |" + "".join(str(chain.elem(v)).rjust(width) for v in values))
    return 0


def _cmd_synth_imp(args) -> int:
    chain = Chain(args.n)
    try:
        f = synth_luk_imp(chain)
    except NotTermEquivalent as e:
        payload = {"n": args.n, "term_equivalent": False,
                   "in_pi": e.verdict.in_pi}
        if e.verdict.witness_m is not None:
            payload["witness_m"] = e.verdict.witness_m
            payload["sign"] = e.verdict.sign
        _emit(args, payload, f"n={args.n}: implication is not definable ({e})")
        return 0
    mismatches = sum(
        1 for x in chain.universe for y in chain.universe
        if evaluate(f, chain, {0: x, 1: y}) != x.luk_imp(y)
    )
    payload = {"n": args.n, "term_equivalent": True,
               "pairs_checked": (args.n + 1) ** 2, "mismatches": mismatches}
    _emit(args, payload,
          f"n={args.n}: implication synthesized; "
          f"{payload['pairs_checked']} pairs checked, {mismatches} mismatches")
    return 0 if mismatches == 0 else 1


def _parse_or_die(parser, text):
    try:
        return parse(text)
    except ParseError as e:
        parser.error(str(e))


def _cmd_valid(args, parser) -> int:
    m = Matrix(args.n, args.i)
    f = _parse_or_die(parser, args.formula)
    try:
        res = is_valid(m, f)
    except BudgetExceeded as e:
        parser.error(str(e))
    cm = {f"p{k}": str(v) for k, v in (res.countermodel or {}).items()}
    _emit(args, {"n": args.n, "i": args.i, "formula": args.formula,
                 "valid": res.valid, "countermodel": cm or None},
          "valid" if res.valid else f"invalid, countermodel {cm}")
    return 0 if res.valid else 1


def _cmd_conseq(args, parser) -> int:
    m = Matrix(args.n, args.i)
    premises = [_parse_or_die(parser, p) for p in args.premise]
    goal = _parse_or_die(parser, args.goal)
    try:
        res = consequence(m, premises, goal)
    except BudgetExceeded as e:
        parser.error(str(e))
    cm = {f"p{k}": str(v) for k, v in (res.countermodel or {}).items()}
    _emit(args, {"n": args.n, "i": args.i, "holds": res.valid,
                 "countermodel": cm or None},
          "holds" if res.valid else f"fails, countermodel {cm}")
    return 0 if res.valid else 1


def _report_exit(args, report) -> int:
    _emit(args, report.to_dict(), str(report))
    return 0 if report.ok else 1


def _cmd_check_axioms(args) -> int:
    return _report_exit(args, check_hilbert_axioms(Matrix(args.n, args.i)))


def _cmd_check_equations(args) -> int:
    return _report_exit(args, check_lambda_equations(Chain(args.n)))


def _cmd_skfix(args, parser) -> int:
    try:
        seq = SkSeq.parse(args.sequence)
        value = fixed_point(seq)
    except MalformedSequence as e:
        parser.error(str(e))
    _emit(args, {"sequence": str(seq), "fixed_point": str(value)}, str(value))
    return 0


def _load_igchain(parser, path: str) -> AbstractIGChain:
    try:
        return AbstractIGChain.from_json(Path(path).read_text())
    except (OSError, ValueError, KeyError) as e:
        parser.error(f"cannot load chain from {path}: {e}")


def _cmd_igstar(args, parser) -> int:
    chain = _load_igchain(parser, args.file)
    if args.igstar_cmd == "validate":
        return _report_exit(args, validate_igstar(chain))
    if args.igstar_cmd == "representable":
        verdict = is_representable(chain)
        if verdict.representable:
            text = f"representable: embeds into the {verdict.k + 1}-element chain, numerators {list(verdict.embedding)}"
        else:
            text = (f"not representable: condition {verdict.violated_condition} "
                    f"violated, witness {verdict.witness}")
        _emit(args, verdict.to_dict(), text)
        return 0
    sk = skeleton(chain, args.elem)
    _emit(args, {"elem": args.elem, "skeleton": str(sk)}, str(sk))
    return 0


def _cmd_reproduce(args) -> int:
    numbers = None
    if args.criteria:
        numbers = [int(tok) for tok in args.criteria.split(",")]
        unknown = set(numbers) - {num for num, _, _ in CRITERIA}
        if unknown:
            raise SystemExit(f"unknown criteria: {sorted(unknown)}")
    results = run_all(numbers)
    if args.json:
        print(json.dumps([
            {"criterion": r.number, "title": r.title, "passed": r.passed,
             "detail": r.detail, "seconds": round(r.seconds, 3)}
            for r in results
        ]))
    else:
        for r in results:
            print(r.line())
        failed = [r.number for r in results if not r.passed]
        print("all criteria passed" if not failed else f"FAILED criteria: {failed}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lukstar",
        description="exact computations on finite chains with join, square and involutive negation",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("table", help="unary operation table of a chain")
    p.add_argument("--n", type=int, required=True)

    p = add("subalgebras", help="every subalgebra of a chain")
    p.add_argument("--n", type=int, required=True)

    p = add("strictly-simple", help="strict-simplicity verdict")
    p.add_argument("--n", type=int, required=True)

    p = add("classify", help="arithmetic classification of a chain size")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--below", type=int, help="list class members below this bound")

    p = add("synth-delta", help="synthesize a filter indicator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True, help="numerator of the threshold")

    p = add("synth-imp", help="synthesize the chain implication where definable")
    p.add_argument("--n", type=int, required=True)

    p = add("valid", help="tautology check in a filter matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("formula")

    p = add("conseq", help="consequence check in a filter matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--premise", action="append", default=[])
    p.add_argument("goal")

    p = add("check-axioms", help="verify every axiom schema of the filter calculus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = add("check-equations", help="verify the variety equations on a chain")
    p.add_argument("--n", type=int, required=True)

    p = add("skfix", help="fixed point of a star/inv sequence, e.g. '**~'")
    p.add_argument("sequence")

    p = add("igstar", help="operations on abstract star-chain files")
    igsub = p.add_subparsers(dest="igstar_cmd", required=True)
    for name in ("validate", "representable", "skeleton"):
        q = igsub.add_parser(name)
        q.add_argument("file")
        q.add_argument("--json", action="store_true")
        if name == "skeleton":
            q.add_argument("--elem", type=int, required=True)

    p = add("reproduce", help="run the acceptance suite")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--criteria", help="comma-separated criterion numbers")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "table":
            return _cmd_table(args)
        if args.cmd == "subalgebras":
            return _cmd_subalgebras(args)
        if args.cmd == "strictly-simple":
            return _cmd_strictly_simple(args)
        if args.cmd == "classify":
            return _cmd_classify(args)
        if args.cmd == "synth-delta":
            return _cmd_synth_delta(args)
        if args.cmd == "synth-imp":
            return _cmd_synth_imp(args)
        if args.cmd == "valid":
            return _cmd_valid(args, parser)
        if args.cmd == "conseq":
            return _cmd_conseq(args, parser)
        if args.cmd == "check-axioms":
            return _cmd_check_axioms(args)
        if args.cmd == "check-equations":
            return _cmd_check_equations(args)
        if args.cmd == "skfix":
            return _cmd_skfix(args, parser)
        if args.cmd == "igstar":
            return _cmd_igstar(args, parser)
        if args.cmd == "reproduce":
            return _cmd_reproduce(args)
    except ValueError as e:
        parser.error(str(e))
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
