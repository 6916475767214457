"""Command-line interface.

Exit status: 0 on success, 1 on invalid input or flags, 2 when a valid input
cannot be evaluated (total conflict under Dempster's rule).
"""

from __future__ import annotations

import argparse
import sys

from . import errors
from .core import EMPTY, THETA
from .codon import check_codon, decode_codon, evolve_code, toy_code, translate
from .entropy import entropy
from .evaluation import EvalMode, interval
from .fusion import Rule, combine_all
from .io import (
    bundle_to_json,
    dumps,
    entropy_to_json,
    load_bundle,
    load_code,
    protein_to_json,
    trace_to_csv,
    trajectory_to_csv,
)

BUILTIN_CODES = {"toy:ambiguous": True, "toy:unambiguous": False}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _pos_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="evidentia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output(p):
        p.add_argument("-o", "--output", help="write here instead of standard output")

    rules = [r.value for r in Rule]
    modes = [m.value for m in EvalMode]

    p = sub.add_parser("combine", help="combine every body of a bundle")
    p.add_argument("bundle")
    p.add_argument("--rule", choices=rules, default="smets")
    output(p)

    p = sub.add_parser("eval", help="belief and plausibility of a hypothesis")
    p.add_argument("bundle")
    p.add_argument("--hypothesis", required=True, help="possibility name, 'theta' or 'empty'")
    p.add_argument("--mode", choices=modes, default="literal")
    p.add_argument("--rule", choices=rules, default="smets", help="used when the bundle has several bodies")
    output(p)

    p = sub.add_parser("entropy", help="generalized entropy of a bundle")
    p.add_argument("bundle")
    p.add_argument("--mode", choices=modes, default="literal")
    p.add_argument("--rule", choices=rules, default="smets")
    output(p)

    code_help = "genetic-code JSON file, or toy:ambiguous / toy:unambiguous"
    p = sub.add_parser("decode", help="decoding trace of one codon as CSV")
    p.add_argument("code", help=code_help)
    p.add_argument("--codon", required=True)
    p.add_argument("--rule", choices=rules, default="smets")
    p.add_argument("--mode", choices=modes, default="table")
    output(p)

    p = sub.add_parser("translate", help="statistical protein of an mRNA string as JSON")
    p.add_argument("code", help=code_help)
    p.add_argument("--mrna", required=True)
    p.add_argument("--samples", type=_pos_int, default=1000)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--rule", choices=rules, default="smets")
    output(p)

    p = sub.add_parser("evolve", help="entropy-descent trajectory as CSV")
    p.add_argument("code", help=code_help)
    p.add_argument("--steps", type=_pos_int, default=200)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--mode", choices=modes, default="literal")
    p.add_argument("--rule", choices=rules, default="smets")
    output(p)
    return parser


def _code(arg):
    if arg in BUILTIN_CODES:
        return toy_code(BUILTIN_CODES[arg])
    return load_code(arg)


def _fused(bundle, rule):
    return combine_all(rule, bundle.bodies).result


def _hypothesis(name):
    return {"theta": THETA, "empty": EMPTY}.get(name, name)


def run(args: argparse.Namespace) -> str:
    """Execute a parsed command and return the document it emits."""
    cmd = args.command
    if cmd == "combine":
        bundle = load_bundle(args.bundle)
        report = combine_all(args.rule, bundle.bodies)
        doc = bundle_to_json(
            bundle.frame, report.result.regime, [report.result], rule=report.rule.value, conflict=report.conflict
        )
        return dumps(doc)
    if cmd == "eval":
        bundle = load_bundle(args.bundle)
        r = interval(_fused(bundle, args.rule), _hypothesis(args.hypothesis), args.mode)
        return dumps({"hypothesis": args.hypothesis, "mode": r.mode.value, "bel": r.belief, "pl": r.plausibility})
    if cmd == "entropy":
        bundle = load_bundle(args.bundle)
        return dumps(entropy_to_json(entropy(_fused(bundle, args.rule), args.mode)))
    code = _code(args.code)
    if cmd == "decode":
        return trace_to_csv(decode_codon(code, check_codon(args.codon.upper()), args.rule, args.mode))
    if cmd == "translate":
        return dumps(protein_to_json(translate(code, args.mrna.upper(), args.samples, args.seed, args.rule)))
    if cmd == "evolve":
        return trajectory_to_csv(evolve_code(code, args.steps, args.seed, args.mode, args.rule))
    raise AssertionError(cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = run(args)
    except errors.ComputationError as exc:
        print(f"evidentia: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except errors.EvidenceError as exc:
        print(f"evidentia: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
