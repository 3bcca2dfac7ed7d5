"""Command-line interface.

Commands emit either human-oriented text (default) or a machine-readable
JSON record with the fields command / inputs / result / status /
error_detail.  All numbers are exact: rationals use the canonical "num/den"
text form and integers are decimal strings in JSON.  Exit codes: 0 success,
1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import trees, verify, zeta
from .rationals import double_factorial_product
from .recursion import numerator_polynomial, translated_polynomial, zeta_numerator
from .sequences import ODD_NUMBERS, SequenceSpec

__all__ = ["main", "OutputRecord"]


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: dict = field(default_factory=dict)
    status: str = "ok"
    error_detail: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "status": self.status,
                "error_detail": self.error_detail,
            },
            indent=2,
        )


def _emit(record: OutputRecord, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(record.to_json())
    else:
        for line in text_lines:
            print(line)


def _fail(args, command: str, inputs: dict, message: str) -> int:
    record = OutputRecord(
        command=command, inputs=inputs, status="error", error_detail=message
    )
    if args.format == "json":
        print(record.to_json())
    else:
        print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_bernoulli(args) -> int:
    inputs = {"k": args.k, "method": args.method}
    if args.k < 1:
        return _fail(args, "bernoulli", inputs, "--k must be >= 1")
    if args.method == "tree" and args.k > trees.TREE_SUM_MAX:
        return _fail(
            args,
            "bernoulli",
            inputs,
            f"tree method supports k up to {trees.TREE_SUM_MAX}",
        )
    if args.method == "classical":
        value = zeta.bernoulli_classical(2 * args.k)
    elif args.method == "tree":
        # same inversion as bernoulli_even, numerator taken from the tree sum
        # (the single one-vertex tree contributes the k=1 numerator directly)
        numer = trees.numerator_via_trees(args.k) if args.k >= 2 else 1
        coeff = Fraction(numer, 2 * double_factorial_product(args.k))
        sign = 1 if args.k % 2 else -1
        value = sign * 2 * math.factorial(2 * args.k) * coeff / 2 ** (2 * args.k)
    else:
        value = zeta.bernoulli_even(args.k)
    record = OutputRecord("bernoulli", inputs, {"value": str(value)})
    lines = [str(value)]
    if args.approx:
        record.result["approx"] = float(value)
        lines.append(f"~= {float(value)}")
    _emit(record, lines, args.format)
    return 0


def _cmd_ak(args) -> int:
    inputs = {"max": args.max_k}
    if args.max_k < 1:
        return _fail(args, "ak", inputs, "--max must be >= 1")
    values = [zeta_numerator(k) for k in range(1, args.max_k + 1)]
    record = OutputRecord("ak", inputs, {"values": [str(v) for v in values]})
    _emit(record, [str(v) for v in values], args.format)
    return 0


def _cmd_pk(args) -> int:
    inputs = {
        "k": args.k,
        "translated": args.translated,
        "half_scale": args.half_scale,
    }
    if args.k < 1:
        return _fail(args, "pk", inputs, "--k must be >= 1")
    if args.half_scale and not args.translated:
        return _fail(args, "pk", inputs, "--half-scale requires --translated")
    if args.translated:
        poly = translated_polynomial(args.k, half_scale=args.half_scale)
    else:
        poly = numerator_polynomial(args.k)
    record = OutputRecord(
        "pk",
        inputs,
        {"coefficients": poly.coefficient_strings(), "text": str(poly)},
    )
    _emit(record, [str(poly)], args.format)
    return 0


def _cmd_zeta_even(args) -> int:
    inputs = {"k": args.k}
    if args.k < 1:
        return _fail(args, "zeta-even", inputs, "--k must be >= 1")
    value = zeta.zeta_even_rational(args.k)
    record = OutputRecord(
        "zeta-even",
        inputs,
        {
            "coefficient": str(value.coeff),
            "pi_power": value.power,
            "text": str(value),
        },
    )
    lines = [str(value)]
    if args.approx:
        record.result["approx"] = value.approx()
        lines.append(f"~= {value.approx()}")
    _emit(record, lines, args.format)
    return 0


def _cmd_trees(args) -> int:
    inputs = {"k": args.k, "list": args.list}
    if not 1 <= args.k <= trees.ENUMERATION_MAX:
        return _fail(
            args, "trees", inputs, f"--k must be within 1..{trees.ENUMERATION_MAX}"
        )
    count = trees.catalan(args.k - 1)
    result: dict = {"count": count}
    lines: list[str] = []
    if args.list:
        listing = []
        for tree in trees.enumerate_trees(args.k):
            data = trees.tree_data(tree)
            listing.append(
                {
                    "levels": list(tree.levels),
                    "low": [str(v) for v in data.low.values(ODD_NUMBERS)],
                    "high": [str(v) for v in data.high.values(ODD_NUMBERS)],
                    "weight": str(data.weight),
                }
            )
            low = ",".join(str(v) for v in data.low.values(ODD_NUMBERS))
            high = ",".join(str(v) for v in data.high.values(ODD_NUMBERS))
            lines.append(
                f"levels={tree} low={{{low}}} high={{{high}}} wt={data.weight}"
            )
        result["trees"] = listing
    else:
        lines.append(str(count))
    record = OutputRecord("trees", inputs, result)
    _emit(record, lines, args.format)
    return 0


def _cmd_transform(args) -> int:
    inputs = {"k": args.k, "sequence": args.sequence}
    if not 1 <= args.k <= trees.TREE_SUM_MAX:
        return _fail(
            args, "transform", inputs, f"--k must be within 1..{trees.TREE_SUM_MAX}"
        )
    seq = ODD_NUMBERS
    if args.sequence is not None:
        try:
            seq = SequenceSpec.from_file(args.sequence)
        except (OSError, ValueError) as exc:
            return _fail(args, "transform", inputs, str(exc))
    try:
        value = trees.generalized_transform(args.k, seq)
    except ValueError as exc:
        return _fail(args, "transform", inputs, str(exc))
    record = OutputRecord("transform", inputs, {"value": str(value)})
    _emit(record, [str(value)], args.format)
    return 0


def _cmd_verify(args) -> int:
    inputs = {"suite": args.suite, "max_k": args.max_k}
    try:
        reports = verify.run_suite(args.suite, args.max_k)
    except ValueError as exc:
        return _fail(args, "verify", inputs, str(exc))
    all_passed = all(r.passed for r in reports)
    record = OutputRecord(
        "verify",
        inputs,
        {"passed": all_passed, "suites": [r.to_dict() for r in reports]},
    )
    lines = []
    for report in reports:
        for check in report.checks:
            if check.passed:
                lines.append(f"PASS {check.name}")
            else:
                lines.append(f"FAIL {check.name}: {check.witness}")
        done = sum(1 for c in report.checks if c.passed)
        lines.append(
            f"suite {report.suite} (max_k={report.max_k}): {done}/{len(report.checks)} passed"
        )
    _emit(record, lines, args.format)
    return 0 if all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenzeta",
        description="Exact Bernoulli numbers and even zeta values, three independent ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("bernoulli", help="Bernoulli number B_{2k}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--method",
        choices=("recursion", "tree", "classical"),
        default="recursion",
        help="computation route (all agree)",
    )
    p.add_argument("--approx", action="store_true", help="also print a float approximation")
    add_common(p)
    p.set_defaults(run=_cmd_bernoulli)

    p = sub.add_parser("ak", help="the integer numerators of 2*zeta(2k)/pi^(2k)")
    p.add_argument("--max", "--max-k", dest="max_k", type=int, required=True,
                   help="emit values for k = 1..MAX")
    add_common(p)
    p.set_defaults(run=_cmd_ak)

    p = sub.add_parser("pk", help="the k-th recursion polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--translated", action="store_true",
                   help="shift to x + k - 3/2 (all-positive coefficients)")
    p.add_argument("--half-scale", action="store_true",
                   help="additionally rescale x to x/2 (display form)")
    add_common(p)
    p.set_defaults(run=_cmd_pk)

    p = sub.add_parser("zeta-even", help="zeta(2k) as an exact multiple of pi^(2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--approx", action="store_true", help="also print a float approximation")
    add_common(p)
    p.set_defaults(run=_cmd_zeta_even)

    p = sub.add_parser("trees", help="plane trees with their low/high/weight data")
    p.add_argument("--k", type=int, required=True, help="vertex count")
    p.add_argument("--list", action="store_true", help="list every tree")
    add_common(p)
    p.set_defaults(run=_cmd_trees)

    p = sub.add_parser("transform", help="tree-sum transform of a value sequence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sequence", metavar="FILE", default=None,
                   help="text file, one rational per line (default: odd numbers)")
    add_common(p)
    p.set_defaults(run=_cmd_transform)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=verify.suite_names(), default="all")
    p.add_argument("--max-k", dest="max_k", type=int, default=None)
    add_common(p)
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
