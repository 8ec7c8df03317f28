"""Command-line front end: decide / verify / oracle / fuzz.

Instance files are JSON documents of the form

    {"matrices": [[[1, 0], [0, 0]], [["1/2", -1], [0, "2/3"]]]}

where each entry is an integer or an exact "p/q" string; floating point is
rejected.  Reports are printed as JSON with --json and are byte-stable for
identical inputs apart from the timings block.

Exit codes: 0 mortal / verified / clean fuzz run, 1 immortal / nonzero
product / contradictions found, 2 unknown verdict, 64 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .decider import Immortal, Instance, Mortal, Verdict, decide, verify_witness
from .linalg import Mat2
from .oracle import EntryRange, fuzz_compare, search

EXIT_MORTAL = 0
EXIT_OK = 0
EXIT_IMMORTAL = 1
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 64


class CliError(Exception):
    """Malformed input or usage; reported on stderr with exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(message)


def _parse_entry(raw: object, where: str) -> Fraction:
    if isinstance(raw, bool):
        raise CliError(f"{where}: boolean is not a rational entry")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"{where}: cannot parse rational string {raw!r} ({exc})") from exc
    if isinstance(raw, float):
        raise CliError(f"{where}: floating point entries are not accepted; write an exact \"p/q\" string")
    raise CliError(f"{where}: unsupported entry of type {type(raw).__name__}")


def load_instance(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "matrices" not in doc:
        raise CliError(f"{path}: expected an object with a \"matrices\" key")
    raw_matrices = doc["matrices"]
    if not isinstance(raw_matrices, list) or not raw_matrices:
        raise CliError(f"{path}: \"matrices\" must be a nonempty list")
    matrices = []
    for mi, raw_matrix in enumerate(raw_matrices):
        if not (
            isinstance(raw_matrix, list)
            and len(raw_matrix) == 2
            and all(isinstance(row, list) and len(row) == 2 for row in raw_matrix)
        ):
            raise CliError(f"matrices[{mi}]: expected a 2x2 array")
        entries = [
            _parse_entry(raw_matrix[r][c], f"matrices[{mi}][{r}][{c}]")
            for r in range(2)
            for c in range(2)
        ]
        matrices.append(Mat2(*entries))
    return Instance(tuple(matrices))


def _rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _verdict_report(verdict: Verdict, timings: dict) -> dict:
    if isinstance(verdict, Mortal):
        return {
            "verdict": "mortal",
            "witness": list(verdict.witness),
            "exponent_witnesses": (
                [list(verdict.exponent_witness)] if verdict.exponent_witness is not None else None
            ),
            "certificate": verdict.certificate,
            "timings": timings,
        }
    if isinstance(verdict, Immortal):
        return {
            "verdict": "immortal",
            "witness": None,
            "exponent_witnesses": None,
            "certificate": verdict.certificate,
            "timings": timings,
        }
    return {
        "verdict": "unknown",
        "witness": None,
        "exponent_witnesses": None,
        "certificate": verdict.certificate,
        "search_bound": verdict.search_bound,
        "timings": timings,
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    verdict = report["verdict"]
    print(f"verdict: {verdict}")
    if report.get("witness") is not None:
        print(f"witness word: {' '.join(str(i) for i in report['witness'])}")
    if report.get("exponent_witnesses"):
        for i, k, j in report["exponent_witnesses"]:
            print(f"exponent witness: left={i} exponent={k} right={j}")
    print(f"certificate: {report['certificate']}")


def cmd_decide(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    instance = load_instance(args.file)
    t1 = time.perf_counter()
    verdict = decide(instance, oracle_bound=args.oracle_bound)
    t2 = time.perf_counter()
    timings = {
        "parse_ms": round(1000 * (t1 - t0), 3),
        "decide_ms": round(1000 * (t2 - t1), 3),
    }
    _emit(_verdict_report(verdict, timings), args.json)
    if isinstance(verdict, Mortal):
        return EXIT_MORTAL
    if isinstance(verdict, Immortal):
        return EXIT_IMMORTAL
    return EXIT_UNKNOWN


def cmd_verify(args: argparse.Namespace) -> int:
    instance = load_instance(args.file)
    word = tuple(args.index)
    for index in word:
        if not 0 <= index < len(instance.matrices):
            raise CliError(f"witness index {index} out of range 0..{len(instance.matrices) - 1}")
    ok = verify_witness(instance, word)
    print("zero product" if ok else "nonzero product")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    instance = load_instance(args.file)
    t0 = time.perf_counter()
    word = search(instance, args.max_len)
    elapsed = {"search_ms": round(1000 * (time.perf_counter() - t0), 3)}
    if args.json:
        report = {
            "found": word is not None,
            "witness": list(word) if word is not None else None,
            "max_len": args.max_len,
            "timings": elapsed,
        }
        print(json.dumps(report, indent=2))
    else:
        if word is None:
            print(f"no zero product of length <= {args.max_len}")
        else:
            print(f"witness word: {' '.join(str(i) for i in word)}")
    return EXIT_OK if word is not None else EXIT_FAIL


def cmd_fuzz(args: argparse.Namespace) -> int:
    entry_range = EntryRange(max_numerator=args.max_numerator, max_denominator=args.max_denominator)
    report = fuzz_compare(
        count=args.count,
        seed=args.seed,
        bound=args.oracle_bound,
        entry_range=entry_range,
    )
    doc = report.as_dict()
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(
            f"{report.count} instances: {report.mortal} mortal, "
            f"{report.immortal} immortal, {report.unknown} unknown"
        )
        print(f"contradictions: {report.contradictions}")
        if report.mortal_unconfirmed:
            print(f"witnesses beyond the search bound (not contradictions): {report.mortal_unconfirmed}")
    return EXIT_OK if report.contradictions == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mortality2x2", description="Exact mortality decisions for sets of 2x2 rational matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser("decide", help="decide mortality of an instance file")
    p_decide.add_argument("file")
    p_decide.add_argument("--json", action="store_true")
    p_decide.add_argument("--oracle-bound", type=int, default=8, dest="oracle_bound")
    p_decide.set_defaults(func=cmd_decide)

    p_verify = sub.add_parser("verify", help="check a witness word against an instance file")
    p_verify.add_argument("file")
    p_verify.add_argument("index", type=int, nargs="+")
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="bounded brute-force search for a zero product")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--json", action="store_true")
    p_oracle.add_argument("--max-len", type=int, default=8, dest="max_len")
    p_oracle.set_defaults(func=cmd_oracle)

    p_fuzz = sub.add_parser("fuzz", help="cross-validate the decider against the search oracle")
    p_fuzz.add_argument("--json", action="store_true")
    p_fuzz.add_argument("--count", type=int, default=1000)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--oracle-bound", type=int, default=8, dest="oracle_bound")
    p_fuzz.add_argument("--max-numerator", type=int, default=3, dest="max_numerator")
    p_fuzz.add_argument("--max-denominator", type=int, default=3, dest="max_denominator")
    p_fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
