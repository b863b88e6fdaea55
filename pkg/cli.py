# cli.py
"""
Command-line front end.

    python cli.py detect  programs/binchain_lp.trs [--mode trs|lp|both] [--json]
    python cli.py witness programs/binchain_trs.trs --pair 0,1 [--steps N]
    python cli.py rewrite programs/prel.trs --term "f(g(x,x))" --rule 1 --mode lp

Exit codes: 0 when a certificate verified (or a rewrite step fired), 1 when
none did, 2 on input errors.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from config.config import DEFAULT_STEPS, LOG_LEVEL, MAX_TERM_SIZE
from data.loader import ParseError, format_rule, load_program, parse_term
from data.report import (
    build_report,
    certificates_frame,
    format_compact,
    report_to_json,
    resolve_modes,
    rewrite_frame,
    witness_frame,
)
from engine.ars import Mode, rewrite_sequence

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NONE = 1
EXIT_INPUT = 2


def _pair_selector(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected I,J but got {text!r}")
    try:
        first, second = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair indices must be integers: {text!r}") from None
    if first < 0 or second < 0:
        raise argparse.ArgumentTypeError("pair indices are 0-based and non-negative")
    return first, second


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def create_argument_parser() -> argparse.ArgumentParser:
    argument_parser = argparse.ArgumentParser(
        prog="binchain",
        description="Detect recurrent pairs of rules and verify the binary chains they induce",
    )
    argument_parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    subparsers = argument_parser.add_subparsers(dest="command", required=True)

    subparser_detect = subparsers.add_parser("detect", help="Find recurrent pairs and verify their chains")
    subparser_detect.add_argument("file")
    subparser_detect.add_argument("--mode", choices=["trs", "lp", "both"])
    subparser_detect.add_argument("--json", action="store_true", help="machine-readable report")
    subparser_detect.add_argument("--steps", type=_non_negative, default=DEFAULT_STEPS)
    subparser_detect.add_argument("--max-term-size", type=_non_negative, default=MAX_TERM_SIZE)

    subparser_witness = subparsers.add_parser("witness", help="Show the witness prefix of one pair")
    subparser_witness.add_argument("file")
    subparser_witness.add_argument("--pair", type=_pair_selector, required=True, help="r1,r2 rule indices")
    subparser_witness.add_argument("--mode", choices=["trs", "lp", "both"])
    subparser_witness.add_argument("--json", action="store_true")
    subparser_witness.add_argument("--steps", type=_non_negative, default=DEFAULT_STEPS)
    subparser_witness.add_argument("--max-term-size", type=_non_negative, default=MAX_TERM_SIZE)

    subparser_rewrite = subparsers.add_parser("rewrite", help="Rewrite a term at the root")
    subparser_rewrite.add_argument("file")
    subparser_rewrite.add_argument("--term", required=True)
    subparser_rewrite.add_argument("--rule", type=_non_negative, help="0-based rule index")
    subparser_rewrite.add_argument("--steps", type=_non_negative, default=1)
    subparser_rewrite.add_argument("--mode", choices=["trs", "lp"], required=True)

    return argument_parser


# ---------------- COMMANDS ----------------
def _print_report(report, out) -> None:
    if not report.certificates:
        print("no recurrent pair found", file=out)
        return
    print(certificates_frame(report).to_string(index=False), file=out)
    for cert in report.certificates:
        for mode, witness in cert.witnesses.items():
            if witness.verified:
                status = "verified"
            elif witness.requested and not witness.attempted:
                status = "NOT CHECKED (size bound reached before the first segment)"
            else:
                status = "FAILED"
            print(f"\npair {cert.pair.r1_index},{cert.pair.r2_index} [{mode.value}] {status}", file=out)
            print(witness_frame(witness).to_string(index=False), file=out)
            if witness.truncated and witness.verified:
                print(
                    f"partial verification: size bound {report.max_term_size} reached after "
                    f"chain index {witness.largest_verified}",
                    file=out,
                )
    print(f"\n{len(report.verified)}/{len(report.certificates)} verified in {report.timing:.3f}s", file=out)


def cmd_detect(args, out=None) -> int:
    out = out or sys.stdout
    pf = load_program(args.file)
    modes = resolve_modes(args.mode, pf)
    report = build_report(pf, modes, args.steps, args.max_term_size)
    if args.json:
        print(report_to_json(report), file=out)
    else:
        _print_report(report, out)
    return EXIT_OK if report.verified else EXIT_NONE


def cmd_witness(args, out=None) -> int:
    out = out or sys.stdout
    pf = load_program(args.file)
    modes = resolve_modes(args.mode, pf)
    report = build_report(pf, modes, args.steps, args.max_term_size, pair_key=args.pair)
    if not report.certificates:
        _LOGGER.warning("rules %d,%d do not form a recurrent pair", *args.pair)
    if args.json:
        print(report_to_json(report), file=out)
    else:
        _print_report(report, out)
    return EXIT_OK if report.verified else EXIT_NONE


def cmd_rewrite(args, out=None) -> int:
    out = out or sys.stdout
    pf = load_program(args.file)
    if args.rule is not None and args.rule >= len(pf.rules):
        raise ParseError(1, 1, f"rule index {args.rule} out of range (program has {len(pf.rules)} rules)", pf.source)
    term = parse_term(args.term, pf.variables, pf.arities, source="--term")
    mode = Mode(args.mode)
    traces = rewrite_sequence(mode, pf.rules, term, args.steps, args.rule)
    print(format_compact(term), file=out)
    for trace in traces:
        print(f"  {mode.arrow} {format_compact(trace.result)}    [rule {trace.rule_index}: {format_rule(pf.rules[trace.rule_index])}]", file=out)
    if not traces:
        print("  irreducible at the root", file=out)
    _LOGGER.debug("rewrite listing:\n%s", rewrite_frame(traces).to_string(index=False))
    return EXIT_OK if traces else EXIT_NONE


COMMANDS = {
    "detect": cmd_detect,
    "witness": cmd_witness,
    "rewrite": cmd_rewrite,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argument_parser = create_argument_parser()
    try:
        args = argument_parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else LOG_LEVEL,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
