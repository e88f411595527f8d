"""
Command-line surface of the braid word engine.

Exit codes: 0 on success (or "equal"/"pass"), 1 on a negative verdict
("not-equal", a failed oracle campaign, a missed benchmark threshold), 2 on
usage, parse or validation errors.
"""

import argparse
import sys
from typing import Optional, Sequence

from .bench import (
    GBASE_LETTER_BUDGET,
    bench_codec,
    bench_multiply,
    bench_wordproblem,
    check_thresholds,
    print_report,
    write_csv,
)
from .braids import (
    format_braid,
    format_syntactic_gbase,
    gbase_to_syntactic,
    multiply,
    parse_braid,
    parse_syntactic_gbase,
    syntactic_to_gbase,
    unprocess,
)
from .config import DEFAULT_CLI_LOG_LEVEL, DEFAULT_SEED, OUTPUT_FORMATS, RunConfig
from .errors import BraidWordError, ParseError, PathValidationError
from .oracle import oracle_check
from .paths import (
    BASE_LINK,
    GBase,
    PathList,
    format_gbase,
    format_path,
    parse_gbase,
    parse_links,
    parse_path,
    path_to_syntactic,
    split_gbase,
    syntactic_to_path,
    validate_gbase,
)
from .pipeline import load_pipeline
from .render import render_svg
from .utils import get_logger, set_global_log_level
from .words import format_fgword, parse_fgword

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

CONVERT_DIRECTIONS = ("path-to-word", "word-to-path", "gbase-to-words", "words-to-gbase")


def _read_payload(payload: str) -> str:
    text = sys.stdin.read() if payload == "-" else payload
    if not text.strip():
        raise ParseError("empty payload")
    return text.strip()


def _word_strands(config: RunConfig, text: str) -> int:
    if config.strands is not None:
        return config.strands
    values = []
    for token in text.split():
        try:
            values.append(abs(int(token)))
        except ValueError as exc:
            raise ParseError(f"malformed letter token {token!r}") from exc
    return max(values, default=1) or 1


def _path_strands(config: RunConfig, text: str) -> int:
    if config.strands is not None:
        return config.strands
    return max((link.point for link in parse_links(text)), default=1)


def _gbase_strands(config: RunConfig, text: str) -> int:
    if config.strands is not None:
        return config.strands
    separators = sum(1 for link in parse_links(text) if link.is_base)
    return max(separators - 1, 1)


def _is_gbase_payload(text: str) -> bool:
    links = parse_links(text)
    return sum(1 for link in links if link.is_base) > 1 and links[-1] == BASE_LINK


def cmd_eq(config: RunConfig, args: argparse.Namespace) -> int:
    n = config.require_strands()
    first, second = parse_braid(args.first, n), parse_braid(args.second, n)
    pipeline = load_pipeline(config.pipeline, pre_cancel=config.pre_cancel)
    verdict = pipeline.equal(first, second)
    print("equal" if verdict else "not-equal")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_normal(config: RunConfig, args: argparse.Namespace) -> int:
    n = config.require_strands()
    pipeline = load_pipeline(config.pipeline, pre_cancel=config.pre_cancel)
    normal = pipeline.normal_form(parse_braid(args.word, n))
    if config.output_format == "svg":
        print(render_svg(syntactic_to_gbase(normal).paths, n))
    elif config.output_format == "csv":
        print("element,word")
        for k, element in enumerate(normal, start=1):
            print(f"{k},{format_fgword(element)}")
    else:
        print(format_syntactic_gbase(normal))
    return EXIT_OK


def cmd_convert(config: RunConfig, args: argparse.Namespace) -> int:
    text = _read_payload(args.payload)
    if args.direction == "path-to-word":
        path = parse_path(text, _path_strands(config, text))
        print(format_fgword(path_to_syntactic(path)))
    elif args.direction == "word-to-path":
        print(format_path(syntactic_to_path(parse_fgword(text, _word_strands(config, text)))))
    elif args.direction == "gbase-to-words":
        gbase = parse_gbase(text, _gbase_strands(config, text))
        print(format_syntactic_gbase(gbase_to_syntactic(gbase)))
    else:
        lines = text.splitlines()
        n = config.strands if config.strands is not None else len(lines)
        print(format_gbase(syntactic_to_gbase(parse_syntactic_gbase(text, n))))
    return EXIT_OK


def cmd_multiply(config: RunConfig, args: argparse.Namespace) -> int:
    first_text, second_text = _read_payload(args.first), _read_payload(args.second)
    first = parse_gbase(first_text, _gbase_strands(config, first_text))
    second = parse_gbase(second_text, _gbase_strands(config, second_text))
    print(format_gbase(multiply(first, second)))
    return EXIT_OK


def cmd_render(config: RunConfig, args: argparse.Namespace) -> int:
    text = _read_payload(args.payload)
    if _is_gbase_payload(text):
        n = _gbase_strands(config, text)
        paths: Sequence[PathList] = split_gbase(parse_links(text), n)
        gbase = GBase(tuple(paths))
        violations = validate_gbase(gbase)
        if violations:
            raise PathValidationError(violations)
    else:
        n = _path_strands(config, text)
        paths = (parse_path(text, n),)

    svg = render_svg(paths, n)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(svg + "\n")
        logger.info(f"Wrote {len(paths)} path(s) to {args.output}")
    else:
        print(svg)
    return EXIT_OK


def cmd_unprocess(config: RunConfig, args: argparse.Namespace) -> int:
    text = _read_payload(args.payload)
    if text.startswith("("):
        syntactic = gbase_to_syntactic(parse_gbase(text, _gbase_strands(config, text)))
    else:
        n = config.strands if config.strands is not None else len(text.splitlines())
        syntactic = parse_syntactic_gbase(text, n)
    print(format_braid(unprocess(syntactic)))
    return EXIT_OK


def cmd_oracle_check(config: RunConfig, args: argparse.Namespace) -> int:
    report = oracle_check(
        args.count,
        max_strands=args.max_strands,
        max_length=args.max_length,
        seed=config.seed,
        workers=config.workers,
        pipeline=config.pipeline,
    )
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_bench(config: RunConfig, args: argparse.Namespace) -> int:
    n = config.strands if config.strands is not None else 4
    reports = []
    if args.suite in ("codec", "all"):
        reports.append(bench_codec(args.sizes, n=n, seed=config.seed, repetitions=args.repetitions))
    if args.suite in ("multiply", "all"):
        powers = [(k, k) for k in args.powers]
        reports.append(bench_multiply(powers, n=n, seed=config.seed, repetitions=args.repetitions))
    if args.suite in ("wordproblem", "all"):
        reports.append(
            bench_wordproblem(
                n,
                args.lengths,
                seed=config.seed,
                repetitions=args.repetitions,
                pre_cancel=config.pre_cancel,
                workers=config.workers,
                max_total_length=args.max_total_length,
            )
        )

    if config.output_format == "csv":
        write_csv(reports, sys.stdout)
    else:
        for report in reports:
            print_report(report)

    misses = [miss for report in reports for miss in check_thresholds(report)]
    for miss in misses:
        logger.warning(f"Threshold missed: {miss}")
    return EXIT_NEGATIVE if args.check and misses else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidword", description="Braid word problem via the action on a g-base")
    parser.add_argument("--strands", "-n", type=int, default=None, help="Number of strands / punctures n")
    parser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"Seed for random campaigns (default: {DEFAULT_SEED})"
    )
    parser.add_argument(
        "--pipeline", type=str, default="syn", choices=["geo", "syn"], help="ProcessWord pipeline (default: syn)"
    )
    parser.add_argument(
        "--pre-cancel",
        type=str,
        default="on",
        choices=["on", "off"],
        help="Cancel adjacent σ_i σ_i^-1 pairs before processing (default: on)",
    )
    parser.add_argument("--format", type=str, default="text", choices=list(OUTPUT_FORMATS), help="Output format")
    parser.add_argument(
        "--log-level",
        type=str,
        default=DEFAULT_CLI_LOG_LEVEL,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help=f"Set the logging level (default: {DEFAULT_CLI_LOG_LEVEL})",
    )
    parser.add_argument("--workers", type=int, default=1, help="Worker processes for campaigns (default: 1)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eq", help="Decide whether two braid words are equal")
    p.add_argument("first", help="First braid word, e.g. '1 2 1'")
    p.add_argument("second", help="Second braid word")
    p.set_defaults(handler=cmd_eq)

    p = sub.add_parser("normal", help="Print the reduced g-base of a braid word")
    p.add_argument("word", help="Braid word")
    p.set_defaults(handler=cmd_normal)

    p = sub.add_parser("convert", help="Convert between paths and free words")
    p.add_argument("direction", choices=CONVERT_DIRECTIONS)
    p.add_argument("payload", help="Path, word, g-base or element lines ('-' reads stdin)")
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("multiply", help="Multiply two serialized g-bases")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_multiply)

    p = sub.add_parser("render", help="Render a path or a g-base as SVG")
    p.add_argument("payload", help="Path or serialized g-base ('-' reads stdin)")
    p.add_argument("--output", "-o", type=str, default=None, help="Output file (default: stdout)")
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("unprocess", help="Recover a braid word from its g-base")
    p.add_argument("payload", help="Serialized g-base or element lines ('-' reads stdin)")
    p.set_defaults(handler=cmd_unprocess)

    p = sub.add_parser("oracle-check", help="Differential campaign against the substitution oracle")
    p.add_argument("--count", type=int, default=10_000, help="Number of random words (default: 10000)")
    p.add_argument("--max-strands", type=int, default=6, help="Largest strand count (default: 6)")
    p.add_argument("--max-length", type=int, default=40, help="Largest word length (default: 40)")
    p.set_defaults(handler=cmd_oracle_check)

    p = sub.add_parser("bench", help="Complexity measurements")
    p.add_argument("suite", nargs="?", default="all", choices=["codec", "multiply", "wordproblem", "all"])
    p.add_argument("--sizes", type=int, nargs="+", default=[320, 640, 1280, 2560, 5120], help="Codec |Q| sizes")
    p.add_argument("--powers", type=int, nargs="+", default=[1, 2, 4, 8, 16], help="Full-twist powers k (k1=k2=k)")
    p.add_argument("--lengths", type=int, nargs="+", default=[0, 5, 10, 20, 40, 60], help="Word lengths")
    p.add_argument(
        "--max-total-length",
        type=int,
        default=GBASE_LETTER_BUDGET,
        help=f"Skip word lengths whose g-base exceeds this many letters (default: {GBASE_LETTER_BUDGET})",
    )
    p.add_argument("--repetitions", type=int, default=7, help="Timing repetitions per case (default: 7)")
    p.add_argument("--check", action="store_true", help="Exit 1 when a slope or ratio threshold is missed")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the CLI command"""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Set global log level for the entire application
    set_global_log_level(args.log_level)

    try:
        config = RunConfig.from_args(args)
        return args.handler(config, args)
    except (BraidWordError, ValueError) as exc:
        logger.error(f"{args.command}: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        logger.error(f"{args.command}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
