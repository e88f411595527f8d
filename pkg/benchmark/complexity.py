#!/usr/bin/env python3
"""
Complexity sweep for the braidword engine.

Measures the path codec against list and word length, g-base multiplication
against l1 * l2, and the geometric against the syntactic word-problem
pipeline, then checks the fitted slopes and ratios against their thresholds.

Usage:
    python complexity.py --strands 4 --repetitions 9 --csv results.csv
"""

import argparse
import sys

from braidword.bench import (
    GBASE_LETTER_BUDGET,
    bench_codec,
    bench_multiply,
    bench_wordproblem,
    check_thresholds,
    print_report,
    write_csv,
)
from braidword.config import DEFAULT_SEED
from braidword.utils import set_global_log_level


def main():
    parser = argparse.ArgumentParser(description="Desk-scale complexity sweep for braidword")
    parser.add_argument("--strands", type=int, default=4, help="Strand count n (default: 4)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Workload seed (default: {DEFAULT_SEED})")
    parser.add_argument("--repetitions", type=int, default=9, help="Timing repetitions per case (default: 9)")
    parser.add_argument(
        "--sizes", type=int, nargs="+", default=[160, 320, 640, 1280, 2560, 5120], help="Codec |Q| sizes"
    )
    parser.add_argument("--powers", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32], help="Full-twist powers")
    parser.add_argument(
        "--lengths", type=int, nargs="+", default=[0, 5, 10, 20, 40, 60], help="Word-problem lengths"
    )
    parser.add_argument(
        "--max-total-length",
        type=int,
        default=GBASE_LETTER_BUDGET,
        help=f"Skip word lengths whose g-base exceeds this many letters (default: {GBASE_LETTER_BUDGET})",
    )
    parser.add_argument("--workers", type=int, default=1, help="Processes for the verdict columns (default: 1)")
    parser.add_argument("--csv", type=str, default=None, help="Also write all points to this CSV file")
    parser.add_argument(
        "--log-level",
        type=str,
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Set the logging level (default: INFO)",
    )
    args = parser.parse_args()

    set_global_log_level(args.log_level)

    print(f"Starting complexity sweep: n={args.strands}, seed={args.seed}, repetitions={args.repetitions}")
    print("=" * 60)

    reports = [
        bench_codec(args.sizes, n=args.strands, seed=args.seed, repetitions=args.repetitions),
        bench_multiply([(k, k) for k in args.powers], n=args.strands, seed=args.seed, repetitions=args.repetitions),
        bench_wordproblem(
            args.strands,
            args.lengths,
            seed=args.seed,
            repetitions=args.repetitions,
            workers=args.workers,
            max_total_length=args.max_total_length,
        ),
    ]
    for report in reports:
        print()
        print_report(report)

    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as f:
            write_csv(reports, f)
        print(f"\nPoints written to {args.csv}")

    misses = [miss for report in reports for miss in check_thresholds(report)]
    print("\n## Threshold checks")
    if not misses:
        print("All thresholds held")
        return 0
    for miss in misses:
        print(f"MISS: {miss}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
