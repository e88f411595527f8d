"""
Desk-scale complexity measurements: the path codec, g-base multiplication,
and the geometric against the syntactic word-problem pipeline.

Timings are medians over repetitions of a monotonic nanosecond clock;
slopes are least-squares fits on log-log points.
"""

import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional, Sequence, TextIO

import numpy as np
from scipy.stats import linregress

from .braids import BraidWord, multiply, process_word_geometric, process_word_syntactic
from .config import DEFAULT_SEED
from .errors import BraidWordError, GrowthLimitError
from .paths import GBase, path_to_syntactic, standard_gbase, syntactic_to_path
from .pipeline import load_pipeline
from .sampling import make_rng, random_braid_word, random_conjugate_word, twist_power_word
from .utils import get_logger

logger = get_logger(__name__)

MIN_DOUBLINGS = 4
CODEC_SLOPE_RANGE = (0.8, 1.4)
MULTIPLY_SLOPE_MAX = 1.4
IDENTITY_MULTIPLY_SLOPE_RANGE = (0.8, 1.4)
# total g-base letters allowed per benchmarked word; random words grow exponentially
GBASE_LETTER_BUDGET = 250_000
RATIO_TOLERANCE = 0.10
# inner loop target per timing sample, so short calls stay above clock noise
TARGET_SAMPLE_NS = 200_000
MAX_INNER = 2000


@dataclass(frozen=True)
class BenchCase:
    series: str
    n: int
    size: int
    repetitions: int = 7
    seed: int = DEFAULT_SEED
    l1: int = 0
    l2: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise BraidWordError(f"strand count must be positive, got {self.n}")
        if self.size < 0:
            raise BraidWordError(f"case size must be non-negative, got {self.size}")
        if self.repetitions < 1:
            raise BraidWordError(f"repetitions must be positive, got {self.repetitions}")


@dataclass
class BenchPoint:
    case: BenchCase
    x: float
    median_ns: float
    spread_ns: float
    ratio: Optional[float] = None
    verdict: str = ""


@dataclass
class BenchReport:
    name: str
    points: list[BenchPoint] = field(default_factory=list)
    slopes: dict[str, Optional[float]] = field(default_factory=dict)
    notices: list[str] = field(default_factory=list)

    def series(self, name: str) -> list[BenchPoint]:
        return [point for point in self.points if point.case.series == name]

    def fit(self, name: str) -> Optional[float]:
        points = self.series(name)
        if not points:
            return None
        slope = fit_slope([p.x for p in points], [p.median_ns for p in points])
        if slope is None:
            self.notices.append(f"{name}: fewer than {MIN_DOUBLINGS} size doublings, no slope fitted")
        self.slopes[name] = slope
        return slope


def fit_slope(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log y against log x, or None over fewer than 4 doublings of x."""
    pairs = [(x, y) for x, y in zip(xs, ys) if x > 0 and y > 0]
    if len(pairs) < 2:
        return None
    x = np.array([p[0] for p in pairs], dtype=float)
    y = np.array([p[1] for p in pairs], dtype=float)
    if np.log2(x.max() / x.min()) < MIN_DOUBLINGS:
        return None
    return float(linregress(np.log(x), np.log(y)).slope)


def time_call(fn: Callable[[], object], repetitions: int) -> tuple[float, float]:
    """Median and interquartile spread, in nanoseconds per call."""
    start = time.perf_counter_ns()
    fn()
    first = max(time.perf_counter_ns() - start, 1)
    inner = max(1, min(MAX_INNER, TARGET_SAMPLE_NS // first))

    samples = np.empty(repetitions)
    for rep in range(repetitions):
        start = time.perf_counter_ns()
        for _ in range(inner):
            fn()
        samples[rep] = (time.perf_counter_ns() - start) / inner
    q1, median, q3 = np.percentile(samples, [25, 50, 75])
    return float(median), float(q3 - q1)


def bench_codec(
    sizes: Sequence[int], n: int = 6, seed: int = DEFAULT_SEED, repetitions: int = 7
) -> BenchReport:
    """
    Time path_to_syntactic against the path length and syntactic_to_path
    against the word length at fixed n, on random conjugate words with
    |Q| = size.
    """
    report = BenchReport("codec")
    rng = make_rng(seed)
    for size in sizes:
        if size <= 0:
            report.notices.append(f"size {size}: zero-length input, measurement skipped")
            continue
        word = random_conjugate_word(rng, n, size)
        path = syntactic_to_path(word)

        case = BenchCase("path_to_syntactic", n, size, repetitions, seed)
        median, spread = time_call(partial(path_to_syntactic, path), repetitions)
        report.points.append(BenchPoint(case, len(path), median, spread))

        case = BenchCase("syntactic_to_path", n, size, repetitions, seed)
        median, spread = time_call(partial(syntactic_to_path, word), repetitions)
        report.points.append(BenchPoint(case, len(word), median, spread))
        logger.debug(f"codec size {size}: path of {len(path)} links, word of {len(word)} letters")

    report.fit("path_to_syntactic")
    report.fit("syntactic_to_path")
    return report


def _gbase_size(word: BraidWord) -> tuple[GBase, int]:
    gbase = process_word_geometric(word)
    return gbase, sum(len(path) for path in gbase)


def bench_multiply(
    powers: Sequence[tuple[int, int]], n: int = 4, seed: int = DEFAULT_SEED, repetitions: int = 7
) -> BenchReport:
    """
    Time multiply on g-bases of full-twist powers (k1, k2), whose list lengths
    l1, l2 grow linearly in k1, k2; the slope is fitted against l1 * l2.
    A second series multiplies the standard g-base by the k2 operand.
    """
    report = BenchReport("multiply")
    if not powers:
        return report

    for k1, k2 in powers:
        first, l1 = _gbase_size(twist_power_word(n, k1))
        second, l2 = _gbase_size(twist_power_word(n, k2))
        case = BenchCase("multiply", n, l1 * l2, repetitions, seed, l1=l1, l2=l2)
        median, spread = time_call(partial(multiply, first, second), repetitions)
        report.points.append(BenchPoint(case, l1 * l2, median, spread))

        identity = standard_gbase(n)
        l0 = sum(len(path) for path in identity)
        case = BenchCase("identity_multiply", n, l2, repetitions, seed, l1=l0, l2=l2)
        median, spread = time_call(partial(multiply, identity, second), repetitions)
        report.points.append(BenchPoint(case, l2, median, spread))

    report.fit("multiply")
    report.fit("identity_multiply")
    return report


def _insert_cancelling_pair(rng: np.random.Generator, w: BraidWord) -> BraidWord:
    if w.n < 2:
        return w
    i = int(rng.integers(1, w.n)) * int(rng.choice((-1, 1)))
    pos = int(rng.integers(0, len(w) + 1))
    return BraidWord(w.tietze[:pos] + (i, -i) + w.tietze[pos:], w.n)


def _verdicts(pair: tuple[BraidWord, BraidWord], pre_cancel: bool) -> tuple[bool, bool]:
    first, second = pair
    syn = load_pipeline("syn", pre_cancel=pre_cancel).equal(first, second)
    geo = load_pipeline("geo", pre_cancel=pre_cancel).equal(first, second)
    return syn, geo


def bench_wordproblem(
    n: int,
    lengths: Sequence[int],
    seed: int = DEFAULT_SEED,
    repetitions: int = 7,
    pre_cancel: bool = True,
    workers: int = 1,
    max_total_length: int = GBASE_LETTER_BUDGET,
) -> BenchReport:
    """
    Decide the same random word pairs on both pipelines and report the
    median time ratio geometric / syntactic per length.

    The geometric pipeline stands in for a direct list-maintenance
    algorithm. Each length contributes an equal pair (a cancelling pair
    inserted) and an independent pair; both pipelines must agree on both.
    Verdicts can be computed in a process pool; timings always run here.

    The g-base of a uniform random word grows exponentially with its
    length. A length whose words outgrow `max_total_length` letters is
    skipped with a notice.
    """
    report = BenchReport("wordproblem")
    rng = make_rng(seed)
    syntactic = load_pipeline("syn", pre_cancel=pre_cancel)
    geometric = load_pipeline("geo", pre_cancel=pre_cancel)

    workloads = []
    for length in lengths:
        w1 = random_braid_word(rng, n, length)
        equal_pair = (w1, _insert_cancelling_pair(rng, w1))
        other_pair = (w1, random_braid_word(rng, n, length))
        try:
            for w in (*equal_pair, other_pair[1]):
                process_word_syntactic(w, pre_cancel=pre_cancel, max_total_length=max_total_length)
        except GrowthLimitError as e:
            report.notices.append(f"length {length}: skipped, {e}")
            logger.warning(f"Skipping word length {length}: {e}")
            continue
        workloads.append((length, equal_pair, other_pair))

    pairs = [pair for _, equal_pair, other_pair in workloads for pair in (equal_pair, other_pair)]
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            verdicts = list(ex.map(_verdicts, pairs, [pre_cancel] * len(pairs)))
    else:
        verdicts = [_verdicts(pair, pre_cancel) for pair in pairs]

    for k, (length, equal_pair, _) in enumerate(workloads):
        (syn_eq, geo_eq), (syn_other, geo_other) = verdicts[2 * k], verdicts[2 * k + 1]
        agree = syn_eq == geo_eq and syn_other == geo_other
        if not agree:
            report.notices.append(f"length {length}: pipelines disagree on a verdict")
            logger.error(f"Pipelines disagree at length {length}: {equal_pair[0]}")
        verdict = f"{'equal' if syn_eq else 'not-equal'}/{'equal' if syn_other else 'not-equal'}"
        if not agree:
            verdict += " MISMATCH"

        case = BenchCase("wordproblem", n, length, repetitions, seed)
        syn_median, syn_spread = time_call(partial(syntactic.equal, *equal_pair), repetitions)
        geo_median, _ = time_call(partial(geometric.equal, *equal_pair), repetitions)
        ratio = 1.0 if length == 0 else geo_median / syn_median
        report.points.append(BenchPoint(case, length, syn_median, syn_spread, ratio=ratio, verdict=verdict))

    return report


def check_thresholds(report: BenchReport) -> list[str]:
    """Threshold misses of a report; an empty list means every check held."""
    misses = []
    low, high = CODEC_SLOPE_RANGE
    for name in ("path_to_syntactic", "syntactic_to_path"):
        slope = report.slopes.get(name)
        if slope is not None and not low <= slope <= high:
            misses.append(f"{name}: slope {slope:.2f} outside [{low}, {high}]")
    slope = report.slopes.get("multiply")
    if slope is not None and slope > MULTIPLY_SLOPE_MAX:
        misses.append(f"multiply: slope {slope:.2f} above {MULTIPLY_SLOPE_MAX}")
    low, high = IDENTITY_MULTIPLY_SLOPE_RANGE
    slope = report.slopes.get("identity_multiply")
    if slope is not None and not low <= slope <= high:
        misses.append(f"identity_multiply: slope {slope:.2f} outside [{low}, {high}]")
    for point in report.series("wordproblem"):
        if point.ratio is not None and point.ratio < 1.0 - RATIO_TOLERANCE:
            misses.append(f"wordproblem length {point.case.size}: ratio {point.ratio:.2f} below 1")
        if point.verdict.endswith("MISMATCH"):
            misses.append(f"wordproblem length {point.case.size}: pipelines disagree")
    return misses


CSV_COLUMNS = (
    "report",
    "series",
    "n",
    "size",
    "l1",
    "l2",
    "repetitions",
    "seed",
    "x",
    "median_ns",
    "spread_ns",
    "ratio",
    "verdict",
    "slope",
)


def write_csv(reports: Sequence[BenchReport], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        for point in report.points:
            case = point.case
            slope = report.slopes.get(case.series)
            writer.writerow(
                (
                    report.name,
                    case.series,
                    case.n,
                    case.size,
                    case.l1,
                    case.l2,
                    case.repetitions,
                    case.seed,
                    f"{point.x:g}",
                    f"{point.median_ns:.0f}",
                    f"{point.spread_ns:.0f}",
                    "" if point.ratio is None else f"{point.ratio:.3f}",
                    point.verdict,
                    "" if slope is None else f"{slope:.3f}",
                )
            )


def print_report(report: BenchReport, stream: TextIO = sys.stdout) -> None:
    print("=" * 80, file=stream)
    print(f"{report.name.upper()} BENCHMARK RESULTS", file=stream)
    print("=" * 80, file=stream)
    for point in report.points:
        case = point.case
        line = f"{case.series:<20} n={case.n:<3} x={point.x:<10g} median={point.median_ns / 1e3:10.1f}us"
        line += f" spread={point.spread_ns / 1e3:8.1f}us"
        if point.ratio is not None:
            line += f" geo/syn={point.ratio:.2f}"
        if point.verdict:
            line += f" [{point.verdict}]"
        print(line, file=stream)
    if report.slopes:
        print("\n## Fitted log-log slopes", file=stream)
        for name, slope in report.slopes.items():
            print(f"{name}: {'n/a' if slope is None else f'{slope:.3f}'}", file=stream)
    for notice in report.notices:
        print(f"note: {notice}", file=stream)
