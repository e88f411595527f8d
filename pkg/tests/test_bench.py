import io

import pytest

from braidword.bench import (
    CSV_COLUMNS,
    BenchCase,
    BenchPoint,
    BenchReport,
    bench_codec,
    bench_multiply,
    bench_wordproblem,
    check_thresholds,
    fit_slope,
    print_report,
    write_csv,
)
from braidword.errors import BraidWordError


def test_fit_slope_recovers_power_laws():
    xs = [2**k for k in range(1, 7)]
    assert fit_slope(xs, [3.0 * x for x in xs]) == pytest.approx(1.0)
    assert fit_slope(xs, [x**2 for x in xs]) == pytest.approx(2.0)


def test_fit_slope_needs_four_doublings():
    assert fit_slope([1, 2, 4, 8], [1, 2, 4, 8]) is None
    assert fit_slope([1, 2, 4, 8, 16], [1, 2, 4, 8, 16]) == pytest.approx(1.0)
    assert fit_slope([], []) is None


def test_bench_case_validation():
    with pytest.raises(BraidWordError):
        BenchCase("codec", 0, 4)
    with pytest.raises(BraidWordError):
        BenchCase("codec", 3, 4, repetitions=0)


def test_codec_skips_zero_length_input():
    report = bench_codec([0, 4], n=3, repetitions=1)
    assert any("skipped" in notice for notice in report.notices)
    assert {p.case.series for p in report.points} == {"path_to_syntactic", "syntactic_to_path"}
    assert all(p.case.size == 4 for p in report.points)
    # a single size cannot be fitted
    assert report.slopes["path_to_syntactic"] is None


def test_multiply_on_empty_grid():
    report = bench_multiply([])
    assert report.points == []
    assert report.slopes == {}


def test_multiply_list_lengths_grow_with_the_twist_power():
    report = bench_multiply([(1, 1), (2, 2), (4, 4)], n=3, repetitions=1)
    lengths = [p.case.l1 for p in report.series("multiply")]
    assert lengths == sorted(lengths)
    assert lengths[0] < lengths[-1]
    assert len(report.series("identity_multiply")) == 3


def test_wordproblem_verdicts_are_reproducible():
    first = bench_wordproblem(3, [0, 4, 8], seed=9, repetitions=1)
    second = bench_wordproblem(3, [0, 4, 8], seed=9, repetitions=1)
    assert [p.verdict for p in first.points] == [p.verdict for p in second.points]
    assert all(p.verdict.startswith("equal/") for p in first.points)
    assert not any(p.verdict.endswith("MISMATCH") for p in first.points)
    assert first.points[0].ratio == 1.0
    assert first.points[0].verdict == "equal/equal"


def test_wordproblem_parallel_verdicts():
    sequential = bench_wordproblem(4, [0, 6, 12], seed=2, repetitions=1)
    parallel = bench_wordproblem(4, [0, 6, 12], seed=2, repetitions=1, workers=2)
    assert [p.verdict for p in parallel.points] == [p.verdict for p in sequential.points]


def test_wordproblem_skips_lengths_over_the_letter_budget():
    report = bench_wordproblem(4, [0, 30], seed=3, repetitions=1, max_total_length=4)
    assert [p.case.size for p in report.points] == [0]
    assert any(notice.startswith("length 30: skipped") for notice in report.notices)


def test_wordproblem_default_budget_keeps_short_words():
    report = bench_wordproblem(3, [0, 4, 8], seed=9, repetitions=1)
    assert [p.case.size for p in report.points] == [0, 4, 8]
    assert report.notices == []


def test_check_thresholds():
    report = BenchReport("synthetic")
    report.slopes = {"path_to_syntactic": 2.0, "syntactic_to_path": 1.0, "multiply": 1.9, "identity_multiply": 0.5}
    case = BenchCase("wordproblem", 3, 10)
    report.points.append(BenchPoint(case, 10, 100.0, 1.0, ratio=0.5, verdict="equal/not-equal MISMATCH"))
    misses = check_thresholds(report)
    assert len(misses) == 5
    assert any(miss.startswith("identity_multiply") for miss in misses)
    assert check_thresholds(BenchReport("empty")) == []


def test_csv_has_one_header_and_stable_columns():
    report = bench_wordproblem(3, [0, 2], seed=1, repetitions=1)
    stream = io.StringIO()
    write_csv([report], stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 3
    assert all(line.startswith("wordproblem,wordproblem,3,") for line in lines[1:])


def test_print_report():
    report = bench_codec([4], n=3, repetitions=1)
    stream = io.StringIO()
    print_report(report, stream)
    assert "CODEC BENCHMARK RESULTS" in stream.getvalue()


@pytest.mark.slow
def test_complexity_thresholds():
    reports = [
        bench_codec([320, 640, 1280, 2560, 5120], n=4),
        bench_multiply([(k, k) for k in (1, 2, 4, 8, 16)], n=4),
        bench_wordproblem(4, [0, 5, 10, 20, 40, 60]),
    ]
    assert reports[0].slopes["path_to_syntactic"] is not None
    assert reports[1].slopes["multiply"] is not None
    assert reports[1].slopes["identity_multiply"] is not None
    misses = [miss for report in reports for miss in check_thresholds(report)]
    assert misses == []
