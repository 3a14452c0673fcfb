"""Recomputation of the published grading examples and benchmark sweep."""

import time

import pytest

from evirank import repro
from evirank.distance import red_distance

# Sweep cases whose published Jousselme distance cannot be recomputed from
# the benchmark Bbas.
JOUSSELME_OUTLIERS = {3, 16}


@pytest.fixture(scope="module")
def sweep():
    return repro.run_sweep()


class TestExamples:
    def test_rows(self):
        rows = repro.run_examples()

        assert len(rows) == 2 * len(repro.PUBLISHED_EXAMPLES)
        assert {row.measure for row in rows} == {"jousselme", "betp:all",
                                                 "red"}

    def test_only_example_four_jousselme_differs(self):
        mismatches = {(row.example, row.measure)
                      for row in repro.run_examples() if not row.match}

        assert mismatches == {(4, "jousselme")}

    def test_example_four_jousselme(self):
        rows = [row for row in repro.run_examples()
                if row.example == 4 and row.measure == "jousselme"]

        assert [row.pair for row in rows] == ["m1,m2", "m1,m3"]
        for row in rows:
            assert row.distance == pytest.approx(0.5 ** 0.5)
            assert row.expected == 1.0

    def test_example_bbas(self, example):
        number, bbas = example

        assert list(bbas) == ["m1", "m2", "m3"]
        assert all(m.frame == repro.grade_frame() for m in bbas.values())
        assert bbas["m1"].is_categorical()

    @pytest.mark.parametrize("value, expected, match", [
        (0.70710678, 0.707, True),
        (0.35355339, 0.354, True),
        (0.70710678, 1, False),
        (0.2, 0.25, False),
    ])
    def test_matches(self, value, expected, match):
        assert repro.matches(value, expected,
                             repro.EXAMPLE_TOLERANCE) is match


class TestSweep:
    def test_shape(self, sweep):
        assert [row.case for row in sweep] == list(range(1, 21))

    def test_first_case(self, sweep):
        row = sweep[0]

        assert row.d_J == pytest.approx(0.7858, abs=5e-5)
        assert row.d_PPT_focal == pytest.approx(0.605, abs=1e-12)
        assert row.d_RED == pytest.approx(0.1871, abs=5e-5)
        assert row.d_PPT_all == pytest.approx(0.730, abs=1e-12)

    def test_last_case(self, sweep):
        row = sweep[-1]

        assert row.d_J == pytest.approx(0.8133, abs=5e-5)
        assert row.d_PPT_focal == pytest.approx(0.725, abs=1e-12)
        assert row.d_RED == pytest.approx(0.4147, abs=5e-5)

    def test_match_flags(self, sweep):
        assert {row.case for row in sweep if not row.match} == \
            JOUSSELME_OUTLIERS

    def test_against_published(self, sweep):
        for row in sweep:
            if row.case not in JOUSSELME_OUTLIERS:
                assert row.d_J == pytest.approx(row.expected_J, abs=5e-3)
            assert row.d_PPT_focal == pytest.approx(row.expected_PPT,
                                                    abs=5e-3)
            assert row.d_RED == pytest.approx(row.expected_RED, abs=5e-3)

    def test_minima(self, sweep):
        j = [row.d_J for row in sweep]
        red = [row.d_RED for row in sweep]
        focal = [row.d_PPT_focal for row in sweep]

        assert j.index(min(j)) == 4
        assert red.index(min(red)) == 3
        # cases 4 and 5 share the minimum
        assert focal[3] == pytest.approx(focal[4], abs=1e-12)
        assert min(focal) == pytest.approx(0.125, abs=1e-12)

    @pytest.mark.parametrize("column", ["d_J", "d_PPT_focal", "d_RED"])
    def test_valley(self, sweep, column):
        values = [getattr(row, column) for row in sweep]
        bottom = values.index(min(values))

        falling = values[:bottom + 1]
        rising = values[bottom:]
        assert all(a >= b - 1e-12 for a, b in zip(falling, falling[1:]))
        assert all(a <= b + 1e-12 for a, b in zip(rising, rising[1:]))

    def test_all_subsets_bounds_focal(self, sweep):
        for row in sweep:
            assert row.d_PPT_focal <= row.d_PPT_all + 1e-12

    def test_case_bbas(self):
        m1, m2 = repro.BENCHMARK_SWEEP.case(3)

        assert len(m1.masses) == 4
        assert m1.masses[0b111] == pytest.approx(0.8)
        assert m2.masses == {0b11111: 1.0}

    def test_whole_frame_merges(self):
        m1, _ = repro.BENCHMARK_SWEEP.case(20)

        assert len(m1.masses) == 3
        assert m1.masses[2 ** 20 - 1] == pytest.approx(0.9)

    def test_threads(self, sweep):
        assert repro.run_sweep(jobs=4) == sweep

    def test_deterministic(self, sweep):
        assert repro.run_sweep() == sweep


class TestTiming:
    def test_sweep_under_a_second(self):
        start = time.perf_counter()
        repro.run_sweep()
        assert time.perf_counter() - start < 1.0

    def test_example_red_under_a_millisecond(self):
        bbas = repro.example_bbas(2)
        red_distance(bbas["m1"], bbas["m3"])
        calls = 100

        start = time.perf_counter()
        for _ in range(calls):
            red_distance(bbas["m1"], bbas["m3"])
        assert (time.perf_counter() - start) / calls < 1e-3


def test_correlation():
    rows = repro.run_correlation()

    assert rows[0] == [1, 0.75, 0.5, 0.25, 0]
    assert repro.run_correlation(3) == [[1, 0.5, 0], [0.5, 1, 0.5],
                                        [0, 0.5, 1]]
