"""Ranking candidates against a reference Bba."""

import numpy as np
import pytest

from evirank.core import FrameMismatch, categorical_bba, vacuous_bba
from evirank.distance import JOUSSELME, RED
from evirank.ranking import (RankedCandidate, RankingError, distance_matrix,
                             rank_by_distance)
from evirank.repro import BETP, example_bbas

from strategies import numbered_frame, random_bba


def test_example_two():
    bbas = example_bbas(2)
    result = rank_by_distance(bbas["m1"], bbas, RED, reference_name="m1")

    assert result.reference == "m1"
    assert result.measure == RED
    assert [c.name for c in result.candidates] == ["m1", "m2", "m3"]
    assert [c.rank for c in result.candidates] == [1, 2, 3]
    assert result.candidates[0] == RankedCandidate("m1", 0.0, 1, False)
    assert result.candidates[1].distance == pytest.approx(0.5)
    assert result.candidates[2].distance == pytest.approx(0.7071, abs=5e-5)
    assert not any(c.tied for c in result.candidates)


def test_jousselme_ties():
    bbas = example_bbas(1)
    candidates = [("m3", bbas["m3"]), ("m2", bbas["m2"])]
    result = rank_by_distance(bbas["m1"], candidates, JOUSSELME)

    assert [c.name for c in result.candidates] == ["m3", "m2"]
    assert [c.rank for c in result.candidates] == [1, 2]
    assert all(c.tied for c in result.candidates)
    assert all(c.distance == 1.0 for c in result.candidates)


def test_red_separates_what_jousselme_ties():
    bbas = example_bbas(1)
    candidates = [("m3", bbas["m3"]), ("m2", bbas["m2"])]
    result = rank_by_distance(bbas["m1"], candidates, RED)

    assert [c.name for c in result.candidates] == ["m2", "m3"]
    assert not any(c.tied for c in result.candidates)


@pytest.mark.parametrize("measure", [RED, JOUSSELME, BETP], ids=str)
def test_reference_first(rng, measure):
    frame = numbered_frame(6)
    reference = random_bba(rng, frame)
    candidates = [("c%d" % i, random_bba(rng, frame)) for i in range(5)]
    candidates.insert(3, ("self", reference))

    result = rank_by_distance(reference, candidates, measure)
    assert result.candidates[0].name == "self"
    assert result.candidates[0].distance == 0.0


def test_red_orders_examples(example):
    number, bbas = example
    result = rank_by_distance(bbas["m1"], [("m3", bbas["m3"]),
                                           ("m2", bbas["m2"])], RED)

    assert [c.name for c in result.candidates] == ["m2", "m3"], number
    assert result.candidates[0].distance < result.candidates[1].distance


def test_shuffle_invariance(rng):
    frame = numbered_frame(5)
    reference = random_bba(rng, frame)
    candidates = [("c%d" % i, random_bba(rng, frame)) for i in range(8)]
    expected = rank_by_distance(reference, candidates).candidates

    for _ in range(20):
        order = rng.permutation(len(candidates))
        shuffled = [candidates[i] for i in order]
        result = rank_by_distance(reference, shuffled).candidates

        assert [c.name for c in result] == [c.name for c in expected]
        assert [c.distance for c in result] == [c.distance for c in expected]


def test_tied_candidates_keep_input_order(grades):
    reference = vacuous_bba(grades)
    same = [("x%d" % i, categorical_bba(grades, 3)) for i in range(4)]

    result = rank_by_distance(reference, same, RED)
    assert [c.name for c in result.candidates] == ["x0", "x1", "x2", "x3"]
    assert [c.rank for c in result.candidates] == [1, 2, 3, 4]
    assert all(c.tied for c in result.candidates)


def test_tied_candidates_get_consecutive_ranks(grades):
    reference = categorical_bba(grades, 3)
    candidates = [("high", categorical_bba(grades, 5)),
                  ("low", categorical_bba(grades, 1)),
                  ("same", categorical_bba(grades, 3))]

    result = rank_by_distance(reference, candidates, RED)

    assert [c[:] for c in result.candidates] == [
        ("same", 0.0, 1, False),
        ("high", pytest.approx(0.5 ** 0.5), 2, True),
        ("low", pytest.approx(0.5 ** 0.5), 3, True),
    ]


def test_ranking_error_documented():
    assert RankingError.__doc__


def test_empty():
    with pytest.raises(RankingError):
        rank_by_distance(vacuous_bba(numbered_frame(3)), [])


def test_frame_mismatch():
    with pytest.raises(FrameMismatch):
        rank_by_distance(vacuous_bba(numbered_frame(3)),
                         {"a": vacuous_bba(numbered_frame(4))})


class TestDistanceMatrix:
    def test_example_two(self):
        names, matrix = distance_matrix(example_bbas(2))

        assert names == ("m1", "m2", "m3")
        assert matrix[0, 1] == pytest.approx(0.5)
        assert matrix[1, 2] == pytest.approx(0.5)
        assert matrix[0, 2] == pytest.approx(0.7071, abs=5e-5)

    def test_symmetric(self, rng):
        frame = numbered_frame(7)
        bbas = [("b%d" % i, random_bba(rng, frame)) for i in range(6)]

        for measure in (RED, JOUSSELME, BETP):
            _, matrix = distance_matrix(bbas, measure)
            assert np.array_equal(matrix, matrix.T)
            assert (np.diag(matrix) == 0).all()
            assert (matrix >= 0).all()

    def test_empty(self):
        names, matrix = distance_matrix({})
        assert names == ()
        assert matrix.shape == (0, 0)

    def test_frame_mismatch(self):
        with pytest.raises(FrameMismatch):
            distance_matrix({"a": vacuous_bba(numbered_frame(3)),
                             "b": vacuous_bba(numbered_frame(4))})
