"""
    evirank.ranking
    ~~~~~~~~~~~~~~~

    Rank candidate Bbas by their distance to a reference Bba: the smaller the
    distance, the better the candidate.
"""

import logging
from collections import namedtuple
from collections.abc import Mapping

import numpy as np

from .core import EvidenceError, check_same_frame
from .distance import RED

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12
"""Distances closer than this are considered equal."""


class RankingError(EvidenceError):
    """Raised when there are no candidates to rank."""
    pass


RankedCandidate = namedtuple("RankedCandidate", "name distance rank tied")
"""One row of a ranking. ``rank`` runs from 1; ``tied`` is True if the
measure could not separate this candidate from a neighbour."""

RankingResult = namedtuple("RankingResult", "reference measure candidates")
"""Outcome of :func:`rank_by_distance`. ``candidates`` is a tuple of
:data:`RankedCandidate`, sorted by ascending distance."""


def _named(candidates):
    if isinstance(candidates, Mapping):
        return list(candidates.items())
    return [(name, bba) for name, bba in candidates]


def _tie_groups(scored):
    """Split (input_position, name, distance) tuples, already sorted by
    distance, into runs whose consecutive distances are within
    TIE_TOLERANCE."""
    groups = []
    for item in scored:
        if groups and item[2] - groups[-1][-1][2] <= TIE_TOLERANCE:
            groups[-1].append(item)
        else:
            groups.append([item])
    return groups


def rank_by_distance(reference, candidates, measure=RED,
                     reference_name="reference"):
    """Score every candidate against ``reference`` and sort them.

    ``candidates`` is a mapping or a sequence of ``(name, bba)`` pairs. The
    sort is deterministic. Candidates whose distances are within
    :data:`TIE_TOLERANCE` of each other are tied: they keep their input
    order, get distinct consecutive ranks (never a shared rank) and have
    ``tied`` set.
    """
    named = _named(candidates)

    if not named:
        raise RankingError("Nothing to rank: the candidate list is empty")

    check_same_frame(reference, *(bba for _, bba in named))

    scored = [(position, name, measure(reference, bba))
              for position, (name, bba) in enumerate(named)]
    scored.sort(key=lambda item: (item[2], item[0]))

    rows = []
    for group in _tie_groups(scored):
        tied = len(group) > 1
        for _, name, distance in sorted(group):
            rows.append(RankedCandidate(name, distance, len(rows) + 1, tied))

    ties = sum(row.tied for row in rows)
    if ties:
        logger.info("%s leaves %d of %d candidates tied", measure, ties,
                    len(rows))

    return RankingResult(reference_name, measure, tuple(rows))


def distance_matrix(bbas, measure=RED):
    """Pairwise distances between all the given Bbas.

    Returns ``(names, matrix)`` where ``matrix[i, j]`` is the distance
    between ``names[i]`` and ``names[j]``.
    """
    named = _named(bbas)

    if named:
        check_same_frame(*(bba for _, bba in named))

    names = tuple(name for name, _ in named)
    matrix = np.zeros((len(named), len(named)))

    for i, (_, a) in enumerate(named):
        for j in range(i + 1, len(named)):
            matrix[i, j] = matrix[j, i] = measure(a, named[j][1])

    return names, matrix
