"""
    evirank.distance
    ~~~~~~~~~~~~~~~~

    Evidence distances.

    All three measures are (pseudo-)norms of a difference vector:

    * Jousselme's distance weighs the mass vectors with the Jaccard matrix
      of the focal sets.
    * The betting commitment distance (difBetP) lives in
      :mod:`evirank.pignistic`.
    * The ranking evidence distance (RED) first applies the pignistic
      transformation, so the Jaccard matrix of the resulting singletons is
      the identity, and then weighs the difference with the correlation
      matrix S, where ``s_ij = 1 - |i - j| / (N - 1)``. S encodes how close
      two grades are, which is what lets RED tell "Low" from "Middle" when
      the reference is "Poor".
"""

import math
import logging
import functools
from collections import namedtuple

import numpy as np
from scipy import linalg

from .core import (EvidenceError, FrameError, FocalSet, FrameMismatch,
                   check_same_frame, popcount)
from .pignistic import BetPMode, ppt, dif_betp

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

logger = logging.getLogger(__name__)

RADICAND_TOLERANCE = 1e-12
"""Negative radicands down to -RADICAND_TOLERANCE are rounding noise and are
clamped to 0. Anything below is reported as a NumericalError."""


class NumericalError(EvidenceError):
    """A quadratic form that should be non-negative came out negative."""
    pass


JaccardMatrix = namedtuple("JaccardMatrix", "focal_list entries")
"""Jaccard similarities D(A, B) = |A∩B| / |A∪B| over a list of focal sets.
``entries[i, j]`` corresponds to ``focal_list[i]`` and ``focal_list[j]``."""


def jaccard_similarity(a, b):
    """|A∩B| / |A∪B| for two focal sets of the same frame."""
    if a.frame != b.frame:
        raise FrameMismatch("Focal sets belong to different frames")

    return popcount(a.mask & b.mask) / popcount(a.mask | b.mask)


def jaccard_matrix(focal_list):
    focal_list = tuple(focal_list)
    entries = np.array([[jaccard_similarity(a, b) for b in focal_list]
                        for a in focal_list], dtype=float)

    return JaccardMatrix(focal_list, entries.reshape(len(focal_list),
                                                     len(focal_list)))


def quadratic_distance(diff, matrix):
    """sqrt(½ dᵀ M d) for a positive semidefinite M."""
    diff = np.asarray(diff, dtype=float)
    radicand = 0.5 * float(diff @ matrix @ diff)

    if radicand < 0:
        if radicand < -RADICAND_TOLERANCE:
            raise NumericalError("Negative radicand %r in quadratic form"
                                 % radicand)
        radicand = 0.0

    return math.sqrt(radicand)


def jousselme_distance(m1, m2):
    """Jousselme's distance.

    The mass vectors are indexed by the focal sets of either Bba instead of
    the whole power set; the other coordinates are zero in both vectors and
    add nothing to the quadratic form.
    """
    frame = check_same_frame(m1, m2)

    masks = list(dict.fromkeys(list(m1.masses) + list(m2.masses)))
    logger.debug("Jousselme distance over %d joint focal sets", len(masks))

    d = jaccard_matrix(FocalSet(frame, mask) for mask in masks)
    diff = [m1.masses.get(mask, 0.0) - m2.masses.get(mask, 0.0)
            for mask in masks]

    return quadratic_distance(diff, d.entries)


@functools.lru_cache(maxsize=None)
def correlation_matrix(size):
    """Correlation (closeness) matrix S for a frame of ``size`` grades.

    ``s_ij = 1 - |i - j| / (size - 1)``; a single grade frame gets the 1x1
    identity. The returned array is cached per size and read-only.
    """
    if size < 1:
        raise FrameError("Correlation matrix needs a positive size, got %r"
                         % size)

    logger.debug("Building correlation matrix for N = %d", size)

    if size == 1:
        s = np.eye(1)
    else:
        s = linalg.toeplitz(1.0 - np.arange(size) / (size - 1))

    s.setflags(write=False)
    return s


def _pignistic_difference(m1, m2):
    check_same_frame(m1, m2)
    p1 = ppt(m1)
    p2 = ppt(m2)

    return p1, p2, p1.as_array() - p2.as_array()


def red_distance(m1, m2):
    """Ranking evidence distance (RED).

    Both Bbas always go through the pignistic transformation, even when they
    only have singleton focal sets (where it does nothing). Two Bbas with the
    same pignistic distribution are at distance 0.
    """
    _, _, diff = _pignistic_difference(m1, m2)

    return quadratic_distance(diff, correlation_matrix(m1.frame.size))


def red_reduces_to_jousselme(m1, m2):
    """Compute RED with S replaced by the identity, and Jousselme's distance
    between the two pignistic (singleton only) Bbas.

    Without an ordering of the grades both numbers are the same; this returns
    them as a pair so callers can check it.
    """
    p1, p2, diff = _pignistic_difference(m1, m2)

    unordered = quadratic_distance(diff, np.eye(m1.frame.size))

    return unordered, jousselme_distance(p1.as_bba(), p2.as_bba())


_DistanceMeasure = namedtuple("_DistanceMeasure", "kind mode")


class DistanceMeasure(_DistanceMeasure):
    """A selectable distance: ``jousselme``, ``red`` or ``betp`` together
    with a :class:`~evirank.pignistic.BetPMode`.

    Instances are callable on a pair of Bbas.
    """
    __slots__ = ()

    KINDS = ("jousselme", "betp", "red")

    def __new__(cls, kind, mode=None):
        if kind not in cls.KINDS:
            raise ValueError("Unknown distance measure: %s" % kind)

        if kind == "betp":
            mode = BetPMode(mode or BetPMode.ALL_SUBSETS)
        elif mode is not None:
            raise ValueError("Only the betp measure takes a mode")

        return super().__new__(cls, kind, mode)

    @classmethod
    def from_attr(cls, attr):
        """Parse ``red``, ``jousselme``, ``betp`` or ``betp:<mode>``."""
        kind, _, mode = attr.strip().lower().partition(":")

        if mode and kind != "betp":
            raise ValueError("Only the betp measure takes a mode: %s" % attr)

        return cls(kind, BetPMode.from_attr(mode) if mode else None)

    def __call__(self, m1, m2):
        if self.kind == "jousselme":
            return jousselme_distance(m1, m2)
        elif self.kind == "red":
            return red_distance(m1, m2)
        else:
            return dif_betp(m1, m2, self.mode)

    def __str__(self):
        return ("%s:%s" % (self.kind, self.mode) if self.mode
                else self.kind)


JOUSSELME = DistanceMeasure("jousselme")
BETP = DistanceMeasure("betp")
RED = DistanceMeasure("red")
