"""
    evirank.pignistic
    ~~~~~~~~~~~~~~~~~

    Pignistic probability transformation (BetP) and the distance between
    betting commitments (difBetP).
"""

import enum
import math
from collections import namedtuple

import numpy as np

from .core import Bba, FocalSet, FrameMismatch, check_same_frame, mask_positions

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"


@enum.unique
class BetPMode(enum.Enum):
    """Which subsets difBetP maximizes over.

    ``ALL_SUBSETS`` is the textbook definition (every A ⊆ Θ). The other two
    are restrictions: ``SINGLETONS`` only looks at single grades and
    ``FOCAL_SETS`` at the focal sets of either Bba.
    """
    ALL_SUBSETS = "all"
    SINGLETONS = "singleton"
    FOCAL_SETS = "focal"

    @classmethod
    def from_attr(cls, attr):
        """Convert a command line spelling ("all", "singleton", "focal")."""
        try:
            return cls(attr.strip().lower())
        except ValueError:
            raise ValueError("Unknown BetP mode: %s (expected one of %s)"
                             % (attr, ", ".join(m.value for m in cls))) from None

    def __str__(self):
        return self.value


_PignisticDistribution = namedtuple("_PignisticDistribution",
                                    "frame probabilities")


class PignisticDistribution(_PignisticDistribution):
    """Probability of each singleton, indexed by ordinal position."""
    __slots__ = ()

    def as_array(self):
        return np.array(self.probabilities, dtype=float)

    def as_bba(self):
        """The Bba that puts each probability on its singleton."""
        return Bba(self.frame, {1 << i: p
                                for i, p in enumerate(self.probabilities)
                                if p > 0})


def ppt(bba):
    """Pignistic transformation: BetP({x}) = Σ_{A∋x} m(A)/|A|.

    The closed world assumption of :class:`~evirank.core.Bba` makes the
    1 - m(∅) normalization equal to 1.
    """
    probabilities = np.zeros(bba.frame.size)

    for mask, mass in bba.masses.items():
        positions = mask_positions(mask)
        probabilities[positions] += mass / len(positions)

    return PignisticDistribution(bba.frame, tuple(float(p) for p in probabilities))


def betp_of_subset(p, focal_set):
    """BetP(A): the sum of the singleton probabilities of A's members."""
    if focal_set.frame != p.frame:
        raise FrameMismatch("Focal set and distribution belong to different "
                            "frames")

    return math.fsum(p.probabilities[i] for i in mask_positions(focal_set.mask))


def dif_betp(m1, m2, mode=BetPMode.ALL_SUBSETS):
    """Distance between betting commitments, max |BetP_m1(A) - BetP_m2(A)|.

    For ``ALL_SUBSETS`` the maximum is attained by the set of grades where
    BetP_m1 exceeds BetP_m2, so it equals the sum of the positive
    coordinates of the difference (the total variation distance).
    """
    frame = check_same_frame(m1, m2)
    mode = BetPMode(mode)

    p1 = ppt(m1)
    p2 = ppt(m2)
    diff = p1.as_array() - p2.as_array()

    if mode is BetPMode.ALL_SUBSETS:
        return math.fsum(diff[diff > 0])
    elif mode is BetPMode.SINGLETONS:
        return float(np.max(np.abs(diff)))

    focal_masks = dict.fromkeys(m1.masses)
    focal_masks.update(dict.fromkeys(m2.masses))

    return max(abs(betp_of_subset(p1, FocalSet(frame, mask))
                   - betp_of_subset(p2, FocalSet(frame, mask)))
               for mask in focal_masks)
