"""
    evirank.combination
    ~~~~~~~~~~~~~~~~~~~

    Dempster's rule of combination (orthogonal sum) and the conflict
    coefficient k.
"""

import math
import logging
import functools

from .core import EvidenceError, Bba, check_same_frame, popcount

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

logger = logging.getLogger(__name__)

CONFLICT_TOLERANCE = 1e-12
"""A conflict within this distance of 1 is treated as total conflict."""


class CombinationError(EvidenceError):
    """Base class for errors while combining evidence."""
    pass


class TotalConflict(CombinationError):
    """The two Bbas are in total conflict (k = 1) and their orthogonal sum
    does not exist. The conflict value is available as ``k``."""

    def __init__(self, k):
        super().__init__("Total conflict (k = %r): the orthogonal sum is "
                         "undefined" % k)
        self.k = k


def _pair_products(m1, m2):
    """Split the products m1(B)·m2(C) into those with non-empty intersection
    (grouped by intersection mask) and those of disjoint pairs."""
    joint = {}
    disjoint = []

    for b, mass_b in m1.masses.items():
        for c, mass_c in m2.masses.items():
            a = b & c
            if a:
                joint.setdefault(a, []).append(mass_b * mass_c)
            else:
                disjoint.append(mass_b * mass_c)

    return joint, disjoint


def _clamp_unit(x):
    return min(max(x, 0.0), 1.0)


def conflict(m1, m2):
    """Conflict coefficient: total mass product over disjoint focal pairs.

    Returns a float k with 0 <= k <= 1.
    """
    check_same_frame(m1, m2)
    _, disjoint = _pair_products(m1, m2)

    return _clamp_unit(math.fsum(disjoint))


def combine_dempster(m1, m2):
    """Orthogonal sum of two Bbas.

    Raises TotalConflict when k is 1 (within :data:`CONFLICT_TOLERANCE`).
    """
    frame = check_same_frame(m1, m2)
    joint, disjoint = _pair_products(m1, m2)

    k = _clamp_unit(math.fsum(disjoint))
    logger.debug("Combining %d x %d focal sets, conflict k = %r",
                 len(m1.masses), len(m2.masses), k)

    if k >= 1.0 - CONFLICT_TOLERANCE:
        raise TotalConflict(k)

    norm = 1.0 - k

    # fsum is exact-rounded, so the result does not depend on argument order
    return Bba(frame, {a: math.fsum(joint[a]) / norm
                       for a in sorted(joint, key=lambda x: (popcount(x), x))})


def combine_all(bbas):
    """Combine two or more Bbas by folding Dempster's rule from the left."""
    bbas = list(bbas)
    if len(bbas) < 2:
        raise CombinationError("At least two Bbas are needed, got %d"
                               % len(bbas))

    return functools.reduce(combine_dempster, bbas)
