"""
    evirank.core
    ~~~~~~~~~~~~

    Frames of discernment, focal sets and basic belief assignments (Bba).

    Everything in this module is immutable after construction. A focal set is
    stored as a bit mask over the frame (bit ``i - 1`` stands for the grade
    with ordinal index ``i``), which is why frames are limited to
    :data:`MAX_FRAME_SIZE` grades.
"""

import math
import numbers
import logging
from collections import namedtuple
from types import MappingProxyType

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

logger = logging.getLogger(__name__)

MASS_TOLERANCE = 1e-9
"""Allowed deviation of the total mass from 1."""

MAX_FRAME_SIZE = 64


class EvidenceError(Exception):
    """Base class for every error raised by evirank."""
    pass


class FrameError(EvidenceError):
    """Raised when a frame of discernment cannot be built (empty, duplicate
    labels or too many grades)."""
    pass


class FocalSetError(EvidenceError):
    """Raised for empty focal sets and for members that do not belong to the
    frame."""
    pass


class MassError(EvidenceError):
    """Raised when masses are negative or do not add up to 1."""
    pass


class FrameMismatch(EvidenceError):
    """Raised when two operands are defined on different frames."""
    pass


def popcount(mask):
    """Number of set bits in a mask, i.e. the cardinality of a focal set."""
    return bin(mask).count("1")


def mask_positions(mask):
    """Zero-based positions of the bits set in ``mask``, in increasing
    order."""
    positions = []
    i = 0
    while mask:
        if mask & 1:
            positions.append(i)
        mask >>= 1
        i += 1
    return positions


_Frame = namedtuple("_Frame", "labels")


class Frame(_Frame):
    """Ordered set of grade labels.

    The position of a label is its ordinal index (starting at 1), and the
    order carries meaning: ``|i - j|`` is how far apart two grades are.
    """
    __slots__ = ()

    def __new__(cls, labels):
        if isinstance(labels, cls):
            return labels

        labels = tuple(labels)

        if not labels:
            raise FrameError("A frame needs at least one label")

        if len(labels) > MAX_FRAME_SIZE:
            raise FrameError("Frames are limited to %d elements, got %d"
                             % (MAX_FRAME_SIZE, len(labels)))

        seen = set()
        for label in labels:
            if label in seen:
                raise FrameError("Duplicate label: %s" % label)
            seen.add(label)

        return super().__new__(cls, labels)

    @property
    def size(self):
        return len(self.labels)

    @property
    def full_mask(self):
        """Mask of the whole frame (Θ)."""
        return (1 << self.size) - 1

    def index(self, label):
        """1-based ordinal index of a label."""
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise FocalSetError("Unknown element: %s" % label) from None

    def label(self, index):
        """Label of the grade with 1-based ordinal ``index``."""
        if not 1 <= index <= self.size:
            raise FocalSetError("Index %d out of range 1..%d"
                                % (index, self.size))
        return self.labels[index - 1]

    def resolve(self, element):
        """Convert a label or a 1-based index into an index.

        Strings are looked up as labels first; a string that is not a label
        but spells an integer is taken as an index.
        """
        if isinstance(element, numbers.Integral) and not isinstance(element, bool):
            self.label(element)
            return int(element)

        if element in self.labels:
            return self.index(element)

        # ASCII digits only
        if isinstance(element, str):
            digits = element.strip()
            if digits.isascii() and digits.isdecimal():
                return self.resolve(int(digits))

        raise FocalSetError("Unknown element: %s" % element)

    def __str__(self):
        return "{%s}" % ", ".join(str(l) for l in self.labels)


_FocalSet = namedtuple("_FocalSet", "frame mask")


class FocalSet(_FocalSet):
    """A non-empty subset of a frame.

    Two focal sets are equal when they have the same members and the same
    frame; the order in which members were given does not matter.
    """
    __slots__ = ()

    def __new__(cls, frame, mask):
        if not mask:
            raise FocalSetError("Focal sets cannot be empty")
        if mask < 0 or mask >> frame.size:
            raise FocalSetError("Mask %#x does not fit in a frame of size %d"
                                % (mask, frame.size))
        return super().__new__(cls, frame, mask)

    @classmethod
    def from_members(cls, frame, members):
        """Build a focal set out of labels and/or 1-based indices."""
        mask = 0
        for element in members:
            mask |= 1 << (frame.resolve(element) - 1)

        return cls(frame, mask)

    @property
    def members(self):
        """Sorted 1-based indices."""
        return tuple(p + 1 for p in mask_positions(self.mask))

    @property
    def labels(self):
        return tuple(self.frame.labels[p] for p in mask_positions(self.mask))

    @property
    def cardinality(self):
        return popcount(self.mask)

    def _check_frame(self, other):
        if self.frame != other.frame:
            raise FrameMismatch("Focal sets belong to different frames")

    def __and__(self, other):
        """Intersection. Returns None if the sets are disjoint, since the
        empty set cannot be a focal set."""
        self._check_frame(other)
        mask = self.mask & other.mask
        return FocalSet(self.frame, mask) if mask else None

    def __or__(self, other):
        self._check_frame(other)
        return FocalSet(self.frame, self.mask | other.mask)

    def isdisjoint(self, other):
        self._check_frame(other)
        return not self.mask & other.mask

    def issubset(self, other):
        self._check_frame(other)
        return self.mask & ~other.mask == 0

    def __str__(self):
        return "{%s}" % ", ".join(str(l) for l in self.labels)


class Bba:
    """Basic belief assignment (mass function) on a frame.

    ``masses`` maps focal set masks to masses. Entries with zero mass are
    dropped; everything else is validated: masses must be finite and
    non-negative and they must sum to 1 within :data:`MASS_TOLERANCE`. A
    mass above 1 by no more than the tolerance is stored as 1. The
    empty set can never carry mass (closed world).

    Use :func:`build_bba` to build one from labels or indices.
    """
    __slots__ = ("_frame", "_masses")

    def __init__(self, frame, masses):
        frame = Frame(frame)
        clean = {}

        for mask, mass in masses.items():
            mass = float(mass)
            if not math.isfinite(mass) or mass < 0:
                raise MassError("Invalid mass %r" % mass)
            if mass > 1.0:
                if mass - 1.0 > MASS_TOLERANCE:
                    raise MassError("Mass %r is greater than 1" % mass)
                mass = 1.0

            FocalSet(frame, mask)  # validates the mask

            if mass > 0:
                clean[mask] = mass

        total = math.fsum(clean.values())
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise MassError("Masses sum to %r instead of 1" % total)

        self._frame = frame
        self._masses = MappingProxyType(clean)

    @property
    def frame(self):
        return self._frame

    @property
    def masses(self):
        """Read-only mapping mask -> mass, in construction order."""
        return self._masses

    def focal_sets(self):
        return [FocalSet(self._frame, mask) for mask in self._masses]

    def items(self):
        """(FocalSet, mass) pairs in construction order."""
        return [(FocalSet(self._frame, mask), mass)
                for mask, mass in self._masses.items()]

    def is_categorical(self):
        """True if all the mass sits on a single singleton."""
        return len(self._masses) == 1 and popcount(next(iter(self._masses))) == 1

    def __eq__(self, other):
        if not isinstance(other, Bba):
            return NotImplemented
        return (self._frame == other._frame
                and dict(self._masses) == dict(other._masses))

    def __hash__(self):
        return hash((self._frame, frozenset(self._masses.items())))

    def __repr__(self):
        entries = ", ".join("%s: %r" % (fs, mass) for fs, mass in self.items())
        return "Bba(%s)" % entries


def check_same_frame(*bbas):
    """Raise FrameMismatch unless all arguments share one frame."""
    frame = bbas[0].frame
    for other in bbas[1:]:
        if other.frame != frame:
            raise FrameMismatch("Evidence is defined on different frames: "
                                "%s and %s" % (frame, other.frame))
    return frame


def build_frame(labels):
    """Build a frame from an ordered list of grade labels."""
    return Frame(labels)


def build_bba(frame, entries, renormalize=False):
    """Build a validated Bba from ``(members, mass)`` pairs.

    ``members`` is any iterable of labels or 1-based indices. Entries that
    name the same set are merged by adding their masses. If ``renormalize``
    is set, the masses are divided by their total before validation.
    """
    merged = {}

    for members, mass in entries:
        focal = FocalSet.from_members(frame, members)
        mass = float(mass)
        if mass < 0:
            raise MassError("Negative mass %r for %s" % (mass, focal))
        merged[focal.mask] = merged.get(focal.mask, 0.0) + mass

    if renormalize:
        total = math.fsum(merged.values())
        if total <= 0:
            raise MassError("Cannot renormalize: total mass is %r" % total)
        if total != 1.0:
            logger.debug("Renormalizing masses that sum to %r", total)
        merged = {mask: mass / total for mask, mass in merged.items()}

    return Bba(frame, merged)


def vacuous_bba(frame):
    """All the mass on the whole frame (total ignorance)."""
    return Bba(frame, {frame.full_mask: 1.0})


def categorical_bba(frame, element):
    """All the mass on a single grade, given as label or index."""
    return build_bba(frame, [((element,), 1.0)])


def mass_of(bba, focal_set):
    """Mass assigned to ``focal_set`` (0 if it is not focal)."""
    if focal_set.frame != bba.frame:
        raise FrameMismatch("Focal set and Bba belong to different frames")

    return bba.masses.get(focal_set.mask, 0.0)
