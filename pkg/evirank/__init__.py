"""
    evirank
    ~~~~~~~

    Dempster-Shafer evidence on ordered frames: build basic belief
    assignments, combine them, measure how far apart they are and rank them
    against a reference.
"""

from .core import (EvidenceError, FrameError, FocalSetError, MassError,
                   FrameMismatch, Frame, FocalSet, Bba, build_frame,
                   build_bba, vacuous_bba, categorical_bba, mass_of)
from .combination import (CombinationError, TotalConflict, conflict,
                          combine_dempster, combine_all)
from .pignistic import (BetPMode, PignisticDistribution, ppt,
                        betp_of_subset, dif_betp)
from .distance import (NumericalError, JaccardMatrix, DistanceMeasure,
                       JOUSSELME, BETP, RED, jaccard_similarity,
                       jaccard_matrix, jousselme_distance,
                       correlation_matrix, red_distance,
                       red_reduces_to_jousselme)
from .ranking import (RankingError, RankingResult, RankedCandidate,
                      rank_by_distance, distance_matrix)
from .document import (DocumentError, EvidenceDocument, parse_document,
                       read_document, serialize_document)

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

__version__ = "0.1.0"
