"""Exact rational computations for the pentagram map, its monodromy
invariants, and the combinatorial puzzle that governs inscribed polygons."""

from .bridge import expand_O_in_p, puzzle_prediction, sentence_monomial, theorem1_check, tile_expansion
from .errors import PentagramError
from .inscribed import (
    InscribedData,
    PCoordinates,
    corner_from_p,
    p_from_params,
    random_inscribed,
    random_p,
    veronese_polygon,
)
from .invariants import (
    combinatorial_E,
    combinatorial_O,
    det_sum_E,
    det_sum_O,
    invariant_set,
    product_invariants,
    trace_invariants,
    weight_grade,
)
from .laurent import LaurentPolynomial
from .polygon import (
    CornerInvariants,
    TwistedPolygon,
    corner_invariants,
    pentagram_map,
    projectively_equivalent,
    random_twisted,
)
from .projective import Mobius, ProjLine2, ProjMap2, ProjPoint1, ProjPoint2
from .puzzle import ORIGINAL, TIGHT, CyclicSentence, OpenSentence, WeightPolynomial, weight_poly

__version__ = "0.1.0"

__all__ = [
    "CornerInvariants",
    "CyclicSentence",
    "InscribedData",
    "LaurentPolynomial",
    "Mobius",
    "ORIGINAL",
    "OpenSentence",
    "PCoordinates",
    "PentagramError",
    "ProjLine2",
    "ProjMap2",
    "ProjPoint1",
    "ProjPoint2",
    "TIGHT",
    "TwistedPolygon",
    "WeightPolynomial",
    "combinatorial_E",
    "combinatorial_O",
    "corner_from_p",
    "corner_invariants",
    "det_sum_E",
    "det_sum_O",
    "expand_O_in_p",
    "invariant_set",
    "p_from_params",
    "pentagram_map",
    "product_invariants",
    "projectively_equivalent",
    "puzzle_prediction",
    "random_inscribed",
    "random_p",
    "random_twisted",
    "sentence_monomial",
    "theorem1_check",
    "tile_expansion",
    "trace_invariants",
    "veronese_polygon",
    "weight_grade",
]
