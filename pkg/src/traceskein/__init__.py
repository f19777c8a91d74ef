"""Trace functions of loops on punctured surfaces: multicurve expansions,
Goldman brackets, intersection numbers and lamination valuations."""

__version__ = "0.1.0"

from .surface import (TRIVIAL, ConjClass, Surface, canonical_class,
                      cyclic_reduce, four_punctured_sphere, free_reduce,
                      get_surface, is_trivial, punctured_sphere,
                      punctured_torus)
from .intersect import (EMPTY, IntersectionDatum, Multicurve, Multiloop,
                        geom_intersection, is_simple, linked_pairs,
                        self_intersection, self_linked_pairs, smooth)
from .skein import (SkeinElement, evaluate, expand, goldman_bracket, loop,
                    product)
from .valuation import (BOTTOM, NewtonReport, RationalLamination,
                        acute_violations, check_bracket_inequality,
                        check_smoothing_lemma, check_unitarity, length,
                        luo_products, newton_set, parse_lamination,
                        strict_violations, valuation)
from .oracle import axis_linking_count, preset_rep

__all__ = [
    "TRIVIAL", "ConjClass", "Surface", "canonical_class", "cyclic_reduce",
    "four_punctured_sphere", "free_reduce", "get_surface", "is_trivial",
    "punctured_sphere", "punctured_torus",
    "EMPTY", "IntersectionDatum", "Multicurve", "Multiloop", "geom_intersection",
    "is_simple", "linked_pairs", "self_intersection", "self_linked_pairs", "smooth",
    "SkeinElement", "evaluate", "expand", "goldman_bracket", "loop", "product",
    "BOTTOM", "NewtonReport", "RationalLamination", "acute_violations",
    "check_bracket_inequality", "check_smoothing_lemma", "check_unitarity",
    "length", "luo_products", "newton_set", "parse_lamination",
    "strict_violations", "valuation",
    "axis_linking_count", "preset_rep",
]
