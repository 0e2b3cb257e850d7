"""Skein-theoretic oracles: bracket state sums, cabling and Temperley-Lieb."""

from .skein import (
    bracket_by_states,
    colored_jones,
    colored_jones_sum,
    framing_factor,
    framing_shift_check,
    jones,
    kauffman_bracket,
    orientation_reversal_factor,
    reduced_colored_jones,
    skein_relation_holds,
    skein_triple,
)
from .temperley_lieb import (
    Matching,
    TLDiagram,
    TLElement,
    catalan,
    compose,
    crossingless_matchings,
    identify_e,
    jones_wenzl,
    projector_coupling,
    rainbow,
)

__all__ = [
    "kauffman_bracket",
    "bracket_by_states",
    "jones",
    "colored_jones",
    "colored_jones_sum",
    "framing_factor",
    "framing_shift_check",
    "reduced_colored_jones",
    "orientation_reversal_factor",
    "skein_triple",
    "skein_relation_holds",
    "Matching",
    "TLDiagram",
    "TLElement",
    "catalan",
    "compose",
    "crossingless_matchings",
    "rainbow",
    "jones_wenzl",
    "projector_coupling",
    "identify_e",
]
