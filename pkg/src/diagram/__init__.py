"""Link diagrams, blackboard cables and the moves between them."""

from .cable import (
    CableDiagram,
    cable,
    deleted_strands,
    strand_orientation,
    sub_cable,
    sub_cable_map,
    validate_pairing,
)
from .moves import (
    Birth,
    Death,
    Dot,
    Move,
    Movie,
    R2Minus,
    R2Plus,
    R3,
    Saddle,
    apply_move,
    contraction_movie,
    r2_bigon,
    r2_minus,
    r3_triangle,
)
from .pd import (
    LinkDiagram,
    add_kink,
    braid_closure,
    collapse_crossings,
    diagram_from_dict,
    diagram_isomorphism,
    inherit_colors,
    knot_names,
    linking_number,
    load_knot,
    parse_pd,
    reverse_component,
    smooth_crossing,
    switch_crossing,
    writhe,
)

__all__ = [
    "LinkDiagram",
    "parse_pd",
    "diagram_from_dict",
    "knot_names",
    "load_knot",
    "writhe",
    "linking_number",
    "collapse_crossings",
    "inherit_colors",
    "diagram_isomorphism",
    "add_kink",
    "reverse_component",
    "braid_closure",
    "smooth_crossing",
    "switch_crossing",
    "CableDiagram",
    "cable",
    "strand_orientation",
    "validate_pairing",
    "deleted_strands",
    "sub_cable",
    "sub_cable_map",
    "Move",
    "R2Minus",
    "R2Plus",
    "R3",
    "Saddle",
    "Birth",
    "Death",
    "Dot",
    "Movie",
    "apply_move",
    "r2_bigon",
    "r2_minus",
    "r3_triangle",
    "contraction_movie",
]
