"""Knot and link diagrams: parsing, moves and checkerboard structure."""

from .core import (
    Diagram,
    DiagramError,
    add_kink,
    connected_sum,
    from_strands,
    mirror,
    parse_pd,
    smooth_crossing,
    switch_crossing,
    unknot,
)
from .dt import DTCode, dt_code_of, realize_dt, realizations
from .faces import BLACK, WHITE, FaceData, checkerboard

__all__ = [
    "Diagram",
    "DiagramError",
    "add_kink",
    "connected_sum",
    "from_strands",
    "mirror",
    "parse_pd",
    "smooth_crossing",
    "switch_crossing",
    "unknot",
    "DTCode",
    "dt_code_of",
    "realize_dt",
    "realizations",
    "FaceData",
    "checkerboard",
    "BLACK",
    "WHITE",
]
