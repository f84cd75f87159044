from .catalog import TileCatalog, default_catalog
from .composition import build, compose_longitudinal, compose_meridional, crossing_band
from .expr import Longitudinal, Meridional, Primitive, SwatchExpr
from .knitting import (
    Band,
    FingerMove,
    KnitState,
    LocatedMove,
    build_trivial_row,
    build_unknit,
    close_swatch,
    knit_row,
    place_row,
    validate_knitting_position,
)
from .parser import parse, parse_expression
from .reference import ReferenceTables, compare_column, knit_calibration

__all__ = [
    "Band",
    "FingerMove",
    "KnitState",
    "LocatedMove",
    "Longitudinal",
    "Meridional",
    "Primitive",
    "ReferenceTables",
    "SwatchExpr",
    "TileCatalog",
    "build",
    "build_trivial_row",
    "build_unknit",
    "close_swatch",
    "compare_column",
    "compose_longitudinal",
    "compose_meridional",
    "crossing_band",
    "default_catalog",
    "knit_calibration",
    "knit_row",
    "parse",
    "parse_expression",
    "place_row",
    "validate_knitting_position",
]
