# -*- coding: utf-8 -*-
"""
Swatchlink models knitted swatches as links in the thickened torus and
computes invariants of their Dehn fillings
"""
import importlib.metadata

from .grammar import TileCatalog, build, default_catalog, parse
from .invariants import compute_report, jones, linking_matrix, mva
from .topology.dehn_fill import dehn_fill

__version__ = importlib.metadata.version(__package__ or __name__)


def fill_pattern(pattern: str, catalog: TileCatalog = None, fabric_face: str = "front"):
    """Build a pattern from the catalog and return its Dehn filling"""
    catalog = catalog or default_catalog()
    return dehn_fill(build(parse(pattern, catalog), catalog), fabric_face)


__all__ = [
    "TileCatalog",
    "build",
    "compute_report",
    "default_catalog",
    "dehn_fill",
    "fill_pattern",
    "jones",
    "linking_matrix",
    "mva",
    "parse",
]
