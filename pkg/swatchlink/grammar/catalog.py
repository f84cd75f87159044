"""
Catalog of named swatch tiles.

Tiles are versioned JSON data: `swatchlink/grammar/data/tiles.json` unless
SWATCHLINK_CATALOG or the `catalog_path` setting names another file. Tiles
are built lazily and cached per catalog instance.
"""

import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Union

from swatchlink.exceptions import UnknownPrimitiveError
from swatchlink.schemas.catalog import CatalogFile, TileEntry
from swatchlink.topology.tangle import (
    SeamProfile,
    TorusTangle,
    reflect,
    seam_profile,
)

from .composition import build, crossing_band
from .parser import parse_expression

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_CATALOG = DATA_DIR / "tiles.json"


class TileCatalog:
    def __init__(self, entries: List[TileEntry], path: Optional[str] = None):
        self._entries: Dict[str, TileEntry] = {entry.name: entry for entry in entries}
        self.path = path
        self._tiles: Dict[str, TorusTangle] = {}
        self._profiles: Dict[str, SeamProfile] = {}

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "TileCatalog":
        """
        Read a catalog file. Without a path, SWATCHLINK_CATALOG is used and
        then the packaged catalog.
        """
        path = path or os.environ.get("SWATCHLINK_CATALOG") or DEFAULT_CATALOG
        with open(path, "r", encoding="utf-8") as f:
            data = CatalogFile(**json.load(f))
        return cls(data.tiles, str(path))

    @property
    def names(self) -> List[str]:
        return sorted(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def entry(self, name: str) -> TileEntry:
        if name not in self._entries:
            raise UnknownPrimitiveError(name)
        return self._entries[name]

    def status(self, name: str) -> str:
        """table-backed when a reference column exists, else unverified"""
        return self.entry(name).status

    def reference(self, name: str) -> Optional[str]:
        return self.entry(name).reference

    def violation(self, name: str) -> Optional[str]:
        return self.entry(name).violation

    def fixtures(self) -> List[str]:
        return [name for name in self.names if self._entries[name].fixture]

    def tiles(self) -> List[str]:
        """Names of the stitch tiles, fixtures excluded"""
        return [name for name in self.names if not self._entries[name].fixture]

    def tile(self, name: str) -> TorusTangle:
        """
        Raises:
            UnknownPrimitiveError: when the name is not in the catalog
        """
        if name not in self._tiles:
            self._tiles[name] = self._build_entry(self.entry(name))
        return self._tiles[name]

    def profile(self, name: str) -> SeamProfile:
        if name not in self._profiles:
            self._profiles[name] = seam_profile(self.tile(name))
        return self._profiles[name]

    def _pattern(self, text: str) -> TorusTangle:
        return build(parse_expression(text, self.names), self)

    def _build_entry(self, entry: TileEntry) -> TorusTangle:
        if entry.kind == "pieces":
            return TorusTangle.from_pieces(entry.pieces, entry.columns, entry.name)
        if entry.kind == "reflect":
            return reflect(self._pattern(entry.base), entry.name)
        if entry.kind == "pattern":
            built = self._pattern(entry.pattern)
            return TorusTangle(built.strands, built.columns, entry.name)
        tangle = self._pattern(entry.base)
        for twist in entry.twists or []:
            tangle = crossing_band(tangle, twist.permutation, twist.heights)
        return TorusTangle(tangle.strands, tangle.columns, entry.name)

    def describe(self) -> List[dict]:
        return [
            {
                "name": entry.name,
                "kind": entry.kind,
                "status": entry.status,
                "reference": entry.reference,
                "fixture": entry.fixture,
                "description": entry.description,
            }
            for entry in (self._entries[name] for name in self.names)
        ]


@lru_cache(maxsize=8)
def _cached(path: str) -> TileCatalog:
    return TileCatalog.load(path)


def default_catalog(path: Optional[str] = None) -> TileCatalog:
    """The shared catalog of a run, loaded once per path"""
    return _cached(str(path or os.environ.get("SWATCHLINK_CATALOG") or DEFAULT_CATALOG))
