from typing import List, Optional, Union

from swatchlink.pydantic import BaseModel, validator

TILE_KINDS = ("pieces", "reflect", "pattern", "band")


class Twist(BaseModel):
    permutation: List[int]
    heights: List[Union[float, str]]


class TileEntry(BaseModel):
    """
    One catalog tile. `pieces` tiles carry polylines in the unit cube,
    `reflect` mirrors the pattern in `base`, `pattern` builds a pattern of
    other tiles and `band` adds the `twists` strips below `base`.
    """

    name: str
    kind: str
    description: str = ""
    columns: int = 1
    pieces: Optional[List[List[List[float]]]] = None
    base: Optional[str] = None
    pattern: Optional[str] = None
    twists: Optional[List[Twist]] = None
    reference: Optional[str] = None
    fixture: bool = False
    violation: Optional[str] = None

    @validator("kind", always=True)
    def validate_kind(cls, value) -> str:
        if value not in TILE_KINDS:
            raise ValueError(f"kind must be one of {TILE_KINDS}")
        return value

    @validator("pieces", always=True)
    def validate_pieces(cls, value, values) -> Optional[List[List[List[float]]]]:
        if values.get("kind") == "pieces":
            if not value:
                raise ValueError("a pieces tile needs at least one polyline")
            for piece in value:
                if any(len(point) != 3 for point in piece):
                    raise ValueError("tile points have three coordinates")
        return value

    @validator("base", always=True)
    def validate_base(cls, value, values) -> Optional[str]:
        if values.get("kind") in ("reflect", "band") and not value:
            raise ValueError(f"a {values.get('kind')} tile needs a base pattern")
        return value

    @validator("pattern", always=True)
    def validate_pattern(cls, value, values) -> Optional[str]:
        if values.get("kind") == "pattern" and not value:
            raise ValueError("a pattern tile needs a pattern")
        return value

    @property
    def status(self) -> str:
        return "table-backed" if self.reference else "unverified"


class CatalogFile(BaseModel):
    version: int = 1
    tiles: List[TileEntry]


class ReferenceColumn(BaseModel):
    """A column of the printed invariant tables"""

    name: str
    table: str
    pattern: Optional[str] = None
    mva: str
    jones: str
    det: int
    variables: Optional[dict] = None


class ReferenceFile(BaseModel):
    version: int = 1
    columns: List[ReferenceColumn]
