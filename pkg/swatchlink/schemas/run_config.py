from typing import List, Optional

from swatchlink.constants import (
    DEFAULT_BUDGET_CROSSINGS,
    DEFAULT_BUDGET_DEPTH,
    DEFAULT_BUDGET_NODES,
    DEFAULT_SEED,
    EXPORT_FORMATS,
    INVARIANT_NAMES,
)
from swatchlink.pydantic import BaseModel, validator

DET_CONVENTIONS = ("table", "paper")
JONES_CONVENTIONS = ("auto", "standard", "mirror")
FABRIC_FACES = ("front", "back")
OUTPUT_FORMATS = ("json", "table", "csv")


class RunConfig(BaseModel):
    save_logs: bool = False
    verbose: bool = False
    catalog_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    budget_crossings: int = DEFAULT_BUDGET_CROSSINGS
    budget_nodes: int = DEFAULT_BUDGET_NODES
    budget_depth: int = DEFAULT_BUDGET_DEPTH
    det_convention: str = "table"
    jones_convention: str = "auto"
    fabric_face: str = "front"
    fuzz_cases: int = 1000
    fuzz_moves: int = 10
    pattern: Optional[str] = None
    invariants: Optional[List[str]] = None
    columns: Optional[List[str]] = None
    tiles: Optional[List[str]] = None
    verify_tables: bool = False
    # None renders as a table
    output_format: Optional[str] = None
    export_format: Optional[str] = None

    class Config:
        arbitrary_types_allowed = True

    @validator("det_convention", always=True)
    def validate_det_convention(cls, value) -> str:
        if value not in DET_CONVENTIONS:
            raise ValueError(f"det_convention must be one of {DET_CONVENTIONS}")
        return value

    @validator("jones_convention", always=True)
    def validate_jones_convention(cls, value) -> str:
        if value not in JONES_CONVENTIONS:
            raise ValueError(f"jones_convention must be one of {JONES_CONVENTIONS}")
        return value

    @validator("fabric_face", always=True)
    def validate_fabric_face(cls, value) -> str:
        if value not in FABRIC_FACES:
            raise ValueError(f"fabric_face must be one of {FABRIC_FACES}")
        return value

    @validator(
        "budget_crossings", "budget_nodes", "budget_depth", "fuzz_cases", "fuzz_moves"
    )
    def validate_non_negative(cls, value) -> int:
        if value < 0:
            raise ValueError("budgets and case counts must be non-negative")
        return value

    @validator("invariants")
    def validate_invariants(cls, value) -> Optional[List[str]]:
        if value is None:
            return value
        known = INVARIANT_NAMES + ("all",)
        unknown = [name for name in value if name not in known]
        if unknown:
            raise ValueError(
                f"unknown invariants {', '.join(unknown)}; choose from "
                f"{', '.join(INVARIANT_NAMES)} or all"
            )
        return value

    @validator("output_format")
    def validate_output_format(cls, value) -> Optional[str]:
        if value is not None and value not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}")
        return value

    @validator("export_format")
    def validate_export_format(cls, value, values) -> Optional[str]:
        if value is None:
            return value
        if value not in EXPORT_FORMATS:
            raise ValueError(f"export_format must be one of {EXPORT_FORMATS}")
        if values.get("output_format") == "table":
            raise ValueError("export and table output cannot be combined in one run")
        return value

    @property
    def rendering(self) -> str:
        return self.output_format or "table"

    def budget(self):
        from swatchlink.simplifier.budget import SearchBudget

        return SearchBudget(
            max_crossings_over_start=self.budget_crossings,
            max_nodes=self.budget_nodes,
            max_depth=self.budget_depth,
        )
