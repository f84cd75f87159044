"""
Search budgets and outcomes of the simplifier.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from swatchlink.constants import (
    DEFAULT_BUDGET_CROSSINGS,
    DEFAULT_BUDGET_DEPTH,
    DEFAULT_BUDGET_NODES,
)
from swatchlink.pydantic import BaseModel, validator
from swatchlink.topology.diagram import PlanarDiagram, canonical_key
from swatchlink.topology.reidemeister import ReidemeisterMove, replay_moves


class SearchBudget(BaseModel):
    max_crossings_over_start: int = DEFAULT_BUDGET_CROSSINGS
    max_nodes: int = DEFAULT_BUDGET_NODES
    max_depth: int = DEFAULT_BUDGET_DEPTH

    @validator("max_crossings_over_start", "max_nodes", "max_depth")
    def validate_non_negative(cls, value) -> int:
        if value < 0:
            raise ValueError("budget limits must be non-negative")
        return value


class SimplifyStatus(str, Enum):
    REDUCED = "reduced-to-target"
    MINIMAL = "minimal-under-budget"
    EXHAUSTED = "budget-exhausted"


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def moves_to_json(moves) -> str:
    return json.dumps([move.to_dict() for move in moves])


def moves_from_json(text: str) -> Tuple[ReidemeisterMove, ...]:
    return tuple(ReidemeisterMove.from_dict(item) for item in json.loads(text))


@dataclass(frozen=True)
class SimplifyOutcome:
    diagram: PlanarDiagram
    status: SimplifyStatus
    moves: Tuple[ReidemeisterMove, ...] = ()
    start_crossings: int = 0
    nodes: int = 0

    def trace_json(self) -> str:
        return moves_to_json(self.moves)

    def replays_from(self, start: PlanarDiagram) -> bool:
        """Replaying the trace on `start` gives back the final diagram"""
        replayed = replay_moves(start, self.moves)
        return replayed == self.diagram or canonical_key(replayed) == canonical_key(
            self.diagram
        )


class Certificate(BaseModel):
    """An invariant separating a diagram from the recognition target"""

    invariant: str
    expected: str
    found: str


@dataclass(frozen=True)
class Recognition:
    verdict: Verdict
    certificate: Optional[Certificate] = None
    outcome: Optional[SimplifyOutcome] = None
    notes: Tuple[str, ...] = field(default=())

    @property
    def moves(self) -> Tuple[ReidemeisterMove, ...]:
        return self.outcome.moves if self.outcome is not None else ()
