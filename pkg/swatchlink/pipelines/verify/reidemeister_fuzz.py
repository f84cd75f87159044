"""
Random Reidemeister moves must leave every invariant unchanged.

Cases cycle through a few base diagrams. Each case applies up to
`fuzz_moves` moves drawn with numpy's seeded generator from the moves that
fit the current diagram. The result must still be a planar diagram, and its
canonical MVA, Jones polynomial and signed linking matrix must equal those
of the base.
"""

from typing import Any, Dict, List, Tuple

import numpy as np

from swatchlink.exceptions import MoveNotApplicableError
from swatchlink.invariants.alexander import mva
from swatchlink.invariants.checks import CheckReport
from swatchlink.invariants.jones import jones
from swatchlink.invariants.linking import linking_matrix
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput
from swatchlink.topology.diagram import PlanarDiagram, euler_check
from swatchlink.topology.reidemeister import (
    ReidemeisterMove,
    apply_reidemeister,
    reducing_moves,
    rm1_plus_moves,
    rm2_plus_moves,
    rm3_moves,
)
from swatchlink.topology.standard import figure_eight, hopf, right_trefoil

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext


def candidate_moves(diagram: PlanarDiagram) -> List[ReidemeisterMove]:
    moves = list(reducing_moves(diagram))
    moves += list(rm3_moves(diagram))
    moves += list(rm2_plus_moves(diagram))
    moves += list(rm1_plus_moves(diagram))
    return moves


def random_moves(
    diagram: PlanarDiagram, count: int, rng: np.random.Generator
) -> Tuple[PlanarDiagram, List[ReidemeisterMove]]:
    applied = []
    for _ in range(count):
        moves = candidate_moves(diagram)
        if not moves:
            break
        move = moves[int(rng.integers(len(moves)))]
        try:
            diagram = apply_reidemeister(diagram, move)
        except MoveNotApplicableError:
            continue
        applied.append(move)
    return diagram, applied


def fingerprint(diagram: PlanarDiagram):
    return (
        mva(diagram, cross_check=False).canonical(),
        jones(diagram),
        linking_matrix(diagram).signed,
    )


class ReidemeisterFuzz(BaseLogicUnit):
    """
    Seeded invariance fuzzing, one report per base diagram
    """

    def _bases(self, context: PipelineContext) -> Dict[str, PlanarDiagram]:
        bases = {
            "hopf": hopf(),
            "right_trefoil": right_trefoil(),
            "figure_eight": figure_eight(),
        }
        if "e" in context.catalog:
            bases["filled(e)"] = context.diagram("e")
        return bases

    def execute(self, input: Any, **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        config = context.config
        rng = np.random.default_rng(config.seed)
        bases = self._bases(context)
        names = list(bases)
        expected = {name: fingerprint(bases[name]) for name in names}
        failures: Dict[str, List[str]] = {name: [] for name in names}
        cases: Dict[str, int] = {name: 0 for name in names}

        for case in range(config.fuzz_cases):
            name = names[case % len(names)]
            count = int(rng.integers(config.fuzz_moves + 1))
            moved, applied = random_moves(bases[name], count, rng)
            cases[name] += 1
            if not euler_check(moved):
                failures[name].append(str(case))
                kwargs.get("logger").log(
                    f"Diagram of {name} stopped being planar in case {case} after "
                    f"{', '.join(str(m) for m in applied)}"
                )
            elif fingerprint(moved) != expected[name]:
                failures[name].append(str(case))
                kwargs.get("logger").log(
                    f"Invariants of {name} changed in case {case} after "
                    f"{', '.join(str(m) for m in applied)}"
                )

        reports: List[CheckReport] = [
            CheckReport(
                name=f"reidemeister-invariance({name})",
                holds=not failures[name],
                details={
                    "cases": str(cases[name]),
                    "seed": str(config.seed),
                    "failed-cases": ",".join(failures[name]),
                },
            )
            for name in names
        ]
        input.add("fuzz", reports)
        failed = sum(1 for r in reports if not r.holds)
        return LogicUnitOutput(
            input,
            True,
            f"{config.fuzz_cases} fuzz cases on {len(names)} diagrams",
            {"checks": len(reports), "failed": failed},
        )
