from typing import Any, List

from swatchlink.exceptions import SwatchlinkError
from swatchlink.grammar.reference import (
    ReferenceTables,
    compare_column,
    knit_calibration,
)
from swatchlink.invariants.checks import CheckReport
from swatchlink.invariants.jones import resolve_convention
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext


class ReferenceChecks(BaseLogicUnit):
    """
    Every printed column with a pattern is rebuilt and compared with its
    MVA, Jones polynomial and determinant.
    """

    def execute(self, input: Any, **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        tables = ReferenceTables.load()
        convention = resolve_convention(
            context.config.jones_convention,
            knit_calibration(context.catalog, tables, context.config.fabric_face),
        )
        reports: List[CheckReport] = []
        for column in tables.columns():
            if column.pattern is None:
                continue
            try:
                reports += compare_column(
                    column,
                    context.mva(column.pattern),
                    context.jones(column.pattern),
                    conventions=(convention,),
                )
            except SwatchlinkError as e:
                reports.append(
                    CheckReport(
                        name=f"table-build({column.name})",
                        holds=False,
                        details={"error": f"{e.kind}: {e}"},
                    )
                )
        input.add("tables", reports)
        failed = sum(1 for r in reports if not r.holds)
        return LogicUnitOutput(
            input,
            True,
            f"{len(reports)} table checks under the {convention} convention",
            {"checks": len(reports), "failed": failed, "convention": convention},
        )
