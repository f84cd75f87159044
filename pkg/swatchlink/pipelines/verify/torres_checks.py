from typing import Any, List

from swatchlink.invariants.checks import CheckReport, torres_check
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext


class TorresChecks(BaseLogicUnit):
    """
    The Torres formula for every component of every filled tile
    """

    def execute(self, input: Any, **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        reports: List[CheckReport] = []
        for name in context.get("tiles", []):
            diagram = context.diagram(name)
            value = context.mva(name)
            for component in range(diagram.component_count):
                report = torres_check(diagram, component, value)
                report.name = f"torres({name}, {component})"
                reports.append(report)
        input.add("torres", reports)
        failed = sum(1 for r in reports if not r.holds)
        return LogicUnitOutput(
            input,
            True,
            f"{len(reports)} Torres checks, {failed} failed",
            {"checks": len(reports), "failed": failed},
        )
