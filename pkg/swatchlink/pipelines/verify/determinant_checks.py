from typing import Any, List

from swatchlink.invariants.checks import CheckReport, determinant_identity
from swatchlink.invariants.determinant import determinant_from_mva
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext
from .conjecture_checks import checked_pairs
from .validate_verify_input import pair_pattern


class DeterminantChecks(BaseLogicUnit):
    """
    2^((n + 1)(N - 1)) det(product) = prod det(factor) on meridional pairs.
    Longitudinal pairs get the same comparison as a note.
    """

    def _det(self, context: PipelineContext, pattern: str) -> int:
        return determinant_from_mva(context.mva(pattern), "table")

    def execute(self, input: Any, **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        reports: List[CheckReport] = []
        for a, b in checked_pairs(context):
            product = pair_pattern(a, b)
            report = determinant_identity(
                self._det(context, product),
                [self._det(context, a), self._det(context, b)],
                context.tangle(a).component_count,
            )
            report.name = f"det-product({product})"
            reports.append(report)
        input.add("determinant", reports)

        for a, b in context.get("longitudinal_pairs", []):
            product = pair_pattern(a, b, longitudinal=True)
            note = determinant_identity(
                self._det(context, product),
                [self._det(context, a), self._det(context, b)],
                context.tangle(a).component_count,
            )
            note.name = f"det-product({product})"
            input.note(note)

        failed = sum(1 for r in reports if not r.holds)
        return LogicUnitOutput(
            input,
            True,
            f"{len(reports)} determinant checks, {failed} failed",
            {"checks": len(reports), "failed": failed},
        )
