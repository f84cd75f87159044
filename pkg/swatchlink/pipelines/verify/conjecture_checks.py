from typing import Any, List, Tuple

from swatchlink.invariants.checks import CheckReport, conjecture_mva_check
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext
from .validate_verify_input import pair_pattern

# the pair whose product identity is displayed with the divisor (t1 - 1)^2
DISPLAYED_PAIR = ("p*lp", "k*lp")


def checked_pairs(context: PipelineContext) -> List[Tuple[str, str]]:
    pairs = list(context.get("meridional_pairs", []))
    if all(name in context.catalog for name in ("k", "p")):
        pairs.append(DISPLAYED_PAIR)
    return pairs


class ConjectureChecks(BaseLogicUnit):
    """
    MVA(a b) (t1 - 1)^n against MVA(a) MVA(b) for every meridional pair
    """

    def execute(self, input: Any, **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        reports: List[CheckReport] = []
        for a, b in checked_pairs(context):
            product = pair_pattern(a, b)
            n = context.tangle(a).component_count
            report = conjecture_mva_check(
                context.mva(product), [context.mva(a), context.mva(b)], n
            )
            report.name = f"mva-product({product})"
            reports.append(report)
        input.add("conjecture", reports)
        failed = sum(1 for r in reports if not r.holds)
        return LogicUnitOutput(
            input,
            True,
            f"{len(reports)} MVA product checks, {failed} failed",
            {"checks": len(reports), "failed": failed},
        )
