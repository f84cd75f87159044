from typing import Any, List

from swatchlink.algebra.polytext import format_polynomial
from swatchlink.invariants.checks import CheckReport
from swatchlink.invariants.linking import linking_matrix
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext

CYCLIC_WORDS = ("kkpp", "pkkp", "ppkk", "kppk")
# same MVA as kkpp, but not a cyclic permutation of it
INTERLEAVED_WORD = "kpkp"


class CyclicChecks(BaseLogicUnit):
    """
    Cyclic permutations of a word are the same swatch shifted along the
    annulus, so their invariants agree.
    """

    def execute(self, input: Any, **kwargs) -> Any:
        context: PipelineContext = kwargs.get("context")
        reports: List[CheckReport] = []
        first = CYCLIC_WORDS[0]
        base_mva = context.mva(first)
        base_jones = context.jones(first)
        base_linking = linking_matrix(context.diagram(first)).signed
        for word in CYCLIC_WORDS[1:]:
            value = context.mva(word)
            reports.append(
                CheckReport(
                    name=f"cyclic-mva({first}, {word})",
                    holds=value.equal_up_to_units(base_mva),
                    details={"mva": format_polynomial(value.canonical())},
                )
            )
            reports.append(
                CheckReport(
                    name=f"cyclic-jones({first}, {word})",
                    holds=context.jones(word) == base_jones,
                    details={"jones": format_polynomial(context.jones(word))},
                )
            )
            reports.append(
                CheckReport(
                    name=f"cyclic-linking({first}, {word})",
                    holds=linking_matrix(context.diagram(word)).signed == base_linking,
                )
            )

        interleaved = context.mva(INTERLEAVED_WORD)
        reports.append(
            CheckReport(
                name=f"equal-mva({first}, {INTERLEAVED_WORD})",
                holds=interleaved.equal_up_to_units(base_mva),
                details={
                    "note": f"{first} and {INTERLEAVED_WORD} are distinct words "
                    "with equal MVA",
                },
            )
        )
        input.add("cyclic", reports)
        failed = sum(1 for r in reports if not r.holds)
        return LogicUnitOutput(
            input,
            True,
            f"{len(reports)} cyclic checks, {failed} failed",
            {"checks": len(reports), "failed": failed},
        )
