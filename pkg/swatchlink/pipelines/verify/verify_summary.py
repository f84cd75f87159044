from typing import Any

from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit


class VerifySummary(BaseLogicUnit):
    """
    Counts passed and failed checks per suite
    """

    def execute(self, input: Any, **kwargs) -> Any:
        summary = input.summary()
        kwargs.get("logger").log(
            f"Verify finished: {summary['passed']} passed, {summary['failed']} failed"
        )
        return LogicUnitOutput(
            input,
            True,
            "Summary",
            summary,
            final_track_output=True,
        )
