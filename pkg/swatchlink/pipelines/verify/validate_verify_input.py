from itertools import combinations_with_replacement
from typing import Any, List, Tuple

from swatchlink.exceptions import ProfileMismatchError, UnknownPrimitiveError
from swatchlink.grammar.parser import parse
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput

from ..base_logic_unit import BaseLogicUnit
from ..pipeline_context import PipelineContext
from .verify_results import VerifyResults


def pair_pattern(a: str, b: str, longitudinal: bool = False) -> str:
    return f"({a})*l({b})" if longitudinal else f"({a})({b})"


class ValidateVerifyInput(BaseLogicUnit):
    """
    Resolves the tiles of the run and the pairs of them that compose.
    Meridional pairs go to the gating suites, longitudinal ones only feed
    informational checks.
    """

    def _tiles(self, context: PipelineContext) -> List[str]:
        requested = context.config.tiles
        if not requested:
            return context.catalog.tiles()
        for name in requested:
            if name not in context.catalog:
                raise UnknownPrimitiveError(name)
        return list(requested)

    def _pairs(self, context: PipelineContext, tiles: List[str], longitudinal: bool):
        pairs: List[Tuple[str, str]] = []
        skipped: List[str] = []
        for a, b in combinations_with_replacement(sorted(tiles), 2):
            try:
                parse(pair_pattern(a, b, longitudinal), context.catalog)
            except ProfileMismatchError:
                skipped.append(pair_pattern(a, b, longitudinal))
                continue
            pairs.append((a, b))
        return pairs, skipped

    def execute(self, input: Any, **kwargs) -> Any:
        """
        This method resolves the tiles and pairs of a verify run

        :param input: VerifyResults to add to, or None.
        :param kwargs: A dictionary of keyword arguments.
            - 'logger' (any): The logger for logging.
            - 'config' (RunConfig): Settings of the run
            - 'context' (any): The execution context.

        :return: The result of the execution.
        """
        context: PipelineContext = kwargs.get("context")
        tiles = self._tiles(context)
        meridional, skipped = self._pairs(context, tiles, longitudinal=False)
        longitudinal, _ = self._pairs(context, tiles, longitudinal=True)
        context.add_many(
            {
                "tiles": tiles,
                "meridional_pairs": meridional,
                "longitudinal_pairs": longitudinal,
            }
        )
        kwargs.get("logger").log(
            f"Verifying {len(tiles)} tiles, {len(meridional)} meridional pairs, "
            f"{len(skipped)} pairs without matching seams"
        )
        results = input if isinstance(input, VerifyResults) else VerifyResults()
        return LogicUnitOutput(
            results,
            True,
            "Input Validation Successful",
            {"tiles": tiles, "skipped": skipped},
        )
