from typing import Optional

from swatchlink.helpers.run_tracker import RunTracker

from ...helpers.logger import Logger
from ..pipeline import Pipeline
from ..pipeline_context import PipelineContext
from .conjecture_checks import ConjectureChecks
from .cyclic_checks import CyclicChecks
from .determinant_checks import DeterminantChecks
from .reference_checks import ReferenceChecks
from .reidemeister_fuzz import ReidemeisterFuzz
from .torres_checks import TorresChecks
from .validate_verify_input import ValidateVerifyInput
from .verify_results import VerifyResults
from .verify_summary import VerifySummary


class VerifyPipeline:
    pipeline: Pipeline
    context: PipelineContext
    _logger: Logger

    def __init__(
        self,
        context: Optional[PipelineContext] = None,
        logger: Optional[Logger] = None,
        on_suite=None,
    ):
        self.run_tracker = RunTracker()
        self.pipeline = Pipeline(
            context=context,
            logger=logger,
            run_tracker=self.run_tracker,
            steps=[
                ValidateVerifyInput(),
                ConjectureChecks(on_execution=on_suite),
                DeterminantChecks(on_execution=on_suite),
                TorresChecks(on_execution=on_suite),
                CyclicChecks(skip_if=self.no_knit_and_purl, on_execution=on_suite),
                ReidemeisterFuzz(skip_if=self.no_fuzz_cases, on_execution=on_suite),
                ReferenceChecks(skip_if=self.no_tables, on_execution=on_suite),
                VerifySummary(),
            ],
        )
        self.context = self.pipeline.context
        self._logger = logger

    def no_knit_and_purl(self, context: PipelineContext) -> bool:
        return not all(name in context.catalog for name in ("k", "p"))

    def no_fuzz_cases(self, context: PipelineContext) -> bool:
        return context.config.fuzz_cases == 0

    def no_tables(self, context: PipelineContext) -> bool:
        return not context.config.verify_tables

    def run(self) -> VerifyResults:
        self.run_tracker.start_new_track("verify")
        results = self.run_tracker.execute_func(
            self.pipeline.run, VerifyResults(), tag="verify"
        )
        self.run_tracker.success = results.passed
        return results
