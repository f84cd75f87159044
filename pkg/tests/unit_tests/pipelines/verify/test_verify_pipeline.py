import pytest

from swatchlink.exceptions import UnknownPrimitiveError
from swatchlink.pipelines.pipeline_context import PipelineContext
from swatchlink.pipelines.verify.conjecture_checks import ConjectureChecks
from swatchlink.pipelines.verify.cyclic_checks import CyclicChecks
from swatchlink.pipelines.verify.determinant_checks import DeterminantChecks
from swatchlink.pipelines.verify.verify_pipeline import VerifyPipeline
from swatchlink.pipelines.verify.verify_results import VerifyResults


def passthrough(input, **kwargs):
    return input


class TestVerifyPipeline:
    def test_skips(self, make_context):
        pipeline = VerifyPipeline(make_context())
        assert pipeline.no_fuzz_cases(pipeline.context)
        assert pipeline.no_tables(pipeline.context)
        assert not pipeline.no_knit_and_purl(pipeline.context)

    def test_run(self, make_context, logger, mocker):
        for step in (ConjectureChecks, DeterminantChecks, CyclicChecks):
            mocker.patch.object(step, "execute", side_effect=passthrough)
        suites = []
        context = make_context(tiles=["e"])
        pipeline = VerifyPipeline(context, logger=logger, on_suite=suites.append)

        results = pipeline.run()

        assert isinstance(results, VerifyResults)
        assert list(results.suites) == ["torres"]
        assert results.passed
        assert pipeline.run_tracker.success
        assert len(suites) == 4
        messages = [entry["msg"] for entry in logger.logs]
        assert "Executing Step 0: ValidateVerifyInput" in messages
        assert "Executing Step 5: Skipping..." in messages
        assert "Executing Step 6: Skipping..." in messages
        summary = pipeline.run_tracker.get_summary()["response"]
        assert summary["failed"] == 0
        (whole_run,) = [s for s in pipeline.run_tracker.steps if s["type"] == "verify"]
        assert whole_run["success"]
        assert pipeline.run_tracker.steps[-1] is whole_run

    def test_failure_is_logged(self, make_context, logger):
        context = make_context(tiles=["zz"])
        pipeline = VerifyPipeline(context, logger=logger)
        with pytest.raises(UnknownPrimitiveError):
            pipeline.run()
        messages = [entry["msg"] for entry in logger.logs]
        assert any(m.startswith("Pipeline failed on step 0: ") for m in messages)
        assert pipeline.run_tracker.steps[-1]["type"] == "verify"
        assert not pipeline.run_tracker.steps[-1]["success"]

    def test_default_context(self):
        pipeline = VerifyPipeline()
        assert isinstance(pipeline.context, PipelineContext)
        assert pipeline.context.config.fuzz_cases == 1000
