from typing import Any
from unittest.mock import Mock

import pytest

from swatchlink.exceptions import PipelineConcatenationError, UnSupportedLogicUnit
from swatchlink.helpers.logger import Logger
from swatchlink.pipelines.base_logic_unit import BaseLogicUnit
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput
from swatchlink.pipelines.pipeline import Pipeline
from swatchlink.pipelines.pipeline_context import PipelineContext
from swatchlink.schemas.run_config import RunConfig


class MockLogicUnit(BaseLogicUnit):
    def execute(self, input: Any, **kwargs) -> Any:
        pass


class TestPipeline:
    @pytest.fixture
    def config(self):
        return {"fuzz_cases": 0, "save_logs": False}

    @pytest.fixture
    def context(self, config):
        return PipelineContext(RunConfig(**config))

    @pytest.fixture
    def logger(self):
        return Logger(save_logs=False, verbose=False)

    def test_init(self, context, config):
        pipeline = Pipeline(context)
        assert isinstance(pipeline, Pipeline)
        assert pipeline._context.config == RunConfig(**config)
        assert pipeline._context == context
        assert pipeline._steps == []

    def test_init_with_config(self, config):
        pipeline = Pipeline(config=config)
        assert isinstance(pipeline.context, PipelineContext)
        assert pipeline.context.config.fuzz_cases == 0

    def test_add_step(self, context):
        pipeline = Pipeline(context)
        logic_unit = MockLogicUnit()
        pipeline.add_step(logic_unit)
        assert len(pipeline._steps) == 1
        assert pipeline._steps[0] == logic_unit

    def test_add_step_using_constructor(self, context):
        logic_unit = MockLogicUnit()
        pipeline = Pipeline(context, steps=[logic_unit])
        assert len(pipeline._steps) == 1
        assert pipeline._steps[0] == logic_unit

    def test_add_step_unknown_logic_unit(self, context):
        pipeline = Pipeline(context)
        with pytest.raises(UnSupportedLogicUnit):
            pipeline.add_step(Mock())

    def test_run(self, context):
        pipeline = Pipeline(context)

        class MockLogicUnit(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                return "MockData"

        pipeline.add_step(MockLogicUnit())
        result = pipeline.run("InitialData")
        assert result == "MockData"

    def test_run_with_exception(self, context, logger):
        pipeline = Pipeline(context, logger=logger)

        class MockLogicUnit(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                raise ValueError("Mock exception")

        pipeline.add_step(MockLogicUnit())
        with pytest.raises(ValueError):
            pipeline.run("InitialData")
        messages = [entry["msg"] for entry in logger.logs]
        assert "Executing Step 0: MockLogicUnit" in messages
        assert "Pipeline failed on step 0: Mock exception" in messages

    def test_run_with_empty_pipeline(self, context):
        pipeline_3 = Pipeline(context, [])
        result = pipeline_3.run(5)
        assert result == 5

    def test_run_with_multiple_steps(self, context):
        class MockLogic(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                return data + 1

        pipeline_2 = Pipeline(context, steps=[MockLogic(), MockLogic(), MockLogic()])

        result = pipeline_2.run(5)
        assert result == 8

    def test_skip_if_and_callbacks(self, context, logger):
        class MockLogic(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                return data + 1

        seen = []
        pipeline = Pipeline(
            context,
            logger=logger,
            steps=[
                MockLogic(on_execution=seen.append),
                MockLogic(skip_if=lambda ctx: True),
                MockLogic(before_execution=seen.append),
            ],
        )
        assert pipeline.run(1) == 3
        assert seen == [2, 2]
        assert "Executing Step 1: Skipping..." in [e["msg"] for e in logger.logs]

    def test_logic_unit_output_is_tracked(self, context):
        class TrackedLogic(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                return LogicUnitOutput(
                    data * 2, True, "doubled", {"value": data}, final_track_output=True
                )

        pipeline = Pipeline(context, steps=[TrackedLogic()])
        pipeline.run_tracker.start_new_track("double")
        assert pipeline.run(4) == 8
        assert pipeline.run_tracker.steps[0]["type"] == "TrackedLogic"
        assert pipeline.run_tracker.steps[0]["message"] == "doubled"
        assert pipeline.run_tracker.get_summary()["response"] == {"value": 4}

    def test_pipe_two_pipelines(self, context):
        class AddOne(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                return data + 1

        class Double(BaseLogicUnit):
            def execute(self, data, logger, config, context):
                return data * 2

        combined = Pipeline(context, steps=[AddOne()]) | Pipeline(
            context, steps=[Double()]
        )
        assert combined.context is context
        assert combined.run(3) == 8

    def test_pipe_with_non_pipeline(self, context):
        with pytest.raises(PipelineConcatenationError):
            Pipeline(context) | MockLogicUnit()
