import pytest

from swatchlink.pipelines.pipeline_context import PipelineContext
from swatchlink.pipelines.verify.validate_verify_input import ValidateVerifyInput
from swatchlink.pipelines.verify.verify_results import VerifyResults


@pytest.fixture
def make_context(catalog):
    def make(**config) -> PipelineContext:
        config.setdefault("fuzz_cases", 0)
        return PipelineContext(config, catalog=catalog)

    return make


@pytest.fixture
def validated(logger):
    """Runs the input step so that later steps find tiles and pairs"""

    def run(context: PipelineContext) -> VerifyResults:
        output = ValidateVerifyInput().execute(
            None, logger=logger, config=context.config, context=context
        )
        return output.output

    return run
