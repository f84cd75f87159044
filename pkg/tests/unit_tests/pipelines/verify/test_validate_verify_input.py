import pytest

from swatchlink.exceptions import UnknownPrimitiveError
from swatchlink.pipelines.logic_unit_output import LogicUnitOutput
from swatchlink.pipelines.verify.validate_verify_input import (
    ValidateVerifyInput,
    pair_pattern,
)
from swatchlink.pipelines.verify.verify_results import VerifyResults


class TestValidateVerifyInput:
    def test_pair_pattern(self):
        assert pair_pattern("k", "p") == "(k)(p)"
        assert pair_pattern("k", "p", longitudinal=True) == "(k)*l(p)"

    def test_all_tiles_by_default(self, make_context, logger, catalog):
        context = make_context()
        output = ValidateVerifyInput().execute(
            None, logger=logger, config=context.config, context=context
        )
        assert isinstance(output, LogicUnitOutput)
        assert output.success
        assert context.get("tiles") == catalog.tiles()
        assert isinstance(output.output, VerifyResults)

    def test_pairs_and_skipped(self, make_context, logger):
        context = make_context(tiles=["k", "slip"])
        results = VerifyResults()
        output = ValidateVerifyInput().execute(
            results, logger=logger, config=context.config, context=context
        )
        assert output.output is results
        assert ("k", "k") in context.get("meridional_pairs")
        assert ("k", "slip") not in context.get("meridional_pairs")
        assert "(k)(slip)" in output.metadata["skipped"]
        assert ("k", "k") in context.get("longitudinal_pairs")
        assert any(
            entry["msg"].startswith("Verifying 2 tiles") for entry in logger.logs
        )

    def test_unknown_tile(self, make_context, logger):
        context = make_context(tiles=["k", "zz"])
        with pytest.raises(UnknownPrimitiveError):
            ValidateVerifyInput().execute(
                None, logger=logger, config=context.config, context=context
            )
