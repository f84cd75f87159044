import numpy as np
import pytest

from swatchlink.grammar.reference import ReferenceTables
from swatchlink.pipelines.verify.conjecture_checks import (
    DISPLAYED_PAIR,
    ConjectureChecks,
    checked_pairs,
)
from swatchlink.pipelines.verify.cyclic_checks import CyclicChecks
from swatchlink.pipelines.verify.determinant_checks import DeterminantChecks
from swatchlink.pipelines.verify.reference_checks import ReferenceChecks
from swatchlink.pipelines.verify.reidemeister_fuzz import (
    ReidemeisterFuzz,
    random_moves,
)
from swatchlink.pipelines.verify.torres_checks import TorresChecks
from swatchlink.schemas.run_config import RunConfig
from swatchlink.topology.standard import right_trefoil


def run_step(step, results, context, logger):
    return step.execute(results, logger=logger, config=context.config, context=context)


class TestProductSuites:
    @pytest.fixture
    def context(self, make_context):
        return make_context(tiles=["k", "p"])

    def test_checked_pairs(self, context, validated):
        validated(context)
        assert checked_pairs(context) == [
            ("k", "k"),
            ("k", "p"),
            ("p", "p"),
            DISPLAYED_PAIR,
        ]

    def test_conjecture(self, context, validated, logger):
        results = validated(context)
        output = run_step(ConjectureChecks(), results, context, logger)
        reports = results.suites["conjecture"]
        assert [r.name for r in reports] == [
            "mva-product((k)(k))",
            "mva-product((k)(p))",
            "mva-product((p)(p))",
            "mva-product((p*lp)(k*lp))",
        ]
        assert all(r.holds for r in reports)
        assert output.metadata == {"checks": 4, "failed": 0}

    def test_determinant_identity(self, context, validated, logger):
        results = validated(context)
        run_step(DeterminantChecks(), results, context, logger)
        reports = results.suites["determinant"]
        assert len(reports) == 4
        assert all(r.holds for r in reports)
        assert len(results.notes) == len(context.get("longitudinal_pairs"))
        assert results.notes[0].name == "det-product((k)*l(k))"

    def test_torres(self, make_context, validated, logger):
        context = make_context(tiles=["k"])
        results = validated(context)
        run_step(TorresChecks(), results, context, logger)
        reports = results.suites["torres"]
        assert [r.name for r in reports] == [
            "torres(k, 0)",
            "torres(k, 1)",
            "torres(k, 2)",
        ]
        assert all(r.holds for r in reports)

    def test_cyclic(self, context, validated, logger):
        results = validated(context)
        run_step(CyclicChecks(), results, context, logger)
        reports = results.suites["cyclic"]
        assert len(reports) == 10
        assert reports[-1].name == "equal-mva(kkpp, kpkp)"
        assert all(r.holds for r in reports)


class TestReidemeisterFuzz:
    def test_random_moves_are_seeded(self):
        first, moves = random_moves(right_trefoil(), 5, np.random.default_rng(7))
        again, same = random_moves(right_trefoil(), 5, np.random.default_rng(7))
        assert moves == same
        assert first == again

    def test_invariants_survive(self, make_context, validated, logger):
        context = make_context(tiles=["e"], fuzz_cases=12, fuzz_moves=3, seed=11)
        results = validated(context)
        output = run_step(ReidemeisterFuzz(), results, context, logger)
        reports = results.suites["fuzz"]
        assert [r.name for r in reports] == [
            "reidemeister-invariance(hopf)",
            "reidemeister-invariance(right_trefoil)",
            "reidemeister-invariance(figure_eight)",
            "reidemeister-invariance(filled(e))",
        ]
        assert [r.details["cases"] for r in reports] == ["3", "3", "3", "3"]
        assert all(r.holds for r in reports)
        assert output.message == "12 fuzz cases on 4 diagrams"

    def test_default_run_holds(self, make_context, validated, logger):
        defaults = RunConfig()
        context = make_context(tiles=["e"], fuzz_cases=defaults.fuzz_cases)
        results = validated(context)
        output = run_step(ReidemeisterFuzz(), results, context, logger)
        reports = results.suites["fuzz"]
        assert sum(int(r.details["cases"]) for r in reports) == 1000
        assert [r.details["failed-cases"] for r in reports] == ["", "", "", ""]
        assert output.metadata == {"checks": 4, "failed": 0}

    def test_non_planar_result_fails(self, make_context, validated, logger, mocker):
        mocker.patch(
            "swatchlink.pipelines.verify.reidemeister_fuzz.euler_check",
            return_value=False,
        )
        context = make_context(tiles=["e"], fuzz_cases=4, fuzz_moves=2, seed=3)
        results = validated(context)
        run_step(ReidemeisterFuzz(), results, context, logger)
        assert not any(r.holds for r in results.suites["fuzz"])
        messages = [entry["msg"] for entry in logger.logs]
        assert any("stopped being planar" in m for m in messages)


class TestReferenceChecks:
    def test_knit_column(self, make_context, validated, logger, tables, mocker):
        mocker.patch.object(
            ReferenceTables,
            "load",
            return_value=ReferenceTables([tables.column("k")]),
        )
        context = make_context(tiles=["k"])
        results = validated(context)
        output = run_step(ReferenceChecks(), results, context, logger)
        reports = results.suites["tables"]
        assert [r.name for r in reports] == [
            "table-mva(k)",
            "table-det(k)",
            "table-jones(k)",
        ]
        assert all(r.holds for r in reports)
        assert output.metadata["convention"] in ("standard", "mirror")

    def test_unbuildable_column(self, make_context, validated, logger, tables, mocker):
        broken = tables.column("k").copy(update={"name": "broken", "pattern": "kslip"})
        mocker.patch.object(
            ReferenceTables, "load", return_value=ReferenceTables([broken])
        )
        context = make_context(tiles=["k"], jones_convention="standard")
        results = validated(context)
        run_step(ReferenceChecks(), results, context, logger)
        (report,) = results.suites["tables"]
        assert report.name == "table-build(broken)"
        assert not report.holds
        assert report.details["error"].startswith("profile-mismatch: ")
