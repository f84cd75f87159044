import json

import pytest
from click.testing import CliRunner

from swatchlink.cli import cli
from swatchlink.invariants.checks import CheckReport
from swatchlink.invariants.properties import PropertiesReport
from swatchlink.pipelines.verify.verify_results import VerifyResults
from swatchlink.simplifier.search import BrunnianReport
from swatchlink.topology.codes import export_code, import_code


@pytest.fixture
def runner():
    return CliRunner()


class TestErrors:
    @pytest.mark.parametrize(
        "args, code, kind",
        [
            (["invariants", "--pattern", "k*"], 2, "pattern-syntax"),
            (["invariants", "--pattern", "zz"], 2, "unknown-primitive"),
            (["invariants", "--pattern", "kslip"], 1, "profile-mismatch"),
            (["table", "--columns", "nope"], 2, "unknown-column"),
            (
                ["simplify", "--pattern", "e", "--budget-nodes", "-1"],
                2,
                "invalid-config",
            ),
        ],
    )
    def test_error_line(self, runner, args, code, kind):
        result = runner.invoke(cli, args)
        assert result.exit_code == code
        assert f"error: {kind}: " in result.output

    def test_missing_option_is_a_usage_error(self, runner):
        result = runner.invoke(cli, ["invariants"])
        assert result.exit_code == 2


class TestCommands:
    def test_catalog(self, runner):
        result = runner.invoke(cli, ["catalog", "--format", "json"])
        assert result.exit_code == 0
        entries = {e["name"]: e for e in json.loads(result.output)}
        assert entries["k"]["status"] == "table-backed"
        assert entries["brunnian"]["fixture"] is True

    def test_invariants(self, runner):
        result = runner.invoke(
            cli,
            ["invariants", "--pattern", "k", "--invariants", "det", "--format", "json"],
        )
        assert result.exit_code == 0
        (report,) = json.loads(result.output)
        assert report["name"] == "k"
        assert report["det"] == {"table": 4, "paper": 2}
        assert report["jones"] is None

    def test_table_csv(self, runner):
        result = runner.invoke(cli, ["table", "--columns", "k", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "invariant,k"
        assert "det,4" in lines

    def test_verify(self, runner, mocker):
        results = VerifyResults()
        results.add("torres", [CheckReport(name="torres(e, 0)", holds=True)])
        pipeline = mocker.patch("swatchlink.cli.VerifyPipeline")
        pipeline.return_value.run.return_value = results
        result = runner.invoke(cli, ["verify", "--tiles", "e", "--fuzz-cases", "0"])
        assert result.exit_code == 0
        assert "PASS torres: torres(e, 0)" in result.output
        context = pipeline.call_args.args[0]
        assert context.config.tiles == ["e"]
        assert context.config.fuzz_cases == 0

    def test_verify_failure(self, runner, mocker):
        results = VerifyResults()
        results.add("cyclic", [CheckReport(name="cyclic-mva(kkpp, pkkp)", holds=False)])
        pipeline = mocker.patch("swatchlink.cli.VerifyPipeline")
        pipeline.return_value.run.return_value = results
        result = runner.invoke(cli, ["verify", "--format", "json"])
        assert result.exit_code == 1
        assert json.loads(result.output)["suites"]["cyclic"][0]["holds"] is False

    def test_export_import_replay(self, runner, tmp_path):
        pd_file = tmp_path / "k.pd"
        result = runner.invoke(
            cli, ["export", "--pattern", "k", "--export", "pd", "--out", str(pd_file)]
        )
        assert result.exit_code == 0

        result = runner.invoke(
            cli,
            ["import", str(pd_file), "--from", "pd", "--invariants", "det",
             "--format", "json"],
        )
        assert result.exit_code == 0
        assert json.loads(result.output)[0]["det"]["table"] == 4

        trace = tmp_path / "trace.json"
        trace.write_text("[]")
        result = runner.invoke(cli, ["replay", str(pd_file), str(trace)])
        assert result.exit_code == 0
        text = pd_file.read_text().strip()
        assert result.output.strip() == export_code(import_code(text, "pd"), "pd")

    def test_tangle_json_needs_a_tangle(self, runner, tmp_path):
        pd_file = tmp_path / "e.pd"
        runner.invoke(
            cli, ["export", "--pattern", "e", "--export", "pd", "--out", str(pd_file)]
        )
        result = runner.invoke(
            cli, ["import", str(pd_file), "--from", "pd", "--export", "tangle-json"]
        )
        assert result.exit_code == 2
        assert "error: format-not-applicable: " in result.output

    def test_simplify(self, runner, tmp_path):
        trace = tmp_path / "trace.json"
        result = runner.invoke(
            cli,
            ["simplify", "--pattern", "e", "--budget-nodes", "20",
             "--trace", str(trace)],
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["pattern"] == "e"
        assert data["crossings"] <= data["start_crossings"]
        assert isinstance(json.loads(trace.read_text()), list)

    def test_properties(self, runner, mocker):
        report = PropertiesReport(
            name="e",
            items=[
                CheckReport(name="item 1: closed components", holds=True),
                CheckReport(name="item 4: split consistent", holds=False),
            ],
        )
        mocker.patch(
            "swatchlink.cli.swatch_properties_report", return_value=report
        )
        result = runner.invoke(cli, ["properties", "--pattern", "e"])
        assert result.exit_code == 1
        assert "item 4: split consistent" in result.output

    def test_brunnian(self, runner, mocker):
        check = mocker.patch(
            "swatchlink.cli.brunnian_check",
            return_value=BrunnianReport(verdict="brunnian", statuses=["yes", "yes"]),
        )
        result = runner.invoke(cli, ["brunnian", "--pattern", "brunnian"])
        assert result.exit_code == 0
        assert json.loads(result.output)["verdict"] == "brunnian"
        assert check.call_args.args[0].name == "brunnian"
