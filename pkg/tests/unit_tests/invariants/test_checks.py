import pytest

from swatchlink.algebra.polytext import parse_polynomial
from swatchlink.invariants.checks import (
    CheckReport,
    brunnian_mva_form,
    conjecture_mva_check,
    determinant_identity,
    determinant_pair,
    failed,
    multiplicity,
    split_evidence,
    torres_check,
)
from swatchlink.topology.dehn_fill import dehn_fill
from swatchlink.topology.standard import borromean, hopf, left_trefoil, unlink
from swatchlink.topology.tangle import trivial_swatch

THREE = ("t1", "t2", "t3")


def t3(text):
    return parse_polynomial(text, THREE)


class TestTorresCheck:
    @pytest.mark.parametrize("component", [0, 1])
    def test_hopf(self, component):
        report = torres_check(hopf(), component)
        assert report.holds
        assert report.name == f"torres({component})"

    @pytest.mark.parametrize("component", [0, 1, 2])
    def test_borromean(self, component):
        report = torres_check(borromean(), component)
        assert report.holds
        assert report.details["left"] == "0"

    def test_filled_trivial_swatch(self):
        report = torres_check(dehn_fill(trivial_swatch(1)), 2)
        assert report.holds


class TestMultiplicity:
    def test_powers(self):
        value = t3("(t1 - 1)^3*(t2 + 1)")
        assert multiplicity(value, t3("t1 - 1")) == 3
        assert multiplicity(value, t3("t2 - 1")) == 0

    def test_zero(self):
        assert multiplicity(t3("0"), t3("t1 - 1")) == 0


class TestBrunnianForm:
    def test_filled_trivial_swatch(self):
        report = brunnian_mva_form(dehn_fill(trivial_swatch(1)))
        assert report.holds
        assert report.details["t1-multiplicity"] == "1"

    def test_cofactor_must_collapse_to_a_unit(self):
        report = brunnian_mva_form(None, t3("(1 - t1)*(t2 + t3)"))
        assert not report.holds
        assert report.details["at-swatch-ones"] == "t2 + 1"

    def test_not_enough_powers_of_t1(self):
        report = brunnian_mva_form(None, t3("t2 + t3"))
        assert not report.holds
        assert report.details["t1-multiplicity"] == "0"

    def test_vanishing(self):
        report = brunnian_mva_form(None, t3("0"))
        assert not report.holds
        assert report.details["reason"] == "vanishing MVA"


class TestConjectureMvaCheck:
    def test_holds(self):
        factors = [t3("(t1 - 1)*(t2 + 1)"), t3("t3 + 2")]
        report = conjecture_mva_check(t3("(t2 + 1)*(t3 + 2)"), factors, 1)
        assert report.holds
        assert report.details["witness"] == "t1 - 1"

    def test_holds_up_to_units(self):
        factors = [t3("(t1 - 1)*(t2 + 1)"), t3("t3 + 2")]
        report = conjecture_mva_check(t3("-t1^2*(t2 + 1)*(t3 + 2)"), factors, 1)
        assert report.holds

    def test_fails(self):
        factors = [t3("(t1 - 1)*(t2 + 1)"), t3("t3 + 2")]
        report = conjecture_mva_check(t3("t2 + t3"), factors, 1)
        assert not report.holds
        assert report.details["witness"] == "inexact"

    def test_zero_product(self):
        report = conjecture_mva_check(t3("0"), [t3("t2"), t3("t3")], 1)
        assert not report.holds
        assert "witness" not in report.details


class TestDeterminantIdentity:
    def test_one_component(self):
        report = determinant_identity(4, [4, 4], 1)
        assert report.holds
        assert report.details == {"left": "2^2 * 4", "right": "4 * 4"}

    def test_two_components(self):
        assert determinant_identity(1, [2, 4], 2).holds

    def test_three_factors(self):
        assert determinant_identity(4, [4, 4, 4], 1).holds

    def test_fails(self):
        assert not determinant_identity(4, [4, 36], 1).holds


class TestSplitEvidence:
    def test_unlink(self):
        report = split_evidence(unlink(2))
        assert not report.holds
        assert report.details["verdict"] == "split-consistent"
        assert report.details["bipartition"] == "[0]|[1]"

    def test_hopf(self):
        report = split_evidence(hopf())
        assert report.holds
        assert report.details == {"verdict": "nonsplit-evidence", "certificate": "mva"}

    def test_borromean(self):
        assert split_evidence(borromean()).details["certificate"] == "mva"

    def test_knot(self):
        report = split_evidence(left_trefoil())
        assert report.details["verdict"] == "not-applicable"


class TestHelpers:
    def test_determinant_pair(self):
        assert determinant_pair(parse_polynomial("1", ("t1", "t2"))) == {
            "table": 2,
            "paper": 1,
        }

    def test_failed(self):
        reports = [
            CheckReport(name="a", holds=True),
            CheckReport(name="b", holds=False),
        ]
        assert [r.name for r in failed(reports)] == ["b"]
