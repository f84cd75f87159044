from unittest.mock import Mock

import pytest

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.algebra.polytext import parse_polynomial
from swatchlink.exceptions import SwatchlinkError
from swatchlink.invariants.bracket import bracket, bracket_state_sum, crossing_order
from swatchlink.invariants.jones import (
    compare_jones,
    jones,
    mirror_variable,
    resolve_convention,
    to_table_variable,
    with_convention,
)
from swatchlink.topology.diagram import PlanarDiagram, mirror
from swatchlink.topology.reidemeister import (
    apply_reidemeister,
    rm1_plus_moves,
    rm2_plus_moves,
)
from swatchlink.topology.standard import (
    STANDARD_DIAGRAMS,
    borromean,
    figure_eight,
    hopf,
    left_trefoil,
    right_trefoil,
    unknot,
    unlink,
)


def q(text):
    return parse_polynomial(text, ("q",))


class TestJonesValues:
    @pytest.mark.parametrize(
        "diagram,expected",
        [
            (unknot(), "1"),
            (unlink(2), "q + q^-1"),
            (hopf(), "q + q^5"),
            (hopf(-1), "q^-1 + q^-5"),
            (right_trefoil(), "q^2 + q^6 - q^8"),
            (left_trefoil(), "q^-2 + q^-6 - q^-8"),
            (figure_eight(), "q^-4 - q^-2 + 1 - q^2 + q^4"),
            (borromean(), "-q^6 + 3q^4 - 2q^2 + 4 - 2q^-2 + 3q^-4 - q^-6"),
        ],
    )
    def test_values(self, diagram, expected):
        assert jones(diagram) == q(expected)

    @pytest.mark.parametrize("name", sorted(STANDARD_DIAGRAMS))
    def test_value_at_one(self, name):
        diagram = STANDARD_DIAGRAMS[name]()
        assert jones(diagram).evaluate([1]) == 2 ** (diagram.component_count - 1)

    @pytest.mark.parametrize("name", sorted(STANDARD_DIAGRAMS))
    def test_mirror(self, name):
        diagram = STANDARD_DIAGRAMS[name]()
        assert jones(mirror(diagram)) == mirror_variable(jones(diagram))

    def test_amphichiral(self):
        assert jones(figure_eight()) == mirror_variable(jones(figure_eight()))
        assert jones(borromean()) == mirror_variable(jones(borromean()))

    def test_empty_diagram(self):
        assert bracket(PlanarDiagram()) == q("1")


class TestStateSumOracle:
    @pytest.mark.parametrize("name", sorted(STANDARD_DIAGRAMS))
    def test_sweep_matches_state_sum(self, name):
        diagram = STANDARD_DIAGRAMS[name]()
        assert bracket(diagram) == bracket_state_sum(diagram)
        assert jones(diagram, oracle=True) == jones(diagram)

    def test_after_increasing_moves(self):
        diagram = figure_eight()
        diagram = apply_reidemeister(diagram, next(rm2_plus_moves(diagram)))
        diagram = apply_reidemeister(diagram, next(rm1_plus_moves(diagram)))
        assert diagram.crossing_count == 7
        assert bracket(diagram) == bracket_state_sum(diagram)
        assert jones(diagram) == jones(figure_eight())

    def test_state_sum_limit(self):
        with pytest.raises(SwatchlinkError):
            bracket_state_sum(figure_eight(), limit=3)

    def test_crossing_order_is_a_permutation(self):
        diagram = borromean()
        assert sorted(crossing_order(diagram)) == list(range(diagram.crossing_count))


class TestTableConventions:
    def test_to_table_variable(self):
        assert to_table_variable(jones(right_trefoil())) == q("q + q^3 - q^4")
        assert to_table_variable(jones(hopf())) == q("1 + q^2")
        assert to_table_variable(MultiLaurent.zero(("q",))).is_zero

    def test_with_convention(self):
        value = jones(right_trefoil())
        assert with_convention(value, "mirror") == q("q^-1 + q^-3 - q^-4")

    def test_mirror_before_dropping_the_half_power(self):
        assert with_convention(jones(hopf()), "standard") == q("1 + q^2")
        assert with_convention(jones(hopf()), "mirror") == q("q^-1 + q^-3")
        assert with_convention(jones(hopf(-1)), "mirror") == q("1 + q^2")

    def test_compare_exact(self):
        match = compare_jones(jones(right_trefoil()), q("q + q^3 - q^4"))
        assert match.matched
        assert (match.convention, match.match) == ("standard", "exact")

    def test_compare_mirror(self):
        match = compare_jones(jones(left_trefoil()), q("q + q^3 - q^4"))
        assert (match.convention, match.match) == ("mirror", "exact")

    def test_compare_up_to_units(self):
        match = compare_jones(jones(right_trefoil()), q("-q^3 - q^5 + q^6"))
        assert (match.convention, match.match) == ("standard", "up-to-units")

    def test_compare_scaled(self):
        match = compare_jones(jones(right_trefoil()), q("2q + 2q^3 - 2q^4"), scale=2)
        assert match.match == "exact"
        assert match.scale == 2

    def test_mismatch(self):
        match = compare_jones(jones(figure_eight()), q("q + q^3 - q^4"))
        assert not match.matched
        assert match.convention is None


class TestResolveConvention:
    def test_explicit(self):
        assert resolve_convention("mirror") == "mirror"

    def test_auto_uses_the_given_calibration(self):
        calibrate = Mock(return_value="mirror")
        assert resolve_convention("auto", calibrate) == "mirror"
        calibrate.assert_called_once()

    def test_calibrations_do_not_leak_between_callers(self):
        assert resolve_convention("auto", Mock(return_value="mirror")) == "mirror"
        assert resolve_convention("auto", Mock(return_value=None)) == "standard"
        assert resolve_convention("auto") == "standard"

    def test_auto_without_match(self):
        assert resolve_convention("auto", lambda: None) == "standard"

    def test_auto_without_calibration(self):
        assert resolve_convention("auto") == "standard"
