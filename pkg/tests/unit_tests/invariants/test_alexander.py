import pytest

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.algebra.polytext import parse_polynomial
from swatchlink.helpers.logger import Logger
from swatchlink.invariants.alexander import (
    alexander_matrix,
    alexander_polynomial,
    deleted_column_minors,
    mva,
)
from swatchlink.invariants.wirtinger import wirtinger
from swatchlink.topology.diagram import PlanarDiagram, mirror, split_union
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


def t(text, count=1):
    return parse_polynomial(text, tuple(f"t{i + 1}" for i in range(count)))


class TestAlexanderMatrix:
    @pytest.mark.parametrize("name", sorted(STANDARD_DIAGRAMS))
    def test_identities(self, name):
        diagram = STANDARD_DIAGRAMS[name]()
        matrix = alexander_matrix(wirtinger(diagram))
        assert matrix.row_sums_vanish()
        assert matrix.fundamental_identity()

    def test_shape(self):
        matrix = alexander_matrix(wirtinger(left_trefoil()))
        assert matrix.shape == (3, 3)
        assert matrix.variables == ("t1",)
        assert matrix.column_variable(2) == "t1"

    def test_link_columns(self):
        matrix = alexander_matrix(wirtinger(hopf()))
        assert sorted(matrix.column_variable(c) for c in range(2)) == ["t1", "t2"]


class TestMva:
    @pytest.mark.parametrize(
        "diagram,expected",
        [
            (left_trefoil(), "t1^2 - t1 + 1"),
            (right_trefoil(), "t1^2 - t1 + 1"),
            (figure_eight(), "t1^2 - 3*t1 + 1"),
            (unknot(), "1"),
        ],
    )
    def test_knots(self, diagram, expected):
        assert mva(diagram) == t(expected)

    def test_hopf(self):
        assert mva(hopf()) == t("1", 2)
        assert mva(hopf(-1)) == t("1", 2)

    def test_split_links_vanish(self):
        assert mva(unlink(2)).is_zero
        assert mva(split_union(hopf(), unknot())).is_zero
        assert mva(split_union(left_trefoil(), left_trefoil())).is_zero

    def test_borromean(self):
        value = mva(borromean())
        assert value.variables == ("t1", "t2", "t3")
        assert value.equal_up_to_units(t("(t1 - 1)*(t2 - 1)*(t3 - 1)", 3))

    def test_mirror_is_unchanged_for_knots(self):
        assert mva(mirror(figure_eight())) == mva(figure_eight())

    def test_empty_diagram(self):
        assert mva(PlanarDiagram()) == MultiLaurent.one(())

    def test_logs(self):
        logger = Logger(save_logs=False, verbose=False)
        mva(hopf(), logger=logger)
        assert logger.logs[-1]["msg"] == "MVA of a 2-component diagram with 2 crossings"

    @pytest.mark.parametrize("name", ["left_trefoil", "figure_eight", "hopf", "borromean"])
    def test_deleted_columns_agree(self, name):
        minors = deleted_column_minors(STANDARD_DIAGRAMS[name]())
        assert len(set(minors)) == 1


class TestAlexanderPolynomial:
    def test_knot(self):
        assert alexander_polynomial(left_trefoil()) == parse_polynomial(
            "t^2 - t + 1", ("t",)
        )

    def test_hopf(self):
        assert alexander_polynomial(hopf()) == parse_polynomial("t - 1", ("t",))

    def test_split(self):
        assert alexander_polynomial(unlink(2)).is_zero
