import pytest

from swatchlink.exceptions import (
    ForbiddenMoveError,
    IncompatibleBandError,
    KnittingPositionError,
)
from swatchlink.grammar.knitting import (
    LONGITUDE,
    LOOP,
    NEEDLE,
    Band,
    FingerMove,
    LocatedMove,
    band_surgery,
    build_trivial_row,
    build_unknit,
    close_swatch,
    knit_row,
    place_row,
    validate_knitting_position,
)
from swatchlink.invariants.alexander import mva
from swatchlink.topology.dehn_fill import dehn_fill
from swatchlink.topology.reidemeister import MoveType
from swatchlink.topology.tangle import homology_class, trivial_swatch

ROW_BAND = Band(0.3, 0.5, 0.8)
KNIT_ROW_BAND = Band(0.5, 0.12, 0.8)
CLOSING_BAND = Band(0.3, 0.05, 0.95, wraps=True)
KNIT_FINGER = FingerMove(
    column=0.5, width=0.2, stops=((0.25, 0.2), (0.15, 0.2), (0.12, 0.8))
)


@pytest.fixture
def placed():
    return place_row(build_unknit(1), 1)


def filled_mva(tangle):
    return mva(dehn_fill(tangle), cross_check=False)


class TestKnitState:
    def test_unknit(self):
        state = build_unknit(2)
        assert state.component_count == 2
        assert state.needles == (0, 1)
        assert state.pending == ()
        assert state.working is None
        assert [c.kind for c in state.curves] == [NEEDLE, NEEDLE]
        assert state.homology(0) == (0, 0)

    def test_empty_unknit(self):
        assert build_unknit(0).component_count == 0

    def test_placed_row(self, placed):
        assert placed.rows == 1
        assert placed.needles == (0,)
        assert placed.pending == (1,)
        assert placed.working == 2
        assert placed.homology(2) == (0, 1)
        needle_ys = [y for _, y, _ in placed.curves[0].points]
        assert min(needle_ys) == pytest.approx(0.05)
        assert max(needle_ys) == pytest.approx(0.2)
        loop = placed.curves[1].points
        assert {x for x, _, _ in loop} == {0.2, 0.8}
        assert {y for _, y, _ in loop} == {0.8, 0.95}

    def test_trivial_row(self):
        state = build_trivial_row(2)
        assert [c.kind for c in state.curves] == [LOOP, LOOP, LONGITUDE]
        assert state.rows == 1


class TestKnit:
    def test_trivial_row(self, placed):
        state = knit_row(placed, [], [ROW_BAND])
        assert state.pending == ()
        assert state.component_count == 2
        swatch = close_swatch(state, [CLOSING_BAND])
        assert swatch.component_count == 1
        assert homology_class(swatch, 0) == (0, 1)
        assert filled_mva(swatch).equal_up_to_units(filled_mva(trivial_swatch(1)))

    def test_knit_stitch(self, placed, catalog):
        state = knit_row(placed, [KNIT_FINGER], [KNIT_ROW_BAND])
        assert state.pending == ()
        swatch = close_swatch(state, [CLOSING_BAND])
        assert swatch.component_count == 1
        assert homology_class(swatch, 0) == (0, 1)
        value = filled_mva(swatch)
        assert not value.equal_up_to_units(filled_mva(trivial_swatch(1)))
        assert any(
            value.equal_up_to_units(filled_mva(catalog.tile(name))) for name in ("k", "p")
        )

    def test_finger_alone_is_an_isotopy(self, placed):
        state = knit_row(placed, [KNIT_FINGER], [ROW_BAND])
        swatch = close_swatch(state, [CLOSING_BAND])
        assert filled_mva(swatch).equal_up_to_units(filled_mva(trivial_swatch(1)))

    def test_finger_keeps_the_longitude(self, placed):
        state = KNIT_FINGER.apply(placed)
        assert state.working == 2
        assert len(state.curves[2].points) == len(placed.curves[2].points) + 8
        assert state.homology(2) == (0, 1)


class TestTrace:
    def test_knit_finger_passes_under_the_needle(self, placed):
        (move,) = KNIT_FINGER.moves(placed)
        assert isinstance(move, LocatedMove)
        assert move.kind == MoveType.RM2_PLUS
        assert move.curve == 0
        assert not move.over
        assert move.at == pytest.approx((0.4, 0.2))
        assert move.to_dict()["kind"] == "RM2+"

    def test_trace_survives_the_row(self, placed):
        state = knit_row(placed, [KNIT_FINGER], [KNIT_ROW_BAND])
        assert state.trace == KNIT_FINGER.moves(placed)
        assert place_row(state, 1).trace == state.trace

    def test_finger_in_open_space_makes_no_moves(self, placed):
        assert FingerMove(column=0.5, width=0.2, stops=((0.3, 0.2),)).moves(placed) == ()

    def test_moves_leave_the_state_alone(self, placed):
        KNIT_FINGER.moves(placed)
        assert placed.trace == ()


class TestForbiddenMoves:
    @pytest.mark.parametrize(
        "stops",
        [
            ((0.1, 0.45),),
            ((0.9, 0.8),),
            ((1.2, 0.2),),
            ((0.0, 0.2),),
            (),
        ],
    )
    def test_bad_stops(self, placed, stops):
        with pytest.raises(ForbiddenMoveError):
            FingerMove(column=0.5, width=0.2, stops=stops).apply(placed)

    def test_no_longitude(self):
        with pytest.raises(ForbiddenMoveError):
            KNIT_FINGER.apply(build_unknit(1))

    def test_not_the_working_longitude(self, placed):
        with pytest.raises(ForbiddenMoveError):
            FingerMove(column=0.5, width=0.2, stops=((0.3, 0.2),), curve=0).apply(placed)

    def test_no_stretch_to_push(self, placed):
        with pytest.raises(ForbiddenMoveError):
            FingerMove(column=0.95, width=0.2, stops=((0.3, 0.2),)).apply(placed)

    def test_row_without_bands(self, placed):
        with pytest.raises(ForbiddenMoveError):
            knit_row(placed, [], [])

    def test_wrapping_band_in_a_row(self, placed):
        with pytest.raises(ForbiddenMoveError):
            knit_row(placed, [], [CLOSING_BAND])

    def test_band_between_wrong_curves(self, placed):
        with pytest.raises(ForbiddenMoveError):
            knit_row(placed, [], [Band(0.3, 0.1, 0.5)])

    def test_tip_may_not_cross_a_strand(self, placed):
        wide = FingerMove(column=0.5, width=0.7, stops=((0.1, 0.2),))
        with pytest.raises(ForbiddenMoveError, match="tip"):
            wide.apply(placed)

    def test_band_needs_a_height_gap(self, placed):
        level = FingerMove(
            column=0.5, width=0.2, stops=((0.25, 0.2), (0.15, 0.2), (0.12, 0.5))
        )
        with pytest.raises(ForbiddenMoveError, match="without a gap"):
            knit_row(placed, [level], [KNIT_ROW_BAND])

    def test_band_through_a_pending_loop(self):
        state = place_row(build_unknit(1), 2)
        with pytest.raises(ForbiddenMoveError, match="current row"):
            knit_row(state, [], [Band(0.25, 0.5, 0.95)])


class TestKnittingPosition:
    @pytest.fixture
    def knitted(self, placed):
        return knit_row(placed, [], [ROW_BAND])

    def test_valid(self, knitted):
        report = validate_knitting_position(knitted, [CLOSING_BAND])
        assert report.passed
        assert len(list(report.items())) == 3

    def test_band_must_cross_the_boundary(self, knitted):
        with pytest.raises(KnittingPositionError) as info:
            close_swatch(knitted, [Band(0.3, 0.05, 0.95)])
        assert "bullet 2 (boundary)" in str(info.value)
        assert not info.value.report.passed

    def test_overlapping_bands(self, knitted):
        report = validate_knitting_position(knitted, [CLOSING_BAND, CLOSING_BAND])
        assert not report.passed
        assert "overlaps band 1" in report.bands[0].reasons


class TestBandSurgery:
    def test_joins_loop_and_longitude(self, placed):
        state = band_surgery(placed, ROW_BAND)
        assert state.component_count == 2
        assert state.curves[1].kind == LONGITUDE
        assert state.homology(1) == (0, 1)

    def test_no_segment(self, placed):
        with pytest.raises(IncompatibleBandError):
            band_surgery(placed, Band(0.3, 0.5, 0.6))

    def test_same_curve(self, placed):
        with pytest.raises(IncompatibleBandError):
            band_surgery(placed, Band(0.5, 0.05, 0.2))
