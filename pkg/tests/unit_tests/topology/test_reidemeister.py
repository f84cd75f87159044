import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swatchlink.exceptions import ComponentIndexError, MoveNotApplicableError
from swatchlink.invariants.jones import jones
from swatchlink.invariants.linking import linking_matrix
from swatchlink.pipelines.verify.reidemeister_fuzz import random_moves
from swatchlink.topology.diagram import canonical_key, validate_diagram
from swatchlink.topology.reidemeister import (
    RM1_VARIANTS,
    MoveType,
    ReidemeisterMove,
    apply_reidemeister,
    inverse_move,
    reducing_moves,
    replay_moves,
    rm1_plus_moves,
    rm2_plus_moves,
    rm3_moves,
)
from swatchlink.topology.standard import (
    figure_eight,
    hopf,
    left_trefoil,
    unknot,
    unlink,
)


def undo(before, move):
    after = apply_reidemeister(before, move)
    return after, apply_reidemeister(after, inverse_move(before, move))


class TestIncreasingMoves:
    @pytest.mark.parametrize("variant", RM1_VARIANTS)
    def test_rm1_plus_on_arc(self, variant):
        before = left_trefoil()
        move = ReidemeisterMove(MoveType.RM1_PLUS, arcs=(1,), variant=variant)
        after, restored = undo(before, move)
        assert validate_diagram(after).valid
        assert after.crossing_count == 4
        assert abs(after.writhe() - before.writhe()) == 1
        assert restored == before

    @pytest.mark.parametrize("variant", RM1_VARIANTS)
    def test_rm1_plus_on_free_loop(self, variant):
        move = ReidemeisterMove(MoveType.RM1_PLUS, components=(0,), variant=variant)
        after, restored = undo(unknot(), move)
        assert validate_diagram(after).valid
        assert after.crossing_count == 1
        assert restored == unknot()

    def test_rm2_plus_everywhere(self):
        before = left_trefoil()
        moves = list(rm2_plus_moves(before))
        assert moves
        for move in moves:
            after, restored = undo(before, move)
            assert validate_diagram(after).valid
            assert after.crossing_count == 5
            assert canonical_key(restored) == canonical_key(before)

    def test_rm2_plus_between_free_loops(self):
        move = ReidemeisterMove(MoveType.RM2_PLUS, components=(0, 1), over=True)
        after = apply_reidemeister(unlink(2), move)
        assert validate_diagram(after).valid
        assert after.crossing_count == 2
        assert jones(after) == jones(unlink(2))

    def test_jones_is_invariant(self):
        before = figure_eight()
        value = jones(before)
        for move in list(rm1_plus_moves(before))[:8] + list(rm2_plus_moves(before))[:8]:
            assert jones(apply_reidemeister(before, move)) == value


class TestReducingMoves:
    def test_alternating_diagrams_are_reduced(self):
        assert list(reducing_moves(left_trefoil())) == []
        assert list(reducing_moves(hopf())) == []

    def test_reducing_moves_find_new_bigon(self):
        before = left_trefoil()
        move = next(rm2_plus_moves(before))
        after = apply_reidemeister(before, move)
        found = list(reducing_moves(after))
        assert ReidemeisterMove(MoveType.RM2_MINUS, crossings=(3, 4)) in found

    def test_reducing_moves_find_kink(self):
        move = ReidemeisterMove(MoveType.RM1_PLUS, arcs=(2,), variant="B1")
        after = apply_reidemeister(left_trefoil(), move)
        assert ReidemeisterMove(MoveType.RM1_MINUS, crossings=(3,)) in list(
            reducing_moves(after)
        )

    def test_rm3_is_an_involution(self):
        before = left_trefoil()
        for grow in rm2_plus_moves(before):
            grown = apply_reidemeister(before, grow)
            for move in rm3_moves(grown):
                after, restored = undo(grown, move)
                assert validate_diagram(after).valid
                assert jones(after) == jones(grown)
                assert canonical_key(restored) == canonical_key(grown)


class TestMoveErrors:
    def test_rm1_minus_needs_kink(self):
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                left_trefoil(), ReidemeisterMove(MoveType.RM1_MINUS, crossings=(0,))
            )
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                left_trefoil(), ReidemeisterMove(MoveType.RM1_MINUS, crossings=(9,))
            )

    def test_rm2_minus_needs_bigon(self):
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                left_trefoil(), ReidemeisterMove(MoveType.RM2_MINUS, crossings=(0, 1))
            )

    def test_rm1_plus_variant(self):
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                left_trefoil(),
                ReidemeisterMove(MoveType.RM1_PLUS, arcs=(1,), variant="C3"),
            )

    def test_rm2_plus_arguments(self):
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                left_trefoil(), ReidemeisterMove(MoveType.RM2_PLUS, arcs=(1, 2))
            )
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                left_trefoil(),
                ReidemeisterMove(MoveType.RM2_PLUS, arcs=(1, 2), face=(99,), over=True),
            )
        with pytest.raises(ComponentIndexError):
            apply_reidemeister(
                unknot(),
                ReidemeisterMove(MoveType.RM2_PLUS, components=(0, 3), over=False),
            )

    def test_free_loop_required(self):
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                hopf(),
                ReidemeisterMove(MoveType.RM1_PLUS, components=(0,), variant="A1"),
            )

    def test_rm3_needs_triangle(self):
        with pytest.raises(MoveNotApplicableError):
            apply_reidemeister(
                hopf(), ReidemeisterMove(MoveType.RM3, crossings=(0, 1))
            )


class TestMoveRecords:
    def test_inverse_move(self):
        before = left_trefoil()
        rm1 = ReidemeisterMove(MoveType.RM1_PLUS, arcs=(1,), variant="A1")
        rm2 = ReidemeisterMove(MoveType.RM2_PLUS, arcs=(1, 4), face=(1, 4), over=True)
        rm3 = ReidemeisterMove(MoveType.RM3, crossings=(0, 1, 2))
        assert inverse_move(before, rm1) == ReidemeisterMove(
            MoveType.RM1_MINUS, crossings=(3,)
        )
        assert inverse_move(before, rm2) == ReidemeisterMove(
            MoveType.RM2_MINUS, crossings=(3, 4)
        )
        assert inverse_move(before, rm3) == rm3
        assert inverse_move(before, ReidemeisterMove(MoveType.RM1_MINUS)) is None

    def test_dict_form(self):
        move = ReidemeisterMove(MoveType.RM2_PLUS, arcs=(1, 4), face=(1, 4), over=True)
        data = move.to_dict()
        assert data["kind"] == "RM2+"
        assert data["arcs"] == [1, 4]
        assert ReidemeisterMove.from_dict(data) == move
        assert str(move) == "RM2+@[1, 4]"

    def test_replay(self):
        before = left_trefoil()
        first = ReidemeisterMove(MoveType.RM1_PLUS, arcs=(1,), variant="A2")
        second = inverse_move(before, first)
        assert replay_moves(before, [first, second]) == before
        assert replay_moves(before, []) == before


class TestRandomSequences:
    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 6))
    def test_invariants_survive(self, seed, count):
        before = figure_eight()
        after, applied = random_moves(before, count, np.random.default_rng(seed))
        assert validate_diagram(after).valid
        assert jones(after) == jones(before)
        assert linking_matrix(after).signed == linking_matrix(before).signed
        assert len(applied) <= count
