import numpy as np
import pytest

from swatchlink.exceptions import ComponentIndexError
from swatchlink.invariants.linking import linking_contract, linking_number
from swatchlink.topology.dehn_fill import (
    component_curve,
    dehn_fill,
    fill_curves,
    longitude_curve,
    meridian_curve,
)
from swatchlink.topology.diagram import (
    LONGITUDE_AXIS,
    MERIDIAN_AXIS,
    swatch_role,
    validate_diagram,
)
from swatchlink.topology.tangle import TorusTangle, trivial_swatch


class TestDehnFill:
    @pytest.fixture
    def row(self):
        return trivial_swatch(1)

    def test_roles(self, row):
        filled = dehn_fill(row)
        assert filled.roles == (MERIDIAN_AXIS, LONGITUDE_AXIS, swatch_role(0))
        assert filled.component_count == 3

    def test_filled_diagram_is_valid(self, row):
        assert validate_diagram(dehn_fill(row)).valid

    @pytest.mark.parametrize("components", [1, 2])
    def test_linking_contract(self, components):
        assert linking_contract(dehn_fill(trivial_swatch(components))) == []

    def test_axes_are_oriented(self, row):
        filled = dehn_fill(row)
        assert linking_number(filled, 0, 1) == -1
        assert linking_number(filled, 0, 2) == 1
        assert linking_number(filled, 1, 2) == 0

    def test_back_face(self, row):
        back = dehn_fill(row, fabric_face="back")
        assert back.component_count == 3
        assert linking_contract(back) == []

    def test_closed_loop_stays_unlinked(self):
        loop = [(0.3, 0.3, 0.5), (0.6, 0.3, 0.5), (0.6, 0.6, 0.5), (0.3, 0.3, 0.5)]
        tangle = TorusTangle.from_pieces([[(0, 0.8, 0.5), (1, 0.8, 0.5)], loop])
        filled = dehn_fill(tangle)
        assert filled.component_count == 4
        assert linking_number(filled, 0, 3) == 0
        assert linking_number(filled, 2, 3) == 0


class TestFillCurves:
    def test_axes(self):
        assert meridian_curve().shape == (4, 3)
        longitude = longitude_curve()
        assert longitude.shape[1] == 3
        assert np.allclose(longitude[:, 2], 0)

    def test_curves_per_component(self):
        curves = fill_curves(trivial_swatch(2))
        assert len(curves) == 4
        assert all(curve.shape[1] == 3 for curve in curves)

    def test_row_stays_above_the_longitude(self):
        curve = component_curve(trivial_swatch(1), 0)
        assert np.all(curve[:, 2] > 1)

    def test_back_face_flips_heights(self):
        tangle = TorusTangle.from_pieces([[(0, 0.5, 0.2), (1, 0.5, 0.2)]])
        front = component_curve(tangle, 0)
        back = component_curve(tangle, 0, flip=True)
        assert np.allclose(front[:, 2], 1.2)
        assert np.allclose(back[:, 2], 1.8)

    def test_unknown_component(self):
        with pytest.raises(ComponentIndexError):
            component_curve(trivial_swatch(1), 1)
