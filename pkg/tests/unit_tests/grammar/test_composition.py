import pytest

from swatchlink.exceptions import InvalidTangleError, ProfileMismatchError
from swatchlink.grammar.composition import (
    build,
    compose_longitudinal,
    compose_meridional,
    crossing_band,
)
from swatchlink.grammar.parser import parse
from swatchlink.topology.tangle import homology_class, seam_profile, trivial_swatch


class TestAnnulusSums:
    def test_meridional_rows_join(self):
        row = trivial_swatch(1)
        joined = compose_meridional(row, row, name="ee")
        assert joined.component_count == 1
        assert joined.columns == 2
        assert joined.name == "ee"
        assert homology_class(joined, 0) == (0, 1)

    def test_longitudinal_rows_stack(self):
        row = trivial_swatch(1)
        stacked = compose_longitudinal(row, row)
        assert stacked.component_count == 2
        assert stacked.columns == 1
        assert [homology_class(stacked, i) for i in range(2)] == [(0, 1), (0, 1)]
        assert [p.position for p in seam_profile(stacked).v] == pytest.approx(
            [0.24, 0.75], abs=0.01
        )

    def test_meridional_mismatch(self):
        with pytest.raises(ProfileMismatchError) as info:
            compose_meridional(trivial_swatch(1), trivial_swatch(2))
        assert info.value.seam == "v"

    def test_meridional_keeps_h_profile(self, catalog):
        k = catalog.tile("k")
        kk = compose_meridional(k, k)
        assert [p.direction for p in seam_profile(kk).h] == [1, -1, 1, -1]

    def test_cable_beside_a_knit(self, catalog):
        row = compose_meridional(catalog.tile("k"), catalog.tile("cable1x1"))
        assert row.columns == 3
        assert row.component_count == 1

    def test_longitudinal_mismatch(self, catalog):
        k = catalog.tile("k")
        with pytest.raises(ProfileMismatchError) as info:
            compose_longitudinal(k, compose_meridional(k, k))
        assert info.value.seam == "h"


class TestCrossingBand:
    def test_twist(self, catalog):
        twisted = crossing_band(catalog.tile("k"), [1, 0], ["front", "back"])
        assert twisted.component_count == 1
        assert homology_class(twisted, 0) == (0, 1)

    def test_identity_twist_adds_no_crossing(self, catalog):
        k = catalog.tile("k")
        plain = crossing_band(k, [0, 1], [0.5, 0.5])
        assert plain.component_count == 1

    @pytest.mark.parametrize(
        "permutation,heights",
        [
            ([0, 1, 2], ["front", "back", "front"]),
            ([1, 1], ["front", "back"]),
            ([1, 0], ["front"]),
            ([1, 0], ["front", "front"]),
            ([1, 0], ["front", "middle"]),
        ],
    )
    def test_invalid(self, catalog, permutation, heights):
        with pytest.raises(InvalidTangleError):
            crossing_band(catalog.tile("k"), permutation, heights)


class TestBuild:
    def test_primitive_is_the_tile(self, catalog):
        assert build(parse("k", catalog), catalog) is catalog.tile("k")

    def test_meridional(self, catalog):
        tangle = build(parse("kp", catalog), catalog)
        assert tangle.name == "kp"
        assert tangle.columns == 2
        assert tangle.component_count == 1

    def test_longitudinal(self, catalog):
        tangle = build(parse("(kp)*l(pk)", catalog), catalog)
        assert tangle.name == "(kp)*l(pk)"
        assert tangle.columns == 2
        assert tangle.component_count == 2
        assert all(homology_class(tangle, i) == (0, 1) for i in range(2))
