"""
Annulus sums of swatch tangles.

The meridional sum puts two tiles side by side, the longitudinal sum stacks
the second on top of the first. Both squeeze the tiles into their share of
the square and join the strands across the seam between them with straight
connectors running in a thin gap; the outer seam is closed by a second set of
connectors next to the far edge.
"""

from functools import reduce
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple, Union

from swatchlink.constants import (
    BACK_HEIGHT,
    COMPOSITION_GAP,
    FRONT_HEIGHT,
    TWIST_BAND,
)
from swatchlink.exceptions import InvalidTangleError, ProfileMismatchError
from swatchlink.topology.tangle import (
    Point,
    TorusTangle,
    edge_of,
    orient_pieces,
    seam_profile,
)

from .expr import Meridional, Primitive, SwatchExpr

if TYPE_CHECKING:
    from .catalog import TileCatalog

_SIDES = {0: ("left", "right"), 1: ("bottom", "top")}
_SEAMS = {0: "v", 1: "h"}
_HEIGHTS = {"front": FRONT_HEIGHT, "back": BACK_HEIGHT}


def _place(point: Point, axis: int, low: float, high: float) -> Point:
    coordinates = list(point)
    coordinates[axis] = low + coordinates[axis] * (high - low)
    return tuple(coordinates)


def _placed_pieces(tangle: TorusTangle, axis: int, low: float, high: float):
    return [[_place(p, axis, low, high) for p in piece] for piece in tangle.pieces()]


def _seam_points(tangle: TorusTangle, axis: int, far: bool) -> List[Tuple[Point, int]]:
    """
    Strand ends on one edge, sorted along it. The direction is +1 for
    strands running from the near edge towards the far edge.
    """
    edge = _SIDES[axis][1 if far else 0]
    found = []
    for strand in tangle.strands:
        if strand.closed:
            continue
        if edge_of(strand.points[0]) == edge:
            found.append((strand.points[0], -1 if far else 1))
        if edge_of(strand.points[-1]) == edge:
            found.append((strand.points[-1], 1 if far else -1))
    return sorted(found, key=lambda item: item[0][1 - axis])


def _annulus_sum(
    a: TorusTangle,
    b: TorusTangle,
    axis: int,
    share: float,
    columns: int,
    name: Optional[str],
) -> TorusTangle:
    seam = _SEAMS[axis]
    a_far, b_near = _seam_points(a, axis, far=True), _seam_points(b, axis, far=False)
    if [d for _, d in a_far] != [d for _, d in b_near]:
        raise ProfileMismatchError(
            seam_profile(a).interface(seam), seam_profile(b).interface(seam), seam
        )
    b_far, a_near = _seam_points(b, axis, far=True), _seam_points(a, axis, far=False)

    gap = COMPOSITION_GAP
    pieces = _placed_pieces(a, axis, 0.0, share - gap)
    pieces += _placed_pieces(b, axis, share + gap, 1.0 - gap)

    for (pa, direction), (pb, _) in zip(a_far, b_near):
        start = _place(pa, axis, 0.0, share - gap)
        end = _place(pb, axis, share + gap, 1.0 - gap)
        pieces.append([start, end] if direction > 0 else [end, start])

    for (pb, direction), (pa, _) in zip(b_far, a_near):
        inner = _place(pb, axis, share + gap, 1.0 - gap)
        outer = list(pa)
        outer[axis] = 1.0
        outer = tuple(outer)
        pieces.append([inner, outer] if direction > 0 else [outer, inner])

    return TorusTangle.from_pieces(pieces, columns, name)


def compose_meridional(
    a: TorusTangle, b: TorusTangle, name: Optional[str] = None
) -> TorusTangle:
    """
    Place b to the right of a. The v-seam directions of both tiles must agree
    bottom to top; the stitch columns add up.

    Raises:
        ProfileMismatchError: when the v-seams do not fit
    """
    share = a.columns / (a.columns + b.columns)
    return _annulus_sum(a, b, 0, share, a.columns + b.columns, name)


def compose_longitudinal(
    a: TorusTangle, b: TorusTangle, name: Optional[str] = None
) -> TorusTangle:
    """
    Stack b on top of a. The h-seam directions of both tiles must agree left
    to right; the components of both tiles are kept.

    Raises:
        ProfileMismatchError: when the h-seams do not fit
    """
    rows_a, rows_b = max(a.component_count, 1), max(b.component_count, 1)
    share = rows_a / (rows_a + rows_b)
    return _annulus_sum(a, b, 1, share, max(a.columns, b.columns), name)


def _height(value: Union[str, float]) -> float:
    if isinstance(value, str):
        if value not in _HEIGHTS:
            raise InvalidTangleError(f"unknown strand height {value!r}")
        return _HEIGHTS[value]
    return float(value)


def crossing_band(
    tangle: TorusTangle,
    permutation: Sequence[int],
    heights: Sequence[Union[str, float]],
    band: float = TWIST_BAND,
    name: Optional[str] = None,
) -> TorusTangle:
    """
    Insert a strip of crossings along the bottom edge. The strand entering at
    the j-th bottom position (left to right) is carried to the tile's
    original position `permutation[j]`, at height `heights[j]` ("front",
    "back" or a number) while it passes the other strands.

    Components are re-oriented afterwards, so the permutation may reverse
    parts of a strand.

    Raises:
        InvalidTangleError: for a bad permutation or two strands that cross
            at the same height
    """
    bottom = sorted(
        (point for point, _ in _seam_points(tangle, 1, far=False)),
        key=lambda p: p[0],
    )
    count = len(bottom)
    if sorted(permutation) != list(range(count)) or len(heights) != count:
        raise InvalidTangleError(
            f"twist of {len(permutation)} strands does not fit {count} bottom points"
        )
    levels = [_height(h) for h in heights]
    for i in range(count):
        for j in range(i + 1, count):
            swapped = (bottom[i][0] - bottom[j][0]) * (
                bottom[permutation[i]][0] - bottom[permutation[j]][0]
            ) < 0
            if swapped and abs(levels[i] - levels[j]) < 1e-9:
                raise InvalidTangleError(
                    f"strands {i} and {j} cross at the same height {levels[i]}"
                )

    pieces = _placed_pieces(tangle, 1, band, 1.0)
    for j, (x, _, z) in enumerate(bottom):
        target_x, _, target_z = bottom[permutation[j]]
        dx = target_x - x
        pieces.append(
            [
                (x, 0.0, z),
                (x + 0.1 * dx, 0.1 * band, levels[j]),
                (x + 0.9 * dx, 0.9 * band, levels[j]),
                (target_x, band, target_z),
            ]
        )
    return TorusTangle.from_pieces(orient_pieces(pieces), tangle.columns, name)


def build(
    expr: SwatchExpr, catalog: Optional["TileCatalog"] = None
) -> TorusTangle:
    """Fold the annulus sums of a parsed pattern into one tangle"""
    if catalog is None:
        from .catalog import default_catalog

        catalog = default_catalog()
    if isinstance(expr, Primitive):
        return catalog.tile(expr.name)
    parts = [build(child, catalog) for child in expr.children]
    compose = compose_meridional if isinstance(expr, Meridional) else compose_longitudinal
    result = reduce(compose, parts)
    return TorusTangle(result.strands, result.columns, str(expr))

