"""
Knitting swatches from an unknit, one row at a time.

The annulus is the unit square with its left and right edges glued; the
bottom and top edges are only glued by `close_swatch`. Every curve is a
closed polyline, and a segment flagged as a jump passes through a glued
edge instead of being drawn.

A knit goes through three stages:

    state = build_unknit(1)                 # needle loops
    state = place_row(state, 1)             # new loops above a working longitude
    state = knit_row(state, script, bands)  # fingers, then loops absorbed by bands
    swatch = close_swatch(state, bands)     # needle loops joined through the boundary

Fingers are the only isotopy in a script. A finger pushes a stretch of the
working longitude through its stops and is recorded as the located RM2+
moves it amounts to, one per strand its legs pass, in `KnitState.trace`. It
must keep clear of the pending loops, pass every other strand at a distinct
height and keep its tip clear of strands, so that retracting it undoes
exactly those moves.

A row band may run from a finger tip over or under the strands of earlier
rows on its way to the pending loop; that is where a stitch gets caught.
For the knit stitch the finger dips under the head of a needle loop and
rises in front of it, and the band pulls the new loop up over the head:

    finger = FingerMove(column=0.5, width=0.2,
                        stops=((0.25, 0.2), (0.15, 0.2), (0.12, 0.8)))
    state = knit_row(place_row(build_unknit(1), 1), [finger], [Band(0.5, 0.12, 0.8)])
"""

from dataclasses import dataclass, field, replace
from typing import Iterator, List, Optional, Sequence, Tuple

from swatchlink.constants import (
    BOUNDARY_HEIGHT,
    DEFAULT_BAND_WIDTH,
    MIN_LAYER_GAP,
    ROW_SQUEEZE,
    SEAM_TOLERANCE,
)
from swatchlink.exceptions import (
    ForbiddenMoveError,
    IncompatibleBandError,
    KnittingPositionError,
)
from swatchlink.pydantic import BaseModel
from swatchlink.topology.reidemeister import MoveType
from swatchlink.topology.tangle import Point, TorusTangle

NEEDLE = "needle"
LOOP = "loop"
LONGITUDE = "longitude"

Segment = Tuple[Point, Point]


@dataclass(frozen=True)
class KnitCurve:
    points: Tuple[Point, ...]
    jumps: Tuple[bool, ...]
    kind: str
    row: int = 0

    def segments(self) -> Iterator[Tuple[int, Point, Point]]:
        """Drawn segments, jumps left out"""
        n = len(self.points)
        for k in range(n):
            if not self.jumps[k]:
                yield k, self.points[k], self.points[(k + 1) % n]

    @property
    def homology(self) -> Tuple[int, int]:
        """(h-seam, v-seam) crossings, signed"""
        p = q = 0
        n = len(self.points)
        for k in range(n):
            if not self.jumps[k]:
                continue
            a, b = self.points[k], self.points[(k + 1) % n]
            if abs(a[0] - b[0]) > 0.5:
                q += 1 if a[0] > b[0] else -1
            else:
                p += 1 if a[1] > b[1] else -1
        return p, q

    def squeezed(self, factor: float) -> "KnitCurve":
        points = tuple((x, y * factor, z) for x, y, z in self.points)
        return replace(self, points=points)


def _rectangle(x0: float, x1: float, y0: float, y1: float, kind: str, row: int):
    points = ((x0, y0, 0.5), (x1, y0, 0.5), (x1, y1, 0.5), (x0, y1, 0.5))
    return KnitCurve(points, (False,) * 4, kind, row)


def _longitude(y: float, row: int) -> KnitCurve:
    return KnitCurve(((0.0, y, 0.5), (1.0, y, 0.5)), (False, True), LONGITUDE, row)


@dataclass(frozen=True)
class LocatedMove:
    """
    One Reidemeister move of a script: for RM2+ the working longitude is
    pushed across a strand of `curve` at `at`, over it when `over` is set.
    """

    curve: int
    over: bool
    at: Tuple[float, float]
    kind: MoveType = MoveType.RM2_PLUS

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "curve": self.curve,
            "over": self.over,
            "at": list(self.at),
        }


@dataclass(frozen=True)
class KnitState:
    curves: Tuple[KnitCurve, ...] = ()
    rows: int = 0
    trace: Tuple[LocatedMove, ...] = ()

    @property
    def component_count(self) -> int:
        return len(self.curves)

    @property
    def needles(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.curves) if c.kind == NEEDLE)

    @property
    def pending(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.curves) if c.kind == LOOP)

    @property
    def working(self) -> Optional[int]:
        longitudes = [i for i, c in enumerate(self.curves) if c.kind == LONGITUDE]
        if not longitudes:
            return None
        return max(longitudes, key=lambda i: self.curves[i].row)

    def homology(self, index: int) -> Tuple[int, int]:
        return self.curves[index].homology


def build_unknit(n: int) -> KnitState:
    """n needle loops side by side; n = 0 is the empty diagram"""
    return KnitState(
        tuple(_rectangle((i + 0.2) / n, (i + 0.8) / n, 0.2, 0.8, NEEDLE, 0) for i in range(n))
    )


def _row_curves(m: int, row: int) -> Tuple[KnitCurve, ...]:
    loops = tuple(
        _rectangle((i + 0.2) / m, (i + 0.8) / m, 0.8, 0.95, LOOP, row) for i in range(m)
    )
    return loops + (_longitude(0.5, row),)


def build_trivial_row(m: int) -> KnitState:
    """m loops above one longitude"""
    return KnitState(_row_curves(m, 1), rows=1)


def place_row(state: KnitState, m: int) -> KnitState:
    """Squeeze the knit so far to the bottom and lay a trivial row above it"""
    squeezed = tuple(c.squeezed(ROW_SQUEEZE) for c in state.curves)
    return KnitState(squeezed + _row_curves(m, state.rows + 1), state.rows + 1, state.trace)


def _interpolate(a: Point, b: Point, t: float) -> Point:
    return tuple(a[i] + t * (b[i] - a[i]) for i in range(3))


def _height_at_x(a: Point, b: Point, x: float) -> float:
    if abs(b[0] - a[0]) < SEAM_TOLERANCE:
        return a[2]
    return _interpolate(a, b, (x - a[0]) / (b[0] - a[0]))[2]


def _crossing(first: Segment, second: Segment) -> Optional[Tuple[float, float]]:
    """Parameters of a proper crossing of two segments in the plane"""
    (p, p2), (q, q2) = first, second
    r = (p2[0] - p[0], p2[1] - p[1])
    s = (q2[0] - q[0], q2[1] - q[1])
    denom = r[0] * s[1] - r[1] * s[0]
    if abs(denom) < 1e-12:
        return None
    qp = (q[0] - p[0], q[1] - p[1])
    t = (qp[0] * s[1] - qp[1] * s[0]) / denom
    u = (qp[0] * r[1] - qp[1] * r[0]) / denom
    if 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9:
        return t, u
    return None


def _enters(segment: Segment, box: Tuple[float, float, float, float]) -> bool:
    """Whether a segment meets the open rectangle (x0, x1) x (y0, y1)"""
    (a, b) = segment
    x0, x1, y0, y1 = box
    eps = 1e-9
    low, high = 0.0, 1.0
    for start, delta, lo, hi in (
        (a[0], b[0] - a[0], x0 + eps, x1 - eps),
        (a[1], b[1] - a[1], y0 + eps, y1 - eps),
    ):
        if abs(delta) < 1e-15:
            if not lo < start < hi:
                return False
            continue
        t0, t1 = (lo - start) / delta, (hi - start) / delta
        if t0 > t1:
            t0, t1 = t1, t0
        low, high = max(low, t0), min(high, t1)
        if low >= high:
            return False
    return True


def _horizontal_segment(
    curve: KnitCurve, x0: float, x1: float, y: Optional[float] = None
) -> Optional[int]:
    for k, a, b in curve.segments():
        if abs(a[1] - b[1]) > SEAM_TOLERANCE:
            continue
        if y is not None and abs(a[1] - y) > SEAM_TOLERANCE:
            continue
        if min(a[0], b[0]) < x0 - SEAM_TOLERANCE and max(a[0], b[0]) > x1 + SEAM_TOLERANCE:
            return k
    return None


@dataclass(frozen=True)
class FingerMove:
    """
    Push the stretch [column - width/2, column + width/2] of a horizontal
    segment of the working longitude through `stops`, a sequence of
    (y, height) points that the two legs of the finger pass in turn.
    """

    column: float
    width: float
    stops: Tuple[Tuple[float, float], ...]
    curve: Optional[int] = None

    def apply(self, state: KnitState) -> KnitState:
        """
        Raises:
            ForbiddenMoveError: when the finger is not on the working
                longitude, leaves the annulus, touches a pending loop or
                passes a strand without a clear height gap or with its tip
        """
        working = state.working
        if working is None:
            raise ForbiddenMoveError("the state has no working longitude")
        target = working if self.curve is None else self.curve
        if target != working:
            raise ForbiddenMoveError(f"curve {target} is not the working longitude")
        if not self.stops:
            raise ForbiddenMoveError("a finger needs at least one stop")
        if any(not 0 < y < 1 for y, _ in self.stops):
            raise ForbiddenMoveError("the finger leaves the annulus")

        curve = state.curves[working]
        x0, x1 = self.column - self.width / 2, self.column + self.width / 2
        k = _horizontal_segment(curve, x0, x1)
        if k is None:
            raise ForbiddenMoveError(
                f"no horizontal stretch of the working longitude spans [{x0}, {x1}]"
            )
        n = len(curve.points)
        a, b = curve.points[k], curve.points[(k + 1) % n]
        first, second = (x0, x1) if b[0] > a[0] else (x1, x0)
        path = [(first, a[1], _height_at_x(a, b, first))]
        path += [(first, y, z) for y, z in self.stops]
        path += [(second, y, z) for y, z in reversed(self.stops)]
        path.append((second, a[1], _height_at_x(a, b, second)))

        moves = self._check(state, working, k, path)
        points = curve.points[: k + 1] + tuple(path) + curve.points[k + 1 :]
        jumps = curve.jumps[:k] + (False,) * (len(path) + 1) + curve.jumps[k + 1 :]
        curves = list(state.curves)
        curves[working] = replace(curve, points=points, jumps=jumps)
        return replace(state, curves=tuple(curves), trace=state.trace + moves)

    def moves(self, state: KnitState) -> Tuple[LocatedMove, ...]:
        """The located RM2+ moves this finger makes on `state`"""
        return self.apply(state).trace[len(state.trace) :]

    def _check(
        self, state: KnitState, working: int, replaced: int, path: List[Point]
    ) -> Tuple[LocatedMove, ...]:
        pending = set(state.pending)
        finger = list(zip(path, path[1:]))
        tip = len(self.stops)
        moves: List[LocatedMove] = []
        ys = [path[0][1]] + [y for y, _ in self.stops]
        box = (
            min(path[0][0], path[-1][0]),
            max(path[0][0], path[-1][0]),
            min(ys),
            max(ys),
        )
        for index, curve in enumerate(state.curves):
            for k, a, b in curve.segments():
                if index == working and k == replaced:
                    continue
                for position, leg in enumerate(finger):
                    hit = _crossing(leg, (a, b))
                    if hit is None:
                        continue
                    if index in pending:
                        raise ForbiddenMoveError(f"the finger crosses pending loop {index}")
                    if position == tip:
                        raise ForbiddenMoveError(f"the finger tip runs into curve {index}")
                    height = _interpolate(leg[0], leg[1], hit[0])[2]
                    other = _interpolate(a, b, hit[1])[2]
                    if abs(height - other) < MIN_LAYER_GAP:
                        raise ForbiddenMoveError(
                            f"the finger passes curve {index} at height {other:.2f} "
                            f"without a gap of {MIN_LAYER_GAP}"
                        )
                    if position < tip:
                        at = _interpolate(leg[0], leg[1], hit[0])
                        moves.append(LocatedMove(index, height > other, (at[0], at[1])))
                if index in pending and _enters((a, b), box):
                    raise ForbiddenMoveError(f"the finger sweeps over pending loop {index}")
        return tuple(moves)


@dataclass(frozen=True)
class Band:
    """
    A vertical band of the given width around `column`, attached to the
    horizontal segments at heights start_y and end_y. A wrapping band runs
    down from start_y through the lower boundary and on from the top edge
    down to end_y.
    """

    column: float
    start_y: float
    end_y: float
    wraps: bool = False
    width: float = field(default=DEFAULT_BAND_WIDTH)

    @property
    def sides(self) -> Tuple[float, float]:
        return self.column - self.width / 2, self.column + self.width / 2

    def rectangles(self) -> List[Tuple[float, float, float, float]]:
        x0, x1 = self.sides
        if self.wraps:
            return [(x0, x1, 0.0, self.start_y), (x0, x1, self.end_y, 1.0)]
        low, high = sorted((self.start_y, self.end_y))
        return [(x0, x1, low, high)]


def _attachment(state: KnitState, band: Band, y: float) -> Optional[Tuple[int, int]]:
    x0, x1 = band.sides
    for index, curve in enumerate(state.curves):
        k = _horizontal_segment(curve, x0, x1, y)
        if k is not None:
            return index, k
    return None


def _opened(curve: KnitCurve, k: int, x0: float, x1: float):
    """
    The curve with the stretch [x0, x1] of segment k cut out, as a path
    from the cut end next to the following point round to the cut end next
    to point k. The flag of the last point is left open.
    """
    n = len(curve.points)
    a, b = curve.points[k], curve.points[(k + 1) % n]
    near_b, near_a = (x1, x0) if b[0] > a[0] else (x0, x1)
    start = (near_b, a[1], _height_at_x(a, b, near_b))
    end = (near_a, a[1], _height_at_x(a, b, near_a))
    order = [(k + 1 + j) % n for j in range(n)]
    points = [start] + [curve.points[i] for i in order] + [end]
    flags = [False] + [curve.jumps[i] for i in order[:-1]] + [False, None]
    return points, flags


def _reversed_path(points, flags):
    segment_flags = list(reversed(flags[:-1]))
    return list(reversed(points)), segment_flags + [None]


def _side(x: float, from_y: float, to_y: float, wraps: bool):
    """Points strictly between two band corners, with their flags"""
    if not wraps:
        return []
    if from_y < to_y:
        return [((x, 0.0, BOUNDARY_HEIGHT), True), ((x, 1.0, BOUNDARY_HEIGHT), False)]
    return [((x, 1.0, BOUNDARY_HEIGHT), True), ((x, 0.0, BOUNDARY_HEIGHT), False)]


def band_surgery(state: KnitState, band: Band) -> KnitState:
    """
    Join the two curves met by the band ends. A longitude keeps its
    orientation, the other curve is traversed to match it.

    Raises:
        IncompatibleBandError: when an end meets no horizontal segment, or
            both ends meet the same curve
    """
    ends = [_attachment(state, band, band.start_y), _attachment(state, band, band.end_y)]
    if None in ends:
        missing = band.start_y if ends[0] is None else band.end_y
        raise IncompatibleBandError(
            f"band at x={band.column} meets no horizontal segment at y={missing}"
        )
    (ia, ka), (ib, kb) = ends
    ya, yb = band.start_y, band.end_y
    if ia == ib:
        raise IncompatibleBandError(f"both ends of the band meet curve {ia}")
    first, second = state.curves[ia], state.curves[ib]
    if second.homology != (0, 0) and first.homology == (0, 0):
        ia, ka, ya, ib, kb, yb = ib, kb, yb, ia, ka, ya
        first, second = second, first

    x0, x1 = band.sides
    a_points, a_flags = _opened(first, ka, x0, x1)
    b_points, b_flags = _opened(second, kb, x0, x1)
    if abs(b_points[0][0] - a_points[-1][0]) > SEAM_TOLERANCE:
        b_points, b_flags = _reversed_path(b_points, b_flags)

    points: List[Point] = []
    flags: List[bool] = []
    for path, path_flags, side in (
        (a_points, a_flags, _side(a_points[-1][0], ya, yb, band.wraps)),
        (b_points, b_flags, _side(b_points[-1][0], yb, ya, band.wraps)),
    ):
        points += path
        flags += path_flags[:-1] + [False]
        for point, flag in side:
            points.append(point)
            flags.append(flag)

    kind = LONGITUDE if LONGITUDE in (first.kind, second.kind) else LOOP
    row = first.row if first.kind == LONGITUDE else second.row
    merged = KnitCurve(tuple(points), tuple(flags), kind, row)
    curves = [c for i, c in enumerate(state.curves) if i != ib]
    curves[ia if ia < ib else ia - 1] = merged
    return replace(state, curves=tuple(curves))


def knit_row(state: KnitState, script: Sequence[FingerMove], bands: Sequence[Band]) -> KnitState:
    """
    Run the finger moves of a row, then absorb every pending loop into the
    working longitude with the bands.

    Raises:
        ForbiddenMoveError: for a forbidden finger, a band that does not join
            a pending loop to the working longitude or crosses a strand it
            may not, or a loop left pending
    """
    for move in script:
        state = move.apply(state)
    for band in bands:
        if band.wraps:
            raise ForbiddenMoveError("bands of a row do not cross the boundary")
        ends = [_attachment(state, band, band.start_y), _attachment(state, band, band.end_y)]
        kinds = sorted(
            state.curves[end[0]].kind if end is not None else "none" for end in ends
        )
        if kinds != [LONGITUDE, LOOP] or state.working not in [e[0] for e in ends]:
            raise ForbiddenMoveError(
                f"band at x={band.column} does not join a pending loop to the working longitude"
            )
        _check_row_band(state, band, ends)
        state = band_surgery(state, band)
    if state.pending:
        raise ForbiddenMoveError(f"pending loops {list(state.pending)} were not absorbed")
    return state


def _check_row_band(state: KnitState, band: Band, ends) -> None:
    """
    A row band may pass over or under the strands of earlier rows with a
    clear height gap along each of its sides. It keeps clear of the pending
    loops and of the working longitude.
    """
    sides = []
    for x in band.sides:
        corners = []
        for (index, k), y in zip(ends, (band.start_y, band.end_y)):
            curve = state.curves[index]
            a, b = curve.points[k], curve.points[(k + 1) % len(curve.points)]
            corners.append((x, y, _height_at_x(a, b, x)))
        sides.append(tuple(corners))
    guarded = set(state.pending) | {state.working}
    attached = set(ends)
    (box,) = band.rectangles()
    for index, curve in enumerate(state.curves):
        for k, a, b in curve.segments():
            if (index, k) in attached:
                continue
            hits = [(side, _crossing(side, (a, b))) for side in sides]
            hits = [(side, hit) for side, hit in hits if hit is not None]
            if not hits:
                if _enters((a, b), box):
                    raise ForbiddenMoveError(
                        f"band at x={band.column} swallows a strand of curve {index}"
                    )
                continue
            if index in guarded:
                raise ForbiddenMoveError(
                    f"band at x={band.column} crosses curve {index} of the current row"
                )
            for side, (t, u) in hits:
                gap = _interpolate(side[0], side[1], t)[2] - _interpolate(a, b, u)[2]
                if abs(gap) < MIN_LAYER_GAP:
                    raise ForbiddenMoveError(
                        f"band at x={band.column} passes curve {index} "
                        f"without a gap of {MIN_LAYER_GAP}"
                    )


def _crossed(state: KnitState, band: Band) -> bool:
    for curve in state.curves:
        for _, a, b in curve.segments():
            if any(_enters((a, b), box) for box in band.rectangles()):
                return True
    return False


def _overlap(first, second) -> bool:
    return (
        first[0] < second[1]
        and second[0] < first[1]
        and first[2] < second[3]
        and second[2] < first[3]
    )


class BandCheck(BaseModel):
    band: int
    simple: bool
    boundary: bool
    joins: bool
    reasons: List[str] = []


class KnittingPositionReport(BaseModel):
    bands: List[BandCheck]

    @property
    def passed(self) -> bool:
        return all(b.simple and b.boundary and b.joins for b in self.bands)

    def items(self) -> Iterator[Tuple[str, bool]]:
        for check in self.bands:
            yield f"band {check.band}: bullet 1 (simple)", check.simple
            yield f"band {check.band}: bullet 2 (boundary)", check.boundary
            yield f"band {check.band}: bullet 3 (loop to longitude)", check.joins


def validate_knitting_position(state: KnitState, bands: Sequence[Band]) -> KnittingPositionReport:
    """
    Check the closing bands: (1) they cross no strand and do not overlap,
    (2) each crosses the lower boundary exactly once, (3) each joins a
    contractible curve to a longitudinal one.
    """
    checks = []
    for index, band in enumerate(bands):
        reasons = []
        simple = True
        if _crossed(state, band):
            simple = False
            reasons.append("a strand crosses the band")
        for other_index, other in enumerate(bands):
            if other_index != index and any(
                _overlap(mine, theirs)
                for mine in band.rectangles()
                for theirs in other.rectangles()
            ):
                simple = False
                reasons.append(f"overlaps band {other_index}")
        boundary = band.wraps and band.start_y < band.end_y
        if not boundary:
            reasons.append("does not cross the lower boundary once")
        ends = [_attachment(state, band, band.start_y), _attachment(state, band, band.end_y)]
        classes = sorted(state.homology(end[0]) for end in ends if end is not None)
        joins = classes == [(0, 0), (0, 1)]
        if not joins:
            reasons.append("does not join a contractible curve to a longitude")
        checks.append(
            BandCheck(band=index, simple=simple, boundary=boundary, joins=joins, reasons=reasons)
        )
    return KnittingPositionReport(bands=checks)


def _pieces(state: KnitState) -> List[List[Point]]:
    pieces = []
    for curve in state.curves:
        n = len(curve.points)
        if not any(curve.jumps):
            pieces.append(list(curve.points) + [curve.points[0]])
            continue
        start = (curve.jumps.index(True) + 1) % n
        piece: List[Point] = []
        for j in range(n):
            k = (start + j) % n
            piece.append(curve.points[k])
            if curve.jumps[k]:
                pieces.append(piece)
                piece = []
    return pieces


def close_swatch(state: KnitState, bands: Sequence[Band]) -> TorusTangle:
    """
    Join the needle loops through the lower boundary and glue the top and
    bottom edges. The bands may be given in any order.

    Raises:
        KnittingPositionError: naming the failed bullets
    """
    report = validate_knitting_position(state, bands)
    if not report.passed:
        raise KnittingPositionError(report)
    for band in bands:
        state = band_surgery(state, band)
    return TorusTangle.from_pieces(
        _pieces(state), columns=max(1, len(bands)), name="knit"
    )
