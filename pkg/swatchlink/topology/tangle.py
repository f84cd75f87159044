"""
Swatches as polygonal tangles in the thickened torus.

A tangle lives in the unit square [0, 1]^2 with a height z in (0, 1); the
left and right edges are glued (the v-seam) and so are the bottom and top
edges (the h-seam). Strands are polylines whose ends lie on the edges or
that close up inside the square. Every component is stored as its pieces in
traversal order, and components are ordered bottom-to-top by the lowest
height at which they cross the v-seam.

Example:
    ```python
    from swatchlink.topology.tangle import TorusTangle, seam_profile

    row = TorusTangle.from_pieces([[(0, 0.5, 0.5), (1, 0.5, 0.5)]])
    seam_profile(row).v
    # (SeamPoint(position=0.5, direction=1, component=0),)
    ```
"""

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from swatchlink.constants import COORDINATE_DECIMALS, SEAM_TOLERANCE
from swatchlink.exceptions import (
    ComponentIndexError,
    InvalidTangleError,
    OpenComponentError,
)

Point = Tuple[float, float, float]


@dataclass(frozen=True)
class Strand:
    points: Tuple[Point, ...]
    component: int
    closed: bool = False


@dataclass(frozen=True)
class SeamPoint:
    position: float
    direction: int
    component: int


@dataclass(frozen=True)
class SeamProfile:
    v: Tuple[SeamPoint, ...]
    h: Tuple[SeamPoint, ...]

    def interface(self, seam: str) -> Tuple[Tuple[float, int], ...]:
        """Positions and directions along a seam, the composability data"""
        points = self.v if seam == "v" else self.h
        return tuple((round(p.position, 6), p.direction) for p in points)


def _snap(value: float) -> float:
    value = round(float(value), COORDINATE_DECIMALS)
    if abs(value) < 10**-COORDINATE_DECIMALS:
        return 0.0
    if abs(value - 1) < 10**-COORDINATE_DECIMALS:
        return 1.0
    return value


def _snap_point(point: Sequence[float]) -> Point:
    x, y, z = point
    return (_snap(x), _snap(y), round(float(z), COORDINATE_DECIMALS))


def edge_of(point: Point) -> Optional[str]:
    """Which edge of the square a point lies on, if any"""
    x, y, _ = point
    on_left, on_right = abs(x) < SEAM_TOLERANCE, abs(x - 1) < SEAM_TOLERANCE
    on_bottom, on_top = abs(y) < SEAM_TOLERANCE, abs(y - 1) < SEAM_TOLERANCE
    if (on_left or on_right) and (on_bottom or on_top):
        raise InvalidTangleError(f"strand passes through the corner {point}")
    if on_left:
        return "left"
    if on_right:
        return "right"
    if on_bottom:
        return "bottom"
    if on_top:
        return "top"
    return None


def _glued(point: Point) -> Point:
    x, y, z = point
    edge = edge_of(point)
    if edge == "right":
        return (0.0, y, z)
    if edge == "left":
        return (1.0, y, z)
    if edge == "top":
        return (x, 0.0, z)
    if edge == "bottom":
        return (x, 1.0, z)
    return point


def _key(point: Point) -> Tuple[float, float]:
    return (round(point[0], 6), round(point[1], 6))


class TorusTangle:
    """A link in the thickened torus, cut open along both seams"""

    def __init__(
        self, strands: Sequence[Strand], columns: int = 1, name: Optional[str] = None
    ):
        self.strands: Tuple[Strand, ...] = tuple(strands)
        self.columns = columns
        self.name = name

    @classmethod
    def from_pieces(
        cls,
        pieces: Iterable[Sequence[Sequence[float]]],
        columns: int = 1,
        name: Optional[str] = None,
    ) -> "TorusTangle":
        """
        Glue polylines into a tangle. Pieces that meet inside the square are
        joined, pieces that end on an edge continue on the opposite edge.

        Raises:
            InvalidTangleError: when a piece stops inside the square
            OpenComponentError: when a piece has no continuation across a seam
        """
        open_pieces = [[_snap_point(p) for p in piece] for piece in pieces]
        open_pieces = [p for p in open_pieces if len(p) >= 2]
        closed: List[List[Point]] = []

        while True:
            starts: Dict[Tuple[float, float], List[int]] = {}
            for index, piece in enumerate(open_pieces):
                if edge_of(piece[0]) is None:
                    starts.setdefault(_key(piece[0]), []).append(index)
            merged = False
            for index, piece in enumerate(open_pieces):
                if edge_of(piece[-1]) is not None:
                    continue
                candidates = starts.get(_key(piece[-1]), [])
                if not candidates:
                    raise InvalidTangleError(f"piece stops inside the square at {piece[-1]}")
                other = candidates[0]
                if abs(open_pieces[other][0][2] - piece[-1][2]) > SEAM_TOLERANCE:
                    raise InvalidTangleError(f"height jumps at {piece[-1]}")
                if other == index:
                    closed.append(piece[:-1])
                    del open_pieces[index]
                else:
                    open_pieces[index] = piece + open_pieces[other][1:]
                    del open_pieces[other]
                merged = True
                break
            if not merged:
                break

        start_of: Dict[Tuple[float, float], int] = {}
        for index, piece in enumerate(open_pieces):
            if edge_of(piece[0]) is None:
                raise InvalidTangleError(f"piece starts inside the square at {piece[0]}")
            start_of[_key(piece[0])] = index

        remaining = set(range(len(open_pieces)))
        cycles: List[List[int]] = []
        while remaining:
            first = min(remaining)
            cycle = []
            index = first
            while True:
                cycle.append(index)
                remaining.discard(index)
                end = open_pieces[index][-1]
                partner = _glued(end)
                following = start_of.get(_key(partner))
                if following is None:
                    raise OpenComponentError(f"no strand continues from {end}")
                if abs(open_pieces[following][0][2] - end[2]) > SEAM_TOLERANCE:
                    raise InvalidTangleError(f"height jumps across the seam at {end}")
                if following == first:
                    break
                if following not in remaining:
                    raise InvalidTangleError(f"strands merge at {partner}")
                index = following
            cycles.append(_rotate_cycle(cycle, open_pieces))

        def order_key(cycle):
            heights = [
                open_pieces[i][-1][1]
                for i in cycle
                if edge_of(open_pieces[i][-1]) in ("left", "right")
            ]
            if heights:
                return (0, min(heights))
            return (1, min(p[1] for i in cycle for p in open_pieces[i]))

        cycles.sort(key=order_key)
        closed.sort(key=lambda loop: min(p[1] for p in loop))

        strands: List[Strand] = []
        for component, cycle in enumerate(cycles):
            for index in cycle:
                strands.append(Strand(tuple(open_pieces[index]), component))
        for offset, loop in enumerate(closed):
            strands.append(Strand(tuple(loop), len(cycles) + offset, closed=True))
        return cls(strands, columns, name)

    @property
    def component_count(self) -> int:
        return len({s.component for s in self.strands})

    def component_strands(self, index: int) -> List[Strand]:
        if not 0 <= index < self.component_count:
            raise ComponentIndexError(f"component {index} is out of range")
        return [s for s in self.strands if s.component == index]

    def pieces(self) -> List[List[Point]]:
        """Polylines of every strand, closed loops repeating their first point"""
        result = []
        for strand in self.strands:
            points = list(strand.points)
            if strand.closed:
                points.append(points[0])
            result.append(points)
        return result

    def __eq__(self, other):
        if not isinstance(other, TorusTangle):
            return NotImplemented
        if self.columns != other.columns or len(self.strands) != len(other.strands):
            return False
        for mine, theirs in zip(self.strands, other.strands):
            if mine.component != theirs.component or mine.closed != theirs.closed:
                return False
            if len(mine.points) != len(theirs.points):
                return False
            if not np.allclose(mine.points, theirs.points, atol=SEAM_TOLERANCE):
                return False
        return True

    def __hash__(self):
        return hash((self.columns, len(self.strands)))

    def __repr__(self):
        label = self.name or "tangle"
        return f"TorusTangle({label}, components={self.component_count}, columns={self.columns})"


def _rotate_cycle(cycle: List[int], pieces: List[List[Point]]) -> List[int]:
    """Start a component at its lowest left-edge entry, else its lowest bottom entry"""

    def rank(position):
        start = pieces[cycle[position]][0]
        edge = edge_of(start)
        order = {"left": 0, "bottom": 1, "right": 2, "top": 3}[edge]
        coordinate = start[1] if edge in ("left", "right") else start[0]
        return (order, coordinate)

    best = min(range(len(cycle)), key=rank)
    return cycle[best:] + cycle[:best]


def _junction(point: Point) -> Tuple:
    edge = edge_of(point)
    if edge is None:
        return ("inside",) + _key(point)
    if edge in ("left", "right"):
        return ("v", round(point[1], 6))
    return ("h", round(point[0], 6))


def orient_pieces(pieces: Iterable[Sequence[Sequence[float]]]) -> List[List[Point]]:
    """
    Re-chain undirected polylines into oriented ones. Every cycle is
    traversed so that it crosses the v-seam rightwards on balance, or the
    h-seam upwards when it does not cross the v-seam at all.

    Raises:
        InvalidTangleError: when a junction is not shared by exactly two ends
    """
    polylines = [[_snap_point(p) for p in piece] for piece in pieces]
    polylines = [p for p in polylines if len(p) >= 2]
    loops = [
        p for p in polylines if edge_of(p[0]) is None and _key(p[0]) == _key(p[-1])
    ]
    open_lines = [p for p in polylines if not any(p is loop for loop in loops)]

    junctions: Dict[Tuple, List[Tuple[int, int]]] = {}
    for index, line in enumerate(open_lines):
        junctions.setdefault(_junction(line[0]), []).append((index, 0))
        junctions.setdefault(_junction(line[-1]), []).append((index, 1))
    for junction, ends in junctions.items():
        if len(ends) != 2:
            raise InvalidTangleError(f"{len(ends)} strand ends meet at {junction[1:]}")

    result: List[List[Point]] = []
    unused = set(range(len(open_lines)))
    while unused:
        first = min(unused)
        chain = [open_lines[first]]
        unused.discard(first)
        current, exit_end = first, 1
        while True:
            ends = junctions[_junction(open_lines[current][-1 if exit_end else 0])]
            following, entry_end = next(e for e in ends if e != (current, exit_end))
            if following == first:
                break
            line = open_lines[following]
            chain.append(line if entry_end == 0 else line[::-1])
            unused.discard(following)
            current, exit_end = following, 1 - entry_end

        v_turn = h_turn = 0
        for line in chain:
            edge = edge_of(line[-1])
            v_turn += {"right": 1, "left": -1}.get(edge, 0)
            h_turn += {"top": 1, "bottom": -1}.get(edge, 0)
        if v_turn < 0 or (v_turn == 0 and h_turn < 0):
            chain = [line[::-1] for line in reversed(chain)]
        result.extend(chain)
    return result + loops


def seam_profile(tangle: TorusTangle) -> SeamProfile:
    v, h = [], []
    for strand in tangle.strands:
        if strand.closed:
            continue
        end = strand.points[-1]
        edge = edge_of(end)
        if edge == "right":
            v.append(SeamPoint(end[1], 1, strand.component))
        elif edge == "left":
            v.append(SeamPoint(end[1], -1, strand.component))
        elif edge == "top":
            h.append(SeamPoint(end[0], 1, strand.component))
        elif edge == "bottom":
            h.append(SeamPoint(end[0], -1, strand.component))
    return SeamProfile(
        tuple(sorted(v, key=lambda p: p.position)),
        tuple(sorted(h, key=lambda p: p.position)),
    )


def homology_class(tangle: TorusTangle, component: int) -> Tuple[int, int]:
    """
    (p, q): signed crossings of the h-seam and of the v-seam. A row of
    stitches has class (0, 1).
    """
    tangle.component_strands(component)
    profile = seam_profile(tangle)
    p = sum(s.direction for s in profile.h if s.component == component)
    q = sum(s.direction for s in profile.v if s.component == component)
    return p, q


def rebased_class(
    matrix: Sequence[Sequence[int]], homology: Tuple[int, int]
) -> Tuple[int, int]:
    """
    A homology class in the basis given by an area-preserving automorphism
    of the torus. Only the class moves, diagrams are never re-based.

    Raises:
        InvalidTangleError: when `matrix` is not an integer 2x2 matrix of
            determinant 1
    """
    m = np.asarray(matrix)
    if m.shape != (2, 2) or not np.issubdtype(m.dtype, np.integer):
        raise InvalidTangleError("a change of basis is an integer 2x2 matrix")
    if int(round(np.linalg.det(m))) != 1:
        raise InvalidTangleError("a change of basis must have determinant 1")
    p, q = m @ np.asarray(homology)
    return int(p), int(q)


def reflect(tangle: TorusTangle, name: Optional[str] = None) -> TorusTangle:
    """Mirror x -> 1 - x and z -> 1 - z with reversed orientation"""
    pieces = []
    for points in tangle.pieces():
        pieces.append([(1 - x, y, 1 - z) for x, y, z in reversed(points)])
    return TorusTangle.from_pieces(pieces, tangle.columns, name)


def delete_tangle_component(tangle: TorusTangle, index: int) -> TorusTangle:
    tangle.component_strands(index)
    pieces = [
        points
        for strand, points in zip(tangle.strands, tangle.pieces())
        if strand.component != index
    ]
    return TorusTangle.from_pieces(pieces, tangle.columns)


def trivial_swatch(components: int, columns: int = 1) -> TorusTangle:
    """`components` parallel horizontal circles"""
    pieces = [
        [(0.0, (i + 0.5) / components, 0.5), (1.0, (i + 0.5) / components, 0.5)]
        for i in range(components)
    ]
    return TorusTangle.from_pieces(pieces, columns, name=f"trivial({components})")


def torus_crossings(tangle: TorusTangle) -> List[Tuple[int, int, Point]]:
    """
    Crossings of the projection to the square: (over component, under
    component, point).
    """
    segments = []
    for strand_index, points in enumerate(tangle.pieces()):
        for k in range(len(points) - 1):
            segments.append((strand_index, k, points[k], points[k + 1]))
    if not segments:
        return []
    starts = np.array([s[2] for s in segments], dtype=float)
    ends = np.array([s[3] for s in segments], dtype=float)
    directions = ends - starts
    result = []
    for i in range(len(segments) - 1):
        p, r = starts[i, :2], directions[i, :2]
        q, s = starts[i + 1 :, :2], directions[i + 1 :, :2]
        denom = r[0] * s[:, 1] - r[1] * s[:, 0]
        qp = q - p
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (qp[:, 0] * s[:, 1] - qp[:, 1] * s[:, 0]) / denom
            u = (qp[:, 0] * r[1] - qp[:, 1] * r[0]) / denom
        inside = (np.abs(denom) > 1e-12) & (t > 1e-9) & (t < 1 - 1e-9)
        inside &= (u > 1e-9) & (u < 1 - 1e-9)
        for k in np.nonzero(inside)[0]:
            j = i + 1 + k
            zi = starts[i, 2] + t[k] * directions[i, 2]
            zj = starts[j, 2] + u[k] * directions[j, 2]
            point = tuple(float(v) for v in starts[i, :2] + t[k] * r) + (0.5,)
            comp_i = tangle.strands[segments[i][0]].component
            comp_j = tangle.strands[segments[j][0]].component
            result.append((comp_i, comp_j, point) if zi > zj else (comp_j, comp_i, point))
    return result


def tangle_to_json(tangle: TorusTangle) -> str:
    data = {
        "name": tangle.name,
        "columns": tangle.columns,
        "strands": [
            {
                "component": s.component,
                "closed": s.closed,
                "points": [list(p) for p in s.points],
            }
            for s in tangle.strands
        ],
    }
    return json.dumps(data, sort_keys=True)


def tangle_from_json(text: str) -> TorusTangle:
    data = json.loads(text)
    strands = [
        Strand(
            tuple(tuple(float(v) for v in p) for p in s["points"]),
            int(s["component"]),
            bool(s.get("closed", False)),
        )
        for s in data["strands"]
    ]
    return TorusTangle(strands, int(data.get("columns", 1)), data.get("name"))
