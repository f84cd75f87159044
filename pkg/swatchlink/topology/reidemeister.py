"""
Reidemeister moves on planar diagrams.

Reducing moves delete crossings and merge the arcs that ran through them;
the merged arc keeps the smallest label. Increasing moves append their new
crossings at the end and allocate new labels above the current maximum, so
that the matching reducing move restores the diagram exactly.
"""

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from swatchlink.exceptions import (
    ComponentIndexError,
    MoveNotApplicableError,
)

from .diagram import Crossing, Face, PlanarDiagram, faces

RM1_VARIANTS = ("A1", "A2", "B1", "B2")


class MoveType(str, Enum):
    RM1_MINUS = "RM1-"
    RM1_PLUS = "RM1+"
    RM2_MINUS = "RM2-"
    RM2_PLUS = "RM2+"
    RM3 = "RM3"


@dataclass(frozen=True)
class ReidemeisterMove:
    """
    A move and its location.

    - RM1-: `crossings` holds the kink crossing.
    - RM1+: `arcs` holds the arc to kink (or `components` a free loop) and
      `variant` one of A1, A2, B1, B2.
    - RM2-: `crossings` holds the two crossings of the bigon.
    - RM2+: `arcs` (or free-loop `components`) names the strands e and f,
      `face` the face they share and `over` whether e goes over f.
    - RM3: `crossings` holds the three crossings of the triangle.
    """

    kind: MoveType
    crossings: Tuple[int, ...] = ()
    arcs: Tuple[int, ...] = ()
    components: Tuple[int, ...] = ()
    face: Tuple[int, ...] = ()
    variant: Optional[str] = None
    over: Optional[bool] = None

    def to_dict(self) -> dict:
        data = asdict(self)
        data["kind"] = self.kind.value
        return {k: list(v) if isinstance(v, tuple) else v for k, v in data.items()}

    @classmethod
    def from_dict(cls, data: dict) -> "ReidemeisterMove":
        return cls(
            kind=MoveType(data["kind"]),
            crossings=tuple(data.get("crossings", ())),
            arcs=tuple(data.get("arcs", ())),
            components=tuple(data.get("components", ())),
            face=tuple(data.get("face", ())),
            variant=data.get("variant"),
            over=data.get("over"),
        )

    def __str__(self):
        where = self.crossings or self.arcs or self.components
        return f"{self.kind.value}@{list(where)}"


def _remove_crossings(diagram: PlanarDiagram, doomed: Sequence[int]) -> PlanarDiagram:
    parent: Dict[int, int] = {}

    def find(x):
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            low, high = min(rx, ry), max(rx, ry)
            parent[high] = low

    doomed = set(doomed)
    for index in doomed:
        a, b, c, d = diagram.crossings[index].arcs
        union(a, c)
        union(b, d)

    crossings = tuple(
        Crossing(tuple(find(x) for x in crossing.arcs), crossing.sign)
        for index, crossing in enumerate(diagram.crossings)
        if index not in doomed
    )
    present = {x for crossing in crossings for x in crossing.arcs}
    components = []
    for comp in diagram.components:
        merged: List[int] = []
        for label in comp:
            root = find(label)
            if not merged or merged[-1] != root:
                merged.append(root)
        while len(merged) > 1 and merged[0] == merged[-1]:
            merged.pop()
        if len(merged) == 1 and merged[0] not in present:
            merged = []
        components.append(tuple(merged))
    return PlanarDiagram(crossings, tuple(components), diagram.roles)


def _replace_head(
    crossings: List[Crossing], diagram: PlanarDiagram, label: int, new: int
):
    index, position = diagram.heads[label]
    arcs = list(crossings[index].arcs)
    arcs[position] = new
    crossings[index] = Crossing(tuple(arcs), crossings[index].sign)


def _insert_after(
    components: Sequence[Tuple[int, ...]], inserts: Dict[int, Tuple[int, ...]]
) -> Tuple[Tuple[int, ...], ...]:
    result = []
    for comp in components:
        new = []
        for label in comp:
            new.append(label)
            new.extend(inserts.get(label, ()))
        result.append(tuple(new))
    return tuple(result)


def _free_loop(diagram: PlanarDiagram, move: ReidemeisterMove, index: int) -> int:
    if not 0 <= index < diagram.component_count:
        raise ComponentIndexError(f"component {index} is out of range")
    if diagram.components[index]:
        raise MoveNotApplicableError(move, f"component {index} is not a free loop")
    return index


def _rm1_minus(diagram: PlanarDiagram, move: ReidemeisterMove) -> PlanarDiagram:
    if len(move.crossings) != 1:
        raise MoveNotApplicableError(move, "RM1- needs one crossing")
    index = move.crossings[0]
    if not 0 <= index < diagram.crossing_count:
        raise MoveNotApplicableError(move, "no such crossing")
    arcs = diagram.crossings[index].arcs
    if not any(arcs[i] == arcs[(i + 1) % 4] for i in range(4)):
        raise MoveNotApplicableError(move, "crossing is not a kink")
    return _remove_crossings(diagram, [index])


def _rm1_plus(diagram: PlanarDiagram, move: ReidemeisterMove) -> PlanarDiagram:
    if move.variant not in RM1_VARIANTS:
        raise MoveNotApplicableError(move, f"variant must be one of {RM1_VARIANTS}")
    fresh = diagram.max_label + 1
    crossings = list(diagram.crossings)
    components = list(diagram.components)
    if move.components:
        component = _free_loop(diagram, move, move.components[0])
        e, k = fresh, fresh + 1
        n = e
        components[component] = (e, k)
    else:
        if len(move.arcs) != 1 or move.arcs[0] not in diagram.heads:
            raise MoveNotApplicableError(move, "RM1+ needs an arc of the diagram")
        e = move.arcs[0]
        k, n = fresh, fresh + 1
        _replace_head(crossings, diagram, e, n)
        components = list(_insert_after(components, {e: (k, n)}))
    arcs, sign = {
        "A1": ((e, k, k, n), -1),
        "A2": ((e, n, k, k), 1),
        "B1": ((k, e, n, k), -1),
        "B2": ((k, k, n, e), 1),
    }[move.variant]
    crossings.append(Crossing(arcs, sign))
    return PlanarDiagram(tuple(crossings), tuple(components), diagram.roles)


def _bigon(diagram: PlanarDiagram, face: Face) -> bool:
    if len(face.corners) != 2:
        return False
    (c1, i1), (c2, i2) = face.corners
    if c1 == c2:
        return False
    # side x runs from c1 (arm i1 + 1) to c2 (arm i2); side y the other way
    x_ends = ((i1 + 1) % 4, i2)
    y_ends = ((i2 + 1) % 4, i1)
    x_over = all(p % 2 == 1 for p in x_ends)
    x_under = all(p % 2 == 0 for p in x_ends)
    y_over = all(p % 2 == 1 for p in y_ends)
    y_under = all(p % 2 == 0 for p in y_ends)
    return (x_over and y_under) or (x_under and y_over)


def _rm2_minus(diagram: PlanarDiagram, move: ReidemeisterMove) -> PlanarDiagram:
    if len(move.crossings) != 2:
        raise MoveNotApplicableError(move, "RM2- needs two crossings")
    wanted = set(move.crossings)
    for face in faces(diagram):
        if {c for c, _ in face.corners} == wanted and _bigon(diagram, face):
            return _remove_crossings(diagram, move.crossings)
    raise MoveNotApplicableError(move, "crossings do not bound a reducible bigon")


def _face_direction(face: Face, label: int) -> bool:
    for arc, forward in face.arcs:
        if arc == label:
            return forward
    raise KeyError(label)


def _rm2_plus(diagram: PlanarDiagram, move: ReidemeisterMove) -> PlanarDiagram:
    if move.over is None:
        raise MoveNotApplicableError(move, "RM2+ needs `over`")
    strands = list(move.arcs)
    free = list(move.components)
    if len(strands) + len(free) != 2:
        raise MoveNotApplicableError(move, "RM2+ needs two strands")

    # e is the first strand named by arcs, then free loops
    names: List[Tuple[str, int]] = [("arc", a) for a in strands] + [
        ("loop", _free_loop(diagram, move, c)) for c in free
    ]
    if move.arcs and len(move.arcs) == 2 and move.arcs[0] == move.arcs[1]:
        raise MoveNotApplicableError(move, "RM2+ needs two distinct arcs")

    face = None
    if strands:
        try:
            from .diagram import find_face

            face = find_face(diagram, move.face) if move.face else None
        except KeyError:
            face = None
        if face is None or any(a not in {x for x, _ in face.arcs} for a in strands):
            raise MoveNotApplicableError(move, "arcs do not share the given face")

    (e_kind, e_ref), (f_kind, f_ref) = names
    e_free, f_free = e_kind == "loop", f_kind == "loop"
    e_forward = True if e_free else _face_direction(face, e_ref)
    f_forward = True if f_free else _face_direction(face, f_ref)

    fresh = [diagram.max_label + 1]

    def allocate():
        value = fresh[0]
        fresh[0] += 1
        return value

    e1 = allocate() if e_free else e_ref
    e2 = allocate()
    e3 = e1 if e_free else allocate()
    f1 = allocate() if f_free else f_ref
    f2 = allocate()
    f3 = f1 if f_free else allocate()

    crossings = list(diagram.crossings)
    if not e_free:
        _replace_head(crossings, diagram, e1, e3)
    if not f_free:
        _replace_head(crossings, diagram, f1, f3)

    f_west = e_forward == f_forward
    if move.over:
        if not f_west:
            p, q = ((f1, e2, f2, e1), 1), ((f2, e2, f3, e3), -1)
        else:
            p, q = ((f2, e1, f3, e2), -1), ((f1, e3, f2, e2), 1)
    else:
        if not f_west:
            p, q = ((e1, f1, e2, f2), -1), ((e2, f3, e3, f2), 1)
        else:
            p, q = ((e1, f3, e2, f2), 1), ((e2, f1, e3, f2), -1)
    if not e_forward:
        p = ((p[0][0], p[0][3], p[0][2], p[0][1]), -p[1])
        q = ((q[0][0], q[0][3], q[0][2], q[0][1]), -q[1])
    crossings.append(Crossing(*p))
    crossings.append(Crossing(*q))

    components = list(diagram.components)
    inserts = {}
    if e_free:
        components[e_ref] = (e1, e2)
    else:
        inserts[e1] = (e2, e3)
    if f_free:
        components[f_ref] = (f1, f2)
    else:
        inserts[f1] = inserts.get(f1, ()) + (f2, f3)
    components = _insert_after(components, inserts)
    return PlanarDiagram(tuple(crossings), components, diagram.roles)


def _rm3_triangle(diagram: PlanarDiagram, face: Face) -> bool:
    if len(face.corners) != 3 or len({c for c, _ in face.corners}) != 3:
        return False
    kinds = []
    corners = face.corners
    for k in range(3):
        (c1, i1), (c2, i2) = corners[k], corners[(k + 1) % 3]
        ends = ((i1 + 1) % 4 % 2, i2 % 2)
        kinds.append("over" if ends == (1, 1) else "under" if ends == (0, 0) else "mixed")
    return sorted(kinds) == ["mixed", "over", "under"]


def _rm3(diagram: PlanarDiagram, move: ReidemeisterMove) -> PlanarDiagram:
    if len(set(move.crossings)) != 3:
        raise MoveNotApplicableError(move, "RM3 needs three crossings")
    wanted = set(move.crossings)
    triangle = next(
        (
            f
            for f in faces(diagram)
            if {c for c, _ in f.corners} == wanted and _rm3_triangle(diagram, f)
        ),
        None,
    )
    if triangle is None:
        raise MoveNotApplicableError(move, "crossings do not bound an RM3 triangle")

    arcs = {c: list(diagram.crossings[c].arcs) for c in wanted}
    corners = triangle.corners
    for k in range(3):
        (c1, i1), (c2, i2) = corners[k], corners[(k + 1) % 3]
        side_at_c1 = (i1 + 1) % 4
        side_at_c2 = i2
        outer_1 = (side_at_c1 + 2) % 4
        outer_2 = (side_at_c2 + 2) % 4
        original_1 = diagram.crossings[c1].arcs[outer_1]
        original_2 = diagram.crossings[c2].arcs[outer_2]
        arcs[c1][outer_1] = original_2
        arcs[c2][outer_2] = original_1

    crossings = list(diagram.crossings)
    for c in wanted:
        a, b, cc, d = arcs[c]
        crossings[c] = Crossing((cc, d, a, b), diagram.crossings[c].sign)
    return PlanarDiagram(tuple(crossings), diagram.components, diagram.roles)


_DISPATCH = {
    MoveType.RM1_MINUS: _rm1_minus,
    MoveType.RM1_PLUS: _rm1_plus,
    MoveType.RM2_MINUS: _rm2_minus,
    MoveType.RM2_PLUS: _rm2_plus,
    MoveType.RM3: _rm3,
}


def apply_reidemeister(diagram: PlanarDiagram, move: ReidemeisterMove) -> PlanarDiagram:
    """
    Apply a move at its location.

    Raises:
        MoveNotApplicableError: when the location does not admit the move
    """
    return _DISPATCH[MoveType(move.kind)](diagram, move)


def inverse_move(
    before: PlanarDiagram, move: ReidemeisterMove
) -> Optional[ReidemeisterMove]:
    """
    The move that undoes `move` applied to `before`, for increasing moves
    and RM3. Reducing moves lose the labels of the merged arcs and have no
    exact inverse.
    """
    n = before.crossing_count
    if move.kind == MoveType.RM1_PLUS:
        return ReidemeisterMove(MoveType.RM1_MINUS, crossings=(n,))
    if move.kind == MoveType.RM2_PLUS:
        return ReidemeisterMove(MoveType.RM2_MINUS, crossings=(n, n + 1))
    if move.kind == MoveType.RM3:
        return move
    return None


def reducing_moves(diagram: PlanarDiagram) -> Iterator[ReidemeisterMove]:
    """RM1- and RM2- locations in a deterministic order"""
    for index, crossing in enumerate(diagram.crossings):
        arcs = crossing.arcs
        if any(arcs[i] == arcs[(i + 1) % 4] for i in range(4)):
            yield ReidemeisterMove(MoveType.RM1_MINUS, crossings=(index,))
    seen = set()
    for face in faces(diagram):
        if _bigon(diagram, face):
            pair = tuple(sorted(c for c, _ in face.corners))
            if pair not in seen:
                seen.add(pair)
                yield ReidemeisterMove(MoveType.RM2_MINUS, crossings=pair)


def rm3_moves(diagram: PlanarDiagram) -> Iterator[ReidemeisterMove]:
    seen = set()
    for face in faces(diagram):
        if _rm3_triangle(diagram, face):
            triple = tuple(sorted(c for c, _ in face.corners))
            if triple not in seen:
                seen.add(triple)
                yield ReidemeisterMove(MoveType.RM3, crossings=triple)


def rm1_plus_moves(diagram: PlanarDiagram) -> Iterator[ReidemeisterMove]:
    for label in diagram.labels:
        for variant in RM1_VARIANTS:
            yield ReidemeisterMove(MoveType.RM1_PLUS, arcs=(label,), variant=variant)
    for index, comp in enumerate(diagram.components):
        if not comp:
            for variant in RM1_VARIANTS:
                yield ReidemeisterMove(
                    MoveType.RM1_PLUS, components=(index,), variant=variant
                )


def rm2_plus_moves(diagram: PlanarDiagram) -> Iterator[ReidemeisterMove]:
    """RM2+ between distinct arcs of a common face, both layerings"""
    for face in faces(diagram):
        labels = list(dict.fromkeys(label for label, _ in face.arcs))
        for i, e in enumerate(labels):
            for f in labels[i + 1 :]:
                for over in (True, False):
                    yield ReidemeisterMove(
                        MoveType.RM2_PLUS, arcs=(e, f), face=face.key, over=over
                    )


def replay_moves(
    diagram: PlanarDiagram, moves: Sequence[ReidemeisterMove]
) -> PlanarDiagram:
    """Apply a recorded trace move by move"""
    for move in moves:
        diagram = apply_reidemeister(diagram, move)
    return diagram
