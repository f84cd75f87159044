"""
Oriented planar diagrams in PD notation.

A crossing X(a, b, c, d) lists its four arcs counterclockwise starting from
the incoming under-strand, so a is the under-strand entering and c the
under-strand leaving. The over-strand runs d -> b at a positive crossing and
b -> d at a negative one. Components are cyclic tuples of arc labels in
traversal order; an empty tuple is a crossingless loop.

Example:
    ```python
    from swatchlink.topology.diagram import Crossing, PlanarDiagram

    hopf = PlanarDiagram(
        crossings=(Crossing((3, 2, 4, 1), 1), Crossing((2, 3, 1, 4), 1)),
        components=((1, 2), (3, 4)),
    )
    hopf.writhe_counts()
    # (2, 0)
    ```
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from swatchlink.exceptions import (
    ComponentIndexError,
    InvalidDiagramError,
    UnknownCrossingError,
)
from swatchlink.pydantic import BaseModel

Occurrence = Tuple[int, int]

MERIDIAN_AXIS = "meridian-axis"
LONGITUDE_AXIS = "longitude-axis"


def swatch_role(index: int) -> str:
    return f"swatch-component({index})"


@dataclass(frozen=True)
class Crossing:
    arcs: Tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(int(a) for a in self.arcs))
        if len(self.arcs) != 4:
            raise InvalidDiagramError([f"crossing {self.arcs} needs four arcs"])
        if self.sign not in (1, -1):
            raise InvalidDiagramError([f"crossing sign {self.sign} is not +1 or -1"])

    def incoming_positions(self) -> Tuple[int, int]:
        return (0, 3 if self.sign > 0 else 1)

    def outgoing_positions(self) -> Tuple[int, int]:
        return (2, 1 if self.sign > 0 else 3)

    @property
    def over_in(self) -> int:
        return self.arcs[3 if self.sign > 0 else 1]

    @property
    def over_out(self) -> int:
        return self.arcs[1 if self.sign > 0 else 3]

    def __str__(self):
        return "X({},{},{},{})".format(*self.arcs)


@dataclass(frozen=True)
class Face:
    """A complementary region, walked with the region on the right"""

    corners: Tuple[Occurrence, ...]
    arcs: Tuple[Tuple[int, bool], ...]

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(sorted(label for label, _ in self.arcs))

    def __len__(self):
        return len(self.corners)


class Violation(BaseModel):
    kind: str
    detail: str


class ValidationReport(BaseModel):
    valid: bool
    violations: List[Violation] = []

    def raise_for_violations(self):
        if not self.valid:
            raise InvalidDiagramError(
                [f"{v.kind}: {v.detail}" for v in self.violations]
            )


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: Tuple[Crossing, ...] = ()
    components: Tuple[Tuple[int, ...], ...] = ()
    roles: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(
            self, "components", tuple(tuple(int(x) for x in c) for c in self.components)
        )
        if self.roles is not None:
            object.__setattr__(self, "roles", tuple(self.roles))

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        return tuple(sorted({x for comp in self.components for x in comp}))

    @property
    def max_label(self) -> int:
        return max(self.labels, default=0)

    @cached_property
    def occurrences(self) -> Dict[int, List[Occurrence]]:
        table = defaultdict(list)
        for index, crossing in enumerate(self.crossings):
            for position, label in enumerate(crossing.arcs):
                table[label].append((index, position))
        return dict(table)

    @cached_property
    def heads(self) -> Dict[int, Occurrence]:
        """Where every arc ends"""
        table = {}
        for index, crossing in enumerate(self.crossings):
            for position in crossing.incoming_positions():
                table[crossing.arcs[position]] = (index, position)
        return table

    @cached_property
    def tails(self) -> Dict[int, Occurrence]:
        """Where every arc starts"""
        table = {}
        for index, crossing in enumerate(self.crossings):
            for position in crossing.outgoing_positions():
                table[crossing.arcs[position]] = (index, position)
        return table

    @cached_property
    def component_of(self) -> Dict[int, int]:
        return {label: i for i, comp in enumerate(self.components) for label in comp}

    def crossing(self, index: int) -> Crossing:
        if not 0 <= index < len(self.crossings):
            raise UnknownCrossingError(f"crossing {index} is not in the diagram")
        return self.crossings[index]

    def strand_components(self, index: int) -> Tuple[int, int]:
        """(under component, over component) of a crossing"""
        crossing = self.crossing(index)
        return (
            self.component_of[crossing.arcs[0]],
            self.component_of[crossing.arcs[1]],
        )

    def is_free_loop(self, component: int) -> bool:
        return not self.components[component]

    def writhe_counts(self) -> Tuple[int, int]:
        positive = sum(1 for c in self.crossings if c.sign > 0)
        return positive, len(self.crossings) - positive

    def writhe(self) -> int:
        positive, negative = self.writhe_counts()
        return positive - negative

    def with_roles(self, roles: Optional[Sequence[str]]) -> "PlanarDiagram":
        return PlanarDiagram(self.crossings, self.components, roles)

    def pd_text(self) -> str:
        return " ".join(str(c) for c in self.crossings)

    def __str__(self):
        return f"PD[{self.pd_text()}] components={list(self.components)}"


def next_arc(diagram: PlanarDiagram, label: int) -> int:
    """The arc that follows `label` along its component"""
    index, position = diagram.heads[label]
    crossing = diagram.crossings[index]
    if position == 0:
        return crossing.arcs[2]
    return crossing.over_out


def trace_components(diagram: PlanarDiagram) -> List[Tuple[int, ...]]:
    """Arc cycles recomputed from the crossings, ordered by smallest label"""
    seen = set()
    cycles = []
    for label in sorted(diagram.occurrences):
        if label in seen:
            continue
        cycle = []
        current = label
        while current not in seen:
            seen.add(current)
            cycle.append(current)
            current = next_arc(diagram, current)
        cycles.append(tuple(cycle))
    return cycles


def crossing_sign(diagram: PlanarDiagram, index: int) -> int:
    """
    Sign of a crossing recomputed from the orientation of the other
    crossings: the sign for which the over-strand arcs have one head and one
    tail each.
    """
    crossing = diagram.crossing(index)
    b, d = crossing.arcs[1], crossing.arcs[3]
    if b == d:
        return crossing.sign

    def role_elsewhere(label):
        for other, position in diagram.occurrences.get(label, []):
            if (other, position) in ((index, 1), (index, 3)):
                continue
            if other == index:
                return "head" if position == 0 else "tail" if position == 2 else None
            if position in diagram.crossings[other].incoming_positions():
                return "head"
            return "tail"
        return None

    role_b = role_elsewhere(b)
    if role_b == "head":
        return 1
    if role_b == "tail":
        return -1
    role_d = role_elsewhere(d)
    if role_d == "tail":
        return 1
    if role_d == "head":
        return -1
    return crossing.sign


def validate_diagram(diagram: PlanarDiagram) -> ValidationReport:
    """
    Check that every label is used exactly twice, once as a head and once as
    a tail, and that the components are the arc cycles of the crossings.
    """
    violations: List[Violation] = []
    counts = Counter(label for c in diagram.crossings for label in c.arcs)
    component_labels = Counter(label for comp in diagram.components for label in comp)

    for label, count in sorted(counts.items()):
        if count != 2:
            violations.append(
                Violation(kind="dangling arc", detail=f"arc {label} is used {count} times")
            )
    for label, count in sorted(component_labels.items()):
        if count != 1:
            violations.append(
                Violation(
                    kind="bad partition",
                    detail=f"arc {label} is listed in {count} component positions",
                )
            )
    if set(counts) != set(component_labels):
        missing = sorted(set(counts) ^ set(component_labels))
        violations.append(
            Violation(kind="bad partition", detail=f"arcs {missing} are not partitioned")
        )
    if violations:
        return ValidationReport(valid=False, violations=violations)

    heads = Counter()
    tails = Counter()
    for crossing in diagram.crossings:
        for position in crossing.incoming_positions():
            heads[crossing.arcs[position]] += 1
        for position in crossing.outgoing_positions():
            tails[crossing.arcs[position]] += 1
    for label in sorted(counts):
        if heads[label] != 1 or tails[label] != 1:
            violations.append(
                Violation(
                    kind="orientation flip",
                    detail=f"arc {label} has {heads[label]} heads and {tails[label]} tails",
                )
            )
    if violations:
        return ValidationReport(valid=False, violations=violations)

    for comp in diagram.components:
        for i, label in enumerate(comp):
            expected = comp[(i + 1) % len(comp)]
            if next_arc(diagram, label) != expected:
                violations.append(
                    Violation(
                        kind="bad partition",
                        detail=f"arc {label} is not followed by {expected}",
                    )
                )
                break

    if diagram.roles is not None and len(diagram.roles) != len(diagram.components):
        violations.append(
            Violation(kind="bad partition", detail="roles do not match components")
        )
    return ValidationReport(valid=not violations, violations=violations)


def writhe_counts(diagram: PlanarDiagram) -> Tuple[int, int]:
    return diagram.writhe_counts()


def faces(diagram: PlanarDiagram) -> List[Face]:
    """
    Faces of the diagram. The corner (c, i) is the wedge between the arms at
    positions i and i + 1 of crossing c; walking from it along the arm at
    i + 1 keeps the face on the right.
    """
    other_end: Dict[Occurrence, Occurrence] = {}
    for label, occ in diagram.occurrences.items():
        if len(occ) == 2:
            other_end[occ[0]] = occ[1]
            other_end[occ[1]] = occ[0]
    tails = diagram.tails

    seen = set()
    result = []
    for index in range(len(diagram.crossings)):
        for corner_pos in range(4):
            start = (index, corner_pos)
            if start in seen:
                continue
            corners = []
            arcs = []
            corner = start
            while corner not in seen:
                seen.add(corner)
                corners.append(corner)
                crossing, position = corner
                arm = (crossing, (position + 1) % 4)
                label = diagram.crossings[crossing].arcs[arm[1]]
                arcs.append((label, tails.get(label) == arm))
                corner = other_end[arm]
            result.append(Face(tuple(corners), tuple(arcs)))
    return result


def find_face(diagram: PlanarDiagram, key: Sequence[int]) -> Face:
    key = tuple(sorted(key))
    for face in faces(diagram):
        if face.key == key:
            return face
    raise KeyError(f"no face with arcs {key}")


def euler_check(diagram: PlanarDiagram) -> bool:
    """Faces of a connected planar diagram number crossings + 2"""
    if not diagram.crossings:
        return True
    return len(faces(diagram)) == len(diagram.crossings) + 2 * connected_pieces(diagram)


def connected_pieces(diagram: PlanarDiagram) -> int:
    """Number of connected pieces of the projection, ignoring free loops"""
    return len(set(piece_of(diagram).values()))


def piece_of(diagram: PlanarDiagram) -> Dict[int, int]:
    """Arc label -> a representative label of its connected piece"""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for comp in diagram.components:
        for label in comp:
            parent[find(label)] = find(comp[0])
    for crossing in diagram.crossings:
        parent[find(crossing.arcs[0])] = find(crossing.arcs[1])
    return {label: find(label) for comp in diagram.components for label in comp}


def reverse_component(diagram: PlanarDiagram, component: int) -> PlanarDiagram:
    """Reverse the orientation of one component, keeping all labels"""
    if not 0 <= component < diagram.component_count:
        raise ComponentIndexError(f"component {component} is out of range")
    members = set(diagram.components[component])
    crossings = []
    for crossing in diagram.crossings:
        under = crossing.arcs[0] in members
        over = crossing.arcs[1] in members
        a, b, c, d = crossing.arcs
        if under and over:
            crossings.append(Crossing((c, d, a, b), crossing.sign))
        elif under:
            crossings.append(Crossing((c, d, a, b), -crossing.sign))
        elif over:
            crossings.append(Crossing((a, b, c, d), -crossing.sign))
        else:
            crossings.append(crossing)
    components = list(diagram.components)
    comp = components[component]
    if comp:
        components[component] = (comp[0],) + tuple(reversed(comp[1:]))
    return PlanarDiagram(tuple(crossings), tuple(components), diagram.roles)


def mirror(diagram: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing"""
    crossings = []
    for crossing in diagram.crossings:
        a, b, c, d = crossing.arcs
        if crossing.sign > 0:
            crossings.append(Crossing((d, a, b, c), -1))
        else:
            crossings.append(Crossing((b, c, d, a), 1))
    return PlanarDiagram(tuple(crossings), diagram.components, diagram.roles)


def relabel(diagram: PlanarDiagram) -> PlanarDiagram:
    """Renumber arcs 1..2c following the components in order"""
    mapping = {}
    for comp in diagram.components:
        for label in comp:
            mapping[label] = len(mapping) + 1
    crossings = tuple(
        Crossing(tuple(mapping[x] for x in c.arcs), c.sign) for c in diagram.crossings
    )
    components = tuple(tuple(mapping[x] for x in comp) for comp in diagram.components)
    return PlanarDiagram(crossings, components, diagram.roles)


def canonical_key(diagram: PlanarDiagram) -> tuple:
    """Key that ignores arc numbering and crossing order"""
    relabeled = relabel(diagram)
    return (
        tuple(sorted((c.arcs, c.sign) for c in relabeled.crossings)),
        tuple(len(comp) for comp in relabeled.components),
    )


def split_union(left: PlanarDiagram, right: PlanarDiagram) -> PlanarDiagram:
    """Disjoint union, with the arcs of `right` shifted past those of `left`"""
    offset = left.max_label
    crossings = left.crossings + tuple(
        Crossing(tuple(x + offset for x in c.arcs), c.sign) for c in right.crossings
    )
    components = left.components + tuple(
        tuple(x + offset for x in comp) for comp in right.components
    )
    roles = None
    if left.roles is not None and right.roles is not None:
        roles = left.roles + right.roles
    return PlanarDiagram(crossings, components, roles)


def sublink(diagram: PlanarDiagram, keep: Sequence[int]) -> PlanarDiagram:
    """Diagram of the components listed in `keep`, in that order"""
    from .surgery import delete_component

    keep = list(keep)
    for index in keep:
        if not 0 <= index < diagram.component_count:
            raise ComponentIndexError(f"component {index} is out of range")
    result = diagram
    order = list(range(diagram.component_count))
    for index in sorted(set(order) - set(keep), reverse=True):
        result = delete_component(result, index)
        order.remove(index)
    permutation = [order.index(i) for i in keep]
    components = tuple(result.components[i] for i in permutation)
    roles = (
        tuple(result.roles[i] for i in permutation) if result.roles is not None else None
    )
    return PlanarDiagram(result.crossings, components, roles)
