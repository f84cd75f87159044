"""
Band surgery and component deletion on planar diagrams.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from swatchlink.exceptions import ComponentIndexError, IncompatibleBandError

from .diagram import Crossing, PlanarDiagram, faces, piece_of, reverse_component


@dataclass(frozen=True)
class BandAttachment:
    """Where a band end sits: on an arc, or on a crossingless loop"""

    arc: Optional[int] = None
    component: Optional[int] = None

    def __post_init__(self):
        if (self.arc is None) == (self.component is None):
            raise IncompatibleBandError("a band end needs exactly one of arc or component")


def delete_component(diagram: PlanarDiagram, index: int) -> PlanarDiagram:
    """
    Remove component `index` together with every crossing it takes part in.
    Arcs of other components that ran through those crossings are merged
    and keep their smallest label.
    """
    if not 0 <= index < diagram.component_count:
        raise ComponentIndexError(f"component {index} is out of range")
    from .reidemeister import _remove_crossings

    members = set(diagram.components[index])
    doomed = [
        i
        for i, crossing in enumerate(diagram.crossings)
        if members.intersection(crossing.arcs)
    ]
    # drop the component first so that the merge does not see it
    components = diagram.components[:index] + diagram.components[index + 1 :]
    roles = None
    if diagram.roles is not None:
        roles = diagram.roles[:index] + diagram.roles[index + 1 :]
    trimmed = PlanarDiagram(diagram.crossings, components, roles)
    return _remove_crossings(trimmed, doomed)


def _component_index(diagram: PlanarDiagram, end: BandAttachment) -> int:
    if end.component is not None:
        if not 0 <= end.component < diagram.component_count:
            raise ComponentIndexError(f"component {end.component} is out of range")
        if diagram.components[end.component]:
            raise IncompatibleBandError(
                f"component {end.component} has crossings; attach to an arc instead"
            )
        return end.component
    if end.arc not in diagram.component_of:
        raise IncompatibleBandError(f"arc {end.arc} is not in the diagram")
    return diagram.component_of[end.arc]


def _corridor(diagram: PlanarDiagram, a: int, b: int) -> Tuple[bool, bool]:
    """
    Directions of a and b along a face that contains both. Arcs of two
    different connected pieces always meet: on the sphere either piece can
    be moved into any face of the other.
    """
    around = faces(diagram)
    first_seen: Dict[int, bool] = {}
    for face in around:
        directions = {}
        for label, forward in face.arcs:
            directions.setdefault(label, forward)
            first_seen.setdefault(label, forward)
        if a in directions and b in directions:
            return directions[a], directions[b]
    pieces = piece_of(diagram)
    if pieces[a] != pieces[b]:
        return first_seen[a], first_seen[b]
    raise IncompatibleBandError(f"arcs {a} and {b} do not share a face")


def band_surgery(
    diagram: PlanarDiagram, first: BandAttachment, second: BandAttachment
) -> PlanarDiagram:
    """
    Attach a planar band inside one face between two attachment points and
    do surgery along it.

    Joining two components merges them (the second one is reversed first
    when the band would be incoherent); a band from a component to itself
    must be coherent and splits it in two.

    Raises:
        IncompatibleBandError: when no face contains both ends, or when a
            band from a component to itself is incoherent
    """
    ci = _component_index(diagram, first)
    cj = _component_index(diagram, second)

    if first.component is not None or second.component is not None:
        return _band_with_free_loop(diagram, first, second, ci, cj)

    a, b = first.arc, second.arc
    if a == b:
        raise IncompatibleBandError("band ends must lie on different arcs")
    forward_a, forward_b = _corridor(diagram, a, b)
    coherent = forward_a == forward_b

    if ci == cj:
        if not coherent:
            raise IncompatibleBandError("a band from a component to itself must be coherent")
        return _swap_heads(diagram, a, b, split=True)

    if not coherent:
        diagram = reverse_component(diagram, cj)
    return _swap_heads(diagram, a, b, split=False)


def _swap_heads(diagram: PlanarDiagram, a: int, b: int, split: bool) -> PlanarDiagram:
    """Exchange where a and b end: a now ends where b ended and vice versa"""
    head_a = diagram.heads[a]
    head_b = diagram.heads[b]
    crossings = list(diagram.crossings)

    def put(occurrence, label):
        index, position = occurrence
        arcs = list(crossings[index].arcs)
        arcs[position] = label
        crossings[index] = Crossing(tuple(arcs), crossings[index].sign)

    put(head_a, b)
    put(head_b, a)

    ci = diagram.component_of[a]
    cj = diagram.component_of[b]
    comp_a = diagram.components[ci]
    comp_b = diagram.components[cj]
    ia, ib = comp_a.index(a), comp_b.index(b)
    roles = list(diagram.roles) if diagram.roles is not None else None

    components = list(diagram.components)
    if split:
        # the cycle a -> (after b) and b -> (after a) closes into two loops
        low, high = sorted((ia, ib))
        first = comp_a[: low + 1] + comp_a[high + 1 :]
        second = comp_a[low + 1 : high + 1]
        components[ci] = first
        components.insert(ci + 1, second)
        if roles is not None:
            roles.insert(ci + 1, roles[ci])
    else:
        # a -> (after b) ... b -> (after a)
        rotated_b = comp_b[ib + 1 :] + comp_b[: ib + 1]
        merged = comp_a[: ia + 1] + rotated_b + comp_a[ia + 1 :]
        components[ci] = merged
        del components[cj]
        if roles is not None:
            del roles[cj]
    return PlanarDiagram(
        tuple(crossings), tuple(components), tuple(roles) if roles is not None else None
    )


def _band_with_free_loop(diagram, first, second, ci, cj) -> PlanarDiagram:
    components = list(diagram.components)
    roles = list(diagram.roles) if diagram.roles is not None else None
    if ci == cj:
        # a band from a crossingless loop to itself splits it in two
        components.insert(ci + 1, ())
        if roles is not None:
            roles.insert(ci + 1, roles[ci])
    else:
        loop = cj if components[cj] == () and second.component is not None else ci
        del components[loop]
        if roles is not None:
            del roles[loop]
    return PlanarDiagram(
        diagram.crossings, tuple(components), tuple(roles) if roles is not None else None
    )
