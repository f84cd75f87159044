"""
Text codes for planar diagrams.

Three formats are written and read back:

- ``pd``: crossings as ``X(a,b,c,d)`` terms separated by spaces, followed by
  ``O(i)`` for every crossingless loop at component position i.
- ``gauss``: the signed Gauss code of a link. Each component is a list of
  crossing numbers, positive on the over pass and negative on the under pass;
  components are separated by `` | `` (``()`` for a crossingless loop), and
  the crossing signs follow after `` ; `` as a string of ``+`` and ``-``.
- ``dt``: the Dowker-Thistlethwaite code of a knot, the even partners of
  1, 3, 5, ... negated when the even pass is an over pass.

Every emitter works on the canonical form of the diagram, so exporting,
importing and exporting again gives the same text.
"""

import itertools
import re
from typing import Dict, List, Tuple

from swatchlink.constants import DT_IMPORT_LIMIT
from swatchlink.exceptions import CodeParseError, FormatNotApplicableError

from .diagram import (
    Crossing,
    PlanarDiagram,
    faces,
    trace_components,
    validate_diagram,
)

_PD_TERM = re.compile(r"([XO])\(\s*([-\d\s,]+)\)")


def canonical_diagram(diagram: PlanarDiagram) -> PlanarDiagram:
    """
    Arcs renumbered 1..2c along the components and crossings ordered by their
    first visit, which is the form every code reproduces on import.
    """
    order: List[int] = []
    seen = set()
    for comp in diagram.components:
        for label in comp:
            index, _ = diagram.heads[label]
            if index not in seen:
                seen.add(index)
                order.append(index)
    order.extend(i for i in range(diagram.crossing_count) if i not in seen)
    mapping = {}
    for comp in diagram.components:
        for label in comp:
            mapping[label] = len(mapping) + 1
    crossings = tuple(
        Crossing(tuple(mapping[x] for x in diagram.crossings[i].arcs), diagram.crossings[i].sign)
        for i in order
    )
    components = tuple(tuple(mapping[x] for x in comp) for comp in diagram.components)
    return PlanarDiagram(crossings, components, diagram.roles)


# PD


def to_pd_text(diagram: PlanarDiagram) -> str:
    canonical = canonical_diagram(diagram)
    terms = [str(c) for c in canonical.crossings]
    terms += [f"O({i})" for i, comp in enumerate(canonical.components) if not comp]
    return " ".join(terms)


def from_pd_text(text: str) -> PlanarDiagram:
    """
    Read PD text. Signs and component orientations are recovered from the
    under-strands; a component that only passes over is oriented along
    increasing arc labels.
    """
    arcs_list: List[Tuple[int, int, int, int]] = []
    loops: List[int] = []
    position = 0
    stripped = text.strip()
    for match in _PD_TERM.finditer(stripped):
        if stripped[position : match.start()].strip(" ,;"):
            raise CodeParseError(f"unexpected text at position {position}")
        position = match.end()
        values = [int(v) for v in match.group(2).replace(",", " ").split()]
        if match.group(1) == "X":
            if len(values) != 4:
                raise CodeParseError(f"crossing {match.group(0)} needs four arcs")
            arcs_list.append(tuple(values))
        else:
            if len(values) != 1:
                raise CodeParseError(f"loop {match.group(0)} needs one index")
            loops.append(values[0])
    if stripped[position:].strip(" ,;"):
        raise CodeParseError(f"unexpected text at position {position}")
    return _orient(arcs_list, loops)


def _orient(arcs_list, loops) -> PlanarDiagram:
    occurrences: Dict[int, List[Tuple[int, int]]] = {}
    for index, arcs in enumerate(arcs_list):
        for pos, label in enumerate(arcs):
            occurrences.setdefault(label, []).append((index, pos))
    for label, occ in occurrences.items():
        if len(occ) != 2:
            raise CodeParseError(f"arc {label} appears {len(occ)} times")

    role = {}
    for index in range(len(arcs_list)):
        role[(index, 0)] = "head"
        role[(index, 2)] = "tail"
    signs: List = [None] * len(arcs_list)
    flip = {"head": "tail", "tail": "head"}

    while True:
        progress = False
        for occ in occurrences.values():
            o1, o2 = occ
            if o1 in role and o2 not in role:
                role[o2] = flip[role[o1]]
                progress = True
            elif o2 in role and o1 not in role:
                role[o1] = flip[role[o2]]
                progress = True
        for index in range(len(arcs_list)):
            if signs[index] is not None:
                continue
            if (index, 1) in role:
                signs[index] = 1 if role[(index, 1)] == "tail" else -1
            elif (index, 3) in role:
                signs[index] = 1 if role[(index, 3)] == "head" else -1
            else:
                continue
            role[(index, 1)] = "tail" if signs[index] > 0 else "head"
            role[(index, 3)] = "head" if signs[index] > 0 else "tail"
            progress = True
        if progress:
            continue
        pending = [i for i, s in enumerate(signs) if s is None]
        if not pending:
            break
        # follow the numbering: the over-strand runs from the smaller label
        index = pending[0]
        _, b, _, d = arcs_list[index]
        signs[index] = -1 if d == b + 1 else 1
        role[(index, 1)] = "tail" if signs[index] > 0 else "head"
        role[(index, 3)] = "head" if signs[index] > 0 else "tail"

    crossings = tuple(Crossing(arcs, sign) for arcs, sign in zip(arcs_list, signs))
    loose = PlanarDiagram(crossings, ())
    try:
        cycles = trace_components(loose)
    except KeyError as e:
        raise CodeParseError(f"inconsistent orientation at arc {e}") from e
    components: List[Tuple[int, ...]] = [
        cycle[cycle.index(min(cycle)) :] + cycle[: cycle.index(min(cycle))]
        for cycle in cycles
    ]
    components.sort(key=min)
    for index in sorted(loops):
        components.insert(index, ())
    diagram = PlanarDiagram(crossings, tuple(components))
    validate_diagram(diagram).raise_for_violations()
    return diagram


# Gauss


def _events(diagram: PlanarDiagram):
    """Per component, (crossing index, is over pass) at every arc head"""
    result = []
    for comp in diagram.components:
        events = []
        for label in comp:
            index, position = diagram.heads[label]
            events.append((index, position % 2 == 1))
        result.append(events)
    return result


def to_gauss_code(diagram: PlanarDiagram) -> str:
    canonical = canonical_diagram(diagram)
    numbers: Dict[int, int] = {}
    parts = []
    for events in _events(canonical):
        if not events:
            parts.append("()")
            continue
        tokens = []
        for index, over in events:
            number = numbers.setdefault(index, len(numbers) + 1)
            tokens.append(str(number if over else -number))
        parts.append(" ".join(tokens))
    signs = "".join(
        "+" if canonical.crossings[index].sign > 0 else "-"
        for index, _ in sorted(numbers.items(), key=lambda item: item[1])
    )
    return " | ".join(parts) + " ; " + signs


def from_gauss_code(text: str) -> PlanarDiagram:
    if ";" not in text:
        raise CodeParseError("gauss code needs ' ; ' before the crossing signs")
    body, signs_text = text.rsplit(";", 1)
    signs_text = signs_text.strip()
    if any(ch not in "+-" for ch in signs_text):
        raise CodeParseError("crossing signs must be + or -")
    components_events = []
    for part in body.split("|"):
        part = part.strip()
        if part == "()":
            components_events.append([])
            continue
        try:
            components_events.append([int(tok) for tok in part.split()])
        except ValueError as e:
            raise CodeParseError(f"bad gauss component {part!r}") from e

    count = len(signs_text)
    passes: Dict[int, Dict[str, Tuple[int, int]]] = {k: {} for k in range(1, count + 1)}
    components = []
    label = 0
    for events in components_events:
        m = len(events)
        labels = [label + r + 1 for r in range(m)]
        label += m
        for r, event in enumerate(events):
            number = abs(event)
            if number not in passes:
                raise CodeParseError(f"crossing {number} has no sign")
            kind = "over" if event > 0 else "under"
            if kind in passes[number]:
                raise CodeParseError(f"crossing {number} has two {kind} passes")
            passes[number][kind] = (labels[r], labels[(r + 1) % m])
        components.append(tuple(labels))

    crossings = []
    for number in range(1, count + 1):
        if set(passes[number]) != {"over", "under"}:
            raise CodeParseError(f"crossing {number} needs one over and one under pass")
        a, c = passes[number]["under"]
        over_in, over_out = passes[number]["over"]
        sign = 1 if signs_text[number - 1] == "+" else -1
        if sign > 0:
            crossings.append(Crossing((a, over_out, c, over_in), 1))
        else:
            crossings.append(Crossing((a, over_in, c, over_out), -1))
    diagram = PlanarDiagram(tuple(crossings), tuple(components))
    validate_diagram(diagram).raise_for_violations()
    return diagram


# DT


def to_dt_code(diagram: PlanarDiagram) -> str:
    if diagram.component_count != 1 or diagram.crossing_count == 0:
        raise FormatNotApplicableError("DT codes describe knot diagrams with crossings")
    events = _events(canonical_diagram(diagram))[0]
    visits: Dict[int, List[Tuple[int, bool]]] = {}
    for number, (index, over) in enumerate(events, start=1):
        visits.setdefault(index, []).append((number, over))
    partner = {}
    for (first, first_over), (second, second_over) in visits.values():
        odd, even = (first, second) if first % 2 else (second, first)
        if odd % 2 == 0 or even % 2:
            raise FormatNotApplicableError("crossing visited twice with the same parity")
        even_over = second_over if even == second else first_over
        partner[odd] = -even if even_over else even
    return " ".join(str(partner[odd]) for odd in sorted(partner))


def from_dt_code(text: str) -> PlanarDiagram:
    """
    Realise a DT code by searching crossing signs for a planar embedding.
    The two mirror-image embeddings give the same code; the one whose first
    crossing is positive is returned.
    """
    try:
        evens = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as e:
        raise CodeParseError(f"bad DT code {text!r}") from e
    n = len(evens)
    if n == 0:
        raise CodeParseError("empty DT code")
    if n > DT_IMPORT_LIMIT:
        raise FormatNotApplicableError(
            f"DT import is limited to {DT_IMPORT_LIMIT} crossings"
        )
    if sorted(abs(e) for e in evens) != list(range(2, 2 * n + 1, 2)):
        raise CodeParseError("DT code must use every even number once")

    total = 2 * n
    crossing_passes = []
    for k, even in enumerate(evens):
        odd = 2 * k + 1
        under, over = (odd, abs(even)) if even < 0 else (abs(even), odd)
        crossing_passes.append((under, over))

    def build(signs):
        crossings = []
        for (under, over), sign in zip(crossing_passes, signs):
            a, c = under, under % total + 1
            over_in, over_out = over, over % total + 1
            if sign > 0:
                crossings.append(Crossing((a, over_out, c, over_in), 1))
            else:
                crossings.append(Crossing((a, over_in, c, over_out), -1))
        return PlanarDiagram(tuple(crossings), (tuple(range(1, total + 1)),))

    for rest in itertools.product((1, -1), repeat=n - 1):
        candidate = build((1,) + rest)
        if len(faces(candidate)) == n + 2:
            return candidate
    raise CodeParseError(f"DT code {text!r} is not realisable")


def export_code(diagram: PlanarDiagram, fmt: str) -> str:
    if fmt == "pd":
        return to_pd_text(diagram)
    if fmt == "gauss":
        return to_gauss_code(diagram)
    if fmt == "dt":
        return to_dt_code(diagram)
    raise FormatNotApplicableError(f"unknown diagram format {fmt!r}")


def import_code(text: str, fmt: str) -> PlanarDiagram:
    if fmt == "pd":
        return from_pd_text(text)
    if fmt == "gauss":
        return from_gauss_code(text)
    if fmt == "dt":
        return from_dt_code(text)
    raise FormatNotApplicableError(f"unknown diagram format {fmt!r}")
