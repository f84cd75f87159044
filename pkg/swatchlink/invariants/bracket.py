"""
Kauffman bracket of a planar diagram.

At a crossing X(a, b, c, d) the 0-smoothing joins a to b and c to d, the
1-smoothing joins a to d and b to c, and <L> = <L0> - q <L1>. A state with k
loops contributes (q + 1/q)^(k - 1), so the crossingless unknot has bracket
1.

Two evaluators are provided. `bracket_state_sum` enumerates all 2^c states
and is only used on small diagrams as an oracle. `bracket` sweeps the
crossings one at a time and keeps, for every way the arcs seen so far can be
paired up by the smoothings, the polynomial collected so far.
"""

from collections import defaultdict
from itertools import product
from typing import Dict, FrozenSet, List, Tuple

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.constants import STATE_SUM_LIMIT
from swatchlink.exceptions import SwatchlinkError
from swatchlink.topology.diagram import PlanarDiagram

Poly = Dict[int, int]
Pairing = FrozenSet[Tuple[int, int]]

Q = ("q",)


def _smoothing(arcs: Tuple[int, int, int, int], choice: int):
    a, b, c, d = arcs
    if choice == 0:
        return ((a, b), (c, d))
    return ((a, d), (b, c))


def _add_edge(partner: Dict[int, int], x: int, y: int) -> int:
    """
    Join the ends x and y, updating the partner map of open path ends in
    place. Returns 1 when a loop closes.
    """
    end_x = partner.get(x, x)
    end_y = partner.get(y, y)
    if end_x == y:
        partner.pop(x, None)
        partner.pop(y, None)
        return 1
    partner.pop(x, None)
    partner.pop(y, None)
    partner[end_x] = end_y
    partner[end_y] = end_x
    return 0


def _times_delta(poly: Poly, loops: int) -> Poly:
    for _ in range(loops):
        result: Poly = defaultdict(int)
        for exponent, coeff in poly.items():
            result[exponent + 1] += coeff
            result[exponent - 1] += coeff
        poly = {e: c for e, c in result.items() if c}
    return poly


def _divide_delta(poly: Poly) -> Poly:
    """Exact division by q + 1/q"""
    remaining = dict(poly)
    lowest = min(poly)
    quotient: Poly = {}
    while remaining:
        top = max(remaining)
        if top < lowest + 2:
            raise SwatchlinkError(f"bracket sum {poly} is not divisible by q + 1/q")
        coeff = remaining.pop(top)
        quotient[top - 1] = coeff
        remaining[top - 2] = remaining.get(top - 2, 0) - coeff
        remaining = {e: c for e, c in remaining.items() if c}
    return quotient


def _as_laurent(poly: Poly) -> MultiLaurent:
    return MultiLaurent(Q, {(e,): c for e, c in poly.items()})


def _free_loops(diagram: PlanarDiagram) -> int:
    return sum(1 for comp in diagram.components if not comp)


def crossing_order(diagram: PlanarDiagram) -> List[int]:
    """
    Sweep order that keeps few arcs open: start at crossing 0 and always
    take the crossing sharing most arcs with the ones already swept.
    """
    remaining = set(range(diagram.crossing_count))
    if not remaining:
        return []
    order = []
    open_labels: Dict[int, int] = defaultdict(int)
    while remaining:
        best = min(
            remaining,
            key=lambda i: (
                -sum(1 for a in diagram.crossings[i].arcs if open_labels.get(a)),
                i,
            ),
        )
        remaining.remove(best)
        order.append(best)
        for label in diagram.crossings[best].arcs:
            open_labels[label] += 1
            if open_labels[label] == 2:
                del open_labels[label]
    return order


def bracket(diagram: PlanarDiagram) -> MultiLaurent:
    """Kauffman bracket, normalized so that the crossingless unknot is 1"""
    if not diagram.components:
        return MultiLaurent.one(Q)
    states: Dict[Pairing, Poly] = {frozenset(): {0: 1}}
    for index in crossing_order(diagram):
        arcs = diagram.crossings[index].arcs
        following: Dict[Pairing, Poly] = {}
        for pairing, poly in states.items():
            for choice in (0, 1):
                partner = {}
                for x, y in pairing:
                    partner[x] = y
                    partner[y] = x
                loops = 0
                for x, y in _smoothing(arcs, choice):
                    loops += _add_edge(partner, x, y)
                term = _times_delta(poly, loops)
                if choice:
                    term = {e + 1: -c for e, c in term.items()}
                key = frozenset((x, y) for x, y in partner.items() if x < y)
                target = following.setdefault(key, {})
                for exponent, coeff in term.items():
                    target[exponent] = target.get(exponent, 0) + coeff
        states = {
            key: {e: c for e, c in poly.items() if c} for key, poly in following.items()
        }

    total = states.get(frozenset(), {})
    total = _times_delta(total, _free_loops(diagram))
    if not total:
        return MultiLaurent.zero(Q)
    return _as_laurent(_divide_delta(total))


def bracket_state_sum(diagram: PlanarDiagram, limit: int = STATE_SUM_LIMIT) -> MultiLaurent:
    """
    Bracket as the plain sum over all smoothings.

    Raises:
        SwatchlinkError: above `limit` crossings
    """
    n = diagram.crossing_count
    if n > limit:
        raise SwatchlinkError(f"state sum refused: {n} crossings is above {limit}")
    total: Poly = defaultdict(int)
    for choices in product((0, 1), repeat=n):
        partner: Dict[int, int] = {}
        loops = _free_loops(diagram)
        for crossing, choice in zip(diagram.crossings, choices):
            for x, y in _smoothing(crossing.arcs, choice):
                loops += _add_edge(partner, x, y)
        ones = sum(choices)
        term = _times_delta({ones: (-1) ** ones}, loops - 1)
        for exponent, coeff in term.items():
            total[exponent] += coeff
    return _as_laurent({e: c for e, c in total.items() if c})
