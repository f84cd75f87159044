"""
Bounded Reidemeister search.

`simplify` first applies crossing-reducing moves greedily, then runs a
best-first search over RM3 and RM2+ moves, ordered by (crossings, depth,
insertion counter). After every move the greedy reduction runs again, so a
step of the search is a move followed by all reductions it unlocks. RM1+ is
never tried: a kink cannot help a later reduction that a RM2+ would not.

Recognition answers three ways. "yes" comes with a move trace to the
target, "no" with an invariant that differs from the target's, "unknown"
when neither was found under the budget.
"""

import heapq
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

from swatchlink.algebra.polytext import format_polynomial
from swatchlink.exceptions import MoveNotApplicableError
from swatchlink.helpers.logger import Logger
from swatchlink.invariants.alexander import mva
from swatchlink.invariants.jones import jones
from swatchlink.invariants.linking import linking_contract, linking_matrix
from swatchlink.pydantic import BaseModel
from swatchlink.topology.dehn_fill import dehn_fill
from swatchlink.topology.diagram import MERIDIAN_AXIS, PlanarDiagram, canonical_key
from swatchlink.topology.reidemeister import (
    ReidemeisterMove,
    apply_reidemeister,
    reducing_moves,
    rm2_plus_moves,
    rm3_moves,
)
from swatchlink.topology.tangle import (
    TorusTangle,
    delete_tangle_component,
    trivial_swatch,
)

from .budget import (
    Certificate,
    Recognition,
    SearchBudget,
    SimplifyOutcome,
    SimplifyStatus,
    Verdict,
)

Target = Callable[[PlanarDiagram], bool]


def _greedy(diagram: PlanarDiagram, moves: List[ReidemeisterMove]) -> PlanarDiagram:
    while True:
        for move in reducing_moves(diagram):
            try:
                diagram = apply_reidemeister(diagram, move)
            except MoveNotApplicableError:
                continue
            moves.append(move)
            break
        else:
            return diagram


def _neighbours(diagram: PlanarDiagram):
    yield from rm3_moves(diagram)
    yield from rm2_plus_moves(diagram)


def _crossing_target(count: int) -> Target:
    return lambda diagram: diagram.crossing_count <= count


def simplify(
    diagram: PlanarDiagram,
    budget: Optional[SearchBudget] = None,
    target: Optional[Target] = None,
    logger: Optional[Logger] = None,
) -> SimplifyOutcome:
    """
    Reduce the crossing number of a diagram.

    Args:
        diagram (PlanarDiagram): the diagram to simplify
        budget (SearchBudget, optional): node, depth and crossing limits
        target (Callable, optional): predicate that ends the search, by
            default reaching zero crossings

    Returns:
        SimplifyOutcome: the diagram with the fewest crossings found, its
            status and the move trace that produced it
    """
    budget = budget or SearchBudget()
    target = target or _crossing_target(0)
    start = diagram.crossing_count
    cap = start + budget.max_crossings_over_start

    trace: List[ReidemeisterMove] = []
    reduced = _greedy(diagram, trace)
    best, best_trace = reduced, tuple(trace)
    nodes = 0
    status = SimplifyStatus.MINIMAL

    if target(reduced):
        status = SimplifyStatus.REDUCED
    else:
        heap = [(reduced.crossing_count, 0, 0, reduced, best_trace)]
        visited = {canonical_key(reduced)}
        counter = 0
        while heap and status == SimplifyStatus.MINIMAL:
            if nodes >= budget.max_nodes:
                status = SimplifyStatus.EXHAUSTED
                break
            _, depth, _, current, current_trace = heapq.heappop(heap)
            nodes += 1
            if depth >= budget.max_depth:
                continue
            for move in _neighbours(current):
                try:
                    following = apply_reidemeister(current, move)
                except MoveNotApplicableError:
                    continue
                steps = [move]
                following = _greedy(following, steps)
                if following.crossing_count > cap:
                    continue
                key = canonical_key(following)
                if key in visited:
                    continue
                visited.add(key)
                following_trace = current_trace + tuple(steps)
                if following.crossing_count < best.crossing_count:
                    best, best_trace = following, following_trace
                if target(following):
                    best, best_trace = following, following_trace
                    status = SimplifyStatus.REDUCED
                    break
                counter += 1
                heapq.heappush(
                    heap,
                    (following.crossing_count, depth + 1, counter, following, following_trace),
                )

    if logger is not None:
        logger.log(
            f"Simplified {start} -> {best.crossing_count} crossings "
            f"after {nodes} nodes: {status.value}"
        )
    return SimplifyOutcome(best, status, best_trace, start, nodes)


def _unlink_certificate(diagram: PlanarDiagram) -> Optional[Certificate]:
    n = diagram.component_count
    matrix = linking_matrix(diagram)
    if not matrix.is_zero():
        return Certificate(
            invariant="linking", expected="0", found=str(matrix.signed)
        )
    value = mva(diagram, cross_check=False)
    expected = 1 if n == 1 else 0
    if not (value.is_zero if expected == 0 else value.is_unit):
        return Certificate(
            invariant="mva", expected=str(expected), found=format_polynomial(value)
        )
    found = jones(diagram)
    reference = jones(PlanarDiagram(components=((),) * n))
    if found != reference:
        return Certificate(
            invariant="jones",
            expected=format_polynomial(reference),
            found=format_polynomial(found),
        )
    return None


def is_unlink(
    diagram: PlanarDiagram,
    budget: Optional[SearchBudget] = None,
    logger: Optional[Logger] = None,
) -> Recognition:
    """Whether the diagram is an unlink of its component count"""
    trace: List[ReidemeisterMove] = []
    reduced = _greedy(diagram, trace)
    if reduced.crossing_count == 0:
        outcome = SimplifyOutcome(
            reduced, SimplifyStatus.REDUCED, tuple(trace), diagram.crossing_count
        )
        return Recognition(Verdict.YES, outcome=outcome)
    certificate = _unlink_certificate(diagram)
    if certificate is not None:
        return Recognition(Verdict.NO, certificate=certificate)
    outcome = simplify(diagram, budget, logger=logger)
    if outcome.status == SimplifyStatus.REDUCED:
        return Recognition(Verdict.YES, outcome=outcome)
    return Recognition(Verdict.UNKNOWN, outcome=outcome)


def _keychain(components: int) -> Target:
    """
    The filled trivial swatch: f(l) and every swatch component cross only
    f(m), twice each, with the contracted linking numbers.
    """

    def reached(diagram: PlanarDiagram) -> bool:
        if diagram.crossing_count != 2 * (components + 1):
            return False
        axis = 0
        if diagram.roles and MERIDIAN_AXIS in diagram.roles:
            axis = diagram.roles.index(MERIDIAN_AXIS)
        for index in range(diagram.crossing_count):
            if axis not in diagram.strand_components(index):
                return False
        return not linking_contract(diagram)

    return reached


@lru_cache(maxsize=16)
def _trivial_invariants(components: int, fabric_face: str):
    diagram = dehn_fill(trivial_swatch(components), fabric_face)
    return mva(diagram, cross_check=False).canonical(), jones(diagram)


def _swatch_certificate(diagram: PlanarDiagram, components: int, fabric_face: str):
    violations = linking_contract(diagram)
    if violations:
        return Certificate(
            invariant="linking",
            expected="filled swatch contract",
            found=str(violations),
        )
    reference_mva, reference_jones = _trivial_invariants(components, fabric_face)
    value = mva(diagram, cross_check=False)
    if not value.equal_up_to_units(reference_mva):
        return Certificate(
            invariant="mva",
            expected=format_polynomial(reference_mva),
            found=format_polynomial(value.canonical()),
        )
    found = jones(diagram)
    if found != reference_jones:
        return Certificate(
            invariant="jones",
            expected=format_polynomial(reference_jones),
            found=format_polynomial(found),
        )
    return None


def is_trivial_swatch(
    tangle: TorusTangle,
    budget: Optional[SearchBudget] = None,
    fabric_face: str = "front",
    logger: Optional[Logger] = None,
) -> Recognition:
    """
    Whether a closed tangle is the trivial swatch with its number of
    components, judged on its Dehn filling.
    """
    n = tangle.component_count
    diagram = dehn_fill(tangle, fabric_face)
    target = _keychain(n)
    trace: List[ReidemeisterMove] = []
    reduced = _greedy(diagram, trace)
    if target(reduced):
        outcome = SimplifyOutcome(
            reduced, SimplifyStatus.REDUCED, tuple(trace), diagram.crossing_count
        )
        return Recognition(Verdict.YES, outcome=outcome)
    certificate = _swatch_certificate(diagram, n, fabric_face)
    if certificate is not None:
        return Recognition(Verdict.NO, certificate=certificate)
    outcome = simplify(diagram, budget, target=target, logger=logger)
    if outcome.status == SimplifyStatus.REDUCED:
        return Recognition(Verdict.YES, outcome=outcome)
    return Recognition(Verdict.UNKNOWN, outcome=outcome)


class BrunnianReport(BaseModel):
    verdict: str
    statuses: List[str] = []
    certificates: List[Optional[Certificate]] = []


def brunnian_check(
    tangle: TorusTangle,
    budget: Optional[SearchBudget] = None,
    fabric_face: str = "front",
    logger: Optional[Logger] = None,
) -> BrunnianReport:
    """
    A swatch is Brunnian when deleting any one component leaves a trivial
    swatch. Components are checked one after the other.
    """
    n = tangle.component_count
    if n < 2:
        return BrunnianReport(verdict="not-applicable")
    results: List[Tuple[Verdict, Optional[Certificate]]] = []
    for index in range(n):
        rest = delete_tangle_component(tangle, index)
        found = is_trivial_swatch(rest, budget, fabric_face, logger)
        results.append((found.verdict, found.certificate))
    verdicts = [v for v, _ in results]
    if all(v == Verdict.YES for v in verdicts):
        verdict = "brunnian"
    elif any(v == Verdict.NO for v in verdicts):
        verdict = "non-brunnian"
    else:
        verdict = "inconclusive"
    return BrunnianReport(
        verdict=verdict,
        statuses=[v.value for v in verdicts],
        certificates=[c for _, c in results],
    )
