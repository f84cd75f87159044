"""
Jones polynomial and its comparison with values printed in tables.

`jones` returns V(q) = (-1)^n_- q^(n_+ - 2 n_-) <L>, in which every exponent
has the parity of the number of components plus one. Printed tables use
t = q^2, so before comparing, a polynomial with odd exponents is shifted by
one power of q and all exponents are halved (`to_table_variable`).
"""

from typing import Callable, Optional

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.constants import STATE_SUM_LIMIT
from swatchlink.pydantic import BaseModel
from swatchlink.topology.diagram import PlanarDiagram

from .bracket import Q, bracket, bracket_state_sum

CONVENTIONS = ("standard", "mirror")


def normalize(diagram: PlanarDiagram, value: MultiLaurent) -> MultiLaurent:
    positive, negative = diagram.writhe_counts()
    sign = -1 if negative % 2 else 1
    return value.shift((positive - 2 * negative,)) * sign


def jones(diagram: PlanarDiagram, oracle: bool = False) -> MultiLaurent:
    """
    Jones polynomial in q. With `oracle` the bracket is summed over all
    states, which is only allowed for small diagrams.
    """
    if oracle and diagram.crossing_count <= STATE_SUM_LIMIT:
        value = bracket_state_sum(diagram)
    else:
        value = bracket(diagram)
    return normalize(diagram, value)


def mirror_variable(value: MultiLaurent) -> MultiLaurent:
    """q -> 1/q"""
    return MultiLaurent(value.variables, {(-e[0],): c for e, c in value.terms.items()})


def to_table_variable(value: MultiLaurent) -> MultiLaurent:
    """Rewrite V(q) in t = q^2, dropping a half power when the exponents are odd"""
    if value.is_zero:
        return value
    exponents = [e[0] for e in value.terms]
    shift = exponents[0] % 2
    return MultiLaurent(
        Q, {((e[0] - shift) // 2,): c for e, c in value.terms.items()}
    )


def with_convention(value: MultiLaurent, convention: str) -> MultiLaurent:
    """
    Printed value under `convention`. Mirroring happens in q, before the
    half power is dropped, so both conventions round towards lower powers
    of the table variable.
    """
    if convention == "mirror":
        value = mirror_variable(value)
    return to_table_variable(value)


class JonesMatch(BaseModel):
    convention: Optional[str] = None
    match: str = "mismatch"
    scale: int = 1

    @property
    def matched(self) -> bool:
        return self.match != "mismatch"


def compare_jones(
    value: MultiLaurent,
    reference: MultiLaurent,
    conventions=CONVENTIONS,
    scale: int = 1,
) -> JonesMatch:
    """
    Compare a computed V(q) with a printed value in the table variable.
    `scale` multiplies the computed side, for printed values that were
    read as a multiple of the polynomial.

    The match is "exact" when the values agree, "up-to-units" when they
    agree after multiplying by a power of q and a sign.
    """
    for convention in conventions:
        candidate = with_convention(value, convention) * scale
        if candidate == reference:
            return JonesMatch(convention=convention, match="exact", scale=scale)
    for convention in conventions:
        candidate = with_convention(value, convention) * scale
        if candidate.equal_up_to_units(reference):
            return JonesMatch(convention=convention, match="up-to-units", scale=scale)
    return JonesMatch(scale=scale)


def calibrate_jones(
    diagram: PlanarDiagram, reference: MultiLaurent, scale: int = 1
) -> JonesMatch:
    """Find the convention under which the diagram reproduces `reference`"""
    return compare_jones(jones(diagram), reference, scale=scale)


def resolve_convention(
    convention: str, calibrate: Optional[Callable[[], Optional[str]]] = None
) -> str:
    """
    Turn "auto" into a concrete convention. `calibrate` returns the matching
    convention, or None when no convention matched, in which case
    "standard" is used. Callers that resolve repeatedly pass a calibration
    that caches its own result, see `knit_calibration`.
    """
    if convention != "auto":
        return convention
    if calibrate is None:
        return "standard"
    return calibrate() or "standard"
