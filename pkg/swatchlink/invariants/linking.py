"""
Linking numbers of ordered link diagrams.
"""

from typing import List, Tuple

import numpy as np

from swatchlink.exceptions import ComponentIndexError
from swatchlink.pydantic import BaseModel
from swatchlink.topology.diagram import (
    LONGITUDE_AXIS,
    MERIDIAN_AXIS,
    PlanarDiagram,
)


class LinkingMatrix(BaseModel):
    """Signed linking numbers, with a zero diagonal"""

    signed: List[List[int]]

    @property
    def absolute(self) -> List[List[int]]:
        return [[abs(v) for v in row] for row in self.signed]

    @property
    def size(self) -> int:
        return len(self.signed)

    def entry(self, i: int, j: int) -> int:
        return self.signed[i][j]

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.signed for v in row)


def _half_sums(diagram: PlanarDiagram) -> np.ndarray:
    n = diagram.component_count
    sums = np.zeros((n, n), dtype=int)
    for index, crossing in enumerate(diagram.crossings):
        under, over = diagram.strand_components(index)
        if under != over:
            sums[under, over] += crossing.sign
            sums[over, under] += crossing.sign
    return sums


def linking_number(diagram: PlanarDiagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components i and j"""
    n = diagram.component_count
    for index in (i, j):
        if not 0 <= index < n:
            raise ComponentIndexError(f"component {index} is out of range")
    if i == j:
        return 0
    return int(_half_sums(diagram)[i, j]) // 2


def linking_matrix(diagram: PlanarDiagram) -> LinkingMatrix:
    sums = _half_sums(diagram)
    return LinkingMatrix(signed=(sums // 2).tolist())


def linking_contract(diagram: PlanarDiagram) -> List[Tuple[str, str, int, int]]:
    """
    Violations of the linking numbers a Dehn-filled swatch must have, as
    (first role, second role, expected, found). An empty list means the
    contract holds. Components without roles are taken to be f(m), f(l) and
    then the swatch components.
    """
    n = diagram.component_count
    roles = list(diagram.roles or [])
    if len(roles) != n:
        roles = [MERIDIAN_AXIS, LONGITUDE_AXIS] + [
            f"swatch-component({i})" for i in range(n - 2)
        ]
    matrix = linking_matrix(diagram)
    meridian = roles.index(MERIDIAN_AXIS) if MERIDIAN_AXIS in roles else None
    longitude = roles.index(LONGITUDE_AXIS) if LONGITUDE_AXIS in roles else None

    violations = []

    def expect(i, j, value):
        found = matrix.entry(i, j)
        if found != value:
            violations.append((roles[i], roles[j], value, found))

    if meridian is not None and longitude is not None:
        expect(meridian, longitude, -1)
    swatch = [i for i in range(n) if i not in (meridian, longitude)]
    for i in swatch:
        if meridian is not None:
            expect(meridian, i, 1)
        if longitude is not None:
            expect(longitude, i, 0)
    for a, i in enumerate(swatch):
        for j in swatch[a + 1 :]:
            expect(i, j, 0)
    return violations
