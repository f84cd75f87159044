"""
Link determinants.

Two values are reported. The "paper" value is |MVA(-1, ..., -1)|. The
"table" value is the classical determinant |Delta(-1)|, where Delta(t) is
the one-variable Alexander polynomial; for a link with two or more
components this is |(t - 1) MVA(t, ..., t)| at t = -1, twice the "paper"
value. The classical value is also available from Fox colorings, which
gives an independent check.
"""

from typing import Dict

from sympy import Matrix

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.topology.diagram import PlanarDiagram, connected_pieces

from .alexander import mva
from .wirtinger import over_arcs

DET_CONVENTIONS = ("table", "paper")


def determinant_from_mva(value: MultiLaurent, convention: str = "table") -> int:
    n = len(value.variables)
    at_minus_one = abs(int(value.evaluate([-1] * n))) if n else abs(value.coefficient(()))
    if convention == "paper" or n == 1:
        return at_minus_one
    return 2 * at_minus_one


def determinant(diagram: PlanarDiagram, convention: str = "table") -> int:
    """
    Determinant in the requested convention.

    Args:
        diagram (PlanarDiagram): the link
        convention (str): "table" or "paper"
    """
    if convention not in DET_CONVENTIONS:
        raise ValueError(f"unknown determinant convention {convention!r}")
    return determinant_from_mva(mva(diagram, cross_check=False), convention)


def determinants(diagram: PlanarDiagram) -> Dict[str, int]:
    value = mva(diagram, cross_check=False)
    return {c: determinant_from_mva(value, c) for c in DET_CONVENTIONS}


def coloring_determinant(diagram: PlanarDiagram) -> int:
    """
    Classical determinant from the Fox coloring matrix: every crossing
    asks for 2 * over = under-in + under-out, and one row and one column
    are deleted.
    """
    if diagram.crossing_count == 0:
        return 1 if diagram.component_count <= 1 else 0
    if connected_pieces(diagram) > 1 or any(not c for c in diagram.components):
        return 0
    arcs = over_arcs(diagram)
    size = len(set(arcs.values()))
    rows = []
    for crossing in diagram.crossings:
        row = [0] * size
        row[arcs[crossing.over_in]] += 2
        row[arcs[crossing.arcs[0]]] -= 1
        row[arcs[crossing.arcs[2]]] -= 1
        rows.append(row)
    if size < 2:
        return 1
    square = Matrix(rows)[: len(rows) - 1, : size - 1]
    if square.rows != square.cols:
        return 0
    return abs(int(square.det(method="bareiss")))
