"""
Alexander matrices and the multivariable Alexander polynomial.

The variable t_i belongs to component i of the diagram. For a Dehn-filled
swatch this makes t1 the variable of f(m), t2 that of f(l) and t3, t4, ...
those of the swatch components.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from swatchlink.algebra.free_group import Presentation, abelianize, fox_derivative
from swatchlink.algebra.laurent import MultiLaurent, divide_exact, variable_names
from swatchlink.algebra.matrices import laurent_determinant, minor
from swatchlink.exceptions import InexactDivisionError
from swatchlink.helpers.logger import Logger
from swatchlink.topology.diagram import PlanarDiagram, connected_pieces

from .wirtinger import wirtinger


@dataclass(frozen=True)
class AlexanderMatrix:
    entries: Tuple[Tuple[MultiLaurent, ...], ...]
    variables: Tuple[str, ...]
    generator_components: Tuple[int, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        columns = len(self.entries[0]) if self.entries else len(self.generator_components)
        return len(self.entries), columns

    def column_variable(self, column: int) -> str:
        return self.variables[self.generator_components[column]]

    def row_sums_vanish(self) -> bool:
        """Every row adds up to zero once all variables are set to 1"""
        for row in self.entries:
            if sum(entry.substitute_all(1).coefficient(()) for entry in row) != 0:
                return False
        return True

    def fundamental_identity(self) -> bool:
        """sum_j A_ij (t_c(j) - 1) = 0 for every row i"""
        for row in self.entries:
            total = MultiLaurent.zero(self.variables)
            for column, entry in enumerate(row):
                t = MultiLaurent.variable(self.column_variable(column), self.variables)
                total = total + entry * (t - 1)
            if not total.is_zero:
                return False
        return True


def alexander_matrix(
    presentation: Presentation, variables: Optional[Sequence[str]] = None
) -> AlexanderMatrix:
    """Abelianized Fox derivatives of every relator by every generator"""
    if variables is None:
        variables = variable_names(presentation.component_count)
    variables = tuple(variables)
    mapping = {
        g: variables[c]
        for g, c in zip(presentation.generators, presentation.generator_components)
    }
    rows = []
    for relator in presentation.relators:
        rows.append(
            tuple(
                abelianize(fox_derivative(relator, g), mapping, variables)
                for g in presentation.generators
            )
        )
    return AlexanderMatrix(tuple(rows), variables, presentation.generator_components)


def _never_under(diagram: PlanarDiagram) -> bool:
    """Some component passes only over, so it can be lifted off the rest"""
    under = {diagram.component_of[c.arcs[0]] for c in diagram.crossings}
    return any(i not in under for i in range(diagram.component_count))


def _deleted_minor(matrix: AlexanderMatrix, column: int) -> MultiLaurent:
    square = minor([list(row) for row in matrix.entries], len(matrix.entries) - 1, column)
    return laurent_determinant(square, matrix.variables)


def _normalized_minor(matrix: AlexanderMatrix, column: int, links: bool) -> MultiLaurent:
    value = _deleted_minor(matrix, column)
    if links:
        t = MultiLaurent.variable(matrix.column_variable(column), matrix.variables)
        value = divide_exact(value, t - 1)
    return value.canonical()


def _second_column(matrix: AlexanderMatrix, first: int) -> Optional[int]:
    columns = len(matrix.generator_components)
    component = matrix.generator_components[first]
    for column in range(columns):
        if column != first and matrix.generator_components[column] != component:
            return column
    return next((c for c in range(columns) if c != first), None)


def mva(
    diagram: PlanarDiagram,
    cross_check: bool = True,
    logger: Optional[Logger] = None,
) -> MultiLaurent:
    """
    Multivariable Alexander polynomial in canonical form.

    A row of the Alexander matrix is redundant and is dropped; deleting the
    column of a generator on component c leaves a minor equal to
    (t_c - 1) times the polynomial when there are at least two components,
    and to the Alexander polynomial itself for a knot.

    Args:
        diagram (PlanarDiagram): the link
        cross_check (bool): recompute with a second deleted column and
            require both answers to agree up to units

    Raises:
        InexactDivisionError: when the minor is not divisible by (t_c - 1)
            or two deleted columns disagree
    """
    n = diagram.component_count
    variables = variable_names(n)
    if n == 0:
        return MultiLaurent.one(variables)
    links = n >= 2
    if links and (connected_pieces(diagram) > 1 or _never_under(diagram)):
        return MultiLaurent.zero(variables)
    if any(not comp for comp in diagram.components):
        if links:
            return MultiLaurent.zero(variables)
        return MultiLaurent.one(variables)

    matrix = alexander_matrix(wirtinger(diagram), variables)
    value = _normalized_minor(matrix, 0, links)
    if cross_check:
        other = _second_column(matrix, 0)
        if other is not None:
            second = _normalized_minor(matrix, other, links)
            if second != value:
                raise InexactDivisionError(
                    f"deleted columns 0 and {other} disagree: {value} != {second}"
                )
    if logger is not None:
        logger.log(
            f"MVA of a {n}-component diagram with {diagram.crossing_count} crossings"
        )
    return value


def alexander_polynomial(diagram: PlanarDiagram) -> MultiLaurent:
    """One-variable Alexander polynomial: the MVA with every t_i set to t"""
    n = diagram.component_count
    value = mva(diagram, cross_check=False)
    variables = ("t",)
    if value.is_zero:
        return MultiLaurent.zero(variables)
    terms = {}
    for exponents, coeff in value.terms.items():
        key = (sum(exponents),)
        terms[key] = terms.get(key, 0) + coeff
    single = MultiLaurent(variables, terms)
    if n >= 2:
        single = single * (MultiLaurent.variable("t", variables) - 1)
    return single.canonical()


def deleted_column_minors(diagram: PlanarDiagram) -> List[MultiLaurent]:
    """Canonical minors for every deleted column, used by the consistency checks"""
    n = diagram.component_count
    matrix = alexander_matrix(wirtinger(diagram), variable_names(n))
    return [
        _normalized_minor(matrix, column, n >= 2)
        for column in range(len(matrix.generator_components))
    ]
