"""
Determinants over the Laurent ring and Smith normal forms over the integers.

Alexander matrices of diagrams are sparse and most of their entries are
units, so the determinant first eliminates unit pivots (Markowitz order)
and only hands the dense remainder to fraction-free Bareiss elimination.
"""

from typing import Dict, List, Sequence, Tuple

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from .laurent import MultiLaurent, divide_exact

SparseRow = Dict[int, MultiLaurent]


def bareiss_determinant(
    matrix: Sequence[Sequence[MultiLaurent]], variables: Sequence[str]
) -> MultiLaurent:
    """Fraction-free determinant of a dense square matrix"""
    size = len(matrix)
    if size == 0:
        return MultiLaurent.one(variables)
    m = [list(row) for row in matrix]
    sign = 1
    previous = MultiLaurent.one(variables)
    for i in range(size - 1):
        if m[i][i].is_zero:
            swap = next((p for p in range(i + 1, size) if not m[p][i].is_zero), None)
            if swap is None:
                return MultiLaurent.zero(variables)
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        pivot = m[i][i]
        for j in range(i + 1, size):
            for k in range(i + 1, size):
                m[j][k] = divide_exact(m[j][k] * pivot - m[j][i] * m[i][k], previous)
            m[j][i] = MultiLaurent.zero(variables)
        previous = pivot
    result = m[size - 1][size - 1]
    return -result if sign < 0 else result


def laurent_determinant(
    matrix: Sequence[Sequence[MultiLaurent]], variables: Sequence[str]
) -> MultiLaurent:
    """Determinant of a square matrix of Laurent polynomials"""
    size = len(matrix)
    rows: List[SparseRow] = [
        {c: entry for c, entry in enumerate(row) if not entry.is_zero} for row in matrix
    ]
    column_rows: Dict[int, set] = {c: set() for c in range(size)}
    for r, row in enumerate(rows):
        for c in row:
            column_rows[c].add(r)

    active_rows = list(range(size))
    active_cols = list(range(size))
    result = MultiLaurent.one(variables)

    while active_rows:
        pivot = _unit_pivot(rows, column_rows, active_rows)
        if pivot is None:
            break
        r, c = pivot
        unit = rows[r][c]
        sign = -1 if (active_rows.index(r) + active_cols.index(c)) % 2 else 1
        result = result * unit * sign

        inverse = unit.inverse()
        for s in sorted(column_rows[c] - {r}):
            factor = rows[s][c] * inverse
            for col, entry in rows[r].items():
                if col == c:
                    continue
                value = rows[s].get(col, MultiLaurent.zero(variables)) - factor * entry
                if value.is_zero:
                    if col in rows[s]:
                        del rows[s][col]
                        column_rows[col].discard(s)
                else:
                    rows[s][col] = value
                    column_rows[col].add(s)
            del rows[s][c]
        for col in rows[r]:
            column_rows[col].discard(r)
        rows[r] = {}
        column_rows[c] = set()
        active_rows.remove(r)
        active_cols.remove(c)

    if not active_rows:
        return result
    for r in active_rows:
        if not rows[r]:
            return MultiLaurent.zero(variables)
    zero = MultiLaurent.zero(variables)
    dense = [[rows[r].get(c, zero) for c in active_cols] for r in active_rows]
    return result * bareiss_determinant(dense, variables)


def _unit_pivot(
    rows: List[SparseRow], column_rows: Dict[int, set], active_rows: List[int]
):
    best = None
    best_cost = None
    for r in active_rows:
        row = rows[r]
        for c, entry in row.items():
            if not entry.is_unit:
                continue
            cost = (len(row) - 1) * (len(column_rows[c]) - 1)
            if best_cost is None or cost < best_cost:
                best, best_cost = (r, c), cost
                if cost == 0:
                    return best
    return best


def minor(
    matrix: Sequence[Sequence[MultiLaurent]], row: int, column: int
) -> List[List[MultiLaurent]]:
    return [
        [entry for c, entry in enumerate(line) if c != column]
        for r, line in enumerate(matrix)
        if r != row
    ]


def smith_invariants(matrix: Sequence[Sequence[int]], columns: int) -> Tuple[int, ...]:
    """
    Invariant factors of an integer matrix with `columns` columns, padded
    with zeros up to the number of columns so that free summands show up.
    """
    if columns == 0:
        return ()
    if not matrix:
        return (0,) * columns
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    diagonal += [0] * (columns - len(diagonal))
    return tuple(diagonal)
