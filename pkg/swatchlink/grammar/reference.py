"""
Printed invariant tables of swatches, kept as data.

Each column holds the MVA, the Jones polynomial in the table variable and the
determinant, as printed. Polynomials are read with the polynomial text parser
and compared with computed values: the MVA up to units, the Jones polynomial
under the calibrated convention and the determinant exactly.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Callable, List, Optional, Tuple, Union

from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.algebra.polytext import format_polynomial, parse_polynomial
from swatchlink.exceptions import UnknownColumnError
from swatchlink.invariants.bracket import Q
from swatchlink.invariants.checks import CheckReport
from swatchlink.invariants.determinant import determinant_from_mva
from swatchlink.invariants.jones import calibrate_jones, compare_jones
from swatchlink.schemas.catalog import ReferenceColumn, ReferenceFile

REFERENCE_TABLES = Path(__file__).parent / "data" / "reference_tables.json"


class ReferenceTables:
    def __init__(self, columns: List[ReferenceColumn]):
        self._columns = list(columns)

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "ReferenceTables":
        with open(path or REFERENCE_TABLES, "r", encoding="utf-8") as f:
            return cls(ReferenceFile(**json.load(f)).columns)

    def columns(self, table: Optional[str] = None) -> List[ReferenceColumn]:
        return [c for c in self._columns if table is None or c.table == table]

    def names(self, table: Optional[str] = None) -> List[str]:
        return [c.name for c in self.columns(table)]

    def column(self, name: str, table: Optional[str] = None) -> ReferenceColumn:
        for column in self.columns(table):
            if column.name == name:
                return column
        raise UnknownColumnError(name, table)

    def find(self, name: str) -> Optional[ReferenceColumn]:
        """Column by name or by pattern, None when the tables have neither"""
        for column in self._columns:
            if name in (column.name, column.pattern):
                return column
        return None


def reference_mva(column: ReferenceColumn, variables) -> MultiLaurent:
    """The printed MVA in the variables of a computed value"""
    if not column.variables:
        return parse_polynomial(column.mva, variables)
    mapping = column.variables
    printed = parse_polynomial(column.mva, sorted(mapping, key=lambda v: int(v[1:])))
    return printed.rename(mapping).embed(variables)


def reference_jones(column: ReferenceColumn) -> Tuple[MultiLaurent, int]:
    """
    The printed Jones polynomial. Values printed with half-integer
    coefficients are read as twice the polynomial, the returned scale says
    by how much.
    """
    scale = 2 if "\\frac" in column.jones else 1
    return parse_polynomial(column.jones, Q, scale=scale), scale


def compare_column(
    column: ReferenceColumn,
    mva_value: Optional[MultiLaurent] = None,
    jones_value: Optional[MultiLaurent] = None,
    conventions=("standard", "mirror"),
) -> List[CheckReport]:
    """Checks of computed values against one printed column"""
    reports = []
    if mva_value is not None:
        printed = reference_mva(column, mva_value.variables)
        reports.append(
            CheckReport(
                name=f"table-mva({column.name})",
                holds=not mva_value.is_zero and mva_value.equal_up_to_units(printed),
                details={
                    "computed": format_polynomial(mva_value.canonical()),
                    "printed": format_polynomial(printed.canonical()),
                },
            )
        )
        det = determinant_from_mva(mva_value, "table")
        reports.append(
            CheckReport(
                name=f"table-det({column.name})",
                holds=det == column.det,
                details={"computed": str(det), "printed": str(column.det)},
            )
        )
    if jones_value is not None:
        printed, scale = reference_jones(column)
        match = compare_jones(jones_value, printed, conventions=conventions, scale=scale)
        reports.append(
            CheckReport(
                name=f"table-jones({column.name})",
                holds=match.match == "exact",
                details={
                    "match": match.match,
                    "convention": match.convention or "",
                    "printed": format_polynomial(printed),
                },
            )
        )
    return reports


def knit_calibration(
    catalog, tables: Optional[ReferenceTables] = None, fabric_face: str = "front"
) -> Callable[[], Optional[str]]:
    """
    Calibration for the "auto" Jones convention: the convention under which
    the filled knit tile reproduces its printed column exactly.

    The result is cached on the returned callable, so it belongs to this
    catalog and fabric face only.
    """

    @lru_cache(maxsize=1)
    def calibrate() -> Optional[str]:
        from swatchlink.topology.dehn_fill import dehn_fill

        column = (tables or ReferenceTables.load()).column("k")
        printed, scale = reference_jones(column)
        match = calibrate_jones(dehn_fill(catalog.tile("k"), fabric_face), printed, scale)
        return match.convention if match.match == "exact" else None

    return calibrate
