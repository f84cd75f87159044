"""
Invariant reports of planar diagrams and their text renderings.

A report holds the values printed in a column of the invariant tables of
swatches: MVA, Jones polynomial and determinant, plus the linking matrix,
first homology and check flags. Rows for hyperbolic volume and cusp shape
are emitted as placeholders, those values come from external software fed
with `swatchlink export`.
"""

import json
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from swatchlink.algebra.polytext import format_polynomial
from swatchlink.constants import INVARIANT_NAMES
from swatchlink.helpers.logger import Logger
from swatchlink.pydantic import BaseModel
from swatchlink.topology.diagram import PlanarDiagram

from .alexander import mva
from .checks import brunnian_mva_form, split_evidence
from .determinant import determinant_from_mva
from .jones import jones, resolve_convention, with_convention
from .linking import linking_contract, linking_matrix
from .wirtinger import first_homology, wirtinger

EXTERNAL = "external"
TABLE_ROWS = ("Vol", "MVA", "V", "det", "cusps")


class InvariantReport(BaseModel):
    name: str
    components: int
    crossings: int
    linking: Optional[List[List[int]]] = None
    h1: Optional[str] = None
    meridians: Optional[List[str]] = None
    mva: Optional[str] = None
    jones: Optional[str] = None
    jones_convention: Optional[str] = None
    det: Optional[Dict[str, int]] = None
    flags: Dict[str, str] = {}

    def to_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True)

    def table_column(self, det_convention: str = "table") -> Dict[str, str]:
        return {
            "Vol": EXTERNAL,
            "MVA": self.mva if self.mva is not None else "",
            "V": self.jones if self.jones is not None else "",
            "det": str(self.det[det_convention]) if self.det else "",
            "cusps": EXTERNAL,
        }


def _selected(invariants: Optional[Sequence[str]]) -> List[str]:
    if not invariants or "all" in invariants:
        return list(INVARIANT_NAMES)
    unknown = [name for name in invariants if name not in INVARIANT_NAMES]
    if unknown:
        raise ValueError(f"unknown invariants {unknown}; choose from {INVARIANT_NAMES}")
    return list(invariants)


def compute_report(
    diagram: PlanarDiagram,
    name: str,
    invariants: Optional[Sequence[str]] = None,
    jones_convention: str = "standard",
    calibrate: Optional[Callable[[], Optional[str]]] = None,
    logger: Optional[Logger] = None,
) -> InvariantReport:
    """
    Compute the requested invariants of one diagram.

    Args:
        diagram (PlanarDiagram): usually a Dehn-filled swatch
        name (str): column name of the report
        invariants (Sequence[str], optional): subset of INVARIANT_NAMES,
            everything when omitted or "all"
        jones_convention (str): "standard", "mirror" or "auto"
        calibrate (Callable, optional): used to resolve "auto"
    """
    selected = _selected(invariants)
    report = InvariantReport(
        name=name,
        components=diagram.component_count,
        crossings=diagram.crossing_count,
    )
    value = None
    if {"mva", "det", "brunnian"} & set(selected):
        value = mva(diagram, logger=logger)
    if "mva" in selected:
        report.mva = format_polynomial(value)
    if "det" in selected:
        report.det = {c: determinant_from_mva(value, c) for c in ("table", "paper")}
    if "jones" in selected:
        convention = resolve_convention(jones_convention, calibrate)
        report.jones = format_polynomial(with_convention(jones(diagram), convention))
        report.jones_convention = convention
    if "linking" in selected:
        report.linking = linking_matrix(diagram).signed
    if "h1" in selected:
        group = first_homology(wirtinger(diagram))
        report.h1 = str(group)
        report.meridians = group.meridians
    if "brunnian" in selected:
        report.flags["brunnian-form"] = (
            "pass" if brunnian_mva_form(diagram, value).holds else "fail"
        )
    if diagram.component_count >= 2 and value is not None:
        report.flags["split"] = split_evidence(diagram, value).details["verdict"]
    if diagram.roles and "linking" in selected:
        report.flags["linking-contract"] = (
            "fail" if linking_contract(diagram) else "pass"
        )
    if logger is not None:
        logger.log(f"Computed {', '.join(selected)} for {name}")
    return report


def reports_frame(reports: Sequence[InvariantReport], det_convention: str = "table"):
    """One column per report, rows laid out as in the printed tables"""
    data = {r.name: r.table_column(det_convention) for r in reports}
    frame = pd.DataFrame(data, index=list(TABLE_ROWS), columns=[r.name for r in reports])
    return frame.fillna("")


def render_reports(
    reports: Sequence[InvariantReport], output_format: str, det_convention: str = "table"
) -> str:
    if output_format == "json":
        return json.dumps([r.dict() for r in reports], sort_keys=True, indent=2)
    if not reports:
        return "invariant"
    frame = reports_frame(reports, det_convention)
    if output_format == "csv":
        return frame.to_csv(index_label="invariant")
    return frame.to_string()
