from .alexander import alexander_matrix, alexander_polynomial, mva
from .checks import (
    CheckReport,
    brunnian_mva_form,
    conjecture_mva_check,
    determinant_identity,
    split_evidence,
    torres_check,
)
from .determinant import coloring_determinant, determinant, determinants
from .jones import calibrate_jones, compare_jones, jones
from .linking import LinkingMatrix, linking_contract, linking_matrix
from .properties import PropertiesReport, swatch_properties_report
from .report import InvariantReport, compute_report, render_reports
from .wirtinger import first_homology, wirtinger

__all__ = [
    "CheckReport",
    "InvariantReport",
    "LinkingMatrix",
    "PropertiesReport",
    "alexander_matrix",
    "alexander_polynomial",
    "brunnian_mva_form",
    "calibrate_jones",
    "coloring_determinant",
    "compare_jones",
    "compute_report",
    "conjecture_mva_check",
    "determinant",
    "determinant_identity",
    "determinants",
    "first_homology",
    "jones",
    "linking_contract",
    "linking_matrix",
    "mva",
    "render_reports",
    "split_evidence",
    "swatch_properties_report",
    "torres_check",
    "wirtinger",
]
