from .budget import SearchBudget, SimplifyOutcome, SimplifyStatus, Verdict
from .search import brunnian_check, is_trivial_swatch, is_unlink, simplify

__all__ = [
    "SearchBudget",
    "SimplifyOutcome",
    "SimplifyStatus",
    "Verdict",
    "brunnian_check",
    "is_trivial_swatch",
    "is_unlink",
    "simplify",
]
