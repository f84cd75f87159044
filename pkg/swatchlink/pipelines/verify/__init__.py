from .verify_pipeline import VerifyPipeline
from .verify_results import VerifyResults

__all__ = ["VerifyPipeline", "VerifyResults"]
