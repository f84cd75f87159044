from .base_logic_unit import BaseLogicUnit
from .logic_unit_output import LogicUnitOutput
from .pipeline import Pipeline
from .pipeline_context import PipelineContext

__all__ = ["BaseLogicUnit", "LogicUnitOutput", "Pipeline", "PipelineContext"]
