from abc import ABC, abstractmethod
from typing import Any


class AbstractPipeline(ABC):
    @abstractmethod
    def run(self, input: Any) -> Any:
        """
        Run every step on `input` and return the output of the last one
        """
        raise NotImplementedError("Run method must be implemented")
