import json
import time
from collections import defaultdict
from typing import Any, List, Optional

from swatchlink.helpers.encoder import CustomEncoder


class RunTracker:
    """
    Records the steps of a pipeline run: which logic units ran, whether
    they passed and how long they took
    """

    _run_info: dict
    _steps: List[dict]
    _response: Any
    _success: bool
    _step_counts: dict

    def __init__(self) -> None:
        self._success = False
        self._start_time: Optional[float] = None
        self._run_info = {}
        self._steps = []
        self._response = None
        self._step_counts = defaultdict(int)

    def start_new_track(self, command: str, target: Optional[str] = None):
        """
        Resets tracking variables to start new track
        """
        self._start_time = time.time()
        self._steps = []
        self._response = None
        self._success = False
        self._step_counts = defaultdict(int)
        self._run_info = {"command": command, "target": target}

    def add_step(self, step: dict) -> None:
        """
        Add a step performed by the pipeline
        Args:
            step (dict): dictionary containing information
        """
        self._step_counts[step.get("type")] += 1
        self._steps.append(step)

    def set_final_response(self, response: Any):
        self._response = response

    def execute_func(self, function, *args, **kwargs) -> Any:
        """
        Run a function and record its execution time as a step
        Args:
            function (function): Function that is to be executed

        Returns:
            Any: Response return after function execution
        """
        tag = kwargs.pop("tag", function.__name__)
        start_time = time.time()
        try:
            result = function(*args, **kwargs)
        except Exception:
            self.add_step(
                {
                    "type": tag,
                    "success": False,
                    "execution_time": time.time() - start_time,
                }
            )
            raise

        self.add_step(
            {"type": tag, "success": True, "execution_time": time.time() - start_time}
        )
        return result

    def get_summary(self) -> dict:
        """
        Returns the summary in json to steps involved in execution of track
        Returns:
            dict: summary json
        """
        if self._start_time is None:
            raise RuntimeError("[RunTracker]: Tracking not started")

        return {
            "run_info": self._run_info,
            "steps": self._steps,
            "response": self._response,
            "execution_time": self.get_execution_time(),
            "success": self._success,
        }

    def to_json(self) -> str:
        return json.dumps(self.get_summary(), cls=CustomEncoder, indent=2)

    def get_execution_time(self) -> float:
        return time.time() - self._start_time

    @property
    def steps(self) -> List[dict]:
        return self._steps

    @property
    def success(self) -> bool:
        return self._success

    @success.setter
    def success(self, value: bool):
        self._success = value
