from fractions import Fraction
from json import JSONEncoder

import numpy as np


class CustomEncoder(JSONEncoder):
    """JSON encoder for numpy scalars, fractions and pydantic reports"""

    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Fraction):
            return str(obj)
        if hasattr(obj, "dict") and callable(obj.dict):
            return obj.dict()
        # Let the base class default method raise the TypeError
        return JSONEncoder.default(self, obj)
