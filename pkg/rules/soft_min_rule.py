from typing import Any, Dict

import numpy as np
from scipy.special import logsumexp

from core.errors import PoolingError

from .aggregation_rule import ProfileFunctionalRule


class SoftMinRule(ProfileFunctionalRule):
    """
    评价组合的软最小值 I(a) = −T·log(mean(exp(−a/T)))

    单调且平移不变，但不是正齐次的，因此不满足 C-Independence。
    """

    kind = "soft_min"
    translation_invariant = True

    def __init__(self, temperature: float = 1.0):
        if not temperature > 0:
            raise PoolingError(f"temperature must be positive, got {temperature}")
        self.temperature = float(temperature)

    def functional(self, values: np.ndarray) -> float:
        t = self.temperature
        return float(-t * (logsumexp(-np.asarray(values) / t) - np.log(len(values))))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "temperature": self.temperature}

    def describe(self) -> str:
        return f"soft-min T={self.temperature:g}"
