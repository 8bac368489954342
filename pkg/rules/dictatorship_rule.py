from typing import Any, Dict, Optional

import numpy as np

from core.acts import UtilityAct, expected_utility
from core.belief import SuggestionProfile
from core.errors import IndexOutOfRange

from .aggregation_rule import AggregationRule
from .weights import Weight, WeightSet, WeightSetCollection


class DictatorshipRule(AggregationRule):
    """独裁规则：≿_**μ** 由 EU_{μ_i} 表示"""

    kind = "dictatorship"
    is_dual_self_family = True
    translation_invariant = True

    def __init__(self, expert: int):
        if expert < 0:
            raise IndexOutOfRange(f"expert index must be non-negative, got {expert}")
        self.expert = int(expert)

    def _check_index(self, expert_count: int) -> None:
        if self.expert >= expert_count:
            raise IndexOutOfRange(f"dictator {self.expert} does not exist among {expert_count} experts")

    def evaluate(self, profile: SuggestionProfile, f: UtilityAct) -> float:
        self._check_index(profile.expert_count)
        return expected_utility(profile[self.expert], f)

    def functional(self, values: np.ndarray) -> float:
        self._check_index(len(values))
        return float(values[self.expert])

    def as_dual_self(self, expert_count: Optional[int] = None):
        from .dual_self_rule import DualSelfRule
        if expert_count is None:
            expert_count = self.expert + 1
        self._check_index(expert_count)
        return DualSelfRule(WeightSetCollection([WeightSet([Weight.unit(self.expert, expert_count)])]))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "expert": self.expert}

    def describe(self) -> str:
        return f"dictatorship of expert {self.expert}"


def dictatorship_rule(expert: int) -> DictatorshipRule:
    return DictatorshipRule(expert)
