from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from core.belief import Belief, SuggestionProfile

from .aggregation_rule import ProfileFunctionalRule, pooled_belief
from .weights import Weight, WeightSet, WeightSetCollection


class LinearRule(ProfileFunctionalRule):
    """线性聚合规则：U_**μ**(f) = ∫ u∘f dp_λ(**μ**)"""

    kind = "linear"
    is_dual_self_family = True
    translation_invariant = True

    def __init__(self, weight: Union[Weight, Sequence[float]]):
        self.weight = weight if isinstance(weight, Weight) else Weight(weight)

    @property
    def expert_count(self) -> Optional[int]:
        return self.weight.expert_count

    def functional(self, values: np.ndarray) -> float:
        return float(self.weight.lambdas @ values)

    def pooled(self, profile: SuggestionProfile) -> Belief:
        return pooled_belief(self.weight, profile)

    def as_dual_self(self, expert_count: Optional[int] = None):
        from .dual_self_rule import DualSelfRule
        return DualSelfRule(WeightSetCollection([WeightSet([self.weight])]))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "weight": self.weight.tolist()}

    def describe(self) -> str:
        return "linear λ=(" + ", ".join(f"{x:g}" for x in self.weight.lambdas) + ")"
