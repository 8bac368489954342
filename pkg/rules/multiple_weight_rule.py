from typing import Any, Dict, Iterable, Optional, Sequence, Union

import numpy as np

from .aggregation_rule import ProfileFunctionalRule
from .weights import Weight, WeightSet, WeightSetCollection


class MultipleWeightRule(ProfileFunctionalRule):
    """多权重聚合规则：U_**μ**(f) = min_{λ∈Λ} ∫ u∘f dp_λ(**μ**)"""

    kind = "multiple_weight"
    is_dual_self_family = True
    translation_invariant = True

    def __init__(self, weight_set: Union[WeightSet, Iterable[Sequence[float]]]):
        self.weight_set = weight_set if isinstance(weight_set, WeightSet) else WeightSet(weight_set)

    @classmethod
    def full_simplex(cls, expert_count: int) -> "MultipleWeightRule":
        """Λ = ΔN，即对专家期望效用取最小"""
        return cls(WeightSet.full_simplex(expert_count))

    @property
    def expert_count(self) -> Optional[int]:
        return self.weight_set.expert_count

    def functional(self, values: np.ndarray) -> float:
        return self.weight_set.minimize(values)

    def as_dual_self(self, expert_count: Optional[int] = None):
        from .dual_self_rule import DualSelfRule
        return DualSelfRule(WeightSetCollection([self.weight_set]))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "vertices": self.weight_set.tolist()}

    def describe(self) -> str:
        return f"multiple-weight |Λ|={len(self.weight_set)} vertices"
