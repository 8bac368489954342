#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
几何汇聚（对照规则）

μ(ω) = Π_i μ_i(ω)^{α_i} / C。该规则不是评价组合的泛函，只用于对照检验。
约定 0^α = 0（α > 0），0^0 = 1。
"""

from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from core.acts import UtilityAct, expected_utility
from core.belief import Belief, SuggestionProfile, as_distribution
from core.errors import DimensionMismatch, GeometricUndefined
from core.tolerance import TolerancePolicy, resolve

from .aggregation_rule import AggregationRule


def geometric_pooled_belief(alphas: Union[Sequence[float], np.ndarray], profile: SuggestionProfile,
                            tol: Optional[TolerancePolicy] = None) -> Belief:
    """
    归一化几何平均

    Args:
        alphas: 指数向量，非负且和为1
        profile: 建议组合

    Returns:
        几何汇聚信念

    Raises:
        GeometricUndefined: 归一化常数 C ≈ 0（支撑不相交）
    """
    policy = resolve(tol)
    alphas = as_distribution(alphas, "geometric exponents", policy)
    if alphas.size != profile.expert_count:
        raise DimensionMismatch(f"{alphas.size} exponents for {profile.expert_count} experts")
    # numpy already follows 0**0 == 1 and 0**a == 0 for a > 0
    products = np.prod(profile.matrix ** alphas[:, None], axis=0)
    normaliser = float(products.sum())
    if normaliser <= policy.eps_simplex:
        raise GeometricUndefined(
            f"geometric pooling is undefined: normalising constant {normaliser:.3g} (supports do not overlap)")
    return Belief(products / normaliser, policy)


class GeometricRule(AggregationRule):
    """几何汇聚下的主观期望效用"""

    kind = "geometric"
    translation_invariant = True

    def __init__(self, exponents: Union[Sequence[float], np.ndarray]):
        self.exponents = as_distribution(exponents, "geometric exponents")

    @property
    def expert_count(self) -> Optional[int]:
        return self.exponents.size

    def pooled(self, profile: SuggestionProfile) -> Belief:
        return geometric_pooled_belief(self.exponents, profile)

    def evaluate(self, profile: SuggestionProfile, f: UtilityAct) -> float:
        self.check_profile(profile)
        return expected_utility(self.pooled(profile), f)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "exponents": self.exponents.tolist()}

    def describe(self) -> str:
        return "geometric α=(" + ", ".join(f"{x:g}" for x in self.exponents) + ")"
