#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Dual-self 聚合规则

U_**μ**(f) = max_{Λ∈**Λ**} min_{λ∈Λ} ∫ u∘f dp_λ(**μ**)：乐观自我先选权重集合，
悲观自我再在集合内选权重。
"""

import itertools
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.belief import Belief, SuggestionProfile
from core.errors import PoolingError, WrongExpertCount

from .aggregation_rule import AggregationRule, ProfileFunctionalRule, pooled_belief
from .weights import Weight, WeightSet, WeightSetCollection


class DualSelfRule(ProfileFunctionalRule):
    """Dual-self 聚合规则"""

    kind = "dual_self"
    is_dual_self_family = True
    translation_invariant = True

    def __init__(self, collection):
        self.collection = collection if isinstance(collection, WeightSetCollection) else WeightSetCollection(collection)

    @property
    def expert_count(self) -> Optional[int]:
        return self.collection.expert_count

    def functional(self, values: np.ndarray) -> float:
        return self.collection.maximin(values)

    def as_dual_self(self, expert_count: Optional[int] = None) -> "DualSelfRule":
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "sets": self.collection.tolist()}

    def describe(self) -> str:
        return f"dual-self |**Λ**|={len(self.collection)} weight sets"


def order_statistic_rule(expert_count: int, k: int) -> DualSelfRule:
    """
    第 k 小的专家评价（k 从1开始）

    第 k 小值等于所有 n−k+1 元子集上最小值的最大值，每个子集对应一个以单位权重为顶点的多面体。

    Args:
        expert_count: 专家数 n
        k: 次序

    Returns:
        对应的 DualSelfRule
    """
    if not 1 <= k <= expert_count:
        raise PoolingError(f"order statistic k={k} outside 1..{expert_count}")
    subset_size = expert_count - k + 1
    sets = [WeightSet(Weight.unit(i, expert_count) for i in subset)
            for subset in itertools.combinations(range(expert_count), subset_size)]
    return DualSelfRule(WeightSetCollection(sets))


def median_rule() -> DualSelfRule:
    """三位专家的中位数规则，**Λ** = {hull{e1,e2}, hull{e2,e3}, hull{e1,e3}}"""
    return order_statistic_rule(3, 2)


def credibility_rule(group_weights: Tuple[float, float] = (0.8, 0.2),
                     interval: Tuple[float, float] = (0.25, 0.75)) -> DualSelfRule:
    """
    按可信度分组的四专家规则

    U = w1·min_{λ∈I} EU_{λμ1+(1−λ)μ2}(f) + w2·max_{λ'∈I} EU_{λ'μ3+(1−λ')μ4}(f)。
    外层 max 在区间端点取得，因此每个端点 λ' 给出一个权重集合。

    Args:
        group_weights: 组 {1,2} 与组 {3,4} 的总权重
        interval: 组内权重区间

    Returns:
        对应的 DualSelfRule
    """
    w1, w2 = group_weights
    if w1 < 0 or w2 < 0 or abs(w1 + w2 - 1.0) > 1e-12:
        raise PoolingError(f"group weights must be a distribution, got {group_weights}")
    lo, hi = interval
    if not 0.0 <= lo <= hi <= 1.0:
        raise PoolingError(f"interval must satisfy 0 ≤ lo ≤ hi ≤ 1, got {interval}")
    sets = []
    for outer in (lo, hi):
        vertices = [(w1 * inner, w1 * (1 - inner), w2 * outer, w2 * (1 - outer)) for inner in (lo, hi)]
        sets.append(WeightSet(vertices))
    return DualSelfRule(WeightSetCollection(sets))


def induced_belief_sets(rule: AggregationRule, profile: SuggestionProfile) -> List[List[Belief]]:
    """每个权重集合在该组合下诱导的汇聚信念顶点"""
    rule.check_profile(profile)
    dual = rule.as_dual_self(profile.expert_count)
    if dual.expert_count != profile.expert_count:
        raise WrongExpertCount(f"rule has {dual.expert_count} experts, profile has {profile.expert_count}")
    return [[pooled_belief(w, profile) for w in weight_set] for weight_set in dual.collection]
