#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
条件偏好与条件确定性等价

条件偏好 f ≿^E g 要求对所有 h 都有 fEh ≿ gEh。一般情形下只能对抽样的 h 检验：
失败是确定的，成立只是抽样证据。
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import bisect

from core.acts import UtilityAct, composite_act, expected_utility
from core.belief import SuggestionProfile, condition_belief
from core.errors import BracketFailure, DisagreementNotRestricted, NotProfileFunctional
from core.state_space import Event
from core.tolerance import TolerancePolicy, resolve
from rules.aggregation_rule import AggregationRule, aggregate_utility

from .agreement import disagreement_restricted_within

logger = logging.getLogger(__name__)

DEFAULT_H_SAMPLES = 32
DEFAULT_H_RANGE = 10.0
BRACKET_GROWTH = 2.0
BRACKET_CAP = 2 ** 20


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ConditionalComparison:
    """条件比较 f ≿^E g 的三值结论"""

    verdict: Verdict
    samples_used: int
    witness: Optional[UtilityAct] = None
    gap: float = 0.0

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


@dataclass(frozen=True)
class ConditionalCE:
    """每个抽样 h 下的条件确定性等价"""

    value_by_h: List[Tuple[UtilityAct, float]] = field(default_factory=list)

    @property
    def values(self) -> List[float]:
        return [ce for _, ce in self.value_by_h]

    @property
    def spread(self) -> float:
        values = self.values
        return max(values) - min(values) if values else 0.0

    def is_well_defined(self, tol: Optional[TolerancePolicy] = None) -> bool:
        return self.spread <= resolve(tol).eps_value


def default_h_samples(f: UtilityAct, g: Optional[UtilityAct] = None, count: int = DEFAULT_H_SAMPLES,
                      act_range: float = DEFAULT_H_RANGE, seed: int = 0) -> List[UtilityAct]:
    """零行动、f、g 以及 count 个 [−act_range, act_range]^Ω 上的均匀抽样"""
    rng = np.random.default_rng(seed)
    samples = [UtilityAct.constant(0.0, f.dimension), f]
    if g is not None:
        samples.append(g)
    samples.extend(UtilityAct(rng.uniform(-act_range, act_range, f.dimension)) for _ in range(count))
    return samples


def _certainty_equivalent(rule: AggregationRule, profile: SuggestionProfile, event: Event,
                          f: UtilityAct, h: UtilityAct, tol: TolerancePolicy) -> float:
    """解 U(fEh) = U((c·1)Eh)"""
    target = aggregate_utility(rule, profile, composite_act(f, event, h))
    size = f.dimension

    def excess(c: float) -> float:
        return aggregate_utility(rule, profile, composite_act(UtilityAct.constant(c, size), event, h)) - target

    on_event = f.utils[event.mask()]
    lo, hi = float(on_event.min()) - 1.0, float(on_event.max()) + 1.0
    initial_width = hi - lo
    step = initial_width
    excess_lo, excess_hi = excess(lo), excess(hi)
    while excess_lo > 0.0 or excess_hi < 0.0:
        if hi - lo > BRACKET_CAP * initial_width:
            raise BracketFailure(
                f"no certainty equivalent within [{lo:.6g}, {hi:.6g}] for {rule.describe()}; "
                f"the rule is not monotone in constant acts")
        if excess_lo > 0.0:
            lo -= step
            excess_lo = excess(lo)
        if excess_hi < 0.0:
            hi += step
            excess_hi = excess(hi)
        step *= BRACKET_GROWTH
    return float(bisect(excess, lo, hi, xtol=tol.eps_bisect))


def conditional_ce(rule: AggregationRule, profile: SuggestionProfile, event: Event, f: UtilityAct,
                   h_samples: Sequence[UtilityAct], tol: Optional[TolerancePolicy] = None) -> ConditionalCE:
    """
    条件确定性等价

    Args:
        rule: 聚合规则
        profile: 建议组合
        event: 条件事件 E ∈ 𝓔(**μ**)
        f: 行动
        h_samples: E 外的替代行动 h（非空）

    Returns:
        ConditionalCE，记录每个 h 下的 c 以及它们的极差
    """
    policy = resolve(tol)
    profile.require_conditionable(event, policy)
    if not h_samples:
        raise ValueError("conditional_ce needs at least one h sample")
    values = [(h, _certainty_equivalent(rule, profile, event, f, h, policy)) for h in h_samples]
    return ConditionalCE(values)


def conditional_compare(rule: AggregationRule, profile: SuggestionProfile, event: Event, f: UtilityAct,
                        g: UtilityAct, h_samples: Sequence[UtilityAct],
                        tol: Optional[TolerancePolicy] = None) -> ConditionalComparison:
    """在抽样的 h 上检验 fEh ≿ gEh"""
    policy = resolve(tol)
    profile.require_conditionable(event, policy)
    if not h_samples:
        return ConditionalComparison(Verdict.UNKNOWN, 0)
    for used, h in enumerate(h_samples, start=1):
        gap = (aggregate_utility(rule, profile, composite_act(g, event, h))
               - aggregate_utility(rule, profile, composite_act(f, event, h)))
        if gap > policy.eps_value:
            logger.debug("conditional comparison fails at h=%s with gap %.3g", h, gap)
            return ConditionalComparison(Verdict.FAILS, used, witness=h, gap=gap)
    return ConditionalComparison(Verdict.HOLDS, len(h_samples))


def restricted_decomposition(rule: AggregationRule, profile: SuggestionProfile, event: Event,
                             f: UtilityAct, h: UtilityAct, tol: Optional[TolerancePolicy] = None) -> float:
    """
    分歧限制在 E 内时 U(fEh) 的闭式分解

    U(fEh) = α·U_{**μ**^E}(f) + (1−α)·EU_{μ_0}(h)，其中 α = μ_1(E)，μ_0 为 E^c 上的共同条件信念。

    Raises:
        DisagreementNotRestricted: 专家在 E 之外存在分歧
        EventNotConditionable: 某位专家 μ_i(E) ≈ 0
    """
    policy = resolve(tol)
    if not rule.is_dual_self_family:
        raise NotProfileFunctional(f"the decomposition holds for dual-self rules only, not {rule.describe()}")
    if not disagreement_restricted_within(profile, event, policy):
        raise DisagreementNotRestricted(f"experts disagree outside {event}")
    profile.require_conditionable(event, policy)
    masses = profile.event_probs(event)
    alpha = float(masses[0])
    if np.max(np.abs(masses - alpha)) > policy.eps_simplex:
        raise DisagreementNotRestricted(f"experts disagree on the probability of {event}: {masses.tolist()}")
    inside = alpha * aggregate_utility(rule, profile.condition(event, policy), f)
    if event.is_universe or 1.0 - alpha <= policy.eps_simplex:
        return inside
    common = condition_belief(profile[0], event.complement(), policy)
    return inside + (1.0 - alpha) * expected_utility(common, h)
