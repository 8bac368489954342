from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from core.acts import UtilityAct
from core.belief import Belief, SuggestionProfile
from core.errors import DimensionMismatch, NotProfileFunctional, WrongExpertCount
from core.tolerance import TolerancePolicy, resolve

from .weights import Weight

# Vector of expected utilities, one entry per expert (units: utils).
EvaluationProfile = np.ndarray


class AggregationRule(ABC):
    """聚合规则的抽象基类，定义了所有聚合规则需要实现的接口"""

    kind: str = ""
    # Linear, multiple-weight, dual-self and dictatorship rules
    is_dual_self_family: bool = False
    # U(f + c·1) = U(f) + c; concrete rules opt in
    translation_invariant: bool = False

    @property
    def expert_count(self) -> Optional[int]:
        """规则要求的专家数；None 表示任意"""
        return None

    def check_profile(self, profile: SuggestionProfile) -> None:
        expected = self.expert_count
        if expected is not None and profile.expert_count != expected:
            raise WrongExpertCount(
                f"{self.kind} rule is defined for {expected} experts, profile has {profile.expert_count}")

    @abstractmethod
    def evaluate(self, profile: SuggestionProfile, f: UtilityAct) -> float:
        """
        计算 U_**μ**(f)

        Args:
            profile: 建议组合
            f: 效用行动

        Returns:
            f 的确定性等价（效用单位）
        """
        pass

    def functional(self, values: EvaluationProfile) -> float:
        """聚合泛函 I(a)；不是评价组合泛函的规则会抛出 NotProfileFunctional"""
        raise NotProfileFunctional(f"{self.kind} rule is not a functional of the evaluation profile")

    def as_dual_self(self, expert_count: Optional[int] = None):
        """嵌入为等价的 dual-self 规则"""
        raise NotProfileFunctional(f"{self.kind} rule has no dual-self representation")

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        pass

    def describe(self) -> str:
        return self.kind

    def __eq__(self, other) -> bool:
        if not isinstance(other, AggregationRule):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(repr(self.to_dict()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_dict()})"


class ProfileFunctionalRule(AggregationRule):
    """U_**μ**(f) = I(**μ**·u_f) 形式的规则"""

    def evaluate(self, profile: SuggestionProfile, f: UtilityAct) -> float:
        self.check_profile(profile)
        return self.functional(evaluation_profile(profile, f))


def evaluation_profile(profile: SuggestionProfile, f: UtilityAct) -> EvaluationProfile:
    """评价组合 **μ**·u_f = (EU_{μ_1}(f), ..., EU_{μ_n}(f))"""
    if profile.dimension != f.dimension:
        raise DimensionMismatch(f"profile over {profile.dimension} states, act over {f.dimension}")
    values = profile.matrix @ f.utils
    values.setflags(write=False)
    return values


def pooled_belief(weight: Union[Weight, Sequence[float]], profile: SuggestionProfile,
                  tol: Optional[TolerancePolicy] = None) -> Belief:
    """线性汇聚 p_λ(**μ**) = Σ λ_i μ_i"""
    if not isinstance(weight, Weight):
        weight = Weight(weight, tol)
    if weight.expert_count != profile.expert_count:
        raise DimensionMismatch(f"weight over {weight.expert_count} experts, profile has {profile.expert_count}")
    pooled = weight.lambdas @ profile.matrix
    return Belief(pooled / pooled.sum(), tol)


def aggregation_functional(rule: AggregationRule, values: Union[EvaluationProfile, Sequence[float]]) -> float:
    """I(a)：Linear → λ·a，MultipleWeight → min，DualSelf → max min，Dictatorship(i) → a_i"""
    values = np.asarray(values, dtype=float)
    expected = rule.expert_count
    if expected is not None and values.size != expected:
        raise WrongExpertCount(f"{rule.kind} rule is defined for {expected} experts, got {values.size} values")
    return rule.functional(values)


def aggregate_utility(rule: AggregationRule, profile: SuggestionProfile, f: UtilityAct) -> float:
    """U_**μ**(f)，同时也是 f 的确定性等价"""
    return rule.evaluate(profile, f)


def realize_evaluation_profile(profile: SuggestionProfile, target: Sequence[float],
                               tol: Optional[TolerancePolicy] = None) -> Optional[UtilityAct]:
    """
    构造一个评价组合等于 target 的行动

    Args:
        profile: 建议组合
        target: 期望的评价组合（每位专家一个值）

    Returns:
        满足 **μ**·u_f = target 的行动；若该组合的信念线性相关导致无解则返回 None
    """
    target = np.asarray(target, dtype=float)
    if target.size != profile.expert_count:
        raise DimensionMismatch(f"target has {target.size} entries, profile has {profile.expert_count} experts")
    utils, *_ = np.linalg.lstsq(profile.matrix, target, rcond=None)
    if np.max(np.abs(profile.matrix @ utils - target)) > resolve(tol).eps_value:
        return None
    return UtilityAct(utils)
