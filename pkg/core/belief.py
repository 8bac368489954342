#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
信念与建议组合

Belief 是有限状态空间上的概率向量；SuggestionProfile 是 n 位专家信念的有序组合。
两者构造后不可变。
"""

from typing import Iterable, Iterator, List, Optional, Sequence, Union

import numpy as np

from .errors import DimensionMismatch, EventNotConditionable, InvalidDistribution, PoolingError, ZeroProbabilityEvent
from .state_space import Event
from .tolerance import TolerancePolicy, resolve


def frozen_array(values: Iterable[float]) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


def as_distribution(values: Iterable[float], what: str = "distribution",
                    tol: Optional[TolerancePolicy] = None) -> np.ndarray:
    """校验并截断一个概率向量

    Args:
        values: 原始数值
        what: 出错信息中使用的名称
        tol: 容差策略

    Returns:
        截断到 [0,1] 的只读向量
    """
    eps = resolve(tol).eps_simplex
    arr = np.array(values, dtype=float).ravel()
    if arr.size == 0:
        raise InvalidDistribution(f"{what} must have at least one entry")
    if not np.all(np.isfinite(arr)):
        raise InvalidDistribution(f"{what} has non-finite entries: {arr.tolist()}")
    if arr.min() < -eps:
        raise InvalidDistribution(f"{what} has negative entry {arr.min():.6g}: {arr.tolist()}")
    total = arr.sum()
    if abs(total - 1.0) > eps:
        raise InvalidDistribution(f"{what} sums to {total:.12g}, not 1: {arr.tolist()}")
    return frozen_array(np.clip(arr, 0.0, 1.0))


class Belief:
    """概率向量 μ ∈ ΔΩ"""

    __slots__ = ("_probs",)

    def __init__(self, probs: Union[Sequence[float], np.ndarray], tol: Optional[TolerancePolicy] = None):
        self._probs = as_distribution(probs, "belief", tol)

    @classmethod
    def point_mass(cls, state: int, size: int) -> "Belief":
        probs = np.zeros(size)
        probs[state] = 1.0
        return cls(probs)

    @classmethod
    def uniform(cls, size: int) -> "Belief":
        return cls(np.full(size, 1.0 / size))

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def dimension(self) -> int:
        return self._probs.size

    def prob(self, event: Event) -> float:
        """事件概率 μ(E)"""
        if event.size != self.dimension:
            raise DimensionMismatch(f"event over {event.size} states, belief over {self.dimension}")
        return float(self._probs[event.mask()].sum())

    def condition(self, event: Event, tol: Optional[TolerancePolicy] = None) -> "Belief":
        return condition_belief(self, event, tol)

    def is_close(self, other: "Belief", atol: Optional[float] = None) -> bool:
        atol = resolve(None).eps_simplex if atol is None else atol
        return self.dimension == other.dimension and bool(np.allclose(self._probs, other._probs, rtol=0.0, atol=atol))

    def tolist(self) -> List[float]:
        return self._probs.tolist()

    def __len__(self) -> int:
        return self.dimension

    def __getitem__(self, index: int) -> float:
        return float(self._probs[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Belief):
            return NotImplemented
        return bool(np.array_equal(self._probs, other._probs))

    def __hash__(self) -> int:
        return hash(self._probs.tobytes())

    def __repr__(self) -> str:
        return "Belief(" + ", ".join(f"{p:.6g}" for p in self._probs) + ")"


def condition_belief(mu: Belief, event: Event, tol: Optional[TolerancePolicy] = None) -> Belief:
    """贝叶斯条件化 μ^E(G) = μ(G∩E)/μ(E)

    Raises:
        ZeroProbabilityEvent: μ(E) ≤ eps_simplex
    """
    policy = resolve(tol)
    mass = mu.prob(event)
    if mass <= policy.eps_simplex:
        raise ZeroProbabilityEvent(f"belief {mu} assigns probability {mass:.3g} to {event}")
    conditioned = np.where(event.mask(), mu.probs, 0.0) / mass
    # renormalise away the rounding of the division
    return Belief(conditioned / conditioned.sum(), policy)


class SuggestionProfile:
    """建议组合 **μ** = (μ_1, ..., μ_n)，所有信念共享同一状态空间"""

    __slots__ = ("_beliefs", "_matrix")

    def __init__(self, beliefs: Iterable[Union[Belief, Sequence[float]]], tol: Optional[TolerancePolicy] = None):
        beliefs = tuple(b if isinstance(b, Belief) else Belief(b, tol) for b in beliefs)
        if not beliefs:
            raise PoolingError("a suggestion profile needs at least one expert")
        dims = {b.dimension for b in beliefs}
        if len(dims) != 1:
            raise DimensionMismatch(f"beliefs in a profile must share one state space, got dimensions {sorted(dims)}")
        self._beliefs = beliefs
        self._matrix = frozen_array(np.vstack([b.probs for b in beliefs]))

    @property
    def beliefs(self) -> tuple:
        return self._beliefs

    @property
    def matrix(self) -> np.ndarray:
        """(n, |Ω|) 矩阵，第 i 行是 μ_i"""
        return self._matrix

    @property
    def expert_count(self) -> int:
        return len(self._beliefs)

    @property
    def dimension(self) -> int:
        return self._matrix.shape[1]

    def event_probs(self, event: Event) -> np.ndarray:
        if event.size != self.dimension:
            raise DimensionMismatch(f"event over {event.size} states, profile over {self.dimension}")
        return self._matrix[:, event.mask()].sum(axis=1)

    def is_conditionable(self, event: Event, tol: Optional[TolerancePolicy] = None) -> bool:
        """E ∈ 𝓔(**μ**)"""
        return bool(np.all(self.event_probs(event) > resolve(tol).eps_simplex))

    def require_conditionable(self, event: Event, tol: Optional[TolerancePolicy] = None) -> None:
        eps = resolve(tol).eps_simplex
        for i, mass in enumerate(self.event_probs(event)):
            if mass <= eps:
                raise EventNotConditionable(i, float(mass), event)

    def condition(self, event: Event, tol: Optional[TolerancePolicy] = None) -> "SuggestionProfile":
        return condition_profile(self, event, tol)

    def is_close(self, other: "SuggestionProfile", atol: Optional[float] = None) -> bool:
        return (self.expert_count == other.expert_count
                and all(a.is_close(b, atol) for a, b in zip(self._beliefs, other._beliefs)))

    def tolist(self) -> List[List[float]]:
        return [b.tolist() for b in self._beliefs]

    def __len__(self) -> int:
        return len(self._beliefs)

    def __iter__(self) -> Iterator[Belief]:
        return iter(self._beliefs)

    def __getitem__(self, index: int) -> Belief:
        return self._beliefs[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuggestionProfile):
            return NotImplemented
        return self._beliefs == other._beliefs

    def __hash__(self) -> int:
        return hash(self._beliefs)

    def __repr__(self) -> str:
        return "SuggestionProfile(" + ", ".join(repr(b) for b in self._beliefs) + ")"


def condition_profile(profile: SuggestionProfile, event: Event,
                      tol: Optional[TolerancePolicy] = None) -> SuggestionProfile:
    """逐个专家条件化 **μ**^E

    Raises:
        EventNotConditionable: 第一个 μ_i(E) ≈ 0 的专家
    """
    profile.require_conditionable(event, tol)
    return SuggestionProfile([condition_belief(b, event, tol) for b in profile], tol)
