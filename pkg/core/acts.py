#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
效用行动

行动直接以效用向量 u_f 表示；常数行动是常数向量。
"""

from typing import List, Sequence, Union

import numpy as np

from .belief import Belief, frozen_array
from .errors import AlphaOutOfRange, DimensionMismatch, PoolingError
from .state_space import Event


class UtilityAct:
    """效用行动 u_f：状态上的实值向量（单位：效用）"""

    __slots__ = ("_utils",)

    def __init__(self, utils: Union[Sequence[float], np.ndarray]):
        arr = np.array(utils, dtype=float).ravel()
        if arr.size == 0:
            raise PoolingError("an act needs at least one state")
        if not np.all(np.isfinite(arr)):
            raise PoolingError(f"act utilities must be finite: {arr.tolist()}")
        self._utils = frozen_array(arr)

    @classmethod
    def constant(cls, value: float, size: int) -> "UtilityAct":
        return cls(np.full(size, float(value)))

    @classmethod
    def indicator(cls, event: Event, high: float = 1.0, low: float = 0.0) -> "UtilityAct":
        return cls(np.where(event.mask(), high, low))

    @property
    def utils(self) -> np.ndarray:
        return self._utils

    @property
    def dimension(self) -> int:
        return self._utils.size

    @property
    def is_constant(self) -> bool:
        return bool(np.ptp(self._utils) == 0.0)

    def shifted(self, c: float) -> "UtilityAct":
        """f + c·1"""
        return UtilityAct(self._utils + c)

    def tolist(self) -> List[float]:
        return self._utils.tolist()

    def __len__(self) -> int:
        return self.dimension

    def __eq__(self, other) -> bool:
        if not isinstance(other, UtilityAct):
            return NotImplemented
        return bool(np.array_equal(self._utils, other._utils))

    def __hash__(self) -> int:
        return hash(self._utils.tobytes())

    def __repr__(self) -> str:
        return "UtilityAct(" + ", ".join(f"{u:.6g}" for u in self._utils) + ")"


def _check_dims(*dims: int) -> None:
    if len(set(dims)) != 1:
        raise DimensionMismatch(f"dimensions do not match: {list(dims)}")


def expected_utility(mu: Belief, f: UtilityAct) -> float:
    """EU_μ(f) = Σ_ω μ(ω)·f(ω)"""
    _check_dims(mu.dimension, f.dimension)
    return float(mu.probs @ f.utils)


def composite_act(f: UtilityAct, event: Event, g: UtilityAct) -> UtilityAct:
    """fEg：E 上取 f，E 外取 g"""
    _check_dims(f.dimension, event.size, g.dimension)
    return UtilityAct(np.where(event.mask(), f.utils, g.utils))


def mix_acts(f: UtilityAct, g: UtilityAct, alpha: float) -> UtilityAct:
    """逐点混合 αf + (1−α)g，α ∈ (0,1)"""
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"mixture weight must lie in (0,1), got {alpha}")
    _check_dims(f.dimension, g.dimension)
    return UtilityAct(alpha * f.utils + (1.0 - alpha) * g.utils)
