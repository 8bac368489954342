#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
专家权重、权重多面体与权重集合族

多面体 Λ 由有限顶点列表表示，线性目标的极值在顶点处取得，因此 min/max 是精确的。
"""

from typing import Iterable, Iterator, List, Optional, Sequence, Union

import numpy as np

from core.belief import as_distribution, frozen_array
from core.errors import DimensionMismatch, PoolingError
from core.tolerance import TolerancePolicy, resolve


class Weight:
    """可信度权重 λ ∈ ΔN"""

    __slots__ = ("_lambdas",)

    def __init__(self, lambdas: Union[Sequence[float], np.ndarray], tol: Optional[TolerancePolicy] = None):
        self._lambdas = as_distribution(lambdas, "weight", tol)

    @classmethod
    def unit(cls, expert: int, expert_count: int) -> "Weight":
        lambdas = np.zeros(expert_count)
        lambdas[expert] = 1.0
        return cls(lambdas)

    @classmethod
    def uniform(cls, expert_count: int) -> "Weight":
        return cls(np.full(expert_count, 1.0 / expert_count))

    @property
    def lambdas(self) -> np.ndarray:
        return self._lambdas

    @property
    def expert_count(self) -> int:
        return self._lambdas.size

    def tolist(self) -> List[float]:
        return self._lambdas.tolist()

    def __len__(self) -> int:
        return self.expert_count

    def __getitem__(self, index: int) -> float:
        return float(self._lambdas[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return bool(np.array_equal(self._lambdas, other._lambdas))

    def __hash__(self) -> int:
        return hash(self._lambdas.tobytes())

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(f"{x:.6g}" for x in self._lambdas) + ")"


def _as_weight(value: Union[Weight, Sequence[float]], tol: Optional[TolerancePolicy]) -> Weight:
    return value if isinstance(value, Weight) else Weight(value, tol)


class WeightSet:
    """权重多面体 Λ：有限个顶点的凸包，构造时去除重复顶点"""

    __slots__ = ("_vertices", "_matrix")

    def __init__(self, vertices: Iterable[Union[Weight, Sequence[float]]], tol: Optional[TolerancePolicy] = None):
        eps = resolve(tol).eps_simplex
        kept: List[Weight] = []
        for vertex in (_as_weight(v, tol) for v in vertices):
            if kept and vertex.expert_count != kept[0].expert_count:
                raise DimensionMismatch(
                    f"weight set mixes {kept[0].expert_count}- and {vertex.expert_count}-expert weights")
            if any(np.max(np.abs(vertex.lambdas - k.lambdas)) <= eps for k in kept):
                continue
            kept.append(vertex)
        if not kept:
            raise PoolingError("a weight set needs at least one vertex")
        self._vertices = tuple(kept)
        self._matrix = frozen_array(np.vstack([v.lambdas for v in kept]))

    @classmethod
    def full_simplex(cls, expert_count: int) -> "WeightSet":
        """整个 ΔN：顶点为所有单位权重"""
        return cls(Weight.unit(i, expert_count) for i in range(expert_count))

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def matrix(self) -> np.ndarray:
        """(k, n) 顶点矩阵"""
        return self._matrix

    @property
    def expert_count(self) -> int:
        return self._matrix.shape[1]

    def minimize(self, values: np.ndarray) -> float:
        """min_{λ∈Λ} λ·a"""
        return float(np.min(self._matrix @ values))

    def tolist(self) -> List[List[float]]:
        return [v.tolist() for v in self._vertices]

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightSet):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"WeightSet({self.tolist()})"


class WeightSetCollection:
    """权重集合族 **Λ**：非空的有限多面体列表"""

    __slots__ = ("_sets",)

    def __init__(self, sets: Iterable[Union[WeightSet, Iterable[Sequence[float]]]],
                 tol: Optional[TolerancePolicy] = None):
        sets = tuple(s if isinstance(s, WeightSet) else WeightSet(s, tol) for s in sets)
        if not sets:
            raise PoolingError("a weight-set collection needs at least one weight set")
        counts = {s.expert_count for s in sets}
        if len(counts) != 1:
            raise DimensionMismatch(f"weight sets disagree on the number of experts: {sorted(counts)}")
        self._sets = sets

    @property
    def sets(self) -> tuple:
        return self._sets

    @property
    def expert_count(self) -> int:
        return self._sets[0].expert_count

    def maximin(self, values: np.ndarray) -> float:
        """max_{Λ∈**Λ**} min_{λ∈Λ} λ·a"""
        return max(s.minimize(values) for s in self._sets)

    def tolist(self) -> List[List[List[float]]]:
        return [s.tolist() for s in self._sets]

    def __len__(self) -> int:
        return len(self._sets)

    def __iter__(self) -> Iterator[WeightSet]:
        return iter(self._sets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightSetCollection):
            return NotImplemented
        return self._sets == other._sets

    def __hash__(self) -> int:
        return hash(self._sets)

    def __repr__(self) -> str:
        return f"WeightSetCollection({self.tolist()})"
