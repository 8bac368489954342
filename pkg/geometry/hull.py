#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
凸包成员判定

以第一阶段单纯形法求解可行性问题：point = Σ c_k v_k，c_k ≥ 0，Σ c_k = 1。
使用稠密单纯形表和 Bland 规则防止循环。
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from core.belief import Belief
from core.errors import DimensionMismatch, PoolingError
from core.tolerance import TolerancePolicy, resolve

logger = logging.getLogger(__name__)

PIVOT_TOL = 1e-12

Vector = Union[Belief, Sequence[float], np.ndarray]


@dataclass(frozen=True)
class HullMembershipResult:
    """凸包成员判定结果

    Attributes:
        inside: 点是否在顶点凸包内
        coefficients: inside 时的凸组合系数，否则为 None
        residual: 第一阶段最优值（人工变量之和）
    """

    inside: bool
    coefficients: Optional[np.ndarray]
    residual: float


def _as_vector(v: Vector) -> np.ndarray:
    return np.asarray(v.probs if isinstance(v, Belief) else v, dtype=float).ravel()


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    for r in range(tableau.shape[0]):
        if r != row and tableau[r, col] != 0.0:
            tableau[r] -= tableau[r, col] * tableau[row]


def phase_one(a_matrix: np.ndarray, b: np.ndarray, max_iterations: Optional[int] = None) -> Tuple[float, np.ndarray]:
    """
    第一阶段单纯形：最小化人工变量之和

    Args:
        a_matrix: (m, k) 约束矩阵
        b: 右端项
        max_iterations: 迭代上限

    Returns:
        (最优值, 原变量取值)
    """
    a_matrix = np.array(a_matrix, dtype=float)
    b = np.array(b, dtype=float)
    rows, cols = a_matrix.shape
    negative = b < 0
    a_matrix[negative] *= -1.0
    b[negative] *= -1.0

    # [A | I | b] with the reduced-cost row last
    tableau = np.zeros((rows + 1, cols + rows + 1))
    tableau[:rows, :cols] = a_matrix
    tableau[:rows, cols:cols + rows] = np.eye(rows)
    tableau[:rows, -1] = b
    tableau[rows, :cols] = -a_matrix.sum(axis=0)
    tableau[rows, -1] = -b.sum()
    basis = list(range(cols, cols + rows))

    limit = max_iterations or 50 * (cols + rows + 1)
    for _ in range(limit):
        reduced = tableau[rows, :-1]
        entering = next((j for j in range(cols + rows) if reduced[j] < -PIVOT_TOL), None)
        if entering is None:
            break
        column = tableau[:rows, entering]
        candidates = [r for r in range(rows) if column[r] > PIVOT_TOL]
        if not candidates:
            # cannot happen for a phase-one problem, whose objective is bounded below by 0
            raise PoolingError("phase-one simplex became unbounded")
        ratios = [tableau[r, -1] / column[r] for r in candidates]
        best = min(ratios)
        # Bland: among the tied rows leave with the smallest basic index
        leaving = min((r for r, ratio in zip(candidates, ratios) if ratio <= best + PIVOT_TOL),
                      key=lambda r: basis[r])
        _pivot(tableau, leaving, entering)
        basis[leaving] = entering
    else:
        raise PoolingError(f"phase-one simplex did not terminate in {limit} iterations")

    solution = np.zeros(cols)
    for r, var in enumerate(basis):
        if var < cols:
            solution[var] = tableau[r, -1]
    objective = float(sum(tableau[r, -1] for r, var in enumerate(basis) if var >= cols))
    return max(objective, 0.0), solution


def hull_contains(vertices: Sequence[Vector], point: Vector,
                  tol: Optional[TolerancePolicy] = None) -> HullMembershipResult:
    """
    判断 point 是否在 vertices 的凸包内

    Raises:
        DimensionMismatch: 顶点或点的维数不一致
    """
    policy = resolve(tol)
    if len(vertices) == 0:
        raise PoolingError("hull membership needs at least one vertex")
    points = [_as_vector(v) for v in vertices]
    target = _as_vector(point)
    dims = {p.size for p in points} | {target.size}
    if len(dims) != 1:
        raise DimensionMismatch(f"vertices and point must share one dimension, got {sorted(dims)}")

    vertex_matrix = np.column_stack(points)
    a_matrix = np.vstack([vertex_matrix, np.ones((1, len(points)))])
    b = np.append(target, 1.0)
    residual, coefficients = phase_one(a_matrix, b)

    if residual > policy.eps_simplex:
        logger.debug("point %s outside hull, residual %.3g", target, residual)
        return HullMembershipResult(False, None, residual)
    coefficients = np.clip(coefficients, 0.0, None)
    coefficients = coefficients / coefficients.sum()
    return HullMembershipResult(True, coefficients, residual)
