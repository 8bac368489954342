#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
数值容差策略

所有概率、效用比较和二分搜索共享同一组容差。
"""

from dataclasses import dataclass, replace
from typing import Optional


@dataclass(frozen=True)
class TolerancePolicy:
    """容差策略

    Attributes:
        eps_simplex: 概率单纯形容差（求和、截断、零概率判定）
        eps_value: 效用值比较容差
        eps_bisect: 二分搜索的终止宽度
    """

    eps_simplex: float = 1e-9
    eps_value: float = 1e-8
    eps_bisect: float = 1e-10

    def __post_init__(self):
        for name in ("eps_simplex", "eps_value", "eps_bisect"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive, got {getattr(self, name)}")
        if self.eps_bisect > self.eps_value:
            raise ValueError(
                f"eps_bisect ({self.eps_bisect}) must not exceed eps_value ({self.eps_value})")

    def with_eps_value(self, eps_value: float) -> "TolerancePolicy":
        """返回替换了 eps_value 的新策略，必要时同步收紧 eps_bisect"""
        return replace(self, eps_value=eps_value, eps_bisect=min(self.eps_bisect, eps_value))


DEFAULT_TOLERANCE = TolerancePolicy()

_current = DEFAULT_TOLERANCE


def current_tolerance() -> TolerancePolicy:
    return _current


def use_tolerance(policy: TolerancePolicy) -> TolerancePolicy:
    """设置进程级容差策略，返回之前的策略"""
    global _current
    previous = _current
    _current = policy
    return previous


def resolve(tol: Optional[TolerancePolicy]) -> TolerancePolicy:
    return tol if tol is not None else _current
