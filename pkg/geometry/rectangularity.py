#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
矩形性检验

信念集合 P 关于划分 {E, E^c} 是矩形的，如果对任意 p1, p2, p3 ∈ P，粘贴测度
p4 = p3(E)·p1(·|E) + p3(E^c)·p2(·|E^c) 仍在 P 中。
"""

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.belief import Belief, condition_belief
from core.errors import ConditioningUndefined
from core.state_space import Event
from core.tolerance import TolerancePolicy, resolve

from .hull import HullMembershipResult, hull_contains

DEFAULT_SPOT_CHECKS = 64


@dataclass(frozen=True)
class RectangularityWitness:
    """使矩形性失败的三元组及其粘贴测度"""

    triple: Tuple[Belief, Belief, Belief]
    pasted: Belief
    membership: HullMembershipResult


def paste(p1: Belief, p2: Belief, p3: Belief, event: Event, tol: Optional[TolerancePolicy] = None) -> Belief:
    """p3(E)·p1(·|E) + p3(E^c)·p2(·|E^c)"""
    inside = p3.prob(event)
    return Belief(inside * condition_belief(p1, event, tol).probs
                  + (1.0 - inside) * condition_belief(p2, event.complement(), tol).probs, tol)


def _random_hull_point(vertices: Sequence[Belief], rng: np.random.Generator) -> Belief:
    # stick-breaking over the vertices
    cuts = np.sort(rng.uniform(size=len(vertices) - 1))
    coefficients = np.diff(np.concatenate(([0.0], cuts, [1.0])))
    point = coefficients @ np.vstack([v.probs for v in vertices])
    return Belief(point / point.sum())


def find_rectangularity_violation(vertices: Sequence[Belief], event: Event, spot_checks: int = DEFAULT_SPOT_CHECKS,
                                  seed: int = 0, tol: Optional[TolerancePolicy] = None
                                  ) -> Optional[RectangularityWitness]:
    """
    寻找矩形性的反例

    先检查所有有序顶点三元组，再对凸包内随机三元组做抽查。

    Returns:
        找到反例时返回 RectangularityWitness，否则返回 None

    Raises:
        ConditioningUndefined: 某个顶点对 E 或 E^c 的概率为零
    """
    policy = resolve(tol)
    if event.is_universe:
        return None
    for index, vertex in enumerate(vertices):
        if vertex.prob(event) <= policy.eps_simplex:
            raise ConditioningUndefined(index, event, "the event")
        if 1.0 - vertex.prob(event) <= policy.eps_simplex:
            raise ConditioningUndefined(index, event, "the complement")

    # the verdict must not depend on the order in which vertices are listed
    ordered = sorted(vertices, key=lambda b: tuple(b.probs))

    def check(triple) -> Optional[RectangularityWitness]:
        pasted = paste(*triple, event, policy)
        membership = hull_contains(ordered, pasted, policy)
        return None if membership.inside else RectangularityWitness(tuple(triple), pasted, membership)

    for triple in itertools.product(ordered, repeat=3):
        witness = check(triple)
        if witness is not None:
            return witness

    if len(ordered) > 1:
        rng = np.random.default_rng(seed)
        for _ in range(spot_checks):
            witness = check([_random_hull_point(ordered, rng) for _ in range(3)])
            if witness is not None:
                return witness
    return None


def is_rectangular(vertices: Sequence[Belief], event: Event, spot_checks: int = DEFAULT_SPOT_CHECKS,
                   seed: int = 0, tol: Optional[TolerancePolicy] = None) -> bool:
    """顶点凸包关于 {E, E^c} 是否矩形"""
    return find_rectangularity_violation(vertices, event, spot_checks, seed, tol) is None
