#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
更新与汇聚的交换性检验

弱交换性、适度交换性、完全交换性都比较 "先汇聚后更新"（条件确定性等价）与
"先更新后汇聚"（U_{**μ**^E}(f)）；三者只在生成的建议组合上不同。
"""

from dataclasses import replace
from typing import List, Optional

import numpy as np

from core.acts import UtilityAct, composite_act
from core.belief import SuggestionProfile
from core.errors import StateSpaceTooSmall
from core.state_space import Event
from core.tolerance import TolerancePolicy
from dynamics.agreement import disagreement_restricted_within
from dynamics.conditional import conditional_ce
from rules.aggregation_rule import AggregationRule, aggregate_utility

from .harness import AxiomCheck
from .preference_checks import _accepts, _scored
from .report import CheckConfig, Witness
from .samplers import (agreeing_profile, expert_count_for, random_act, random_event, random_profile,
                       restricted_profile, state_size_for)

PESSIMISM_MIN_STATES = 4


def _h_samples(rng: np.random.Generator, f: UtilityAct, config: CheckConfig) -> List[UtilityAct]:
    samples = [UtilityAct.constant(0.0, f.dimension), f]
    samples.extend(random_act(rng, f.dimension, config.act_range) for _ in range(config.h_samples))
    return samples


class CommutativityCheck(AxiomCheck):
    """条件确定性等价必须与 h 无关且等于 U_{**μ**^E}(f)"""

    def draw(self, rule: AggregationRule, rng: np.random.Generator, config: CheckConfig,
             tol: TolerancePolicy):
        """返回 (建议组合, 事件)"""
        raise NotImplementedError

    def sample(self, rule, profile, rng, config, tol):
        sampled, event = self.draw(rule, rng, config, tol)
        f = random_act(rng, sampled.dimension, config.act_range)
        samples = _h_samples(rng, f, config)
        target = aggregate_utility(rule, sampled.condition(event, tol), f)
        values = conditional_ce(rule, sampled, event, f, samples, tol).values
        mismatches = [abs(c - target) for c in values]
        worst = int(np.argmax(mismatches))
        low, high = int(np.argmin(values)), int(np.argmax(values))
        if mismatches[worst] >= values[high] - values[low]:
            witness = Witness(sampled, {"f": f, "h": samples[worst]}, event=event)
        else:
            witness = Witness(sampled, {"f": f, "h_low": samples[low], "h_high": samples[high]}, event=event)
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        profile, event, f = witness.profile, witness.event, witness.acts["f"]
        if "h_low" in witness.acts:
            low, high = conditional_ce(rule, profile, event, f, [witness.acts["h_low"], witness.acts["h_high"]],
                                       tol).values
            return abs(high - low)
        target = aggregate_utility(rule, profile.condition(event, tol), f)
        value, = conditional_ce(rule, profile, event, f, [witness.acts["h"]], tol).values
        return abs(value - target)


class WeakCommutativityCheck(CommutativityCheck):
    """分歧限制在 E 内的建议组合"""

    axiom_id = "weak_commutativity"

    def draw(self, rule, rng, config, tol):
        size = state_size_for(rng, config)
        event = random_event(rng, size)
        return restricted_profile(rng, size, expert_count_for(rule, rng, config), event), event


class ModerateCommutativityCheck(CommutativityCheck):
    """专家对 E 的概率一致，其余处处可以分歧"""

    axiom_id = "moderate_commutativity"

    def draw(self, rule, rng, config, tol):
        size = state_size_for(rng, config)
        event = random_event(rng, size)
        return agreeing_profile(rng, size, expert_count_for(rule, rng, config), event), event


class FullCommutativityCheck(CommutativityCheck):
    """不受限制的建议组合"""

    axiom_id = "full_commutativity"

    def anchors(self, rule, profile, config, tol):
        # μ_1=(.1,0,.9,0), μ_i=(0,1,0,0), G={w1,w2}, f pays 1 on w1
        experts = rule.expert_count or 2
        if experts < 2 or not _accepts(rule, experts):
            return []
        beliefs = [(0.1, 0.0, 0.9, 0.0)] + [(0.0, 1.0, 0.0, 0.0)] * (experts - 1)
        event = Event([0, 1], 4)
        witness = Witness(SuggestionProfile(beliefs), {"f": UtilityAct.indicator(Event([0], 4)),
                                                       "h": UtilityAct.constant(0.0, 4)}, event=event)
        return _scored(self, rule, [witness], tol)

    def draw(self, rule, rng, config, tol):
        size = state_size_for(rng, config)
        event = random_event(rng, size)
        return random_profile(rng, size, expert_count_for(rule, rng, config)), event


class PessimismCheck(AxiomCheck):
    """
    先更新后汇聚比先汇聚后更新更悲观

    取常数行动 x = U_{**μ**^E}(f)，于是 f ≿_{**μ**^E} x；违反即存在 h 使 U(fEh) < U(xEh)。
    """

    axiom_id = "pessimism_utta"

    def applicable(self, rule, profile, config):
        largest = max(config.state_sizes)
        if largest < PESSIMISM_MIN_STATES:
            raise StateSpaceTooSmall(largest, PESSIMISM_MIN_STATES, "pessimism to update-then-aggregate")
        return super().applicable(rule, profile, config)

    def sample(self, rule, profile, rng, config, tol) -> Optional[Witness]:
        size = state_size_for(rng, config, PESSIMISM_MIN_STATES)
        event = random_event(rng, size, min_outside=2)
        sampled = agreeing_profile(rng, size, expert_count_for(rule, rng, config), event)
        if disagreement_restricted_within(sampled, event, tol):
            return None
        f = random_act(rng, size, config.act_range)
        x = aggregate_utility(rule, sampled.condition(event, tol), f)
        worst = None
        for h in _h_samples(rng, f, config):
            gap = self._gap_at(rule, sampled, event, f, x, h)
            if worst is None or gap > worst[0]:
                worst = (gap, h)
        return Witness(sampled, {"f": f, "h": worst[1]}, event=event, gap=worst[0])

    @staticmethod
    def _gap_at(rule: AggregationRule, profile: SuggestionProfile, event: Event, f: UtilityAct, x: float,
                h: UtilityAct) -> float:
        constant = UtilityAct.constant(x, f.dimension)
        return (aggregate_utility(rule, profile, composite_act(constant, event, h))
                - aggregate_utility(rule, profile, composite_act(f, event, h)))

    def gap(self, rule, witness, tol):
        profile, event, f = witness.profile, witness.event, witness.acts["f"]
        x = aggregate_utility(rule, profile.condition(event, tol), f)
        return self._gap_at(rule, profile, event, f, x, witness.acts["h"])
