#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
内置示例

每个示例打印计算结果，并与硬编码的期望值比较；不一致时抛出 DemoMismatch。
"""

import logging
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from checks.counterexamples import TE2_H_SIGNAL, dictatorship_counterexample, te1_profile, te2_profile
from core.acts import UtilityAct
from core.belief import SuggestionProfile
from core.state_space import Event
from core.tolerance import TolerancePolicy, resolve
from geometry.rectangularity import find_rectangularity_violation
from rules.aggregation_rule import aggregate_utility, aggregation_functional, pooled_belief
from rules.dual_self_rule import credibility_rule, induced_belief_sets, median_rule

from .report_writer import ReportWriter
from .scenario_manager import DemoMismatch

logger = logging.getLogger(__name__)

TE2_H_EVENT = (0, 1)
CREDIBILITY_CASE1_PROFILE = ((0.2, 0.8), (0.8, 0.2), (0.5, 0.5), (0.5, 0.5))
CREDIBILITY_CASE2_PROFILE = ((0.5, 0.5), (0.5, 0.5), (0.2, 0.8), (0.8, 0.2))


def _expect(demo: str, quantity: str, expected, actual, atol: float) -> None:
    if np.max(np.abs(np.asarray(expected, dtype=float) - np.asarray(actual, dtype=float))) > atol:
        raise DemoMismatch(demo, quantity, expected, actual)


def demo_te1(writer: ReportWriter, tol: TolerancePolicy) -> None:
    profile = te1_profile()
    event = Event([1, 2], 3)
    posterior = profile.condition(event, tol)
    writer.section("te1")
    writer.add("event", "{Mild, Severe}")
    for i, belief in enumerate(posterior):
        writer.add(f"posterior.{i + 1}", belief.probs)
    _expect("te1", "posteriors", [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0]], posterior.matrix, tol.eps_simplex)

    # half-half linear pooling in both orders
    weight = (0.5, 0.5)
    pool_then_update = pooled_belief(weight, profile).condition(event, tol)
    writer.add("pool_then_update", pool_then_update.probs)
    writer.add("update_then_pool", pooled_belief(weight, posterior).probs)
    _expect("te1", "pool_then_update", [0.0, 1.0 / 11.0, 10.0 / 11.0], pool_then_update.probs, tol.eps_simplex)


def demo_te2(writer: ReportWriter, tol: TolerancePolicy) -> None:
    profile = te2_profile()
    signal = Event(TE2_H_SIGNAL, 4)
    posterior = profile.condition(signal, tol)
    writer.section("te2")
    writer.add("prior_H", profile.event_probs(Event(TE2_H_EVENT, 4)))
    writer.add("posterior_H_given_h", [belief[0] for belief in posterior])
    _expect("te2", "posterior P(H|h)", [0.8, 0.2], [belief[0] for belief in posterior], tol.eps_simplex)

    witness = find_rectangularity_violation(list(profile), Event(TE2_H_EVENT, 4), tol=tol)
    writer.add("rectangular_on_H", witness is None)
    if witness is None:
        raise DemoMismatch("te2", "rectangularity on {H, not H}", False, True)
    writer.add("pasting_triple", [vertex.tolist() for vertex in witness.triple])
    writer.add("pasted_point", witness.pasted.probs)


def _credibility_case(name: str, profile: Sequence[Sequence[float]], expected_interval, writer: ReportWriter,
         tol: TolerancePolicy) -> None:
    rule = credibility_rule()
    mus = SuggestionProfile(profile)
    bet_high = UtilityAct([1.0, 0.0])
    bet_low = UtilityAct([0.0, 1.0])
    value_high = aggregate_utility(rule, mus, bet_high)
    value_low = aggregate_utility(rule, mus, bet_low)
    writer.section(name)
    writer.add("U(1,0)", value_high)
    writer.add("U(0,1)", value_low)
    heads = sorted(belief[0] for beliefs in induced_belief_sets(rule, mus) for belief in beliefs)
    writer.add("pooled_P(H)_range", [heads[0], heads[-1]])
    lower, upper = expected_interval
    _expect(name, "pooled P(H) range", [lower, upper], [heads[0], heads[-1]], tol.eps_value)
    if name == "eq6_case1":
        # min over p in [lower, upper]
        _expect(name, "U(1,0)", lower, value_high, tol.eps_value)
        _expect(name, "1 - U(0,1)", upper, 1.0 - value_low, tol.eps_value)
    else:
        # max over p in [lower, upper]
        _expect(name, "U(1,0)", upper, value_high, tol.eps_value)
        _expect(name, "1 - U(0,1)", lower, 1.0 - value_low, tol.eps_value)


def demo_eq6_case1(writer: ReportWriter, tol: TolerancePolicy) -> None:
    _credibility_case("eq6_case1", CREDIBILITY_CASE1_PROFILE, (0.38, 0.62), writer, tol)


def demo_eq6_case2(writer: ReportWriter, tol: TolerancePolicy) -> None:
    _credibility_case("eq6_case2", CREDIBILITY_CASE2_PROFILE, (0.47, 0.53), writer, tol)


def demo_median_cases(writer: ReportWriter, tol: TolerancePolicy) -> None:
    rule = median_rule()
    cases = (
        ("case1.U(f)", (0.0, 0.0, 2.0), 0.0),
        ("case1.U(g)", (0.0, 2.0, 0.0), 0.0),
        ("case1.U(mix)", (0.0, 1.0, 1.0), 1.0),
        ("case2.U(f)", (0.0, 0.0, -2.0), 0.0),
        ("case2.U(g)", (0.0, -2.0, 0.0), 0.0),
        ("case2.U(mix)", (0.0, -1.0, -1.0), -1.0),
    )
    writer.section("median_cases")
    for key, values, expected in cases:
        actual = aggregation_functional(rule, values)
        writer.add(key, actual)
        _expect("median_cases", key, expected, actual, tol.eps_value)


def demo_dictatorship_cx(writer: ReportWriter, tol: TolerancePolicy) -> None:
    example = dictatorship_counterexample((0.5, 0.5))
    writer.section("dictatorship_cx")
    writer.add("weight", [0.5, 0.5])
    writer.add("update_then_pool(w1)", example.update_then_pool[0])
    writer.add("pool_then_update(w1)", example.pool_then_update[0])
    writer.add("gap", example.gap)
    _expect("dictatorship_cx", "update_then_pool(w1)", 0.5, example.update_then_pool[0], tol.eps_simplex)
    _expect("dictatorship_cx", "pool_then_update(w1)", 1.0 / 11.0, example.pool_then_update[0], tol.eps_simplex)
    writer.add("verdict", "NOT COMMUTATIVE" if example.gap > tol.eps_value else "COMMUTATIVE")


DEMOS: Dict[str, Callable[[ReportWriter, TolerancePolicy], None]] = {
    "te1": demo_te1,
    "te2": demo_te2,
    "eq6_case1": demo_eq6_case1,
    "eq6_case2": demo_eq6_case2,
    "median_cases": demo_median_cases,
    "dictatorship_cx": demo_dictatorship_cx,
}


def run_demo(demo_id: str, writer: ReportWriter, tol: Optional[TolerancePolicy] = None) -> None:
    if demo_id not in DEMOS:
        raise KeyError(f"unknown demo '{demo_id}'; expected one of {', '.join(DEMOS)}")
    logger.debug("running demo %s", demo_id)
    DEMOS[demo_id](writer, resolve(tol))
