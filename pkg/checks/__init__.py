"""
公理检验实验室

每项检验都有同名函数（check_pareto 等）以及 AXIOM_CHECKS 注册表中的实例。
"""

import logging
from typing import Dict, Mapping, Optional

import numpy as np

from core.belief import SuggestionProfile
from core.errors import PoolingError, StateSpaceTooSmall
from core.tolerance import TolerancePolicy, resolve
from rules.aggregation_rule import AggregationRule

from .commutativity_checks import (FullCommutativityCheck, ModerateCommutativityCheck, PessimismCheck,
                                   WeakCommutativityCheck)
from .counterexamples import (DictatorshipCounterexample, alternative_te2_profile, dictatorship_counterexample,
                              dictatorship_gap, te1_profile, te2_profile)
from .harness import AxiomCheck, run_check
from .preference_checks import (AmbiguityAversionCheck, CIndependenceCheck, DominanceCheck, IndependenceCheck,
                                MonotonicityCheck, P2Check, ParetoCheck)
from .report import CheckConfig, CheckReport, Outcome, Witness
from .samplers import random_profile

logger = logging.getLogger(__name__)

AXIOM_CHECKS: Dict[str, AxiomCheck] = {check.axiom_id: check for check in (
    ParetoCheck(), MonotonicityCheck(), DominanceCheck(), P2Check(), CIndependenceCheck(), IndependenceCheck(),
    AmbiguityAversionCheck(), WeakCommutativityCheck(), PessimismCheck(), ModerateCommutativityCheck(),
    FullCommutativityCheck(),
)}
AXIOM_IDS = tuple(AXIOM_CHECKS)
MATRIX_STATES = 4
MATRIX_STREAM = 1


def get_check(axiom_id: str) -> AxiomCheck:
    try:
        return AXIOM_CHECKS[axiom_id]
    except KeyError:
        raise PoolingError(f"unknown axiom '{axiom_id}'; expected one of {', '.join(AXIOM_IDS)}") from None


def run_axiom(axiom_id: str, rule: AggregationRule, config: CheckConfig,
              profile: Optional[SuggestionProfile] = None, tol: Optional[TolerancePolicy] = None) -> CheckReport:
    """按标识运行检验；不需要建议组合的检验忽略 profile"""
    check = get_check(axiom_id)
    return run_check(check, rule, config, profile if check.needs_profile else None, tol)


def check_pareto(rule, config, tol=None) -> CheckReport:
    return run_axiom("pareto", rule, config, tol=tol)


def check_monotonicity_regularity(rule, config, tol=None) -> CheckReport:
    return run_axiom("monotonicity", rule, config, tol=tol)


def check_dominance(rule, profile, config, tol=None) -> CheckReport:
    return run_axiom("dominance", rule, config, profile, tol)


def check_p2(rule, profile, config, tol=None) -> CheckReport:
    return run_axiom("p2", rule, config, profile, tol)


def check_c_independence(rule, profile, config, tol=None) -> CheckReport:
    return run_axiom("c_independence", rule, config, profile, tol)


def check_independence(rule, profile, config, tol=None) -> CheckReport:
    return run_axiom("independence", rule, config, profile, tol)


def check_ambiguity_aversion(rule, profile, config, tol=None) -> CheckReport:
    return run_axiom("ambiguity_aversion", rule, config, profile, tol)


def check_weak_commutativity(rule, config, tol=None) -> CheckReport:
    return run_axiom("weak_commutativity", rule, config, tol=tol)


def check_pessimism_utta(rule, config, tol=None) -> CheckReport:
    return run_axiom("pessimism_utta", rule, config, tol=tol)


def check_moderate_commutativity(rule, config, tol=None) -> CheckReport:
    return run_axiom("moderate_commutativity", rule, config, tol=tol)


def check_full_commutativity(rule, config, tol=None) -> CheckReport:
    return run_axiom("full_commutativity", rule, config, tol=tol)


def replay_witness(rule: AggregationRule, report: CheckReport, tol: Optional[TolerancePolicy] = None) -> float:
    """重新计算违反实例的带符号差距"""
    if report.witness is None:
        raise PoolingError(f"report for '{report.axiom}' carries no witness to replay")
    return get_check(report.axiom).gap(rule, report.witness, resolve(tol))


def consistency_matrix(rules: Mapping[str, AggregationRule], config: CheckConfig,
                       profiles: Optional[Mapping[str, SuggestionProfile]] = None,
                       tol: Optional[TolerancePolicy] = None) -> Dict[str, Dict[str, CheckReport]]:
    """
    对一组规则运行全部检验

    Args:
        rules: 名称 → 规则
        config: 检验配置
        profiles: 名称 → 用于组合层面检验的建议组合；缺省时按种子抽取一个全支撑组合

    Returns:
        axiom_id → {规则名称 → CheckReport}；状态空间太小的检验记为 INAPPLICABLE
    """
    profiles = dict(profiles or {})
    for index, (name, rule) in enumerate(rules.items()):
        if name not in profiles:
            rng = np.random.default_rng([config.seed64, MATRIX_STREAM, index])
            experts = rule.expert_count or max(getattr(rule, "expert", 0) + 1, 2)
            profiles[name] = random_profile(rng, MATRIX_STATES, experts)

    matrix: Dict[str, Dict[str, CheckReport]] = {}
    for axiom_id in AXIOM_IDS:
        matrix[axiom_id] = {}
        for name, rule in rules.items():
            try:
                report = run_axiom(axiom_id, rule, config, profiles[name], tol)
            except StateSpaceTooSmall as e:
                report = CheckReport(axiom=axiom_id, outcome=Outcome.INAPPLICABLE, trials_run=0, seed=config.seed,
                                     rule=rule.describe(), reason=str(e))
            logger.info("%s / %s: %s", axiom_id, name, report.outcome.value)
            matrix[axiom_id][name] = report
    return matrix


__all__ = [
    'AXIOM_CHECKS', 'AXIOM_IDS', 'AxiomCheck', 'CheckConfig', 'CheckReport', 'DictatorshipCounterexample', 'Outcome',
    'Witness', 'alternative_te2_profile', 'check_ambiguity_aversion', 'check_c_independence', 'check_dominance',
    'check_full_commutativity', 'check_independence', 'check_monotonicity_regularity', 'check_moderate_commutativity',
    'check_p2', 'check_pareto', 'check_pessimism_utta', 'check_weak_commutativity', 'consistency_matrix',
    'dictatorship_counterexample', 'dictatorship_gap', 'get_check', 'replay_witness', 'run_axiom', 'run_check',
    'te1_profile', 'te2_profile',
]
