#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
随机证伪框架

每个公理是一个 AxiomCheck 子类：sample() 在一次试验里构造候选实例并算出带符号的差距，
gap() 对已有实例重新计算同一差距（用于重放）。差距 > eps_value 即为违反。
"""

import logging
from abc import ABC, abstractmethod
from typing import Iterable, Optional

import numpy as np
from tqdm import tqdm

from core.belief import SuggestionProfile
from core.errors import BracketFailure, PoolingError
from core.tolerance import TolerancePolicy, resolve
from rules.aggregation_rule import AggregationRule

from .report import CheckConfig, CheckReport, Outcome, Witness
from .samplers import trial_rng

logger = logging.getLogger(__name__)


def iff_gap(lhs: float, rhs: float, eps: float) -> float:
    """两个 "≥ 0" 判断恰有一个成立时返回违反量，否则为 0"""
    if lhs >= -eps and rhs < -eps:
        return -rhs
    if rhs >= -eps and lhs < -eps:
        return -lhs
    return 0.0


class AxiomCheck(ABC):
    """公理检验的抽象基类"""

    axiom_id: str = ""
    needs_profile: bool = False

    def applicable(self, rule: AggregationRule, profile: Optional[SuggestionProfile],
                   config: CheckConfig) -> Optional[str]:
        """不适用时返回原因"""
        if self.needs_profile and profile is not None and rule.expert_count is not None \
                and rule.expert_count != profile.expert_count:
            return f"rule expects {rule.expert_count} experts, profile has {profile.expert_count}"
        return None

    def anchors(self, rule: AggregationRule, profile: Optional[SuggestionProfile], config: CheckConfig,
                tol: TolerancePolicy) -> Iterable[Witness]:
        """在随机试验之前检验的固定实例"""
        return ()

    @abstractmethod
    def sample(self, rule: AggregationRule, profile: Optional[SuggestionProfile], rng: np.random.Generator,
               config: CheckConfig, tol: TolerancePolicy) -> Optional[Witness]:
        """构造一个候选实例；None 表示本次试验跳过"""

    @abstractmethod
    def gap(self, rule: AggregationRule, witness: Witness, tol: TolerancePolicy) -> float:
        """实例的带符号违反量"""

    def run(self, rule: AggregationRule, config: CheckConfig, profile: Optional[SuggestionProfile] = None,
            tol: Optional[TolerancePolicy] = None) -> CheckReport:
        return run_check(self, rule, config, profile, tol)


def _report(check: AxiomCheck, rule: AggregationRule, config: CheckConfig, outcome: Outcome, trials_run: int,
            witness: Optional[Witness] = None, reason: str = "", skipped: int = 0) -> CheckReport:
    return CheckReport(axiom=check.axiom_id, outcome=outcome, trials_run=trials_run, seed=config.seed,
                       rule=rule.describe(), witness=witness, reason=reason, skipped=skipped)


def run_check(check: AxiomCheck, rule: AggregationRule, config: CheckConfig,
              profile: Optional[SuggestionProfile] = None, tol: Optional[TolerancePolicy] = None) -> CheckReport:
    """
    运行一项公理检验

    先检验 anchors()，再运行 config.trials 次随机试验；第 t 次试验使用 (seed, t) 派生的随机数生成器，
    因此同一配置总是给出相同的报告。
    没有任何锚点或试验能够求值时返回 INAPPLICABLE。
    """
    policy = resolve(tol)
    if check.needs_profile and profile is None:
        raise PoolingError(f"check '{check.axiom_id}' needs a suggestion profile")
    reason = check.applicable(rule, profile, config)
    if reason:
        logger.info("%s inapplicable to %s: %s", check.axiom_id, rule.describe(), reason)
        return _report(check, rule, config, Outcome.INAPPLICABLE, 0, reason=reason)

    trials_run = 0
    skipped = 0
    for witness in check.anchors(rule, profile, config, policy):
        trials_run += 1
        if witness.gap > policy.eps_value:
            logger.info("%s violated by %s at an anchored instance (gap %.3g)",
                        check.axiom_id, rule.describe(), witness.gap)
            return _report(check, rule, config, Outcome.VIOLATED, trials_run, witness=witness, skipped=skipped)

    trials = tqdm(range(config.trials), desc=check.axiom_id, unit="trial", disable=not config.show_progress)
    for trial in trials:
        rng = trial_rng(config.seed, trial)
        trials_run += 1
        try:
            witness = check.sample(rule, profile, rng, config, policy)
        except (PoolingError, BracketFailure) as e:
            logger.debug("%s trial %d skipped: %s", check.axiom_id, trial, e)
            witness = None
        if witness is None:
            skipped += 1
            continue
        if witness.gap > policy.eps_value:
            logger.info("%s violated by %s at trial %d (gap %.3g)",
                        check.axiom_id, rule.describe(), trial, witness.gap)
            return _report(check, rule, config, Outcome.VIOLATED, trials_run, witness=witness, skipped=skipped)

    if skipped == trials_run:
        reason = f"no trial could be evaluated ({skipped} skipped)"
        logger.warning("%s inapplicable to %s: %s", check.axiom_id, rule.describe(), reason)
        return _report(check, rule, config, Outcome.INAPPLICABLE, trials_run, reason=reason, skipped=skipped)
    if skipped:
        logger.warning("%s skipped %d of %d trials for %s", check.axiom_id, skipped, config.trials, rule.describe())
    logger.info("%s passed for %s after %d trials", check.axiom_id, rule.describe(), trials_run)
    return _report(check, rule, config, Outcome.PASS, trials_run, skipped=skipped)
