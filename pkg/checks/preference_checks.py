"""Value-level checks of the preference axioms: Pareto, monotonicity, dominance, P2,
C-Independence, Independence and ambiguity aversion."""

import logging
from dataclasses import replace
from typing import Iterable, List, Optional, Sequence

import numpy as np

from core.acts import UtilityAct, composite_act, mix_acts
from core.belief import SuggestionProfile
from core.errors import BracketFailure, PoolingError
from core.tolerance import TolerancePolicy
from rules.aggregation_rule import AggregationRule, aggregate_utility, realize_evaluation_profile
from rules.dictatorship_rule import DictatorshipRule

from .harness import AxiomCheck, iff_gap
from .report import CheckConfig, Witness
from .samplers import expert_count_for, random_act, random_event, random_profile, state_size_for

logger = logging.getLogger(__name__)

MIX_LOW, MIX_HIGH = 0.01, 0.99
HOMOGENEITY_ALPHA = 0.1

# experts who agree on every act constant on {w1,w3}, but whose geometric pool does not
HULL_ESCAPE_PROFILE = ((0.6, 0.3, 0.1), (0.1, 0.3, 0.6))


def _accepts(rule: AggregationRule, experts: int) -> bool:
    if rule.expert_count is not None:
        return rule.expert_count == experts
    if isinstance(rule, DictatorshipRule):
        return rule.expert < experts
    return True


def _scored(check: AxiomCheck, rule: AggregationRule, witnesses: Iterable[Witness],
            tol: TolerancePolicy) -> List[Witness]:
    """Attach gaps to anchored instances, dropping those the rule cannot evaluate."""
    scored = []
    for witness in witnesses:
        try:
            scored.append(replace(witness, gap=check.gap(rule, witness, tol)))
        except (PoolingError, BracketFailure) as e:
            logger.debug("%s anchor skipped: %s", check.axiom_id, e)
    return scored


def _realized(profile: SuggestionProfile, targets: Sequence[Sequence[float]],
              tol: TolerancePolicy) -> Optional[List[UtilityAct]]:
    acts = [realize_evaluation_profile(profile, target, tol) for target in targets]
    return None if any(act is None for act in acts) else acts


def _mixture_gap(rule: AggregationRule, profile: SuggestionProfile, f: UtilityAct, g: UtilityAct,
                 h: UtilityAct, alpha: float, tol: TolerancePolicy) -> float:
    """f ≿ g ⟺ αf+(1−α)h ≿ αg+(1−α)h, the mixed difference rescaled by 1/α"""
    direct = aggregate_utility(rule, profile, f) - aggregate_utility(rule, profile, g)
    mixed = (aggregate_utility(rule, profile, mix_acts(f, h, alpha))
             - aggregate_utility(rule, profile, mix_acts(g, h, alpha))) / alpha
    return iff_gap(direct, mixed, tol.eps_value)


class ParetoCheck(AxiomCheck):
    """Entrywise-dominating evaluation profiles must not lower the aggregate value."""

    axiom_id = "pareto"

    def anchors(self, rule, profile, config, tol):
        if not _accepts(rule, len(HULL_ESCAPE_PROFILE)):
            return []
        hull_escape = SuggestionProfile(HULL_ESCAPE_PROFILE)
        witness = Witness(hull_escape, {"f": UtilityAct([1.0, 0.0, 1.0]), "g": UtilityAct.constant(0.7, 3)})
        return _scored(self, rule, [witness], tol)

    def sample(self, rule, profile, rng, config, tol):
        size = state_size_for(rng, config)
        sampled = random_profile(rng, size, expert_count_for(rule, rng, config))
        g = random_act(rng, size, config.act_range)
        d = rng.uniform(-config.act_range, config.act_range, size)
        slack = 0.0 if rng.uniform() < 0.5 else rng.uniform(0.0, config.act_range)
        lift = d - (float(np.min(sampled.matrix @ d)) - slack)
        witness = Witness(sampled, {"f": UtilityAct(g.utils + lift), "g": g})
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        return (aggregate_utility(rule, witness.profile, witness.acts["g"])
                - aggregate_utility(rule, witness.profile, witness.acts["f"]))


class MonotonicityCheck(AxiomCheck):
    """Raising every expert's evaluation of f must not lower U(f)."""

    axiom_id = "monotonicity"

    def sample(self, rule, profile, rng, config, tol):
        size = state_size_for(rng, config)
        experts = expert_count_for(rule, rng, config)
        low, high = random_profile(rng, size, experts), random_profile(rng, size, experts)
        f = random_act(rng, size, config.act_range)
        lower, upper = [], []
        for a, b in zip(low, high):
            if a.probs @ f.utils <= b.probs @ f.utils:
                lower.append(a)
                upper.append(b)
            else:
                lower.append(b)
                upper.append(a)
        witness = Witness(SuggestionProfile(lower), {"f": f}, other_profile=SuggestionProfile(upper))
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        f = witness.acts["f"]
        return aggregate_utility(rule, witness.profile, f) - aggregate_utility(rule, witness.other_profile, f)


class DominanceCheck(AxiomCheck):
    """u_f ≥ u_g statewise must give U(f) ≥ U(g)."""

    axiom_id = "dominance"
    needs_profile = True

    def sample(self, rule, profile, rng, config, tol):
        size = profile.dimension
        g = random_act(rng, size, config.act_range)
        f = UtilityAct(g.utils + rng.uniform(0.0, config.act_range, size))
        witness = Witness(profile, {"f": f, "g": g})
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        return (aggregate_utility(rule, witness.profile, witness.acts["g"])
                - aggregate_utility(rule, witness.profile, witness.acts["f"]))


class P2Check(AxiomCheck):
    """Sure-thing principle: fE′g ≿ g ⟺ fE′h ≿ gE′h."""

    axiom_id = "p2"
    needs_profile = True

    def sample(self, rule, profile, rng, config, tol):
        size = profile.dimension
        event = random_event(rng, size)
        f, g, h = (random_act(rng, size, config.act_range) for _ in range(3))
        witness = Witness(profile, {"f": f, "g": g, "h": h}, event=event)
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        f, g, h = witness.acts["f"], witness.acts["g"], witness.acts["h"]
        event, profile = witness.event, witness.profile
        with_g = (aggregate_utility(rule, profile, composite_act(f, event, g))
                  - aggregate_utility(rule, profile, g))
        with_h = (aggregate_utility(rule, profile, composite_act(f, event, h))
                  - aggregate_utility(rule, profile, composite_act(g, event, h)))
        return iff_gap(with_g, with_h, tol.eps_value)


class CIndependenceCheck(AxiomCheck):
    """Mixing both acts with the same constant act keeps their ranking."""

    axiom_id = "c_independence"
    needs_profile = True

    def anchors(self, rule, profile, config, tol):
        # homogeneity: if I(αa)/α drifts from I(a), a constant act between them flips the ranking
        experts = profile.expert_count
        target = np.full(experts, 0.4 * config.act_range)
        target[0] = 0.0
        acts = _realized(profile, [target], tol)
        if acts is None:
            return []
        f = acts[0]
        zero = UtilityAct.constant(0.0, profile.dimension)
        try:
            direct = aggregate_utility(rule, profile, f)
            scaled = aggregate_utility(rule, profile, mix_acts(f, zero, HOMOGENEITY_ALPHA)) / HOMOGENEITY_ALPHA
        except PoolingError:
            return []
        g = UtilityAct.constant(0.5 * (direct + scaled), profile.dimension)
        witness = Witness(profile, {"f": f, "g": g, "x": zero}, alpha=HOMOGENEITY_ALPHA)
        return _scored(self, rule, [witness], tol)

    def sample(self, rule, profile, rng, config, tol):
        size = profile.dimension
        f, g = random_act(rng, size, config.act_range), random_act(rng, size, config.act_range)
        x = UtilityAct.constant(rng.uniform(-config.act_range, config.act_range), size)
        witness = Witness(profile, {"f": f, "g": g, "x": x}, alpha=float(rng.uniform(MIX_LOW, MIX_HIGH)))
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        return _mixture_gap(rule, witness.profile, witness.acts["f"], witness.acts["g"], witness.acts["x"],
                            witness.alpha, tol)


class IndependenceCheck(AxiomCheck):
    """Mixing both acts with the same arbitrary act keeps their ranking."""

    axiom_id = "independence"
    needs_profile = True

    def anchors(self, rule, profile, config, tol):
        # evaluation profiles (0,0,2) and (0,2,0): indifferent alone, the half mixture hedges to (0,1,1)
        if profile.expert_count != 3:
            return []
        acts = _realized(profile, [(0.0, 0.0, 2.0), (0.0, 2.0, 0.0)], tol)
        if acts is None:
            return []
        f, g = acts
        return _scored(self, rule, [Witness(profile, {"f": f, "g": g, "h": f}, alpha=0.5)], tol)

    def sample(self, rule, profile, rng, config, tol):
        size = profile.dimension
        f, g, h = (random_act(rng, size, config.act_range) for _ in range(3))
        witness = Witness(profile, {"f": f, "g": g, "h": h}, alpha=float(rng.uniform(MIX_LOW, MIX_HIGH)))
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        return _mixture_gap(rule, witness.profile, witness.acts["f"], witness.acts["g"], witness.acts["h"],
                            witness.alpha, tol)


class AmbiguityAversionCheck(AxiomCheck):
    """If f ∼ g then αf + (1−α)g ≿ g."""

    axiom_id = "ambiguity_aversion"
    needs_profile = True

    def anchors(self, rule, profile, config, tol):
        # (0,0,−2) and (0,−2,0): indifferent alone, the half mixture sits at (0,−1,−1)
        if profile.expert_count != 3:
            return []
        acts = _realized(profile, [(0.0, 0.0, -2.0), (0.0, -2.0, 0.0)], tol)
        if acts is None:
            return []
        f, g = acts
        return _scored(self, rule, [Witness(profile, {"f": f, "g": g}, alpha=0.5)], tol)

    def sample(self, rule, profile, rng, config, tol):
        size = profile.dimension
        f, g = random_act(rng, size, config.act_range), random_act(rng, size, config.act_range)
        alpha = float(rng.uniform(MIX_LOW, MIX_HIGH))
        value_f = aggregate_utility(rule, profile, f)
        if rule.translation_invariant:
            g = g.shifted(value_f - aggregate_utility(rule, profile, g))
        # only indifferent pairs count as trials
        if abs(value_f - aggregate_utility(rule, profile, g)) > tol.eps_value:
            return None
        witness = Witness(profile, {"f": f, "g": g}, alpha=alpha)
        return replace(witness, gap=self.gap(rule, witness, tol))

    def gap(self, rule, witness, tol):
        f, g, profile = witness.acts["f"], witness.acts["g"], witness.profile
        value_g = aggregate_utility(rule, profile, g)
        if abs(aggregate_utility(rule, profile, f) - value_g) > tol.eps_value:
            return 0.0
        return value_g - aggregate_utility(rule, profile, mix_acts(f, g, witness.alpha))
