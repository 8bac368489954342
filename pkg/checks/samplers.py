"""Seeded generators for profiles, events and acts."""

from typing import Optional, Sequence

import numpy as np

from core.acts import UtilityAct
from core.belief import Belief, SuggestionProfile
from core.state_space import Event
from rules.aggregation_rule import AggregationRule
from rules.dictatorship_rule import DictatorshipRule

from .report import CheckConfig


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Sub-generator for one trial; serial and parallel runs draw identical streams."""
    return np.random.default_rng([seed & ((1 << 64) - 1), trial])


def stick_breaking(rng: np.random.Generator, size: int, total: float = 1.0) -> np.ndarray:
    """Sorted uniform spacings scaled to `total`."""
    cuts = np.sort(rng.uniform(size=size - 1))
    return np.diff(np.concatenate(([0.0], cuts, [1.0]))) * total


def random_belief(rng: np.random.Generator, size: int) -> Belief:
    return Belief(stick_breaking(rng, size))


def random_profile(rng: np.random.Generator, size: int, experts: int) -> SuggestionProfile:
    return SuggestionProfile([random_belief(rng, size) for _ in range(experts)])


def random_act(rng: np.random.Generator, size: int, act_range: float) -> UtilityAct:
    return UtilityAct(rng.uniform(-act_range, act_range, size))


def random_event(rng: np.random.Generator, size: int, min_inside: int = 1, min_outside: int = 1) -> Event:
    """Random event with at least `min_inside` members and `min_outside` non-members."""
    count = int(rng.integers(min_inside, size - min_outside + 1))
    return Event(rng.choice(size, size=count, replace=False).tolist(), size)


def restricted_profile(rng: np.random.Generator, size: int, experts: int, event: Event) -> SuggestionProfile:
    """Experts share the states outside `event` and split the common mass on it at random."""
    base = stick_breaking(rng, size)
    mask = event.mask()
    alpha = float(base[mask].sum())
    beliefs = []
    for _ in range(experts):
        probs = base.copy()
        probs[mask] = stick_breaking(rng, int(mask.sum()), alpha)
        beliefs.append(Belief(probs))
    return SuggestionProfile(beliefs)


def agreeing_profile(rng: np.random.Generator, size: int, experts: int, event: Event) -> SuggestionProfile:
    """Experts agree on the probability of `event` and disagree everywhere else."""
    alpha = float(rng.uniform(0.05, 0.95))
    mask = event.mask()
    beliefs = []
    for _ in range(experts):
        probs = np.empty(size)
        probs[mask] = stick_breaking(rng, int(mask.sum()), alpha)
        probs[~mask] = stick_breaking(rng, int((~mask).sum()), 1.0 - alpha)
        beliefs.append(Belief(probs))
    return SuggestionProfile(beliefs)


def expert_count_for(rule: AggregationRule, rng: np.random.Generator, config: CheckConfig) -> int:
    if rule.expert_count is not None:
        return rule.expert_count
    counts: Sequence[int] = config.expert_counts
    if isinstance(rule, DictatorshipRule):
        counts = [n for n in counts if n > rule.expert] or [rule.expert + 1]
    return int(rng.choice(counts))


def state_size_for(rng: np.random.Generator, config: CheckConfig, minimum: int = 3) -> Optional[int]:
    sizes = [m for m in config.state_sizes if m >= minimum]
    if not sizes:
        return None
    return int(rng.choice(sizes))
