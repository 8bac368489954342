from typing import Optional

import numpy as np

from core.belief import SuggestionProfile
from core.state_space import Event
from core.tolerance import TolerancePolicy, resolve


def disagreement_restricted_within(profile: SuggestionProfile, event: Event,
                                   tol: Optional[TolerancePolicy] = None) -> bool:
    """所有专家在 E 之外的每个状态上概率一致"""
    if event.is_universe:
        return True
    outside = profile.matrix[:, ~event.mask()]
    spread = outside.max(axis=0) - outside.min(axis=0)
    return bool(np.all(spread <= resolve(tol).eps_simplex))


def agree_on_event(profile: SuggestionProfile, event: Event, tol: Optional[TolerancePolicy] = None) -> bool:
    """μ_1(E) = ... = μ_n(E)"""
    masses = profile.event_probs(event)
    return bool(masses.max() - masses.min() <= resolve(tol).eps_simplex)
