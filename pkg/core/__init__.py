from .acts import UtilityAct, composite_act, expected_utility, mix_acts
from .belief import Belief, SuggestionProfile, as_distribution, condition_belief, condition_profile
from .state_space import Event, StateSpace
from .tolerance import DEFAULT_TOLERANCE, TolerancePolicy, current_tolerance, use_tolerance

__all__ = [
    'Belief', 'Event', 'StateSpace', 'SuggestionProfile', 'TolerancePolicy', 'UtilityAct',
    'DEFAULT_TOLERANCE', 'as_distribution', 'composite_act', 'condition_belief', 'condition_profile',
    'current_tolerance', 'expected_utility', 'mix_acts', 'use_tolerance',
]
