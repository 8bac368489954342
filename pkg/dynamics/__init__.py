from .agreement import agree_on_event, disagreement_restricted_within
from .conditional import (ConditionalCE, ConditionalComparison, Verdict, conditional_ce, conditional_compare,
                          default_h_samples, restricted_decomposition)

__all__ = [
    'ConditionalCE', 'ConditionalComparison', 'Verdict', 'agree_on_event', 'conditional_ce',
    'conditional_compare', 'default_h_samples', 'disagreement_restricted_within', 'restricted_decomposition',
]
