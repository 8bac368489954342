from .aggregation_rule import (AggregationRule, EvaluationProfile, aggregate_utility, aggregation_functional,
                               evaluation_profile, pooled_belief, realize_evaluation_profile)
from .dictatorship_rule import DictatorshipRule, dictatorship_rule
from .dual_self_rule import DualSelfRule, credibility_rule, induced_belief_sets, median_rule, order_statistic_rule
from .geometric_rule import GeometricRule, geometric_pooled_belief
from .linear_rule import LinearRule
from .multiple_weight_rule import MultipleWeightRule
from .rule_factory import RULE_KINDS, build_rule, rule_from_dict
from .soft_min_rule import SoftMinRule
from .weights import Weight, WeightSet, WeightSetCollection

__all__ = [
    'AggregationRule', 'DictatorshipRule', 'DualSelfRule', 'EvaluationProfile', 'GeometricRule', 'LinearRule',
    'MultipleWeightRule', 'RULE_KINDS', 'SoftMinRule', 'Weight', 'WeightSet', 'WeightSetCollection',
    'aggregate_utility', 'aggregation_functional', 'build_rule', 'credibility_rule', 'dictatorship_rule',
    'evaluation_profile', 'geometric_pooled_belief', 'induced_belief_sets', 'median_rule',
    'order_statistic_rule', 'pooled_belief', 'realize_evaluation_profile', 'rule_from_dict',
]
