import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from checks.samplers import random_act, random_profile
from core import SuggestionProfile, UtilityAct, expected_utility
from core.errors import (GeometricUndefined, IndexOutOfRange, NotProfileFunctional, PoolingError,
                         WrongExpertCount)
from rules import (DictatorshipRule, DualSelfRule, GeometricRule, LinearRule, MultipleWeightRule, SoftMinRule,
                   aggregate_utility, aggregation_functional, build_rule, credibility_rule, dictatorship_rule,
                   evaluation_profile, geometric_pooled_belief, induced_belief_sets, median_rule, order_statistic_rule,
                   pooled_belief, realize_evaluation_profile, rule_from_dict)

from .conftest import acts_4, profiles

CASE1 = SuggestionProfile([(0.2, 0.8), (0.8, 0.2), (0.5, 0.5), (0.5, 0.5)])
CASE2 = SuggestionProfile([(0.5, 0.5), (0.5, 0.5), (0.2, 0.8), (0.8, 0.2)])


def _simplex_grid(vertices, steps=50):
    """Every convex combination of `vertices` with barycentric weights on a 1/steps lattice."""
    vertices = np.asarray(vertices, dtype=float)
    k = len(vertices)
    points = []
    for head in itertools.product(range(steps + 1), repeat=k - 1):
        if sum(head) <= steps:
            points.append(list(head) + [steps - sum(head)])
    return (np.asarray(points, dtype=float) / steps) @ vertices


def _grid_maximin(sets, values):
    return max(float(np.min(_simplex_grid(vertices) @ values)) for vertices in sets)


def test_linear_rule_is_expected_utility_under_pooled_belief(spread_profile_2):
    rule = LinearRule((0.25, 0.75))
    f = UtilityAct([1.0, -2.0, 3.0, 0.5])
    pooled = pooled_belief((0.25, 0.75), spread_profile_2)
    assert aggregate_utility(rule, spread_profile_2, f) == pytest.approx(expected_utility(pooled, f), abs=1e-12)
    assert rule.pooled(spread_profile_2) == pooled


def test_full_simplex_rule_is_worst_expert(spread_profile_2):
    rule = MultipleWeightRule.full_simplex(2)
    f = UtilityAct([4.0, 0.0, 0.0, -1.0])
    values = evaluation_profile(spread_profile_2, f)
    assert aggregate_utility(rule, spread_profile_2, f) == pytest.approx(values.min())


def test_dictatorship_is_exact_expected_utility(spread_profile_3):
    f = UtilityAct([0.3, -1.7, 2.2, 9.0])
    assert aggregate_utility(DictatorshipRule(2), spread_profile_3, f) == expected_utility(spread_profile_3[2], f)
    with pytest.raises(IndexOutOfRange):
        aggregate_utility(DictatorshipRule(5), spread_profile_3, f)


@pytest.mark.parametrize("values, expected", [
    ((0.0, 0.0, 2.0), 0.0),
    ((0.0, 2.0, 0.0), 0.0),
    ((0.0, 1.0, 1.0), 1.0),
    ((0.0, 0.0, -2.0), 0.0),
    ((0.0, -2.0, 0.0), 0.0),
    ((0.0, -1.0, -1.0), -1.0),
])
def test_median_rule_values(values, expected):
    assert aggregation_functional(median_rule(), values) == expected


def test_order_statistics_pick_the_kth_smallest():
    values = (5.0, -1.0, 3.0, 0.5)
    for k, expected in enumerate(sorted(values), start=1):
        assert aggregation_functional(order_statistic_rule(4, k), values) == expected
    with pytest.raises(PoolingError):
        order_statistic_rule(3, 4)


def test_wrong_expert_count():
    with pytest.raises(WrongExpertCount):
        aggregation_functional(median_rule(), (1.0, 2.0))


def test_credibility_rule_case1_matches_lower_envelope():
    rule = credibility_rule()
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        u = rng.uniform(-10, 10, 2)
        envelope = min(p * u[0] + (1 - p) * u[1] for p in (0.38, 0.62))
        assert abs(aggregate_utility(rule, CASE1, UtilityAct(u)) - envelope) <= 1e-9


def test_credibility_rule_case2_matches_upper_envelope():
    rule = credibility_rule()
    rng = np.random.default_rng(2025)
    for _ in range(1000):
        u = rng.uniform(-10, 10, 2)
        envelope = max(p * u[0] + (1 - p) * u[1] for p in (0.47, 0.53))
        assert abs(aggregate_utility(rule, CASE2, UtilityAct(u)) - envelope) <= 1e-9


def test_induced_belief_sets_span_the_credibility_interval():
    heads = sorted(b[0] for beliefs in induced_belief_sets(credibility_rule(), CASE1) for b in beliefs)
    assert heads[0] == pytest.approx(0.38)
    assert heads[-1] == pytest.approx(0.62)


def test_constant_linearity_on_the_zoo(rule_zoo, random_dual_self):
    rules = list(rule_zoo.values()) + [random_dual_self]
    rng = np.random.default_rng(3)
    for _ in range(1000):
        a = rng.uniform(-10, 10, 3)
        c = rng.uniform(-10, 10)
        beta = rng.uniform(0, 1)
        for rule in rules:
            lhs = aggregation_functional(rule, beta * a + (1 - beta) * c)
            rhs = beta * aggregation_functional(rule, a) + (1 - beta) * c
            assert abs(lhs - rhs) <= 1e-9


@given(profiles(size=4, experts=3), st.floats(min_value=-50, max_value=50))
def test_constant_acts_evaluate_to_themselves(profile, c):
    for rule in (median_rule(), LinearRule((0.2, 0.3, 0.5)), MultipleWeightRule.full_simplex(3),
                 GeometricRule((0.2, 0.3, 0.5)), SoftMinRule(2.0)):
        assert aggregate_utility(rule, profile, UtilityAct.constant(c, 4)) == pytest.approx(c, abs=1e-9)


@given(profiles(size=4, experts=3), acts_4, acts_4)
def test_dual_self_rules_are_monotone_in_evaluations(profile, u, v):
    f, g = UtilityAct(u), UtilityAct(np.maximum(u, v))
    for rule in (median_rule(), MultipleWeightRule.full_simplex(3)):
        assert aggregate_utility(rule, profile, g) >= aggregate_utility(rule, profile, f) - 1e-9


def test_geometric_pooling_needs_overlapping_supports():
    rule = GeometricRule((0.5, 0.5))
    disjoint = SuggestionProfile([(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)])
    with pytest.raises(GeometricUndefined):
        aggregate_utility(rule, disjoint, UtilityAct([1.0, 0.0, 0.0]))


def test_geometric_rule_is_not_a_profile_functional():
    rule = GeometricRule((0.5, 0.5))
    with pytest.raises(NotProfileFunctional):
        aggregation_functional(rule, (1.0, 2.0))
    with pytest.raises(NotProfileFunctional):
        rule.as_dual_self()


def test_geometric_pool_leaves_the_linear_segment():
    profile = SuggestionProfile([(0.6, 0.3, 0.1), (0.1, 0.3, 0.6)])
    pooled = GeometricRule((0.5, 0.5)).pooled(profile)
    assert pooled[1] > 0.3 + 1e-3


def test_soft_min_is_translation_invariant_but_not_homogeneous():
    rule = SoftMinRule(1.0)
    a = np.array([0.0, 4.0])
    assert aggregation_functional(rule, a + 3.0) == pytest.approx(aggregation_functional(rule, a) + 3.0)
    assert aggregation_functional(rule, 0.1 * a) / 0.1 != pytest.approx(aggregation_functional(rule, a), abs=1e-3)


def test_realize_evaluation_profile(spread_profile_3):
    act = realize_evaluation_profile(spread_profile_3, (0.0, 0.0, 2.0))
    np.testing.assert_allclose(evaluation_profile(spread_profile_3, act), [0.0, 0.0, 2.0], atol=1e-12)


def test_realize_evaluation_profile_on_identical_experts():
    twins = SuggestionProfile([(0.2, 0.3, 0.5), (0.2, 0.3, 0.5)])
    assert realize_evaluation_profile(twins, (0.0, 1.0)) is None


def test_as_dual_self_embeddings_agree(rule_zoo, spread_profile_3):
    f = UtilityAct([1.5, -0.5, 2.0, -3.0])
    for rule in rule_zoo.values():
        embedded = rule.as_dual_self(3)
        assert aggregate_utility(embedded, spread_profile_3, f) == pytest.approx(
            aggregate_utility(rule, spread_profile_3, f), abs=1e-12)


def test_rule_factory_round_trip(rule_zoo, random_dual_self):
    for rule in list(rule_zoo.values()) + [random_dual_self, GeometricRule((0.5, 0.5)), SoftMinRule(0.5)]:
        assert rule_from_dict(rule.to_dict()) == rule


def test_rule_factory_named_rules():
    assert build_rule("median") == median_rule()
    assert build_rule("multiple_weight", full_simplex=3) == MultipleWeightRule.full_simplex(3)
    assert build_rule("order_statistic", experts=3, k=2) == median_rule()
    with pytest.raises(PoolingError):
        build_rule("harmonic")
    with pytest.raises(PoolingError):
        build_rule("linear")


def test_geometric_pooled_belief_examples(spread_profile_2):
    same = SuggestionProfile([(0.2, 0.3, 0.5)] * 3)
    np.testing.assert_allclose(geometric_pooled_belief((0.2, 0.3, 0.5), same).probs, (0.2, 0.3, 0.5), atol=1e-12)
    np.testing.assert_allclose(geometric_pooled_belief((1.0, 0.0), spread_profile_2).probs,
                               spread_profile_2[0].probs, atol=1e-12)
    overlap = SuggestionProfile([(0.5, 0.5, 0.0), (0.0, 0.5, 0.5)])
    np.testing.assert_allclose(geometric_pooled_belief((0.5, 0.5), overlap).probs, (0.0, 1.0, 0.0), atol=1e-12)


def test_dictatorship_rule_examples(te1):
    rule = dictatorship_rule(0)
    assert aggregate_utility(rule, te1, UtilityAct([1.0, 0.0, 0.0])) == pytest.approx(0.9, abs=1e-15)
    assert aggregate_utility(rule, te1, UtilityAct.constant(-3.5, 3)) == pytest.approx(-3.5, abs=1e-12)
    with pytest.raises(IndexOutOfRange):
        aggregate_utility(dictatorship_rule(2), te1, UtilityAct.constant(1.0, 3))


def test_vertex_extrema_match_a_dense_weight_grid(rule_zoo, random_dual_self):
    rng = np.random.default_rng(31)
    families = {
        "multiple_weight": (rule_zoo["multiple_weight"], [rule_zoo["multiple_weight"].weight_set.matrix]),
        "median": (rule_zoo["median"], [s.matrix for s in rule_zoo["median"].collection]),
        "random_dual_self": (random_dual_self, [s.matrix for s in random_dual_self.collection]),
    }
    for rule, sets in families.values():
        for _ in range(100):
            values = rng.uniform(-10.0, 10.0, 3)
            assert aggregation_functional(rule, values) == pytest.approx(_grid_maximin(sets, values), abs=1e-9)
            profile = random_profile(rng, 4, 3)
            f = random_act(rng, 4, 10.0)
            pooled_by_grid = [_simplex_grid(vertices) @ profile.matrix for vertices in sets]
            by_grid = max(float(np.min(pooled @ f.utils)) for pooled in pooled_by_grid)
            assert aggregate_utility(rule, profile, f) == pytest.approx(by_grid, abs=1e-9)


def test_grid_never_undercuts_the_vertices():
    rng = np.random.default_rng(37)
    for _ in range(50):
        vertices = rng.dirichlet(np.ones(3), size=4)
        rule = MultipleWeightRule(vertices)
        values = rng.uniform(-10.0, 10.0, 3)
        grid = _simplex_grid(vertices, steps=20) @ values
        assert grid.min() >= aggregation_functional(rule, values) - 1e-9


def test_sampled_pareto_on_the_zoo(rule_zoo, random_dual_self):
    rng = np.random.default_rng(41)
    rules = list(rule_zoo.values()) + [random_dual_self, MultipleWeightRule.full_simplex(3)]
    for trial in range(500):
        rule = rules[trial % len(rules)]
        values = rng.uniform(-10.0, 10.0, 3)
        raised = values + rng.uniform(0.1, 5.0, 3)
        floor = aggregation_functional(rule, values) + (raised - values).min()
        assert aggregation_functional(rule, raised) >= floor - 1e-9

        profile = random_profile(rng, 4, 3)
        f = random_act(rng, 4, 10.0)
        g = UtilityAct(f.utils + rng.uniform(0.0, 3.0, 4))
        assert aggregate_utility(rule, profile, g) >= aggregate_utility(rule, profile, f) - 1e-9


def test_as_dual_self_embeddings_agree_on_sampled_acts(rule_zoo):
    rng = np.random.default_rng(43)
    rules = list(rule_zoo.values()) + [MultipleWeightRule.full_simplex(3)]
    embedded = [rule.as_dual_self(3) for rule in rules]
    assert all(isinstance(rule, DualSelfRule) for rule in embedded)
    for _ in range(200):
        profile = random_profile(rng, int(rng.choice([3, 4, 5])), 3)
        f = random_act(rng, profile.dimension, 10.0)
        for rule, twin in zip(rules, embedded):
            assert aggregate_utility(twin, profile, f) == pytest.approx(aggregate_utility(rule, profile, f), abs=1e-12)
