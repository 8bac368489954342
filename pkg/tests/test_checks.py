import numpy as np
import pytest

from checks import (AXIOM_IDS, CheckConfig, Outcome, alternative_te2_profile, check_ambiguity_aversion,
                    check_c_independence, check_dominance, check_full_commutativity, check_independence,
                    check_moderate_commutativity, check_monotonicity_regularity, check_p2, check_pareto,
                    check_pessimism_utta, check_weak_commutativity, consistency_matrix, dictatorship_counterexample,
                    dictatorship_gap, replay_witness, run_axiom, te2_profile)
from checks.samplers import agreeing_profile, random_event, restricted_profile, trial_rng
from core import Event
from core.errors import PoolingError, StateSpaceTooSmall, WeightDegenerate
from dynamics import agree_on_event, disagreement_restricted_within
from rules import (DictatorshipRule, DualSelfRule, GeometricRule, LinearRule, MultipleWeightRule, SoftMinRule,
                   median_rule)
from rules.aggregation_rule import ProfileFunctionalRule

SEARCH = CheckConfig(seed=7, trials=2000, h_samples=4)


class CubedBest(ProfileFunctionalRule):
    """Monotone but not translation invariant: I(a) = max(a)^3."""

    kind = "cubed_best"

    def functional(self, values):
        return float(np.max(values)) ** 3

    def to_dict(self):
        return {"kind": self.kind}


class ClaimsInvariance(CubedBest):
    translation_invariant = True


def _assert_replays(rule, report):
    assert report.violated
    assert abs(replay_witness(rule, report) - report.witness.gap) <= 1e-8


def test_check_config_validation():
    with pytest.raises(ValueError):
        CheckConfig(trials=0)
    with pytest.raises(ValueError):
        CheckConfig(state_sizes=(2, 3))


def test_trial_streams_are_reproducible():
    assert trial_rng(3, 5).uniform() == trial_rng(3, 5).uniform()
    assert trial_rng(3, 5).uniform() != trial_rng(3, 6).uniform()


def test_restricted_generator_satisfies_both_predicates():
    rng = np.random.default_rng(1)
    for _ in range(200):
        size = int(rng.choice([3, 4, 5]))
        event = random_event(rng, size)
        profile = restricted_profile(rng, size, int(rng.integers(2, 5)), event)
        assert disagreement_restricted_within(profile, event)
        assert agree_on_event(profile, event)


def test_agreeing_generator_agrees_on_event():
    rng = np.random.default_rng(2)
    for _ in range(200):
        event = random_event(rng, 5, min_outside=2)
        assert agree_on_event(agreeing_profile(rng, 5, 3, event), event)


def test_identical_configs_give_identical_reports(spread_profile_3):
    first = check_independence(median_rule(), spread_profile_3, SEARCH)
    second = check_independence(median_rule(), spread_profile_3, SEARCH)
    assert first == second


def test_pass_reports_carry_trial_count(quick_config):
    report = check_pareto(LinearRule((0.5, 0.5)), quick_config)
    assert report.outcome is Outcome.PASS
    assert report.trials_run >= quick_config.trials
    assert report.witness is None


@pytest.mark.parametrize("rule", [LinearRule((0.3, 0.7)), median_rule(), DictatorshipRule(1),
                                  MultipleWeightRule.full_simplex(4)])
def test_dual_self_family_is_pareto(rule, quick_config):
    assert check_pareto(rule, quick_config).passed


def test_geometric_pooling_breaks_pareto(quick_config):
    rule = GeometricRule((0.5, 0.5))
    report = check_pareto(rule, quick_config)
    _assert_replays(rule, report)


@pytest.mark.parametrize("rule", [LinearRule((0.3, 0.7)), median_rule()])
def test_monotonicity(rule, quick_config):
    assert check_monotonicity_regularity(rule, quick_config).passed


def test_dominance_on_the_zoo(rule_zoo, spread_profile_3, quick_config):
    for rule in rule_zoo.values():
        assert check_dominance(rule, spread_profile_3, quick_config).passed


def test_p2_holds_for_expected_utility_rules(spread_profile_2, quick_config):
    assert check_p2(LinearRule((0.4, 0.6)), spread_profile_2, quick_config).passed
    assert check_p2(DictatorshipRule(0), spread_profile_2, quick_config).passed


def test_p2_fails_for_multiple_weights(spread_profile_2):
    rule = MultipleWeightRule.full_simplex(2)
    _assert_replays(rule, check_p2(rule, spread_profile_2, SEARCH))


def test_p2_fails_for_the_median(spread_profile_3):
    rule = median_rule()
    _assert_replays(rule, check_p2(rule, spread_profile_3, SEARCH))


def test_c_independence_holds_on_the_zoo(rule_zoo, spread_profile_3, quick_config):
    for rule in rule_zoo.values():
        assert check_c_independence(rule, spread_profile_3, quick_config).passed


def test_soft_min_breaks_c_independence(spread_profile_2, quick_config):
    rule = SoftMinRule(1.0)
    _assert_replays(rule, check_c_independence(rule, spread_profile_2, quick_config))


def test_independence(spread_profile_3, quick_config):
    assert check_independence(LinearRule((0.5, 0.3, 0.2)), spread_profile_3, quick_config).passed
    assert check_independence(DictatorshipRule(2), spread_profile_3, quick_config).passed
    rule = median_rule()
    report = check_independence(rule, spread_profile_3, quick_config)
    _assert_replays(rule, report)
    assert report.witness.gap == pytest.approx(2.0, abs=1e-9)


def test_independence_fails_for_multiple_weights(spread_profile_2):
    rule = MultipleWeightRule.full_simplex(2)
    _assert_replays(rule, check_independence(rule, spread_profile_2, SEARCH))


def test_ambiguity_aversion(rule_zoo, spread_profile_3, quick_config):
    for name in ("linear", "multiple_weight", "dictatorship"):
        assert check_ambiguity_aversion(rule_zoo[name], spread_profile_3, quick_config).passed
    rule = rule_zoo["median"]
    report = check_ambiguity_aversion(rule, spread_profile_3, quick_config)
    _assert_replays(rule, report)
    assert report.witness.gap == pytest.approx(1.0, abs=1e-9)


def test_weak_commutativity_holds_for_the_dual_self_family(rule_zoo, random_dual_self):
    config = CheckConfig(seed=7, trials=300, h_samples=4)
    rules = [rule_zoo["linear"], MultipleWeightRule(np.random.default_rng(4).dirichlet(np.ones(3), size=3)),
             random_dual_self, DictatorshipRule(0)]
    for rule in rules:
        report = check_weak_commutativity(rule, config)
        assert report.passed, report.summary()


@pytest.mark.slow
@pytest.mark.parametrize("experts", [2, 3, 4])
def test_weak_commutativity_suite_by_expert_count(experts):
    rng = np.random.default_rng(100 + experts)
    config = CheckConfig(seed=7, trials=1000, h_samples=4, expert_counts=(experts,))
    rules = [LinearRule(rng.dirichlet(np.ones(experts))),
             MultipleWeightRule(rng.dirichlet(np.ones(experts), size=3)),
             DualSelfRule([[rng.dirichlet(np.ones(experts)) for _ in range(2)] for _ in range(2)]),
             DictatorshipRule(0)]
    for rule in rules:
        report = check_weak_commutativity(rule, config)
        assert report.passed, report.summary()


def test_moderate_commutativity(rule_zoo, quick_config):
    assert check_moderate_commutativity(rule_zoo["linear"], quick_config).passed
    assert check_moderate_commutativity(DictatorshipRule(0), quick_config).passed
    rule = rule_zoo["multiple_weight"]
    _assert_replays(rule, check_moderate_commutativity(rule, quick_config))


def test_full_commutativity_singles_out_dictatorships(quick_config):
    assert check_full_commutativity(DictatorshipRule(0), quick_config).passed
    rule = LinearRule((0.5, 0.5))
    report = check_full_commutativity(rule, quick_config)
    _assert_replays(rule, report)
    assert report.witness.gap == pytest.approx(0.5 - 1.0 / 11.0, abs=1e-8)


def test_pessimism_to_update_then_aggregate(rule_zoo, quick_config):
    assert check_pessimism_utta(rule_zoo["multiple_weight"], quick_config).passed
    assert check_pessimism_utta(rule_zoo["linear"], quick_config).passed


def test_pessimism_needs_four_states(rule_zoo):
    with pytest.raises(StateSpaceTooSmall):
        check_pessimism_utta(rule_zoo["linear"], CheckConfig(trials=5, state_sizes=(3,)))


def test_matrix_marks_pessimism_inapplicable_on_three_states(rule_zoo):
    config = CheckConfig(seed=3, trials=10, h_samples=2, state_sizes=(3,))
    matrix = consistency_matrix({"linear": rule_zoo["linear"]}, config)
    assert set(matrix) == set(AXIOM_IDS)
    cell = matrix["pessimism_utta"]["linear"]
    assert cell.outcome is Outcome.INAPPLICABLE
    assert "too small" in cell.reason
    assert matrix["weak_commutativity"]["linear"].passed


def test_check_with_every_trial_skipped_is_inapplicable(te1, quick_config):
    for report in (check_p2(GeometricRule((0.5, 0.5)), te1, quick_config),
                   check_c_independence(GeometricRule((0.5, 0.5)), te1, quick_config),
                   check_p2(DictatorshipRule(5), te1, quick_config)):
        assert report.outcome is Outcome.INAPPLICABLE
        assert report.skipped == report.trials_run == quick_config.trials
        assert "no trial could be evaluated" in report.reason
        assert not report.passed


@pytest.mark.parametrize("rule", [CubedBest(), ClaimsInvariance()])
def test_ambiguity_aversion_only_counts_indifferent_pairs(rule, spread_profile_2, quick_config):
    report = check_ambiguity_aversion(rule, spread_profile_2, quick_config)
    assert report.outcome is Outcome.INAPPLICABLE
    assert report.skipped == quick_config.trials


def test_rules_declare_translation_invariance(rule_zoo):
    assert not CubedBest.translation_invariant
    for rule in list(rule_zoo.values()) + [GeometricRule((0.5, 0.5)), SoftMinRule(1.0)]:
        assert rule.translation_invariant, rule.describe()


def test_profile_checks_report_inapplicable_on_expert_mismatch(spread_profile_2, quick_config):
    report = check_p2(median_rule(), spread_profile_2, quick_config)
    assert report.outcome is Outcome.INAPPLICABLE


def test_unknown_axiom(quick_config):
    with pytest.raises(PoolingError):
        run_axiom("transitivity", median_rule(), quick_config)


def test_replay_without_witness(quick_config):
    report = check_pareto(median_rule(), quick_config)
    with pytest.raises(PoolingError):
        replay_witness(median_rule(), report)


def test_consistency_matrix_rows(rule_zoo):
    config = CheckConfig(seed=3, trials=40, h_samples=2)
    matrix = consistency_matrix(rule_zoo, config)
    assert set(matrix) == set(AXIOM_IDS)
    for axiom_id in ("weak_commutativity", "c_independence", "pareto", "dominance"):
        assert all(report.passed for report in matrix[axiom_id].values()), axiom_id
    assert matrix["independence"]["median"].violated
    assert matrix["ambiguity_aversion"]["median"].violated
    assert matrix["full_commutativity"]["dictatorship"].passed


@pytest.mark.slow
def test_consistency_matrix_at_full_search_depth(rule_zoo, spread_profile_3):
    config = CheckConfig(seed=7, trials=2000, h_samples=4)
    matrix = consistency_matrix(rule_zoo, config, {name: spread_profile_3 for name in rule_zoo})
    for axiom_id in ("p2", "independence"):
        for name in ("multiple_weight", "median"):
            _assert_replays(rule_zoo[name], matrix[axiom_id][name])
        for name in ("linear", "dictatorship"):
            assert matrix[axiom_id][name].passed, matrix[axiom_id][name].summary()
    _assert_replays(rule_zoo["median"], matrix["ambiguity_aversion"]["median"])
    assert all(report.passed for report in matrix["c_independence"].values())


def test_dictatorship_counterexample_values():
    example = dictatorship_counterexample((0.5, 0.5))
    assert example.update_then_pool[0] == pytest.approx(0.5, abs=1e-12)
    assert example.pool_then_update[0] == pytest.approx(1.0 / 11.0, abs=1e-12)
    assert example.gap > 0.4
    assert not example.event.is_universe


@pytest.mark.parametrize("lambda_1", [i / 10 for i in range(1, 10)])
def test_dictatorship_gap_is_positive(lambda_1):
    assert dictatorship_gap(lambda_1) > 0
    example = dictatorship_counterexample((lambda_1, 1.0 - lambda_1))
    assert example.gap == pytest.approx(dictatorship_gap(lambda_1), abs=1e-12)


def test_dictatorship_counterexample_rejects_degenerate_weights():
    with pytest.raises(WeightDegenerate):
        dictatorship_counterexample((1.0, 0.0))
    with pytest.raises(WeightDegenerate):
        dictatorship_gap(0.0)
    with pytest.raises(StateSpaceTooSmall):
        dictatorship_counterexample((0.5, 0.5), states=3)


def test_te2_profile_matches_fixture(te2):
    assert te2_profile().is_close(te2, atol=1e-15)


@pytest.mark.parametrize("alice_h, bob_h, alice_l, bob_l", [
    (0.5, 0.5, 0.5, 0.5), (0.1, 0.9, 0.3, 0.6), (1.0, 0.25, 0.0, 1.0),
])
def test_alternative_te2_profiles_share_posteriors(alice_h, bob_h, alice_l, bob_l):
    posterior = alternative_te2_profile(alice_h, bob_h, alice_l, bob_l).condition(Event([0, 2], 4))
    assert posterior[0][0] == pytest.approx(0.8, abs=1e-12)
    assert posterior[1][0] == pytest.approx(0.2, abs=1e-12)
