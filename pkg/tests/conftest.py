import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from checks import CheckConfig
from core import Belief, SuggestionProfile
from rules import DictatorshipRule, DualSelfRule, LinearRule, MultipleWeightRule, median_rule

settings.register_profile("fast", max_examples=25, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))

SCENARIO_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "scenarios")


@st.composite
def beliefs(draw, size):
    """Full-support beliefs of a fixed dimension."""
    raw = draw(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=size, max_size=size))
    probs = np.asarray(raw) / np.sum(raw)
    return Belief(probs / probs.sum())


@st.composite
def profiles(draw, size=4, experts=None):
    n = experts if experts is not None else draw(st.integers(min_value=1, max_value=4))
    return SuggestionProfile([draw(beliefs(size)) for _ in range(n)])


acts_4 = st.lists(st.floats(min_value=-10, max_value=10), min_size=4, max_size=4)


@pytest.fixture
def te1():
    return SuggestionProfile([(0.9, 0.1, 0.0), (0.0, 0.0, 1.0)])


@pytest.fixture
def te2():
    return SuggestionProfile([(0.4, 0.1, 0.1, 0.4), (0.1, 0.4, 0.4, 0.1)])


@pytest.fixture
def spread_profile_2():
    """Two genuinely different full-support experts over four states."""
    return SuggestionProfile([(0.4, 0.3, 0.2, 0.1), (0.1, 0.2, 0.3, 0.4)])


@pytest.fixture
def spread_profile_3():
    return SuggestionProfile([(0.4, 0.3, 0.2, 0.1), (0.1, 0.2, 0.3, 0.4), (0.3, 0.1, 0.4, 0.2)])


@pytest.fixture
def rule_zoo():
    """Three-expert zoo: one rule of each dual-self kind."""
    return {
        "linear": LinearRule((0.5, 0.3, 0.2)),
        "multiple_weight": MultipleWeightRule([(0.6, 0.2, 0.2), (0.2, 0.6, 0.2), (0.2, 0.2, 0.6)]),
        "median": median_rule(),
        "dictatorship": DictatorshipRule(1),
    }


@pytest.fixture
def random_dual_self():
    rng = np.random.default_rng(11)
    sets = [[rng.dirichlet(np.ones(3)) for _ in range(2)] for _ in range(2)]
    return DualSelfRule(sets)


@pytest.fixture
def quick_config():
    return CheckConfig(seed=7, trials=200, h_samples=4)
