"""Named constructions: the dictatorship counterexample to full commutativity and the
thought-experiment profiles."""

from dataclasses import dataclass
from typing import Sequence, Union

from core.belief import Belief, SuggestionProfile
from core.errors import PoolingError, StateSpaceTooSmall, WeightDegenerate
from core.state_space import Event
from rules.aggregation_rule import pooled_belief
from rules.weights import Weight

TE1_PROFILE = ((0.9, 0.1, 0.0), (0.0, 0.0, 1.0))
TE1_STATES = ("No", "Mild", "Severe")
TE2_STATES = ("hH", "lH", "hL", "lL")
TE2_H_SIGNAL = (0, 2)


@dataclass(frozen=True)
class DictatorshipCounterexample:
    profile: SuggestionProfile
    event: Event
    update_then_pool: Belief
    pool_then_update: Belief

    @property
    def gap(self) -> float:
        """Difference of the two posteriors on the first state."""
        return self.update_then_pool[0] - self.pool_then_update[0]


def _first_weight(weight: Union[Weight, Sequence[float]]) -> Weight:
    weight = weight if isinstance(weight, Weight) else Weight(weight)
    lambda_1 = weight[0]
    if weight.expert_count < 2 or lambda_1 <= 0.0 or lambda_1 >= 1.0:
        raise WeightDegenerate(f"the first expert's weight must lie strictly inside (0,1), got {lambda_1}")
    return weight


def dictatorship_counterexample(weight: Union[Weight, Sequence[float]], states: int = 4) -> DictatorshipCounterexample:
    """
    Profile on which linear pooling with `weight` fails to commute with updating.

    Expert 1 holds (.1, 0, .9, 0, ...), every other expert is certain of the second state,
    and the event is the first two states.
    """
    weight = _first_weight(weight)
    if states < 4:
        raise StateSpaceTooSmall(states, 4, "the dictatorship counterexample")
    first = [0.0] * states
    first[0], first[2] = 0.1, 0.9
    others = [0.0] * states
    others[1] = 1.0
    profile = SuggestionProfile([first] + [others] * (weight.expert_count - 1))
    event = Event([0, 1], states)
    return DictatorshipCounterexample(
        profile=profile,
        event=event,
        update_then_pool=pooled_belief(weight, profile.condition(event)),
        pool_then_update=pooled_belief(weight, profile).condition(event),
    )


def dictatorship_gap(lambda_1: float) -> float:
    """λ_1 − .1λ_1/(1 − .9λ_1), positive on (0,1)."""
    if not 0.0 < lambda_1 < 1.0:
        raise WeightDegenerate(f"λ_1 must lie strictly inside (0,1), got {lambda_1}")
    return lambda_1 - 0.1 * lambda_1 / (1.0 - 0.9 * lambda_1)


def te1_profile() -> SuggestionProfile:
    return SuggestionProfile(TE1_PROFILE)


def alternative_te2_profile(alice_h: float, bob_h: float, alice_high_given_l: float = 0.5,
                            bob_high_given_l: float = 0.5) -> SuggestionProfile:
    """
    Joint priors over (hH, lH, hL, lL) whose posteriors on the h signal put .8 (Alice) and .2 (Bob) on H.

    Args:
        alice_h: Alice's prior probability of the h signal
        bob_h: Bob's prior probability of the h signal
        alice_high_given_l: Alice's probability of H after the l signal
        bob_high_given_l: Bob's probability of H after the l signal
    """
    for name, value in (("alice_h", alice_h), ("bob_h", bob_h)):
        if not 0.0 < value <= 1.0:
            raise PoolingError(f"{name} must lie in (0,1], got {value}")
    for name, value in (("alice_high_given_l", alice_high_given_l), ("bob_high_given_l", bob_high_given_l)):
        if not 0.0 <= value <= 1.0:
            raise PoolingError(f"{name} must lie in [0,1], got {value}")

    def joint(h_mass: float, high_given_h: float, high_given_l: float):
        low_mass = 1.0 - h_mass
        return (high_given_h * h_mass, high_given_l * low_mass,
                (1.0 - high_given_h) * h_mass, (1.0 - high_given_l) * low_mass)

    return SuggestionProfile([joint(alice_h, 0.8, alice_high_given_l), joint(bob_h, 0.2, bob_high_given_l)])


def te2_profile() -> SuggestionProfile:
    return alternative_te2_profile(0.5, 0.5, 0.2, 0.8)
