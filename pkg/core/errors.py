"""Error hierarchy shared by every package."""

from typing import Optional


class PoolingError(ValueError):
    """Base class for all domain errors."""


class InvalidDistribution(PoolingError):
    """A vector that should be a probability distribution is not one."""


class DimensionMismatch(PoolingError):
    pass


class WrongExpertCount(DimensionMismatch):
    """A rule built for a fixed number of experts met a profile of another size."""


class IndexOutOfRange(PoolingError):
    pass


class ZeroProbabilityEvent(PoolingError):
    pass


class EventNotConditionable(ZeroProbabilityEvent):
    def __init__(self, expert: int, mass: float, event=None):
        self.expert = expert
        self.mass = mass
        self.event = event
        super().__init__(
            f"expert {expert} assigns probability {mass:.3g} to event {event}; "
            f"the profile cannot be conditioned on it")


class AlphaOutOfRange(PoolingError):
    pass


class NotProfileFunctional(PoolingError):
    """The rule cannot be written as a functional of the evaluation profile."""


class GeometricUndefined(PoolingError):
    pass


class BracketFailure(RuntimeError):
    """Bracket widening for a certainty equivalent exceeded its cap."""


class DisagreementNotRestricted(PoolingError):
    pass


class ConditioningUndefined(PoolingError):
    def __init__(self, vertex: int, event, side: str):
        self.vertex = vertex
        self.event = event
        self.side = side
        super().__init__(
            f"vertex {vertex} assigns zero probability to {side} of event {event}; "
            f"pasting conditionals is undefined")


class StateSpaceTooSmall(PoolingError):
    def __init__(self, size: int, required: int, what: Optional[str] = None):
        self.size = size
        self.required = required
        label = f" for {what}" if what else ""
        super().__init__(f"state space of size {size} is too small{label}; need at least {required}")


class WeightDegenerate(PoolingError):
    pass
