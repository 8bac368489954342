from .hull import HullMembershipResult, hull_contains, phase_one
from .rectangularity import RectangularityWitness, find_rectangularity_violation, is_rectangular, paste

__all__ = [
    'HullMembershipResult', 'RectangularityWitness', 'find_rectangularity_violation', 'hull_contains',
    'is_rectangular', 'paste', 'phase_one',
]
