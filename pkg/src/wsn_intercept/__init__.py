"""Intercept probability of scheduled sensor transmissions under Nakagami fading.

Round-robin and secrecy-optimal sensor scheduling are compared through
exact closed forms, high-MER asymptotics and seeded Monte Carlo.
"""

from .analysis import (
    asymptotic_intercept_prob,
    asymptotic_optimal,
    asymptotic_round_robin,
    diversity_order,
    empirical_diversity_slope,
    intercept_prob,
    intercept_prob_optimal,
    intercept_prob_round_robin,
    intercept_prob_single,
    zeta_coefficient,
)
from .channel import (
    ChannelDraw,
    MerTemplate,
    NakagamiLink,
    Scenario,
    SensorProfile,
    SensorTemplate,
    channel_capacity,
    scenario_from_mer,
    secrecy_capacity,
)
from .errors import AccuracyError, DomainError
from .montecarlo import InterceptEstimate, TrialConfig, estimate_intercept
from .scheduling import SchedulerKind, intercept_event, optimal_select, round_robin_select

__version__ = "0.1.0"
