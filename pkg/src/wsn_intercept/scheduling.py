"""Round-robin and secrecy-optimal sensor selection."""

from __future__ import annotations

import enum

import numpy as np

from .channel import ChannelDraw, Scenario
from .errors import DomainError

__all__ = [
    "SchedulerKind",
    "round_robin_select",
    "optimal_select",
    "intercept_event",
    "round_robin_select_batch",
    "optimal_select_batch",
    "intercept_event_batch",
]


class SchedulerKind(enum.Enum):
    ROUND_ROBIN = "round"
    OPTIMAL_SECRECY = "optimal"

    @classmethod
    def parse(cls, value) -> "SchedulerKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown scheduler {value!r}; expected 'round' or 'optimal'") from None


def round_robin_select(slot_index: int, n_sensors: int) -> int:
    if n_sensors < 1:
        raise DomainError(f"n_sensors must be >= 1, got {n_sensors}")
    if slot_index < 0:
        raise DomainError(f"slot_index must be >= 0, got {slot_index}")
    return slot_index % n_sensors


def _check_dims(scenario, draw):
    if len(draw) != scenario.n_sensors:
        raise DomainError(
            f"channel draw has {len(draw)} sensors, scenario has {scenario.n_sensors}"
        )


def _excess(xs, xe, power, n0):
    # (N0 + Xs P) / (N0 + Xe P) - 1, written so its sign is exactly sign(Xs - Xe)
    return (xs - xe) * power / (n0 + xe * power)


def optimal_select(scenario: Scenario, draw: ChannelDraw) -> int:
    """Index maximizing (N0 + Xs P) / (N0 + Xe P); the lowest index wins ties."""
    _check_dims(scenario, draw)
    n0 = scenario.noise_power
    best, best_key = 0, -float("inf")
    for i, (s, xs, xe) in enumerate(zip(scenario.sensors, draw.main_gains, draw.wiretap_gains)):
        key = _excess(xs, xe, s.tx_power, n0)
        if key > best_key:
            best, best_key = i, key
    return best


def intercept_event(scenario: Scenario, draw: ChannelDraw, selected: int) -> bool:
    """True when the selected sensor's secrecy capacity is non-positive.

    Equal gains count as an intercept.
    """
    _check_dims(scenario, draw)
    if not 0 <= selected < scenario.n_sensors:
        raise DomainError(f"selected index {selected} out of range")
    return draw.main_gains[selected] <= draw.wiretap_gains[selected]


# Array versions used by the Monte Carlo engine. Gains are (trials, sensors).

def round_robin_select_batch(slot_indices: np.ndarray, n_sensors: int) -> np.ndarray:
    return np.asarray(slot_indices) % n_sensors


def optimal_select_batch(main: np.ndarray, wiretap: np.ndarray, tx_power: np.ndarray,
                         noise_power: float) -> np.ndarray:
    key = _excess(main, wiretap, tx_power, noise_power)
    # argmax returns the first maximum, matching the scalar tie-break
    return np.argmax(key, axis=1)


def intercept_event_batch(main: np.ndarray, wiretap: np.ndarray,
                          selected: np.ndarray) -> np.ndarray:
    rows = np.arange(main.shape[0])
    return main[rows, selected] <= wiretap[rows, selected]
