"""Links, sensors, scenarios and capacities.

A link is described by the Gamma law of its squared fading gain
|h|^2 ~ Gamma(shape, mean_gain / shape), which is what a Nakagami-m
amplitude with E[|h|^2] = mean_gain produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .special import log_gamma

__all__ = [
    "NakagamiLink",
    "SensorProfile",
    "Scenario",
    "SensorTemplate",
    "MerTemplate",
    "ChannelDraw",
    "gain_pdf",
    "channel_capacity",
    "secrecy_capacity",
    "scenario_from_mer",
    "make_scenario",
]

MIN_SHAPE = 0.5


def _positive(name, value):
    value = float(value)
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value}")
    return value


def _shape(name, value):
    value = float(value)
    if not (value >= MIN_SHAPE and math.isfinite(value)):
        raise DomainError(f"{name} must be a finite Nakagami shape >= {MIN_SHAPE}, got {value}")
    return value


@dataclass(frozen=True)
class NakagamiLink:
    shape: float
    mean_gain: float

    def __post_init__(self):
        object.__setattr__(self, "shape", _shape("shape", self.shape))
        object.__setattr__(self, "mean_gain", _positive("mean_gain", self.mean_gain))

    @property
    def scale(self) -> float:
        """Scale of the Gamma law of the squared gain."""
        return self.mean_gain / self.shape


@dataclass(frozen=True)
class SensorProfile:
    main: NakagamiLink
    wiretap: NakagamiLink
    tx_power: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "tx_power", _positive("tx_power", self.tx_power))


@dataclass(frozen=True)
class Scenario:
    sensors: tuple[SensorProfile, ...]
    noise_power: float = 1.0

    def __post_init__(self):
        sensors = tuple(self.sensors)
        if not sensors:
            raise DomainError("a scenario needs at least one sensor")
        object.__setattr__(self, "sensors", sensors)
        object.__setattr__(self, "noise_power", _positive("noise_power", self.noise_power))

    @property
    def n_sensors(self) -> int:
        return len(self.sensors)

    def scaled_powers(self, tx_factor=1.0, noise_factor=1.0) -> "Scenario":
        """Copy with every transmit power and the noise power rescaled."""
        return Scenario(
            tuple(SensorProfile(s.main, s.wiretap, s.tx_power * tx_factor) for s in self.sensors),
            self.noise_power * noise_factor,
        )


@dataclass(frozen=True)
class SensorTemplate:
    """Per-sensor parameters relative to the reference gains.

    ``m`` and ``k`` are the main and wiretap shape factors; ``alpha_s`` and
    ``alpha_e`` scale the reference main and wiretap gains.
    """

    m: float
    k: float
    alpha_s: float = 1.0
    alpha_e: float = 1.0
    power: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "m", _shape("m", self.m))
        object.__setattr__(self, "k", _shape("k", self.k))
        for name in ("alpha_s", "alpha_e", "power"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))


@dataclass(frozen=True)
class MerTemplate:
    sensors: tuple[SensorTemplate, ...]
    reference_wiretap_gain: float = 1.0
    noise_power: float = 1.0

    def __post_init__(self):
        sensors = tuple(self.sensors)
        if not sensors:
            raise DomainError("a template needs at least one sensor")
        object.__setattr__(self, "sensors", sensors)
        object.__setattr__(
            self, "reference_wiretap_gain",
            _positive("reference_wiretap_gain", self.reference_wiretap_gain),
        )
        object.__setattr__(self, "noise_power", _positive("noise_power", self.noise_power))

    @classmethod
    def homogeneous(cls, n: int, m: float, k: float, alpha_s=1.0, alpha_e=1.0, power=1.0,
                    **kwargs) -> "MerTemplate":
        if int(n) != n or n < 1:
            raise DomainError(f"sensor count must be a positive integer, got {n}")
        return cls((SensorTemplate(m, k, alpha_s, alpha_e, power),) * int(n), **kwargs)

    @property
    def n_sensors(self) -> int:
        return len(self.sensors)


@dataclass(frozen=True)
class ChannelDraw:
    main_gains: tuple[float, ...]
    wiretap_gains: tuple[float, ...]

    def __post_init__(self):
        main = tuple(float(g) for g in self.main_gains)
        tap = tuple(float(g) for g in self.wiretap_gains)
        if len(main) != len(tap):
            raise DomainError("main and wiretap gain lists differ in length")
        if any(not g >= 0 for g in main + tap):
            raise DomainError("squared fading gains must be non-negative")
        object.__setattr__(self, "main_gains", main)
        object.__setattr__(self, "wiretap_gains", tap)

    def __len__(self):
        return len(self.main_gains)


def gain_pdf(link: NakagamiLink, x: float) -> float:
    """Density of the squared gain |h|^2 of ``link`` at ``x``."""
    if x < 0:
        raise DomainError(f"gain must be non-negative, got {x}")
    m, scale = link.shape, link.scale
    if x == 0:
        if m == 1:
            return 1.0 / scale
        return math.inf if m < 1 else 0.0
    return math.exp((m - 1) * math.log(x) - x / scale - m * math.log(scale) - log_gamma(m))


def channel_capacity(gain: float, tx_power: float, noise_power: float) -> float:
    """Shannon capacity log2(1 + gain * P / N0) in bits/s/Hz."""
    if gain < 0:
        raise DomainError(f"gain must be non-negative, got {gain}")
    return math.log1p(gain * tx_power / noise_power) / math.log(2.0)


def secrecy_capacity(profile: SensorProfile, main_gain: float, wiretap_gain: float,
                     noise_power: float) -> float:
    """Main-link minus wiretap-link capacity; negative when the eavesdropper wins."""
    return (channel_capacity(main_gain, profile.tx_power, noise_power)
            - channel_capacity(wiretap_gain, profile.tx_power, noise_power))


def scenario_from_mer(template: MerTemplate, lambda_me: float) -> Scenario:
    """Concrete scenario at main-to-eavesdropper ratio ``lambda_me`` (linear)."""
    lambda_me = _positive("lambda_me", lambda_me)
    ref_e = template.reference_wiretap_gain
    ref_m = lambda_me * ref_e
    sensors = tuple(
        SensorProfile(
            NakagamiLink(t.m, t.alpha_s * ref_m),
            NakagamiLink(t.k, t.alpha_e * ref_e),
            t.power,
        )
        for t in template.sensors
    )
    return Scenario(sensors, template.noise_power)


def make_scenario(main: Sequence[tuple[float, float]], wiretap: Sequence[tuple[float, float]],
                  powers: Sequence[float] | None = None, noise_power: float = 1.0) -> Scenario:
    """Build a scenario from (shape, mean_gain) pairs per link."""
    if len(main) != len(wiretap):
        raise DomainError("main and wiretap link lists differ in length")
    powers = [1.0] * len(main) if powers is None else list(powers)
    return Scenario(
        tuple(SensorProfile(NakagamiLink(*ml), NakagamiLink(*wl), p)
              for ml, wl, p in zip(main, wiretap, powers)),
        noise_power,
    )
