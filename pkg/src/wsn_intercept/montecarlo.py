"""Seeded Monte Carlo estimation of intercept probability.

Trials are split into fixed-size chunks. Chunk ``j`` draws from its own
Philox stream keyed by ``SeedSequence(seed, spawn_key=(j,))``, so the
result depends only on (scenario, scheduler, n_trials, seed, chunk_size)
and never on how many workers ran the chunks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import ChannelDraw, Scenario
from .errors import DomainError
from .scheduling import (
    SchedulerKind,
    intercept_event_batch,
    optimal_select_batch,
    round_robin_select_batch,
)

__all__ = [
    "TrialConfig",
    "InterceptEstimate",
    "TrialTally",
    "chunk_rng",
    "sample_gamma",
    "draw_channels",
    "draw_channel_batch",
    "run_trials",
    "estimate_intercept",
]

_Z95 = 1.959963984540054


@dataclass(frozen=True)
class TrialConfig:
    n_trials: int
    seed: int = 0
    chunk_size: int = 1 << 16

    def __post_init__(self):
        for name in ("n_trials", "chunk_size"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if isinstance(self.seed, bool) or int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def n_chunks(self) -> int:
        return -(-self.n_trials // self.chunk_size)


@dataclass(frozen=True)
class InterceptEstimate:
    p_hat: float
    std_error: float
    ci95_lo: float
    ci95_hi: float
    n_trials: int
    n_intercepts: int

    @classmethod
    def from_counts(cls, n_intercepts: int, n_trials: int) -> "InterceptEstimate":
        """Normal-approximation estimate, CI clipped to [0, 1]."""
        p = n_intercepts / n_trials
        se = math.sqrt(p * (1.0 - p) / n_trials)
        half = _Z95 * se
        return cls(p, se, max(0.0, p - half), min(1.0, p + half), n_trials, n_intercepts)

    def within(self, value: float, n_se: float = 3.0) -> bool:
        return abs(self.p_hat - value) <= n_se * self.std_error


@dataclass(frozen=True)
class TrialTally:
    n_trials: int
    n_intercepts: int
    selections: tuple[int, ...]


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    """Independent counter-based stream for one chunk."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def _standard_gamma(shape, size, rng):
    # Marsaglia-Tsang squeeze/accept, vectorized with a retry loop over rejects
    if shape < 1.0:
        boost = rng.random(size)
        # 1 - U lies in (0, 1], keeping the power finite
        return _standard_gamma(shape + 1.0, size, rng) * (1.0 - boost) ** (1.0 / shape)
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    out = np.empty(size)
    pending = np.arange(size)
    while pending.size:
        n = pending.size
        x = rng.standard_normal(n)
        u = rng.random(n)
        v = 1.0 + c * x
        valid = v > 0.0
        v = np.where(valid, v, 1.0)
        v3 = v * v * v
        x2 = x * x
        accept = valid & (u < 1.0 - 0.0331 * x2 * x2)
        slow = valid & ~accept
        if slow.any():
            with np.errstate(divide="ignore"):
                accept[slow] = np.log(u[slow]) < 0.5 * x2[slow] + d * (1.0 - v3[slow] + np.log(v3[slow]))
        out[pending[accept]] = d * v3[accept]
        pending = pending[~accept]
    return out


def sample_gamma(shape: float, scale: float, rng: np.random.Generator, size=None):
    """Gamma(shape, scale) variates; a float when ``size`` is None."""
    if not (shape > 0 and scale > 0):
        raise DomainError(f"gamma sampling needs positive shape and scale, got {shape}, {scale}")
    n = 1 if size is None else int(np.prod(size))
    values = _standard_gamma(float(shape), n, rng) * scale
    if size is None:
        return float(values[0])
    return values.reshape(size)


def draw_channel_batch(scenario: Scenario, n: int, rng: np.random.Generator):
    """``n`` independent realizations as (n, N) main and wiretap arrays.

    Links are sampled in the fixed order main_0, wiretap_0, main_1, ...
    Powers are never consulted, so rescaling them leaves the draws alone.
    """
    n_sensors = scenario.n_sensors
    main = np.empty((n, n_sensors))
    wiretap = np.empty((n, n_sensors))
    for i, sensor in enumerate(scenario.sensors):
        main[:, i] = sample_gamma(sensor.main.shape, sensor.main.scale, rng, n)
        wiretap[:, i] = sample_gamma(sensor.wiretap.shape, sensor.wiretap.scale, rng, n)
    return main, wiretap


def draw_channels(scenario: Scenario, rng: np.random.Generator) -> ChannelDraw:
    main, wiretap = draw_channel_batch(scenario, 1, rng)
    return ChannelDraw(tuple(main[0]), tuple(wiretap[0]))


def _run_chunk(scenario, kind, config, chunk):
    start = chunk * config.chunk_size
    n = min(config.chunk_size, config.n_trials - start)
    rng = chunk_rng(config.seed, chunk)
    main, wiretap = draw_channel_batch(scenario, n, rng)
    if kind is SchedulerKind.ROUND_ROBIN:
        selected = round_robin_select_batch(np.arange(start, start + n), scenario.n_sensors)
    else:
        powers = np.array([s.tx_power for s in scenario.sensors])
        selected = optimal_select_batch(main, wiretap, powers, scenario.noise_power)
    hits = intercept_event_batch(main, wiretap, selected)
    return int(hits.sum()), np.bincount(selected, minlength=scenario.n_sensors)


def run_trials(scenario: Scenario, kind, config: TrialConfig, workers: int = 1) -> TrialTally:
    """Raw intercept and per-sensor selection counts."""
    kind = SchedulerKind.parse(kind)
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")
    chunks = range(config.n_chunks)
    if workers == 1 or config.n_chunks == 1:
        results = [_run_chunk(scenario, kind, config, j) for j in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda j: _run_chunk(scenario, kind, config, j), chunks))
    hits = sum(r[0] for r in results)
    selections = np.sum([r[1] for r in results], axis=0)
    return TrialTally(config.n_trials, hits, tuple(int(s) for s in selections))


def estimate_intercept(scenario: Scenario, kind, config: TrialConfig,
                       workers: int = 1) -> InterceptEstimate:
    """Monte Carlo intercept probability with a normal-approximation 95% CI.

    Round robin serves sensor ``t mod N`` on trial ``t``; optimal
    scheduling picks the best secrecy ratio on every trial.
    """
    tally = run_trials(scenario, kind, config, workers)
    return InterceptEstimate.from_counts(tally.n_intercepts, tally.n_trials)
