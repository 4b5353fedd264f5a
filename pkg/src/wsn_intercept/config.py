"""JSON sweep configuration: parsing, validation and serialization.

Two ways to describe the sensors::

    "sensors": [{"m": 1.5, "k": 1.5, "alpha_s": 1, "alpha_e": 1, "power": 1}, ...]
    "sensors": {"n": 3, "m": 1.5, "k": 1.5}

The second (homogeneous) form replicates one sensor; ``n`` may be left out
when ``sweep.sensor_counts`` lists the sizes to evaluate. Structural
problems raise :class:`ConfigError`; physically invalid values (a shape
factor below 0.5, a negative power) surface as ``DomainError`` from the
model types.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

from .channel import MerTemplate, SensorTemplate

__all__ = ["ConfigError", "SweepSpec", "AnalysisConfig", "parse_config", "load_config",
           "config_from_dict", "db_range"]

SCHEMES = ("round", "optimal")
METHODS = ("analytic", "asymptotic", "mc")

_SENSOR_KEYS = {"m", "k", "alpha_s", "alpha_e", "power"}
_TOP_KEYS = {"sensors", "noise_power", "reference_wiretap_gain", "sweep", "label"}
_SWEEP_KEYS = {"mer", "mer_db", "sensor_counts", "schemes", "methods", "mc"}


class ConfigError(ValueError):
    """Malformed configuration; ``line`` is 1-based when it could be located."""

    def __init__(self, message, line=None, key=None):
        super().__init__(message)
        self.line = line
        self.key = key


def _fail(message, key=None):
    raise ConfigError(message, key=key)


def _number(value, key):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(f"'{key}' must be a number, got {json.dumps(value)}", key)
    if not math.isfinite(value):
        _fail(f"'{key}' must be finite", key)
    return float(value)


def _integer(value, key):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"'{key}' must be an integer, got {json.dumps(value)}", key)
    return value


def _object(value, key, allowed):
    if not isinstance(value, dict):
        _fail(f"'{key}' must be an object", key)
    unknown = sorted(set(value) - allowed)
    if unknown:
        _fail(f"unknown key '{unknown[0]}' in '{key}'", unknown[0])
    return value


def _nonempty_list(value, key):
    if not isinstance(value, list) or not value:
        _fail(f"'{key}' must be a non-empty list", key)
    return value


def db_range(start: float, stop: float, step: float) -> list[float]:
    """Inclusive dB grid start, start + step, ..., up to stop."""
    if not step > 0:
        raise ConfigError("dB range needs step > 0", key="step")
    if stop < start:
        raise ConfigError("dB range needs stop >= start", key="stop")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


@dataclass(frozen=True)
class SweepSpec:
    mer: tuple[float, ...] | None = None
    mer_db: tuple[float, float, float] | None = None
    sensor_counts: tuple[int, ...] | None = None
    schemes: tuple[str, ...] = SCHEMES
    methods: tuple[str, ...] = ("analytic",)
    mc_trials: int = 100_000
    mc_seed: int = 0

    def mer_grid(self) -> list[float]:
        """Linear MER values in sweep order."""
        if self.mer is not None:
            return list(self.mer)
        return [10.0 ** (db / 10.0) for db in db_range(*self.mer_db)]

    def to_dict(self) -> dict:
        out: dict = {}
        if self.mer is not None:
            out["mer"] = list(self.mer)
        else:
            start, stop, step = self.mer_db
            out["mer_db"] = {"start": start, "stop": stop, "step": step}
        if self.sensor_counts is not None:
            out["sensor_counts"] = list(self.sensor_counts)
        out["schemes"] = list(self.schemes)
        out["methods"] = list(self.methods)
        out["mc"] = {"trials": self.mc_trials, "seed": self.mc_seed}
        return out


@dataclass(frozen=True)
class AnalysisConfig:
    sensors: tuple[SensorTemplate, ...]
    homogeneous: bool
    sweep: SweepSpec
    noise_power: float = 1.0
    reference_wiretap_gain: float = 1.0
    label: str = ""

    def templates(self) -> list[MerTemplate]:
        """One template per sensor count to evaluate."""
        kwargs = dict(reference_wiretap_gain=self.reference_wiretap_gain,
                      noise_power=self.noise_power)
        if not self.homogeneous:
            return [MerTemplate(self.sensors, **kwargs)]
        return [MerTemplate(self.sensors * n, **kwargs) for n in self.sweep.sensor_counts]

    def to_dict(self) -> dict:
        def sensor(t):
            return {"m": t.m, "k": t.k, "alpha_s": t.alpha_s, "alpha_e": t.alpha_e, "power": t.power}

        out = {
            "sensors": sensor(self.sensors[0]) if self.homogeneous else [sensor(t) for t in self.sensors],
            "noise_power": self.noise_power,
            "reference_wiretap_gain": self.reference_wiretap_gain,
            "sweep": self.sweep.to_dict(),
        }
        if self.label:
            out["label"] = self.label
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _parse_sensor(raw, key, extra=()):
    raw = _object(raw, key, _SENSOR_KEYS | set(extra))
    for required in ("m", "k"):
        if required not in raw:
            _fail(f"'{key}' is missing '{required}'", key)
    values = {name: _number(raw[name], name) for name in _SENSOR_KEYS if name in raw}
    return SensorTemplate(**values)


def _parse_choices(raw, key, allowed):
    items = _nonempty_list(raw, key)
    for item in items:
        if item not in allowed:
            _fail(f"'{key}' entry {json.dumps(item)} is not one of {', '.join(allowed)}", key)
    if len(set(items)) != len(items):
        _fail(f"'{key}' has duplicate entries", key)
    return tuple(items)


def _parse_sweep(raw, default_count):
    raw = _object(raw, "sweep", _SWEEP_KEYS)
    mer = mer_db = None
    if ("mer" in raw) == ("mer_db" in raw):
        _fail("'sweep' needs exactly one of 'mer' or 'mer_db'", "sweep")
    if "mer" in raw:
        mer = tuple(_number(v, "mer") for v in _nonempty_list(raw["mer"], "mer"))
        if any(not v > 0 for v in mer):
            _fail("'mer' values must be positive (linear scale)", "mer")
    else:
        rng = _object(raw["mer_db"], "mer_db", {"start", "stop", "step"})
        for part in ("start", "stop", "step"):
            if part not in rng:
                _fail(f"'mer_db' is missing '{part}'", "mer_db")
        mer_db = tuple(_number(rng[p], p) for p in ("start", "stop", "step"))
        db_range(*mer_db)

    counts = None
    if "sensor_counts" in raw:
        counts = tuple(_integer(v, "sensor_counts") for v in _nonempty_list(raw["sensor_counts"], "sensor_counts"))
        if any(c < 1 for c in counts):
            _fail("'sensor_counts' entries must be >= 1", "sensor_counts")
    elif default_count is not None:
        counts = (default_count,)

    kwargs = {}
    if "schemes" in raw:
        kwargs["schemes"] = _parse_choices(raw["schemes"], "schemes", SCHEMES)
    if "methods" in raw:
        kwargs["methods"] = _parse_choices(raw["methods"], "methods", METHODS)
    if "mc" in raw:
        mc = _object(raw["mc"], "mc", {"trials", "seed"})
        if "trials" in mc:
            kwargs["mc_trials"] = _integer(mc["trials"], "trials")
            if kwargs["mc_trials"] < 1:
                _fail("'trials' must be >= 1", "trials")
        if "seed" in mc:
            kwargs["mc_seed"] = _integer(mc["seed"], "seed")
            if not 0 <= kwargs["mc_seed"] < 2**64:
                _fail("'seed' must be an unsigned 64-bit integer", "seed")
    return SweepSpec(mer, mer_db, counts, **kwargs)


def _config_from_dict(raw) -> AnalysisConfig:
    raw = _object(raw, "config", _TOP_KEYS)
    for required in ("sensors", "sweep"):
        if required not in raw:
            _fail(f"config is missing '{required}'", required)

    sensors_raw = raw["sensors"]
    default_count = None
    if isinstance(sensors_raw, dict):
        homogeneous = True
        if "n" in sensors_raw:
            default_count = _integer(sensors_raw["n"], "n")
            if default_count < 1:
                _fail("'n' must be >= 1", "n")
        sensors = (_parse_sensor(sensors_raw, "sensors", extra=("n",)),)
    elif isinstance(sensors_raw, list) and sensors_raw:
        homogeneous = False
        sensors = tuple(_parse_sensor(s, "sensors") for s in sensors_raw)
    else:
        _fail("'sensors' must be a non-empty list or a homogeneous {n, m, k} object", "sensors")

    sweep = _parse_sweep(raw["sweep"], default_count)
    if homogeneous and sweep.sensor_counts is None:
        _fail("homogeneous sensors need 'n' or 'sweep.sensor_counts'", "sensors")
    if not homogeneous and sweep.sensor_counts is not None:
        if sweep.sensor_counts != (len(sensors),):
            _fail("'sensor_counts' cannot be combined with an explicit sensor list", "sensor_counts")
        sweep = SweepSpec(sweep.mer, sweep.mer_db, None, sweep.schemes, sweep.methods,
                          sweep.mc_trials, sweep.mc_seed)

    label = raw.get("label", "")
    if not isinstance(label, str):
        _fail("'label' must be a string", "label")
    kwargs = {name: _number(raw[name], name)
              for name in ("noise_power", "reference_wiretap_gain") if name in raw}
    config = AnalysisConfig(sensors, homogeneous, sweep, label=label, **kwargs)
    # construct the templates once so invalid physical values fail here
    config.templates()
    return config


def _locate(text, key):
    if key is None:
        return None
    match = re.search(r'"%s"\s*:' % re.escape(key), text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def parse_config(text: str) -> AnalysisConfig:
    """Parse JSON text into an :class:`AnalysisConfig`."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc.msg} (column {exc.colno})", line=exc.lineno) from None
    try:
        return _config_from_dict(raw)
    except ConfigError as exc:
        if exc.line is None:
            exc.line = _locate(text, exc.key)
        raise


def load_config(path) -> AnalysisConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}") from None
    return parse_config(text)


def config_from_dict(raw: dict) -> AnalysisConfig:
    return _config_from_dict(raw)
