"""Parameter sweeps, figure presets and CSV rows."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .analysis import (
    asymptotic_intercept_prob,
    diversity_order,
    empirical_diversity_slope,
    intercept_prob,
    log_intercept_prob_optimal,
)
from .channel import MerTemplate, scenario_from_mer
from .config import AnalysisConfig, ConfigError, config_from_dict
from .montecarlo import TrialConfig, estimate_intercept
from .scheduling import SchedulerKind

__all__ = [
    "CSV_COLUMNS",
    "SLOPE_COLUMNS",
    "SweepRow",
    "SlopeRow",
    "run_sweep",
    "run_slope",
    "figure_configs",
    "run_figure",
    "rows_to_csv",
    "FIGURES",
]

CSV_COLUMNS = ("lambda_linear", "lambda_db", "n_sensors", "scheme", "method",
               "p_int", "ci_lo", "ci_hi", "series")
SLOPE_COLUMNS = ("series", "n_sensors", "scheme", "lambda_lo", "lambda_hi",
                 "fitted_order", "theoretical_order", "abs_gap")

# 0 to 50 dB in 2 dB steps
_DEFAULT_DB = {"start": 0, "stop": 50, "step": 2}


def _homogeneous(m, k, counts, sweep, label):
    return {
        "sensors": {"m": m, "k": k, "alpha_s": 1, "alpha_e": 1, "power": 1},
        "sweep": {"sensor_counts": counts, **sweep},
        "label": label,
    }


FIGURES = {
    "fig2": [
        _homogeneous(1.5, 1.5, [2, 4], {"mer_db": _DEFAULT_DB, "methods": ["analytic"]}, "m=k=1.5"),
    ],
    "fig3": [
        _homogeneous(1, 1, [3], {"mer_db": _DEFAULT_DB, "methods": ["analytic"]}, "m=k=1"),
        _homogeneous(2, 2, [3], {"mer_db": _DEFAULT_DB, "methods": ["analytic"]}, "m=k=2"),
    ],
    "fig4": [
        _homogeneous(1.5, 1.5, list(range(1, 11)), {"mer": [3, 5], "methods": ["analytic"]}, "m=k=1.5"),
    ],
    "fig5": [
        _homogeneous(1.5, 1.5, [2, 4], {"mer_db": _DEFAULT_DB, "methods": ["analytic", "asymptotic"]},
                     "m=k=1.5"),
    ],
}


@dataclass(frozen=True)
class SweepRow:
    lambda_linear: float
    n_sensors: int
    scheme: str
    method: str
    p_int: float
    ci_lo: float | None = None
    ci_hi: float | None = None
    series: str = ""

    @property
    def lambda_db(self) -> float:
        return 10.0 * math.log10(self.lambda_linear)

    def as_record(self) -> list[str]:
        def fmt(v):
            return "" if v is None else repr(float(v))

        return [fmt(self.lambda_linear), fmt(self.lambda_db), str(self.n_sensors), self.scheme,
                self.method, fmt(self.p_int), fmt(self.ci_lo), fmt(self.ci_hi), self.series]


@dataclass(frozen=True)
class SlopeRow:
    series: str
    n_sensors: int
    scheme: str
    lambda_lo: float
    lambda_hi: float
    fitted_order: float
    theoretical_order: float

    @property
    def abs_gap(self) -> float:
        return abs(self.fitted_order - self.theoretical_order)

    def as_record(self) -> list[str]:
        return [self.series, str(self.n_sensors), self.scheme, repr(self.lambda_lo),
                repr(self.lambda_hi), repr(self.fitted_order), repr(self.theoretical_order),
                repr(self.abs_gap)]


def _evaluate(point):
    template, lam, scheme, method, mc, series = point
    ci_lo = ci_hi = None
    if method == "analytic":
        p = intercept_prob(template, lam, scheme)
    elif method == "asymptotic":
        # the high-MER law overshoots 1 at low MER; emitted rows stay probabilities
        p = min(asymptotic_intercept_prob(template, lam, scheme), 1.0)
    else:
        est = estimate_intercept(scenario_from_mer(template, lam), scheme, mc)
        p, ci_lo, ci_hi = est.p_hat, est.ci95_lo, est.ci95_hi
    if not 0.0 <= p <= 1.0:
        raise ArithmeticError(f"{method} probability {p!r} outside [0, 1] at lambda={lam}")
    return SweepRow(lam, template.n_sensors, scheme, method, p, ci_lo, ci_hi, series)


def run_sweep(config: AnalysisConfig, workers: int = 1) -> list[SweepRow]:
    """Evaluate every (N, scheme, method, lambda) point of ``config``.

    Rows come back in that nesting order whatever the worker count.
    Asymptotic values above 1 (low MER) are clipped to 1.
    """
    sweep = config.sweep
    mc = TrialConfig(sweep.mc_trials, sweep.mc_seed)
    points = [
        (template, lam, scheme, method, mc, config.label)
        for template in config.templates()
        for scheme in sweep.schemes
        for method in sweep.methods
        for lam in sweep.mer_grid()
    ]
    if workers <= 1:
        return [_evaluate(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate, points))


def _log_exact(template: MerTemplate, kind: SchedulerKind):
    if kind is SchedulerKind.OPTIMAL_SECRECY:
        return lambda lam: log_intercept_prob_optimal(scenario_from_mer(template, lam))
    return lambda lam: math.log(intercept_prob(template, lam, kind))


def run_slope(config: AnalysisConfig) -> list[SlopeRow]:
    """Fitted log-log slope of the exact curves between the grid extremes."""
    grid = config.sweep.mer_grid()
    lo, hi = min(grid), max(grid)
    if not hi >= 10.0 * lo:
        raise ConfigError(f"slope needs the MER range to span a factor of 10, got [{lo}, {hi}]",
                          key="sweep")
    rows = []
    for template in config.templates():
        for scheme in config.sweep.schemes:
            kind = SchedulerKind.parse(scheme)
            fitted = empirical_diversity_slope(_log_exact(template, kind), lo, hi, log_prob=True)
            rows.append(SlopeRow(config.label, template.n_sensors, scheme, lo, hi, fitted,
                                 diversity_order(template, kind)))
    return rows


def figure_configs(name: str) -> list[AnalysisConfig]:
    try:
        raws = FIGURES[name]
    except KeyError:
        raise ConfigError(f"unknown figure preset '{name}'; choose from {', '.join(FIGURES)}") from None
    return [config_from_dict(raw) for raw in raws]


def run_figure(name: str, workers: int = 1) -> list[SweepRow]:
    rows = []
    for config in figure_configs(name):
        rows.extend(run_sweep(config, workers))
    return rows


def rows_to_csv(rows, columns=CSV_COLUMNS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(row.as_record())
    return buf.getvalue()
