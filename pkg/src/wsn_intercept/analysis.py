"""Exact and high-MER intercept probabilities and diversity orders.

The exact per-sensor probability Pr(Xs < Xe) for independent Gamma gains
reduces to a regularized incomplete beta function: with
A = m Xs / sigma_s^2 ~ Gamma(m, 1) and B = k Xe / sigma_e^2 ~ Gamma(k, 1),
A / (A + B) ~ Beta(m, k), and Xs < Xe is the event A / (A + B) < c with

    c = m sigma_e^2 / (m sigma_e^2 + k sigma_s^2).

The quadrature form (incomplete gamma against the wiretap density) is kept
alongside as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .channel import MerTemplate, Scenario, SensorProfile, SensorTemplate, gain_pdf, scenario_from_mer
from .errors import DomainError
from .scheduling import SchedulerKind
from .special import (
    QuadratureSpec,
    integrate_semi_infinite,
    log_gamma,
    log_reg_inc_beta,
    reg_inc_beta,
    reg_lower_inc_gamma,
)

__all__ = [
    "AsymptoticCoefficients",
    "beta_argument",
    "intercept_prob_single",
    "log_intercept_prob_single",
    "intercept_prob_single_quadrature",
    "intercept_prob_round_robin",
    "intercept_prob_optimal",
    "log_intercept_prob_optimal",
    "intercept_prob",
    "zeta_coefficient",
    "zeta_coefficient_quadrature",
    "asymptotic_coefficient",
    "asymptotic_coefficients",
    "asymptotic_intercept_single",
    "asymptotic_round_robin",
    "asymptotic_optimal",
    "log_asymptotic_optimal",
    "asymptotic_intercept_prob",
    "diversity_order",
    "empirical_diversity_slope",
]

# below this a plain product of probabilities risks underflow
_UNDERFLOW_GUARD = 1e-300


def beta_argument(profile: SensorProfile) -> float:
    """Argument c of I_c(m, k) for the sensor's intercept probability."""
    m, k = profile.main.shape, profile.wiretap.shape
    return 1.0 / (1.0 + (k * profile.main.mean_gain) / (m * profile.wiretap.mean_gain))


def intercept_prob_single(profile: SensorProfile) -> float:
    """Pr(Xs < Xe) for one sensor; transmit and noise powers play no part."""
    return reg_inc_beta(beta_argument(profile), profile.main.shape, profile.wiretap.shape)


def log_intercept_prob_single(profile: SensorProfile) -> float:
    return log_reg_inc_beta(beta_argument(profile), profile.main.shape, profile.wiretap.shape)


def intercept_prob_single_quadrature(profile: SensorProfile,
                                     spec: QuadratureSpec | None = None) -> float:
    """Same probability as :func:`intercept_prob_single`, by direct integration.

    Integrates P(m, m x / sigma_s^2) f_Xe(x) over the wiretap gain x.
    """
    m = profile.main.shape
    rate = m / profile.main.mean_gain
    wiretap = profile.wiretap

    def integrand(x):
        density = gain_pdf(wiretap, x)
        if density == 0.0:
            return 0.0
        return reg_lower_inc_gamma(m, rate * x) * density

    return integrate_semi_infinite(integrand, spec, scale=wiretap.mean_gain)


def intercept_prob_round_robin(scenario: Scenario) -> float:
    """Average of the per-sensor probabilities (every sensor gets an equal share)."""
    probs = [intercept_prob_single(s) for s in scenario.sensors]
    if all(p == probs[0] for p in probs):
        return probs[0]
    return math.fsum(probs) / len(probs)


def log_intercept_prob_optimal(scenario: Scenario) -> float:
    return math.fsum(log_intercept_prob_single(s) for s in scenario.sensors)


def intercept_prob_optimal(scenario: Scenario) -> float:
    """Product of the per-sensor probabilities: an intercept needs every
    sensor's main gain to fall below its wiretap gain."""
    probs = [intercept_prob_single(s) for s in scenario.sensors]
    product = math.prod(probs)
    if product >= _UNDERFLOW_GUARD or min(probs) == 0.0:
        return product
    return math.exp(log_intercept_prob_optimal(scenario))


def intercept_prob(template: MerTemplate, lambda_me: float, kind) -> float:
    """Exact intercept probability of ``kind`` at MER ``lambda_me``."""
    scenario = scenario_from_mer(template, lambda_me)
    if SchedulerKind.parse(kind) is SchedulerKind.ROUND_ROBIN:
        return intercept_prob_round_robin(scenario)
    return intercept_prob_optimal(scenario)


def _log_zeta(m, k, alpha_ie):
    return log_gamma(m + k) - log_gamma(k) + m * math.log(alpha_ie / k)


def zeta_coefficient(m: float, k: float, alpha_ie: float) -> float:
    """Gamma moment Gamma(m + k) / Gamma(k) * (alpha_ie / k)^m."""
    if not (m > 0 and k > 0 and alpha_ie > 0):
        raise DomainError("zeta_coefficient needs positive m, k, alpha_ie")
    return math.exp(_log_zeta(m, k, alpha_ie))


def zeta_coefficient_quadrature(m: float, k: float, alpha_ie: float,
                                spec: QuadratureSpec | None = None) -> float:
    """The same coefficient from its defining integral over y."""
    log_front = k * math.log(k / alpha_ie) - log_gamma(k)
    rate = k / alpha_ie

    def integrand(y):
        return math.exp(log_front + (m + k - 1) * math.log(y) - rate * y)

    return integrate_semi_infinite(integrand, spec, scale=alpha_ie * (m + k) / k)


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Leading-order law p_i ~ coefficient_i * lambda^-exponent_i per sensor."""

    coefficients: tuple[float, ...]
    exponents: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.exponents):
            raise DomainError("coefficient and exponent lists differ in length")
        if any(not c > 0 for c in self.coefficients):
            raise DomainError("asymptotic coefficients must be positive")
        if any(not e >= 0.5 for e in self.exponents):
            raise DomainError("asymptotic exponents must be >= 0.5")


def _log_asymptotic_coefficient(t: SensorTemplate):
    m = t.m
    return (_log_zeta(m, t.k, t.alpha_e) - math.log(m) - log_gamma(m)
            + m * math.log(m / t.alpha_s))


def asymptotic_coefficient(t: SensorTemplate) -> float:
    """zeta(m, k, alpha_e) / (m Gamma(m)) * (m / alpha_s)^m."""
    return math.exp(_log_asymptotic_coefficient(t))


def asymptotic_coefficients(template: MerTemplate) -> AsymptoticCoefficients:
    return AsymptoticCoefficients(
        tuple(asymptotic_coefficient(t) for t in template.sensors),
        tuple(t.m for t in template.sensors),
    )


def _check_lambda(lambda_me):
    if not lambda_me > 0:
        raise DomainError(f"lambda_me must be positive, got {lambda_me}")


def asymptotic_intercept_single(t: SensorTemplate, lambda_me: float) -> float:
    _check_lambda(lambda_me)
    return math.exp(_log_asymptotic_coefficient(t) - t.m * math.log(lambda_me))


def asymptotic_round_robin(template: MerTemplate, lambda_me: float) -> float:
    """Mean of the per-sensor asymptotes (no factoring of the dominant term)."""
    terms = [asymptotic_intercept_single(t, lambda_me) for t in template.sensors]
    if all(v == terms[0] for v in terms):
        return terms[0]
    return math.fsum(terms) / len(terms)


def log_asymptotic_optimal(template: MerTemplate, lambda_me: float) -> float:
    _check_lambda(lambda_me)
    log_coef = math.fsum(_log_asymptotic_coefficient(t) for t in template.sensors)
    order = math.fsum(t.m for t in template.sensors)
    return log_coef - order * math.log(lambda_me)


def asymptotic_optimal(template: MerTemplate, lambda_me: float) -> float:
    """Product of coefficients times lambda^-(sum of main-link shapes)."""
    return math.exp(log_asymptotic_optimal(template, lambda_me))


def asymptotic_intercept_prob(template: MerTemplate, lambda_me: float, kind) -> float:
    if SchedulerKind.parse(kind) is SchedulerKind.ROUND_ROBIN:
        return asymptotic_round_robin(template, lambda_me)
    return asymptotic_optimal(template, lambda_me)


def _main_shapes(model):
    sensors = model.sensors
    if isinstance(model, Scenario):
        return [s.main.shape for s in sensors]
    return [t.m for t in sensors]


def diversity_order(model, kind) -> float:
    """Theoretical diversity order: min main shape for round robin, their
    sum for optimal scheduling. ``model`` is a Scenario or MerTemplate."""
    shapes = _main_shapes(model)
    if SchedulerKind.parse(kind) is SchedulerKind.ROUND_ROBIN:
        return min(shapes)
    return math.fsum(shapes)


def empirical_diversity_slope(prob_fn: Callable[[float], float], lambda_lo: float,
                              lambda_hi: float, *, log_prob: bool = False) -> float:
    """Negative log-log slope of ``prob_fn`` between two MER values.

    With ``log_prob=True`` the function is taken to return ln p already,
    which avoids underflow for very steep curves.
    """
    if not 0 < lambda_lo < lambda_hi:
        raise DomainError(f"need 0 < lambda_lo < lambda_hi, got {lambda_lo}, {lambda_hi}")
    if log_prob:
        lo, hi = prob_fn(lambda_lo), prob_fn(lambda_hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise DomainError("log-probabilities must be finite")
    else:
        p_lo, p_hi = prob_fn(lambda_lo), prob_fn(lambda_hi)
        if not (p_lo > 0 and p_hi > 0):
            raise DomainError(f"probabilities must be positive, got {p_lo}, {p_hi}")
        lo, hi = math.log(p_lo), math.log(p_hi)
    return -(hi - lo) / (math.log(lambda_hi) - math.log(lambda_lo))
