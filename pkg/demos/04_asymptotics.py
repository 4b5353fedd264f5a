"""High-MER behavior and diversity order.

At large lambda each per-sensor probability decays like lambda^-m. Round robin
inherits the slowest decay (min m), the optimal scheduler the product of all
of them (sum of m). The asymptotic law tightens as lambda grows, and a log-log
fit of the exact curve recovers the diversity order.
"""

from wsn_intercept import (
    MerTemplate,
    SchedulerKind,
    SensorTemplate,
    asymptotic_intercept_prob,
    diversity_order,
    empirical_diversity_slope,
    intercept_prob,
)

RR, OPT = SchedulerKind.ROUND_ROBIN, SchedulerKind.OPTIMAL_SECRECY

t = MerTemplate.homogeneous(4, 1.5, 1.5)
for kind in (RR, OPT):
    for lam in (1e1, 1e2, 1e3, 1e4):
        exact = intercept_prob(t, lam, kind)
        asym = asymptotic_intercept_prob(t, lam, kind)
        print(f"{kind.value:<8} lambda={lam:<8g} exact={exact:.4e} asymptotic={asym:.4e} "
              f"gap={abs(asym / exact - 1):.2%}")

het = MerTemplate(tuple(SensorTemplate(m, m) for m in (1.0, 1.5, 2.5)))
for kind in (RR, OPT):
    slope = empirical_diversity_slope(lambda lam: intercept_prob(het, lam, kind), 1e4, 1e5)
    print(f"{kind.value:<8} fitted slope {slope:.4f}  theory {diversity_order(het, kind)}")
