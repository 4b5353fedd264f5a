"""Round robin against secrecy-optimal scheduling as the network grows.

Round robin picks sensors in a fixed cycle, so with identical sensors its
intercept probability does not depend on how many there are. The optimal
scheduler picks the sensor with the largest instantaneous secrecy capacity
and is intercepted only when every sensor is, so its probability is a
product and falls quickly with N.
"""

from wsn_intercept import MerTemplate, SchedulerKind, SensorTemplate, intercept_prob

RR, OPT = SchedulerKind.ROUND_ROBIN, SchedulerKind.OPTIMAL_SECRECY

print(f"{'N':>3} {'rr @ 3':>10} {'opt @ 3':>12} {'rr @ 5':>10} {'opt @ 5':>12}")
for n in range(1, 11):
    t = MerTemplate.homogeneous(n, 1.5, 1.5)
    print(f"{n:>3} {intercept_prob(t, 3, RR):>10.5f} {intercept_prob(t, 3, OPT):>12.3e} "
          f"{intercept_prob(t, 5, RR):>10.5f} {intercept_prob(t, 5, OPT):>12.3e}")

# Heterogeneous sensors: average versus product of the per-sensor values
het = MerTemplate((SensorTemplate(1, 1), SensorTemplate(1.5, 2), SensorTemplate(2.5, 0.5)))
for lam in (1, 10, 100):
    print(f"heterogeneous lambda={lam:<4} rr={intercept_prob(het, lam, RR):.5f} "
          f"opt={intercept_prob(het, lam, OPT):.3e}")
