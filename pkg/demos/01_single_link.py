"""One sensor, one eavesdropper: three routes to the same number.

The intercept probability of a single Nakagami link is Pr(Xs <= Xe) for two
gamma-distributed power gains. It has a closed form as a regularized
incomplete beta function. Below we compare it with direct quadrature of the
defining integral and with a seeded Monte Carlo run.
"""

from wsn_intercept.analysis import intercept_prob_single, intercept_prob_single_quadrature
from wsn_intercept.channel import make_scenario
from wsn_intercept.montecarlo import TrialConfig, estimate_intercept
from wsn_intercept.scheduling import SchedulerKind

# main link (shape, mean gain) and wiretap link (shape, mean gain)
for m, k, lam in [(1.0, 1.0, 3.0), (1.5, 1.5, 3.0), (0.5, 3.0, 10.0), (3.0, 0.5, 10.0)]:
    sc = make_scenario([(m, lam)], [(k, 1.0)])
    profile = sc.sensors[0]
    exact = intercept_prob_single(profile)
    quad = intercept_prob_single_quadrature(profile)
    est = estimate_intercept(sc, SchedulerKind.ROUND_ROBIN, TrialConfig(10**6, seed=1))
    print(f"m={m:<4} k={k:<4} lambda={lam:<5} closed={exact:.12f} quad={quad:.12f} "
          f"mc={est.p_hat:.5f} +/- {1.96 * est.std_error:.5f}")

# Rayleigh fading (m = k = 1) collapses to 1 / (1 + lambda)
for lam in (0.5, 1.0, 3.0, 10.0):
    p = intercept_prob_single(make_scenario([(1.0, lam)], [(1.0, 1.0)]).sensors[0])
    print(f"Rayleigh lambda={lam:<5} p={p:.15f}  1/(1+lambda)={1 / (1 + lam):.15f}")

# Transmit power and noise power do not enter: the event depends only on
# which gain is larger
base = make_scenario([(2.0, 4.0)], [(1.0, 1.0)], powers=[1.0])
loud = base.scaled_powers(tx_factor=100.0, noise_factor=0.01)
print("power-invariant:", intercept_prob_single(base.sensors[0]) == intercept_prob_single(loud.sensors[0]))
