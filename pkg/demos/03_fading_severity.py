"""How the Nakagami shape factor changes the picture.

A larger shape factor means milder fading. Away from lambda = 1 that lowers
the intercept probability for both schemes. At lambda = 1 with m = k every
curve passes through the symmetric value 0.5 (0.5^N for optimal), no matter
how mild the fading is.
"""

from wsn_intercept import MerTemplate, SchedulerKind, intercept_prob

N = 3
print(f"{'dB':>4} {'rr m=1':>10} {'rr m=2':>10} {'opt m=1':>11} {'opt m=2':>11}")
for db in range(0, 31, 3):
    lam = 10 ** (db / 10)
    vals = [intercept_prob(MerTemplate.homogeneous(N, m, m), lam, kind)
            for kind in (SchedulerKind.ROUND_ROBIN, SchedulerKind.OPTIMAL_SECRECY) for m in (1, 2)]
    print(f"{db:>4} {vals[0]:>10.5f} {vals[1]:>10.5f} {vals[2]:>11.3e} {vals[3]:>11.3e}")
