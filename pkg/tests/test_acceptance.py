"""Acceptance gate: one PASS/FAIL line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import itertools
import json
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import check_fig2_schema  # noqa: E402
from wsn_intercept.analysis import (  # noqa: E402
    asymptotic_intercept_prob,
    diversity_order,
    empirical_diversity_slope,
    intercept_prob,
    intercept_prob_optimal,
    intercept_prob_round_robin,
    intercept_prob_single,
    intercept_prob_single_quadrature,
    log_intercept_prob_optimal,
)
from wsn_intercept.channel import MerTemplate, SensorTemplate, make_scenario, scenario_from_mer  # noqa: E402
from wsn_intercept.cli import main  # noqa: E402
from wsn_intercept.montecarlo import TrialConfig, estimate_intercept, run_trials  # noqa: E402
from wsn_intercept.scheduling import SchedulerKind  # noqa: E402
from wsn_intercept.sweep import run_figure  # noqa: E402

RR, OPT = SchedulerKind.ROUND_ROBIN, SchedulerKind.OPTIMAL_SECRECY
SHAPES = (0.5, 1.0, 1.5, 2.0, 3.0)
MC_SEED = 20240601

RESULTS = []


def report(number, label, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  [{number:>2}] {label:<46} {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def single(m, k, lam):
    return make_scenario([(m, lam)], [(k, 1.0)])


def check_fig2_qualitative(rows):
    """Round robin flat in N, optimal below round robin everywhere."""
    p = {(r.n_sensors, r.scheme, r.lambda_linear): r.p_int for r in rows}
    lams = sorted({r.lambda_linear for r in rows})
    flat = all(p[(2, "round", x)] == p[(4, "round", x)] for x in lams)
    below = all(p[(n, "optimal", x)] < p[(n, "round", x)] for n in (2, 4) for x in lams)
    return flat, below


def test_c01_triangulation():
    worst_quad, worst_z, misses = 0.0, 0.0, []
    for i, ((m, k), lam) in enumerate(itertools.product(itertools.product(SHAPES, SHAPES), (1, 3, 10, 100))):
        sc = single(m, k, lam)
        exact = intercept_prob_single(sc.sensors[0])
        quad = intercept_prob_single_quadrature(sc.sensors[0])
        worst_quad = max(worst_quad, abs(quad - exact) / exact)
        est = estimate_intercept(sc, RR, TrialConfig(10**6, seed=MC_SEED + i))
        z = abs(est.p_hat - exact) / est.std_error
        worst_z = max(worst_z, z)
        if z > 3:
            misses.append((m, k, lam, round(z, 2)))
    ok = worst_quad <= 1e-8 and not misses
    report(1, "closed form vs quadrature vs 1e6-trial MC", ok,
           f"max rel(quad)={worst_quad:.1e} max |z|={worst_z:.2f} misses={misses}")


def test_c02_symmetry():
    analytic = all(intercept_prob_round_robin(scenario_from_mer(MerTemplate.homogeneous(n, m, m), 1.0)) == 0.5
                   for n in (1, 2, 4) for m in SHAPES)
    optimal = all(intercept_prob_optimal(scenario_from_mer(MerTemplate.homogeneous(n, 1.5, 1.5), 1.0)) == 0.5 ** n
                  for n in (1, 2, 4))
    est = estimate_intercept(single(1.5, 1.5, 1.0), RR, TrialConfig(10**6, seed=MC_SEED))
    z = abs(est.p_hat - 0.5) / est.std_error
    report(2, "symmetric anchors 0.5 and 0.5^N", analytic and optimal and z <= 3,
           f"exact={analytic and optimal} mc={est.p_hat:.5f} |z|={z:.2f}")


def test_c03_rayleigh():
    worst = max(abs(intercept_prob_single(single(1, 1, lam).sensors[0]) * (1 + lam) - 1)
                for lam in (0.5, 1, 3, 10))
    report(3, "Rayleigh closed form 1/(1+lambda)", worst <= 1e-12, f"max rel={worst:.1e}")


def test_c04_fig2_fig4():
    flat, below = check_fig2_qualitative(run_figure("fig2"))
    template = lambda n: MerTemplate.homogeneous(n, 1.5, 1.5)  # noqa: E731
    decreasing = all(intercept_prob(template(n + 1), lam, OPT) < intercept_prob(template(n), lam, OPT)
                     for lam in (3, 5) for n in range(1, 10))
    grid = [10 ** (db / 10) for db in range(0, 51, 2)]
    below_all = all(intercept_prob(template(n), lam, OPT) < intercept_prob(template(n), lam, RR)
                    for n in range(2, 11) for lam in grid)
    report(4, "round robin flat in N, optimal improves", flat and below and decreasing and below_all,
           f"rr_flat={flat} opt_decreasing={decreasing} opt<rr={below and below_all}")


def test_c05_fig3():
    rows = run_figure("fig3")
    p = {(r.series, r.scheme, r.lambda_linear): r.p_int for r in rows}
    lams = sorted({r.lambda_linear for r in rows})
    # at lambda = 1 both curves sit on the symmetric anchor 0.5 (and 0.5^3), whatever m is
    ties = [(s, x) for s in ("round", "optimal") for x in lams if x >= 1 and p[("m=k=2", s, x)] >= p[("m=k=1", s, x)]]
    report(5, "higher shape factor lowers intercept", not ties,
           f"points={len(lams)} not strictly lower at {ties}")


def test_c06_tightness():
    gaps, monotone = {}, True
    for n, kind in itertools.product((2, 3, 4), (RR, OPT)):
        t = MerTemplate.homogeneous(n, 1.5, 1.5)
        seq = [abs(asymptotic_intercept_prob(t, lam, kind) / intercept_prob(t, lam, kind) - 1)
               for lam in (1e2, 1e3, 1e4)]
        monotone &= seq[0] > seq[1] > seq[2]
        gaps[(n, kind.value)] = seq[2]
    worst = max(gaps.values())
    report(6, "asymptote within 2% at 1e4, gap shrinking", worst <= 0.02 and monotone,
           f"max gap@1e4={worst:.2e} monotone={monotone}")


def test_c07_diversity():
    cases = {
        "iid": MerTemplate.homogeneous(3, 1.5, 1.5),
        "het": MerTemplate(tuple(SensorTemplate(m, m) for m in (1.0, 1.5, 2.5))),
    }
    details, ok = [], True
    for name, t in cases.items():
        rr = empirical_diversity_slope(lambda lam: intercept_prob(t, lam, RR), 1e4, 1e5)
        opt = empirical_diversity_slope(lambda lam: log_intercept_prob_optimal(scenario_from_mer(t, lam)),
                                        1e4, 1e5, log_prob=True)
        ok &= abs(rr - diversity_order(t, RR)) <= 0.02 and abs(opt - diversity_order(t, OPT)) <= 0.05
        details.append(f"{name}: {rr:.4f}/{opt:.4f}")
    report(7, "fitted slopes match min m and sum m", ok, " ".join(details))


def test_c08_power_independence():
    sc = make_scenario([(1.5, 5.0), (1.0, 2.0), (2.5, 8.0)], [(1.5, 1.0), (0.5, 1.0), (2.0, 1.0)],
                       powers=[1.0, 0.2, 3.0])
    config = TrialConfig(200_000, seed=MC_SEED)
    base = ([intercept_prob_single(s) for s in sc.sensors], intercept_prob_round_robin(sc),
            intercept_prob_optimal(sc))
    counts = {kind: run_trials(sc, kind, config).n_intercepts for kind in (RR, OPT)}
    ok = True
    for tx, n0 in [(10, 1), (1, 10), (10, 10)]:
        scaled = sc.scaled_powers(tx, n0)
        ok &= base == ([intercept_prob_single(s) for s in scaled.sensors], intercept_prob_round_robin(scaled),
                       intercept_prob_optimal(scaled))
        ok &= all(run_trials(scaled, kind, config).n_intercepts == counts[kind] for kind in (RR, OPT))
    report(8, "powers leave analytic and MC counts unchanged", ok,
           f"counts rr={counts[RR]} opt={counts[OPT]}")


def test_c09_determinism():
    sc = scenario_from_mer(MerTemplate.homogeneous(3, 1.5, 1.5), 3.0)
    config = TrialConfig(300_000, seed=MC_SEED, chunk_size=20_000)
    same = all(len({estimate_intercept(sc, kind, config, workers=w) for w in (1, 1, 2, 8)}) == 1
               for kind in (RR, OPT))
    covered = 0
    for seed in range(200):
        est = estimate_intercept(single(1.5, 1.5, 1.0), RR, TrialConfig(10_000, seed=seed))
        covered += est.ci95_lo <= 0.5 <= est.ci95_hi
    report(9, "bit-identical across workers, CI coverage", same and covered >= 180,
           f"identical={same} coverage={covered}/200")


def test_c10_cli():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        code_fig = main(["figure", "fig2", "--out", str(tmp / "fig2.csv")])
        rows = check_fig2_schema((tmp / "fig2.csv").read_text())
        p = {(int(r["n_sensors"]), r["scheme"], float(r["lambda_linear"])): float(r["p_int"]) for r in rows}
        lams = sorted({float(r["lambda_linear"]) for r in rows})
        flat = all(p[(2, "round", x)] == p[(4, "round", x)] for x in lams)
        below = all(p[(n, "optimal", x)] < p[(n, "round", x)] for n in (2, 4) for x in lams)
        (tmp / "bad.json").write_text('{"sensors": {"n": 2,\n "m": 1.5 "k": 1.5}}')
        code_bad = main(["analyze", "--config", str(tmp / "bad.json")])
        (tmp / "shape.json").write_text(json.dumps({"sensors": {"n": 2, "m": 0.1, "k": 1.5},
                                                    "sweep": {"mer": [1]}}))
        code_shape = main(["analyze", "--config", str(tmp / "shape.json")])
    ok = code_fig == 0 and flat and below and code_bad == 2 and code_shape == 3
    report(10, "fig2 golden schema and exit codes", ok,
           f"rows={len(rows)} exits={code_fig}/{code_bad}/{code_shape}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
