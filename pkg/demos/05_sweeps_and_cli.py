"""Config-driven sweeps, the CSV product and the command line.

A JSON config names the sensors and a MER grid. ``run_sweep`` evaluates the
exact, asymptotic and Monte Carlo methods over it and returns rows in grid
order; ``rows_to_csv`` renders the stable CSV schema. The same thing is
reachable from the shell as ``wsn-intercept analyze --config file.json``.
"""

import json
import tempfile
from pathlib import Path

from wsn_intercept.cli import main
from wsn_intercept.config import parse_config
from wsn_intercept.sweep import rows_to_csv, run_sweep

config = parse_config(json.dumps({
    "label": "demo",
    "sensors": {"m": 1.5, "k": 1.5},
    "sweep": {
        "mer_db": {"start": 0, "stop": 20, "step": 10},
        "sensor_counts": [2],
        "methods": ["analytic", "asymptotic", "mc"],
        "mc": {"trials": 200000, "seed": 7},
    },
}))
print(rows_to_csv(run_sweep(config, workers=4)))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "bad.json"
    path.write_text(json.dumps({"sensors": {"n": 2, "m": 0.2, "k": 1}, "sweep": {"mer": [1]}}))
    print("exit code for an invalid shape factor:", main(["analyze", "--config", str(path)]))
    out = Path(tmp) / "fig2.csv"
    main(["figure", "fig2", "--out", str(out)])
    print(out.read_text().splitlines()[:4])
