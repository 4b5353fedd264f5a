import csv
import io
import json
import math
import sys
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def write_config(tmp_path):
    def write(obj, name="config.json"):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj, indent=2))
        return path
    return write


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def check_fig2_schema(text):
    """Assert that ``text`` follows the frozen fig2 CSV schema; returns the rows."""
    schema = json.loads((GOLDEN / "fig2_schema.json").read_text())
    header = text.splitlines()[0].split(",")
    assert header == schema["columns"]
    rows = read_csv(text)
    assert len(rows) == schema["n_rows"]
    for row in rows:
        for col, kind in schema["types"].items():
            value = row[col]
            if kind == "float":
                assert math.isfinite(float(value))
            elif kind == "int":
                assert str(int(value)) == value
            elif kind == "empty":
                assert value == ""
            else:
                assert value in kind
        assert 0.0 <= float(row["p_int"]) <= 1.0
        assert float(row["lambda_db"]) == pytest.approx(10 * math.log10(float(row["lambda_linear"])), abs=1e-9)
    assert sorted({int(r["n_sensors"]) for r in rows}) == schema["sensor_counts"]
    grid = schema["lambda_db_grid"]
    expected_db = list(range(grid["start"], grid["stop"] + 1, grid["step"]))
    for n in schema["sensor_counts"]:
        for scheme in ("round", "optimal"):
            dbs = [float(r["lambda_db"]) for r in rows if int(r["n_sensors"]) == n and r["scheme"] == scheme]
            assert dbs == pytest.approx(expected_db, abs=1e-9)
    return rows


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.RESULTS, key=lambda l: int(l.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
