import json
import os

import pytest

from main import EXIT_INAPPLICABLE, EXIT_INPUT, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED, cli_main
from utils.demos import DEMOS

from .conftest import SCENARIO_DIR


def _rows(text):
    return {(section, key): value for section, key, value in (line.split("\t") for line in text.splitlines())}


@pytest.fixture(autouse=True)
def _no_seed_override(monkeypatch):
    monkeypatch.delenv("POOLING_LAB_SEED", raising=False)


@pytest.mark.parametrize("demo_id", list(DEMOS))
def test_every_demo_reproduces(demo_id, capsys):
    assert cli_main(["demo", demo_id]) == EXIT_OK
    assert f"== {demo_id} ==" in capsys.readouterr().out


def test_te1_demo_values(capsys):
    assert cli_main(["demo", "te1", "--machine"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert rows[("te1", "posterior.1")] == "[0, 1, 0]"
    assert rows[("te1", "posterior.2")] == "[0, 0, 1]"
    assert rows[("te1", "update_then_pool")] == "[0, 0.5, 0.5]"


def test_dictatorship_demo_verdict(capsys):
    assert cli_main(["demo", "dictatorship_cx", "--machine"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert float(rows[("dictatorship_cx", "update_then_pool(w1)")]) == pytest.approx(0.5)
    assert float(rows[("dictatorship_cx", "pool_then_update(w1)")]) == pytest.approx(1.0 / 11.0)
    assert rows[("dictatorship_cx", "verdict")] == "NOT COMMUTATIVE"


def test_machine_output_is_stable(capsys):
    path = os.path.join(SCENARIO_DIR, "te1.json")
    assert cli_main(["evaluate", path, "--machine", "--seed", "5"]) == EXIT_OK
    first = capsys.readouterr().out
    assert cli_main(["evaluate", path, "--machine", "--seed", "5"]) == EXIT_OK
    assert capsys.readouterr().out == first
    assert all(line.count("\t") == 2 for line in first.splitlines())


def test_check_passes_for_the_median(capsys):
    path = os.path.join(SCENARIO_DIR, "median.json")
    assert cli_main(["check", path, "--axiom", "weak_commutativity", "--trials", "30"]) == EXIT_OK
    assert "pass" in capsys.readouterr().out.lower()


def test_violated_check_exits_one(capsys):
    path = os.path.join(SCENARIO_DIR, "dictatorship.json")
    assert cli_main(["check", path, "--axiom", "full_commutativity", "--trials", "10"]) == EXIT_VIOLATED


def test_check_that_cannot_be_evaluated_exits_three(tmp_path, capsys):
    path = tmp_path / "geometric_te1.json"
    path.write_text(json.dumps({
        "states": ["No", "Mild", "Severe"],
        "experts": [{"name": "Alice", "prior": [0.9, 0.1, 0.0]}, {"name": "Bob", "prior": [0.0, 0.0, 1.0]}],
        "rule": {"kind": "geometric", "exponents": [0.5, 0.5]},
        "acts": [], "events": [], "queries": [],
    }), encoding="utf-8")
    assert cli_main(["check", str(path), "--axiom", "p2", "--trials", "20", "--machine"]) == EXIT_INAPPLICABLE
    rows = _rows(capsys.readouterr().out)
    assert rows[("check.p2", "verdict")] == "inapplicable"
    assert rows[("check.p2", "skipped")] == "20"


def test_missing_file_exits_two(capsys):
    assert cli_main(["evaluate", os.path.join(SCENARIO_DIR, "missing.json")]) == EXIT_INPUT
    assert "not found" in capsys.readouterr().err


def test_invalid_scenario_exits_two(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"states": ["a", "b", "c"],\n "experts": [}', encoding="utf-8")
    assert cli_main(["evaluate", str(path)]) == EXIT_INPUT


@pytest.mark.parametrize("argv", [
    [],
    ["evaluate"],
    ["evaluate", "x.json", "--bogus"],
    ["check", "x.json"],
    ["check", "x.json", "--axiom", "transitivity"],
    ["check", "x.json", "--axiom", "p2", "--trials", "0"],
    ["demo", "te3"],
    ["demo", "te1", "--eps-value", "-1"],
])
def test_usage_errors_exit_64(argv, capsys):
    assert cli_main(argv) == EXIT_USAGE
