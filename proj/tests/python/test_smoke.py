import json
import subprocess

import jsonschema
import pytest

import ggt


def test_words():
    assert ggt.reduce("x1 x2 X2 x1") == "x1 x1"
    assert ggt.reduce("x1 X1") == ""
    assert ggt.multiply(["x1 x2", "X2 X1"]) == ""
    assert ggt.invert(ggt.invert("x1 X2 x3")) == ggt.reduce("x1 X2 x3")
    assert ggt.multiply([ggt.power("x1 x2", 3), ggt.power("x1 x2", -3)]) == ""
    assert ggt.commutator("x1", "x2") == "X1 X2 x1 x2"
    assert ggt.conjugate("x1", "x2") == "X2 x1 x2"
    with pytest.raises(ValueError):
        ggt.reduce("x1 y")


def test_derived_series():
    c = ggt.commutator("x1", "x2")
    assert ggt.derived_member(c, 1)
    assert not ggt.derived_member(c, 2)
    assert ggt.derived_member(ggt.commutator(c, ggt.commutator("x1", "X2")), 2)
    assert ggt.derived_depth("x1", 3) == (0, False)
    assert ggt.derived_depth("", 3) == (3, True)
    assert ggt.fox_derivative("X1 X2 x1 x2", 1) == "-1*X1 + 1*X1 X2"


def test_subgroups():
    assert ggt.subgroup_contains(["x1^2", "x2"], "x1^2 x2")
    assert not ggt.subgroup_contains(["x1^2", "x2"], "x1")
    assert ggt.reduce(ggt.coset_rep(["x1^2", "x2"], "x1^3")) == ggt.reduce("x1")
    assert ggt.is_free_basis(["x1", "x1 x2"])
    assert not ggt.is_free_basis(["x1^2", "x1^3"])


def test_scenarios_and_schema():
    names = ggt.scenario_names()
    assert names == sorted(names)
    assert "axioms" in names
    schema = json.loads(ggt.report_schema())
    report = ggt.run_scenario_json("conjugation_identities")
    jsonschema.validate(report, schema)
    assert report["passed"]
    again = ggt.run_scenario_json("axioms", seed=3, levels=2)
    assert ggt.run_scenario_json("axioms", seed=3, levels=2)["violations"] == again["violations"]
    with pytest.raises(KeyError):
        ggt.run_scenario("no_such_scenario")


def test_fault_replays():
    report = ggt.run_scenario_json("axioms", inject_fault="broken-chain", levels=2)
    assert not report["passed"]
    vector = next(v["replay"] for v in report["violations"] if v["replay"])
    reproduced, detail = ggt.replay(vector)
    assert reproduced
    assert detail


def test_run_all():
    record = ggt.run_all_json(seed=5, trials=300)
    assert record["passed"]
    assert len(record["reports"]) == len(ggt.scenario_names())


def test_bundled_cli():
    path = ggt.cli_path()
    if path is None:
        pytest.skip("ggt executable not bundled in this install")
    out = subprocess.run([str(path), "words", "reduce", "x1 X1 x2"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "x2"
