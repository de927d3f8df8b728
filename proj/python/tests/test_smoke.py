import json
import os

import pytest

import septel


def test_rational_certificate():
    r = septel.sep_rational("1/(t*x)", kind="S")
    assert r["separable"] is True
    assert r["certificate"] == "(t+1)*S - t"
    assert septel.verify_certificate("1/(t*x)", ["x"], r["certificate"], "S")


def test_worked_algebraic_example():
    r = septel.sep_algebraic("Y^2 - 2*(x*t+1)*Y + (x*t+1)^2 - t")
    assert r["separable"] is True
    w = r["witnesses"]
    assert w["simple_point"]["a"] == "1"
    assert w["qbeta"] == "Y^2 - t - 2*Y + 1"
    assert len(w["solutions"]) == 2


def test_negative_algebraic_is_bound_relative():
    r, code = septel.run("sep-algebraic", "Y^2 - (t+x)")
    assert r["separable"] is False
    assert code == 2


def test_deciders_and_tables():
    assert septel.sep_hyperexp("5/(t+x)+2")["separable"] is True
    assert septel.sep_hyperexp("(1/2)/(t+x)")["separable"] is False
    assert septel.sep_hypergeom("(t+x+1)/(t+x)")["separable"] is True
    assert septel.telescoper("1/(x^2+t)", "st-dx")["exists"] is False
    assert septel.telescoper("1/(t*x*(x+1))", "dt-sx")["exists"] is True
    d = septel.dispersion("t*(t+1)*(t-5)*(t^2+1)*(t^2+4*t+5)", at="t^2+1")
    assert (d["dispersion"], d["local_dispersion"]) == (6, 2)


def test_errors():
    r, code = septel.run("sep-rational", "t+")
    assert code == 3
    assert r["error"]["column"] == 3
    with pytest.raises(ValueError):
        septel.verify_certificate("1/t", ["x"], "x*D")


def test_batch_matches_single_runs():
    queries = [{"command": "sep-rational", "expr": "1/t"}, {"command": "gp-form", "expr": "t+1"}]
    assert septel.run_batch(queries) == [septel.run(q["command"], q["expr"]) for q in queries]


def test_results_match_schema():
    jsonschema = pytest.importorskip("jsonschema")
    path = os.environ.get("SEPTEL_SCHEMA")
    if not path:
        pytest.skip("schema path not provided")
    with open(path) as f:
        schema = json.load(f)
    runs = [
        septel.run("sep-rational", "1/(t*x)", kind="S"),
        septel.run("sep-algebraic", "Y^2 - (t+x)"),
        septel.run("telescoper", "1/(t+x)^2", mode="st-dx"),
        septel.run("oracle", "1/t", max_order=2, max_degree=2),
        septel.run("verify", "1/t", op="t*D+1"),
        septel.run("sep-rational", "t+"),
    ]
    for result, _ in runs:
        jsonschema.validate(result, schema)
