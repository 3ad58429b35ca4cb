"""End-to-end tests of the treefpp command-line tool.

The binary path comes from $TREEFPP_BIN (set by ctest).
"""

import json
import os
import subprocess

import pytest

BIN = os.environ.get("TREEFPP_BIN", "treefpp")


def run(*args, expect=0, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def run_json(*args, env=None):
    return json.loads(run(*args, env=env))


def test_fpp_group_zero():
    out = run_json("fpp", "--group", "(1,2,3)", "-d", "3")
    assert out["classification"] == "Zero"
    assert out["exact"] == "0/1"


def test_fpp_figure_coordinate():
    out = run_json("fpp", "--group", "(1,2)(3,4)", "-d", "4")
    assert abs(float(out["decimal"]) - 0.4563109873079255) < 1e-12
    assert out["defining_polynomial"] == ["2", "-6", "4", "-1"]


def test_fpp_identity_set():
    out = run_json("fpp", "--set", "()", "-d", "5")
    assert out["classification"] == "One"


def test_survey_3():
    lines = run("survey", "-d", "3").strip().splitlines()
    assert lines[0] == "class-id,generators,order,transitive,mean-fixed-points,fpp-class,fpp-decimal"
    decimals = [line.split(",")[-1] for line in lines[1:]]
    assert decimals == ["1", "1", "0", "0"]


def test_survey_4():
    lines = run("survey", "-d", "4").strip().splitlines()[1:]
    assert len(lines) == 11
    classes = [line.rsplit(",", 2)[1] for line in lines]
    assert classes.count("One") == 4
    assert classes.count("Zero") == 5
    assert classes.count("Algebraic") == 2


def test_curve():
    lines = run("curve", "--set", "()", "-d", "3", "--points", "2").strip().splitlines()
    assert lines[0] == "x,f"
    assert lines[1] == "0,0"
    # trivial group: f(1/2) = 1 - (1/2)^3 = 7/8
    assert lines[2].startswith("0.5,0.875")
    assert lines[3].startswith("1,")


def test_glcount():
    out = run_json("glcount", "--n", "3")
    assert out["result"] == {"good": 48, "total": 168}
    assert out["command"] == "glcount"
    assert "paper_formula_used" in out["provenance"]


def test_galois():
    out = run_json("galois", "-d", "3")
    assert out["result"]["fpp"] == "1/2"
    assert out["result"]["hausdorff"]["decimal"].startswith("0.61314719")


def test_oracle():
    out = run_json("oracle", "--group", "(1,2)", "-d", "2", "-n", "2")
    r = out["result"]
    assert r["sigma"] == "8"
    assert r["f_brute"] == "3"
    assert r["agrees"] is True


def test_gqp():
    out = run_json("gqp", "--q", "(1,2)(3,4)", "(1,3)(2,4)", "--p", "(1,2)", "(1,2,3,4)",
                   "-d", "4")
    assert out["result"]["fpp"]["exact"] == "1/3"
    assert out["result"]["index"] == 6


def test_mc_determinism():
    a = run_json("mc", "--group", "(1,2)", "-d", "2", "--depth", "8", "--samples", "2000",
                 "--seed", "5")
    b = run_json("mc", "--group", "(1,2)", "-d", "2", "--depth", "8", "--samples", "2000",
                 "--seed", "5")
    assert a == b


def test_byte_identical_output():
    a = run("survey", "-d", "4")
    b = run("survey", "-d", "4")
    assert a == b
    c = run("gqp", "--q", "(1,2,3)", "--p", "(1,2)", "(1,2,3)", "-d", "3")
    d = run("gqp", "--q", "(1,2,3)", "--p", "(1,2)", "(1,2,3)", "-d", "3")
    assert c == d


def test_exit_codes():
    run("fpp", "--group", "(1,9)", "-d", "4", expect=2)          # invalid input
    run("oracle", "--group", "(1,2,3)", "-d", "3", "-n", "9", expect=3)  # budget
    run("gqp", "--q", "(1,2)", "--p", "(1,2)", "(1,2,3)", "-d", "3", expect=4)  # not normal
    run("nonsense", expect=2)                                     # unknown subcommand
    run("fpp", "--group", "(1,2)", "-d", "3", "--bogus", expect=2)  # unknown flag


def test_budget_env_var():
    run("oracle", "--group", "(1,2)", "-d", "2", "-n", "2",
        env={"TREEFPP_ORACLE_BUDGET": "4"}, expect=3)
    out = run_json("oracle", "--group", "(1,2)", "-d", "2", "-n", "2",
                   env={"TREEFPP_ORACLE_BUDGET": "100"})
    assert out["inputs"]["budget"] == 100


def test_construction_commands():
    c1 = run_json("construction1", "-d", "5")
    assert c1["result"]["closed_form"] == "3/4"
    c1p = run_json("construction1", "-d", "5", "--I", "4")
    assert c1p["result"]["closed_form"] == "1/2"
    assert c1p["result"]["i_is_proper"] is True

    c2 = run_json("construction2", "--n", "2", "--r", "3", "--explicit")
    assert c2["result"]["fpp"] == "1/6"
    assert c2["result"]["report"]["order_p"] == 144

    search = run_json("search", "-d", "4")
    assert len(search["result"]) == 2
    assert search["result"][0]["witness_fixed_counts"] == [1, 1, 1, 1]
