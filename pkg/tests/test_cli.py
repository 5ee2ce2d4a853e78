"""CLI subcommands driven through main(argv), checking text/json parity."""

import json

import pytest

from wilsonprod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--output", "json")
    return code, json.loads(out)


# -- factor -------------------------------------------------------------------

def test_factor_text(capsys):
    code, out = run(capsys, "factor", "--poly", "x^2+1", "--prime", "2")
    assert code == 0
    assert "maximal at 2: yes" in out
    assert "e = 2, f = 1" in out


def test_factor_json_split(capsys):
    code, doc = run_json(capsys, "factor", "--poly", "x^2+1", "--prime", "5")
    assert code == 0
    assert doc["maximal"] is True
    assert len(doc["factors"]) == 2
    assert [f["label"] for f in doc["factors"]] == ["5", "5@1"]


def test_factor_non_maximal_is_json_error(capsys):
    code, out = run(capsys, "factor", "--poly", "x^2+3", "--prime", "2")
    assert code == 2
    doc = json.loads(out)
    assert doc["error"]["type"] == "non_maximal_order"


def test_factor_rejects_composite_prime(capsys):
    code, out = run(capsys, "factor", "--poly", "x^2+1", "--prime", "6")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "not_prime"


def test_bad_poly_is_parse_error(capsys):
    code, out = run(capsys, "classify", "--poly", "zebra", "--ideal", "2^1")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "parse_error"


# -- classify -----------------------------------------------------------------

def test_classify_json(capsys):
    code, doc = run_json(capsys, "classify", "--poly", "x^2+1",
                         "--ideal", "2^2")
    assert code == 0
    assert doc["class"] == "one_plus_pi"
    assert doc["witness"] == [0, 1]
    assert doc["prime"]["prime"] == 2
    assert doc["ideal"] == "2^2"


def test_classify_beyond_cap(capsys):
    code, doc = run_json(capsys, "classify", "--poly", "x", "--ideal", "2^21")
    assert code == 0
    assert doc["class"] == "one"
    assert doc["witness"] is None


def test_classify_needs_an_ideal(capsys):
    code, out = run(capsys, "classify", "--poly", "x^2+1")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "parse_error"


def test_classify_gen_route(capsys):
    code, doc = run_json(capsys, "classify", "--poly", "x", "--gen", "7")
    assert code == 0
    assert doc["class"] == "minus_one"
    assert doc["witness"] == [6]
    assert doc["ideal"] == "7^1"


# -- verify ---------------------------------------------------------------------

def test_verify_match_text(capsys):
    code, out = run(capsys, "verify", "--poly", "x^2+1", "--ideal", "2^2")
    assert code == 0
    assert "MATCH" in out and "MISMATCH" not in out


def test_verify_json_verdict_parity(capsys):
    code_t, out = run(capsys, "verify", "--poly", "x", "--ideal", "7^1")
    code_j, doc = run_json(capsys, "verify", "--poly", "x", "--ideal", "7^1")
    assert code_t == code_j == 0
    assert ("MATCH" in out) == (doc["verdict"] == "MATCH")
    assert doc["match"] is True
    assert doc["product"] == [6]


def test_verify_dump(capsys):
    code, doc = run_json(capsys, "verify", "--poly", "x", "--ideal", "2^2",
                         "--dump")
    assert code == 0
    ring = doc["ring"]
    assert ring["size"] == 4
    assert ring["units"] == [[1], [3]]
    assert ring["census"]["d2"] == 1
    assert ring["elements"] == [[0], [1], [2], [3]]


def test_verify_ring_too_large(capsys):
    code, out = run(capsys, "verify", "--poly", "x", "--ideal", "2^21")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "ring_too_large"


# -- cap resolution ---------------------------------------------------------------

def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("WILSON_CAP", "4")
    code, doc = run_json(capsys, "classify", "--poly", "x", "--ideal", "2^3")
    assert code == 0
    assert doc["witness"] is None  # 8 > env cap 4


def test_flag_overrides_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("WILSON_CAP", "4")
    code, doc = run_json(capsys, "classify", "--poly", "x", "--ideal", "2^3",
                         "--cap", "1024")
    assert code == 0
    assert doc["witness"] == [1]


def test_garbage_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("WILSON_CAP", "many")
    code, out = run(capsys, "classify", "--poly", "x", "--ideal", "2^1")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "parse_error"


def test_tiny_cap_rejected(capsys):
    code, out = run(capsys, "classify", "--poly", "x", "--ideal", "2^1",
                    "--cap", "1")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "parse_error"


# -- sweep ------------------------------------------------------------------------

def test_sweep_trivial_bound(capsys):
    code, doc = run_json(capsys, "sweep", "--poly", "x^2+1",
                         "--max-norm", "1")
    assert code == 0
    assert doc["cases"] == 0
    assert doc["ok"] is True


def test_sweep_small(capsys):
    code, doc = run_json(capsys, "sweep", "--poly", "x^2+1",
                         "--max-norm", "256")
    assert code == 0
    assert doc["ok"] is True
    assert doc["mismatches"] == []
    assert doc["cases"] > 20
    assert doc["classes"]["one_plus_pi"] == 1


# -- gauss ------------------------------------------------------------------------

def test_gauss_table(capsys):
    code, doc = run_json(capsys, "gauss", "--max-A", "30")
    assert code == 0
    assert doc["ok"] is True
    assert doc["minus_one"][:8] == [3, 4, 5, 6, 7, 9, 10, 11]
    assert 8 not in doc["minus_one"]
    assert 12 not in doc["minus_one"]


# -- cyclo-demo ---------------------------------------------------------------------

def test_cyclo_demo_t2(capsys):
    code, doc = run_json(capsys, "cyclo-demo", "--t", "2", "--n-max", "6")
    assert code == 0
    assert doc["ok"] is True
    assert [r["class"] for r in doc["rows"]] == \
        ["one", "one_plus_pi", "one_plus_pi_sq", "one", "one", "one"]
    assert all(r["match"] for r in doc["rows"])


def test_cyclo_demo_rejects_t1(capsys):
    code, out = run(capsys, "cyclo-demo", "--t", "1")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "parse_error"


def test_cyclo_demo_text(capsys):
    code, out = run(capsys, "cyclo-demo", "--t", "2", "--n-max", "4")
    assert code == 0
    assert "pattern verified" in out
