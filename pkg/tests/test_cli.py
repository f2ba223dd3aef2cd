import json

import pytest

from severi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ade_json_exact_bytes(capsys):
    code, out, _ = run(capsys, "ade", "--type", "E6", "--json")
    assert code == 0
    assert out == '{"kind":"local","low":0,"values":[5,10,6,1]}\n'


def test_homfly_pinf_exact_bytes(capsys):
    code, out, _ = run(capsys, "homfly", "--strands", "2", "--word", "1 1 1", "--pinf")
    assert code == 0
    assert out == "2*z^-1 + z\n"


def test_transform_local_node(capsys):
    code, out, _ = run(capsys, "transform", "--local", "--delta", "1",
                       "--branches", "2", "--coeffs", "1,1")
    assert code == 0
    assert out == "[1,1]\n"


def test_transform_global_json(capsys):
    code, out, _ = run(capsys, "transform", "--global", "--genus", "1",
                       "--coeffs", "1,1,2,3", "--json")
    assert code == 0
    assert json.loads(out) == {"kind": "global", "low": 0, "values": [1, 1]}


def test_series_both_methods_agree(capsys):
    code, closed, _ = run(capsys, "series", "--model", "D", "--order", "12", "--json")
    assert code == 0
    code, counted, _ = run(capsys, "series", "--model", "D", "--order", "12",
                           "--method", "count", "--json")
    assert code == 0
    assert json.loads(closed)["coeffs"] == json.loads(counted)["coeffs"]
    assert json.loads(closed)["coeffs"][:6] == [1, 1, 2, 3, 5, 7]


def test_dynkin_json(capsys):
    code, out, _ = run(capsys, "dynkin", "--type", "E6", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["independent_set_counts"] == [1, 6, 10, 5, 0, 0, 0]
    assert doc["nh"]["values"] == [5, 10, 6, 1]


def test_homfly_json_schema(capsys):
    code, out, _ = run(capsys, "homfly", "--strands", "2", "--word", "1 1 1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["strands"] == 2 and doc["writhe"] == 3
    assert doc["homfly"] == [[2, 0, "2"], [2, 2, "1"], [4, 0, "-1"]]
    assert doc["pinf"] == [[-1, "2"], [1, "1"]]
    assert doc["pinf_a_exponent"] == 1
    assert doc["counts"] == [[0, 1], [1, 2]]


def test_pinf_json(capsys):
    code, out, _ = run(capsys, "pinf", "--strands", "3", "--word", "(1 2)^4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"] == [[0, 1], [1, 6], [2, 10], [3, 5]]
    assert doc["pinf"] == [[-1, "5"], [1, "10"], [3, "6"], [5, "1"]]


def test_conjecture_all(capsys):
    code, out, _ = run(capsys, "conjecture", "--all", "--json")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 24
    for doc in docs:
        assert doc["ok"] is not False
    checked = [d for d in docs if d["ok"] is True]
    assert {"A2", "E6", "E8"} <= {d["name"] for d in checked}


def test_conjecture_torus(capsys):
    code, out, _ = run(capsys, "conjecture", "--torus", "3,4", "--json")
    assert code == 0
    doc = json.loads(out)[0]
    assert doc["pinf"] == [[-1, "5"], [1, "10"], [3, "6"], [5, "1"]]
    assert doc["predicted"] is None


def test_combine(capsys):
    code, out, _ = run(capsys, "combine", "--gtilde", "0",
                       "--locals", "1,1;1,1;1,1", "--json")
    assert code == 0
    assert json.loads(out) == {"kind": "global", "low": 0, "values": [1, 3, 3, 1]}
    code, out, _ = run(capsys, "combine", "--gtilde", "3", "--json")
    assert json.loads(out) == {"kind": "global", "low": 3, "values": [1]}


def test_catalog_json(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 24
    a2 = next(d for d in docs if d["name"] == "A2")
    assert a2["braid"] == {"strands": 2, "word": "1 1 1"}
    assert a2["delta"] == 1 and a2["mu"] == 2


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 20


def test_selftest_json(capsys):
    code, out, _ = run(capsys, "selftest", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert all(r["pass"] for r in doc["results"])


def test_deterministic_output(capsys):
    first = run(capsys, "homfly", "--strands", "3", "--word", "(1 2)^4", "--json")
    second = run(capsys, "homfly", "--strands", "3", "--word", "(1 2)^4", "--json")
    assert first == second
    first = run(capsys, "catalog", "--json")
    second = run(capsys, "catalog", "--json")
    assert first == second


def test_validation_failures_exit_nonzero(capsys):
    code, _, err = run(capsys, "ade", "--type", "Q7")
    assert code == 1 and "error:" in err
    code, _, err = run(capsys, "homfly", "--strands", "3", "--word", "5 1")
    assert code == 1 and "error:" in err
    code, _, err = run(capsys, "pinf", "--strands", "2", "--word", "-1 1")
    assert code == 1 and "error:" in err
    code, _, err = run(capsys, "transform", "--local", "--coeffs", "1,1")
    assert code == 1 and "error:" in err
    code, _, err = run(capsys, "conjecture")
    assert code == 1 and "error:" in err


def test_usage_error_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["homfly"])
    assert exc.value.code != 0


def test_budget_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("SEVERI_BUDGET", "2")
    code, _, err = run(capsys, "homfly", "--strands", "2", "--word", "1 1 1")
    assert code == 1 and "budget" in err
    monkeypatch.setenv("SEVERI_BUDGET", "30")
    code, out, _ = run(capsys, "homfly", "--strands", "2", "--word", "1 1 1", "--pinf")
    assert code == 0 and out == "2*z^-1 + z\n"
    monkeypatch.setenv("SEVERI_BUDGET", "nope")
    code, _, err = run(capsys, "homfly", "--strands", "2", "--word", "1 1 1")
    assert code == 1 and "SEVERI_BUDGET" in err
