import io
import json

import pytest

from gerbe_vertex.cli import RunConfig, run
from gerbe_vertex.exactnum import Rational


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_hurwitz_oracle_line():
    code, out = call("hurwitz", "--m", "2", "--mu", "[(1,1)]", "--nu", "[(1,0)]", "--r", "0", "--gamma", "1", "--oracle")
    assert code == 0
    assert out.splitlines() == ["burnside: 1/2", "bruteforce: 1/2"]


def test_vertex_json_schema():
    code, out = call("vertex", "--m", "2", "--d", "1", "--tau", "0", "--format", "json",
                     "--lambda-order", "4", "--x-order", "3")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"config", "results", "diagnostics"}
    keys = [r["key"] for r in doc["results"]]
    assert keys == ["[(1,0)]@2", "[(1,1)]@2"]
    first = doc["results"][0]["series"][0]
    assert first == {"lambda": -1, "x": [0], "coeff": "1/2"}


def test_deterministic_output():
    argv = ("gerbe", "--m", "2", "--d", "2", "--lambda-order", "3", "--x-order", "3", "--format", "json")
    assert call(*argv) == call(*argv)


def test_approx_is_extra():
    _, exact = call("vertex", "--m", "2", "--d", "1", "--format", "json", "--lambda-order", "2", "--x-order", "2")
    _, approx = call("vertex", "--m", "2", "--d", "1", "--format", "json", "--lambda-order", "2", "--x-order", "2",
                     "--approx")
    a, b = json.loads(exact), json.loads(approx)
    for ra, rb in zip(a["results"], b["results"]):
        assert [t["coeff"] for t in ra["series"]] == [t["coeff"] for t in rb["series"]]
        assert all("approx" in t for t in rb["series"])


def test_predictions():
    code, out = call("vertex", "--predictions", "--x-order", "2")
    assert code == 0
    assert "G(2,1) [lambda <= 9, x-degree <= 2]:\n  (1/16) + (3/64) * x1^2" in out


def test_char_table():
    code, out = call("char-table", "--m", "1", "--d", "3")
    assert code == 0
    assert "X((2,1))[(1,0),(1,0),(1,0)]@1: 2" in out


def test_bad_tau_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run(["vertex", "--m", "2", "--tau", "1/3"])
    assert e.value.code == 2
    assert "denominator must divide" in capsys.readouterr().err


def test_numeric_error_surfaces(capsys):
    code, _ = call("vertex", "--m", "2", "--d", "3", "--lambda-lo", "-1")
    assert code == 2
    assert "WindowError" in capsys.readouterr().err


def test_threads_env(monkeypatch):
    monkeypatch.setenv("GERBE_VERTEX_THREADS", "3")
    _, out = call("hurwitz", "--m", "2", "--mu", "[(1,0)]", "--nu", "[(1,0)]", "--format", "json")
    assert json.loads(out)["config"]["threads"] == 3


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("vertex", m=2, tau=Rational(1, 4))
    assert RunConfig("vertex", d_max=3).lo == -6


def test_verify_small():
    code, out = call("verify", "--m", "2", "--d", "1")
    assert code == 0
    assert out.strip().endswith("checks passed") and "FAIL" not in out
