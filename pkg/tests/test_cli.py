from __future__ import annotations

import csv
import io
import json

import pytest
from click.testing import CliRunner

from subgames.cli import UsageError, main, parse_params, parse_set, parse_values
from subgames.core import SubtractionSet
from subgames.reports import RunConfig, digits, to_json


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, [str(a) for a in args])

    return invoke


# -- parsing ------------------------------------------------------------------------------


def test_parse_set():
    assert parse_set("1,3,4") == SubtractionSet((1, 3, 4))
    assert parse_set("4,3,1") == SubtractionSet((1, 3, 4))
    assert parse_set(" 4, 3,3 ,1") == SubtractionSet((1, 3, 4))
    assert parse_set("2,4,6").gcd == 2


@pytest.mark.parametrize("bad", ["", "1,,3", "1,x", "0,3", "-1,2"])
def test_parse_set_errors(bad):
    with pytest.raises(UsageError):
        parse_set(bad)


def test_parse_values_and_params():
    assert parse_values("5") == [5]
    assert parse_values("2..5") == [2, 3, 4, 5]
    assert parse_values("8,2..3") == [2, 3, 8]
    assert parse_params(["--a", "6", "--b=8"]) == {"a": "6", "b": "8"}
    for bad in (["a", "6"], ["--a"], ["--a", "1", "--a", "2"]):
        with pytest.raises(UsageError):
            parse_params(bad)
    with pytest.raises(UsageError):
        parse_values("5..2")


def test_digits():
    assert digits([0, 1, 2]) == "012"
    assert digits([0, 10, 2]) == "0,10,2"


def test_run_config():
    with pytest.raises(ValueError):
        RunConfig(initial_horizon=10, max_horizon=5)
    with pytest.raises(ValueError):
        RunConfig(format="xml")


# -- commands -----------------------------------------------------------------------------


def test_analyze_table(run):
    r = run("analyze", "1,3,4")
    assert r.exit_code == 0
    assert "period     7" in r.output and "tail       0101232" in r.output


def test_analyze_s247(run):
    r = run("analyze", "2,4,7", "--json")
    d = json.loads(r.output)
    assert (d["period"], d["preperiod"]) == (3, 8)


def test_analyze_bipartite_tail(run):
    d = json.loads(run("analyze", "1,3,5", "--json").output)
    assert d["period"] == 2 and d["tail"] == [0, 1]


def test_analyze_non_normalized(run):
    d = json.loads(run("analyze", "6,4,2", "--json").output)
    assert d["set"] == [2, 4, 6] and d["gcd"] == 2
    assert d["sequence_window"] == [0, 0, 1, 1, 2, 2, 3, 3]


def test_json_round_trip(run):
    for args in (("analyze", "1,3,4"), ("expansion", "2,4,7"), ("bipartite", "3,5,9"),
                 ("verify", "F16", "--a", "8", "--r", "6"), ("scan", "c2", "--k", "3", "--max-sk", "8")):
        text = run(*args, "--json").output
        assert to_json(json.loads(text)) == text


def test_report_schema(run):
    d = json.loads(run("bipartite", "3,5,9", "--json").output)
    for key in ("set", "gcd", "period", "preperiod", "sequence_window", "expansion", "lemma_checks", "verdicts"):
        assert key in d
    assert set(d["expansion"]) >= {"members", "classification", "rendered"}
    assert all(isinstance(v, bool) for v in d["lemma_checks"].values())


def test_expansion(run):
    r = run("expansion", "1,3,4")
    assert r.exit_code == 0 and "{1,3,4,6}^{*7}" in r.output
    d = json.loads(run("expansion", "1,3,4", "--json", "--expansion-bound", "14").output)
    assert d["expansion"]["members"] == [1, 3, 4, 6, 8, 10, 11, 13]


def test_verify(run):
    r = run("verify", "F12", "--a", "6")
    assert r.exit_code == 0 and "ALL-MATCH" in r.output
    r = run("verify", "F25", "--a", "2")
    assert r.exit_code == 1 and "MISMATCH" in r.output


def test_sweep(run):
    r = run("sweep", "F4", "--a", "3,5,7", "--b", "4,6,8")
    assert r.exit_code == 0 and "6 verdicts, 6 all-match" in r.output
    r = run("sweep", "F9", "--a", "2..6")
    assert r.exit_code == 1


def test_sweep_csv(run):
    r = run("sweep", "F12", "--a", "2..8", "--csv")
    rows = list(csv.DictReader(io.StringIO(r.output)))
    assert [row["params"] for row in rows] == ["a=2", "a=4", "a=6", "a=8"]
    assert all(row["all_match"] == "True" for row in rows)


def test_csv_single_game(run):
    rows = list(csv.DictReader(io.StringIO(run("expansion", "1,3,4", "--csv").output)))
    assert len(rows) == 1 and rows[0]["tail"] == "0101232" and rows[0]["expansion"] == "{1,3,4,6}^{*7}"


def test_scan_c2(run):
    r = run("scan", "c2", "--k", "3", "--max-sk", "20")
    assert r.exit_code == 0 and "counterexamples 0" in r.output


def test_scan_c1_flags_counterexamples(run):
    r = run("scan", "c1", "--k", "3", "--max-sk", "15", "--json")
    assert r.exit_code == 1
    assert [c["game"] for c in json.loads(r.output)["counterexamples"]] == [[3, 11, 15], [3, 13, 15]]


def test_scan_keven(run):
    r = run("scan", "keven", "--a", "2..3", "--k", "2", "--csv")
    rows = list(csv.DictReader(io.StringIO(r.output)))
    assert r.exit_code == 0 and {row["game"] for row in rows} == {"2,5,7", "3,7,10", "3,8,11"}


def test_out_file(run, tmp_path):
    out = tmp_path / "r.json"
    r = run("analyze", "2,3", "--json", "--out", out)
    assert r.exit_code == 0 and r.output == ""
    assert json.loads(out.read_text())["period"] == 5


@pytest.mark.parametrize(
    "args",
    [
        ("analyze", "0,3"),
        ("analyze", "a,b"),
        ("verify", "F99", "--a", "3"),
        ("verify", "F12", "--a", "5"),
        ("verify", "F12"),
        ("verify", "F12", "--a", "4", "--z", "1"),
        ("analyze", "1,3", "--bogus"),
        ("analyze", "1,3", "--json", "--csv"),
        ("scan", "c9"),
        ("scan", "c1", "--k", "3", "--max-sk", "2"),
    ],
)
def test_usage_errors_exit_3(run, args):
    assert run(*args).exit_code == 3


def test_horizon_exhausted_exit_2(run):
    r = run("analyze", "1,100", "--max-horizon", "64")
    assert r.exit_code == 2
    assert "horizon exhausted" in r.output and "first 64 values" in r.output
