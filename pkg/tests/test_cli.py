import io
import json
from pathlib import Path

import jsonschema
import pytest

from extremal_sets.cli import run
from extremal_sets.constructions import star
from extremal_sets.core import format_family, parse_family

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "schemas" / "report.json").read_text())


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*argv):
    code, out, err = cli(*argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


@pytest.fixture
def star4(tmp_path):
    p = tmp_path / "star4.fam"
    p.write_text(format_family(star(4)))
    return str(p)


def test_bound_ak():
    code, data = cli_json("bound", "ak", "--n", "8", "--k", "4", "--t", "2")
    assert code == 0 and data["value"] == "17" and data["maximizers"] == [1]
    assert [t["value"] for t in data["terms"]] == ["15", "17", "15"]
    code, out, _ = cli("bound", "ak", "--n", "8", "--k", "4", "--t", "2")
    assert out.startswith("value: 17\nmaximizers: 1\n")


@pytest.mark.parametrize(
    "argv,value",
    [
        (["obs1", "--n", "10"], "512"),
        (["ekr", "--n", "8", "--k", "4"], "35"),
        (["katona", "--n", "4", "--t", "2"], "5"),
        (["ekr-t", "--n", "8", "--k", "4", "--t", "2"], "15"),
        (["union-t", "--n", "4", "--t", "1"], "12"),
        (["uv", "--n", "8", "--k", "2", "--u", "2"], "8"),
    ],
)
def test_bound_kinds(argv, value):
    code, data = cli_json("bound", *argv)
    assert code == 0 and data["value"] == value
    assert data["threshold_dependent"] == (argv[0] in ("ekr-t", "uv"))


def test_exact_integers_are_strings():
    code, data = cli_json("bound", "obs1", "--n", "200")
    assert data["value"] == str(2**199)


def test_check_star(star4):
    code, out, _ = cli("check", "t-intersecting", "--family", star4, "--t", "1")
    assert code == 0 and out.strip() == "t-intersecting: true"
    code, data = cli_json("check", "t-intersecting", "--family", star4, "--t", "2")
    assert code == 2 and data["holds"] is False and data["witness"]["kind"] == "pair"


def test_check_union_and_uv(tmp_path):
    p = tmp_path / "singletons.fam"
    p.write_text("n=4\n1\n2\n3\n4\n")
    code, data = cli_json("check", "union-t", "--family", str(p), "--t", "1")
    assert code == 2 and data["witness"]["sets"] == ["1", "2", "3", "4"]
    code, data = cli_json("check", "uv", "--family", str(p), "--u", "2", "--v", "2")
    assert code == 2 and data["witness"]["kind"] == "uv-split"
    p3 = tmp_path / "three.fam"
    p3.write_text("n=3\n1\n2\n3\n")
    assert cli("check", "union-t", "--family", str(p3), "--t", "2")[0] == 2
    assert cli("check", "union-t", "--family", str(p3), "--t", "2", "--strict-pairs")[0] == 0


def test_construct_round_trip(tmp_path):
    for argv in (["star", "--n", "4"], ["ak", "--n", "8", "--k", "4", "--t", "2", "--i", "1"],
                 ["ekr-example", "--n", "8"], ["korner", "--n", "4"], ["union-t", "--n", "5", "--t", "2"],
                 ["star-plus", "--n", "6", "--k", "2", "--u", "3"], ["katona", "--n", "5", "--t", "2"],
                 ["halving", "--n", "4"], ["uniform-star", "--n", "5", "--k", "2"]):
        code, text, _ = cli("construct", *argv)
        assert code == 0
        fam = parse_family(text)
        p = tmp_path / "f.fam"
        p.write_text(text)
        assert parse_family(p.read_text()) == fam
        code, data = cli_json("construct", *argv)
        assert data["family"]["size"] == str(len(fam))
        assert data["family"]["members"] == [list(s) for s in fam.as_sets()]


def test_construct_round_trip_through_check(tmp_path):
    code, text, _ = cli("construct", "ekr-example", "--n", "8", "--out", str(tmp_path / "x.fam"))
    assert code == 0 and text == ""
    code, out, _ = cli("check", "t-intersecting", "--family", str(tmp_path / "x.fam"), "--t", "2")
    assert code == 0


def test_oracle_uniform():
    code, data = cli_json("oracle", "uniform", "--n", "8", "--k", "4", "--t", "2", "--budget", "1000000")
    assert code == 0 and data["optimum"] == "17" and data["complete"] is True
    assert parse_family(data["witness"]).n == 8


def test_oracle_budget_exit_code():
    code, data = cli_json("oracle", "uniform", "--n", "9", "--k", "4", "--t", "1", "--budget", "5")
    assert code == 3 and data["complete"] is False and data["optimum"] == "56"


def test_oracle_other_kinds():
    assert cli_json("oracle", "nonuniform", "--n", "4", "--t", "2")[1]["optimum"] == "5"
    assert cli_json("oracle", "union-t", "--n", "4", "--t", "1")[1]["optimum"] == "12"
    assert cli_json("oracle", "uv", "--n", "4", "--k", "2", "--u", "2", "--v", "2")[1]["optimum"] == "6"
    code, data = cli_json("oracle", "threshold-uv", "--k", "2", "--u", "2", "--v", "2", "--n-max", "5")
    assert code == 0 and [r["oracle"] for r in data["rows"]] == ["3", "6", "10"]


def test_polytope_and_maximize():
    code, data = cli_json("polytope", "--n", "3", "--t", "1", "--brute-hull")
    assert code == 0 and data["brute_hull"]["agrees_with_essential"] is True
    assert [p["point"] for p in data["points"]] == [["0", "1", "2", "1"], ["0", "0", "3", "1"]]
    code, data = cli_json("maximize", "--n", "4", "--t", "2", "--alpha", "1,1,1,1,1")
    assert data["value"] == "5"
    code, data = cli_json("maximize", "--n", "3", "--t", "1", "--alpha", "0,3/2,1/2,0")
    assert data["value"] == "5/2"


def test_csv_output():
    code, out, _ = cli("bound", "ak", "--n", "6", "--k", "3", "--t", "1", "--format", "csv")
    assert out.splitlines() == ["i,term,maximizer", "0,10,true", "1,10,true", "2,10,true"]
    code, out, _ = cli("construct", "star", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["size,elements", "1,1", "2,\"1,2\""]


def test_usage_and_domain_errors(tmp_path):
    assert cli("bound", "uv", "--n", "4", "--k", "2", "--u", "2", "--seed", "1")[0] == 1
    assert cli("bound", "ak", "--n", "4")[0] == 1
    assert cli("frobnicate")[0] == 1
    assert cli("bound", "ekr", "--n", "4", "--k", "3")[0] == 2
    assert cli("construct", "ekr-example", "--n", "6")[0] == 2
    bad = tmp_path / "bad.fam"
    bad.write_text("n=3\n1,4\n")
    assert cli("check", "t-intersecting", "--family", str(bad), "--t", "1")[0] == 1
    assert cli("check", "t-intersecting", "--family", str(tmp_path / "missing"), "--t", "1")[0] == 1
    assert cli("maximize", "--n", "3", "--t", "1", "--alpha", "1,x,0,0")[0] == 2


def test_byte_identical_outputs():
    argv = ("oracle", "uv", "--n", "6", "--k", "2", "--u", "2", "--v", "2", "--format", "json")
    assert cli(*argv)[1] == cli(*argv)[1]
    argv = ("polytope", "--n", "4", "--t", "1", "--format", "json")
    assert cli(*argv)[1] == cli(*argv)[1]


def test_global_flags_before_subcommand():
    code, out, _ = cli("--format", "json", "bound", "obs1", "--n", "4")
    assert json.loads(out)["value"] == "8"
