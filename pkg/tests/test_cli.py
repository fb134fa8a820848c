import json
import subprocess
import sys

import jsonschema
import pytest

from sqclique.cli import payload, report_schema, run
from sqclique.graph import SimpleGraph
from sqclique.io import dump, load


def invoke(*argv):
    code, report = run(list(argv))
    if report is not None:
        jsonschema.validate(report, report_schema())
    return code, report


@pytest.fixture
def g8(tmp_json):
    path = tmp_json("g8.json")
    code, report = invoke("gen", "example1", "--D", "8", "-o", path, "--quiet")
    assert code == 0
    return path


def test_gen_example1(tmp_json):
    path = tmp_json("g.json")
    code, report = invoke("gen", "example1", "--D", "8", "-o", path)
    assert code == 0 and report["pass"]
    assert report["results"]["facts"]["S_size"] == 20
    assert report["results"]["facts"]["max_degree"] == 8
    doc = load(path)
    assert len(doc.sets["S"]) == 20 and doc.extra["params"]["D"] == 8


def test_gen_example2_reports_regular_square():
    code, report = invoke("gen", "example2", "--D", "5", "--s", "3")
    assert code == 0
    assert report["results"]["facts"]["S_size"] == 30
    assert report["results"]["facts"]["square_S_degrees"] == [11]


def test_gen_rejects_odd_d(capsys):
    code, report = invoke("gen", "example1", "--D", "7")
    assert code == 2 and report is None
    assert "even D" in capsys.readouterr().err


def test_analyze(g8, tmp_json):
    code, report = invoke("analyze", "square-clique", g8, "--set", "S")
    assert code == 0 and report["results"]["omega"] == 20 and report["results"]["set_is_maximum"]
    code, report = invoke("analyze", "mad", g8)
    assert code == 0 and report["results"]["below_four"]
    num, _, den = report["results"]["mad"].partition("/")
    assert int(num) < 4 * int(den or 1)
    h5 = tmp_json("h5.json")
    invoke("gen", "example2", "--D", "5", "--s", "3", "-o", h5, "--quiet")
    code, report = invoke("analyze", "square-degeneracy", h5, "--D", "5", "--k", "2")
    assert report["results"]["square_degeneracy"] >= 11
    assert report["results"]["bound_two_degenerate"] == 11


def test_analyze_budget_exceeded_fails(g8):
    code, report = invoke("analyze", "square-clique", g8, "--budget-s", "0")
    assert code == 1 and report["results"]["lower_bound_only"]


def test_verify(g8, tmp_json):
    code, report = invoke("verify", "nice", "--graph", g8, "--set", "S")
    assert code == 0
    k3 = tmp_json("k3.json")
    dump(k3, SimpleGraph(3, [(0, 1), (1, 2), (0, 2)]))
    code, report = invoke("verify", "nice", "--graph", k3, "--set", "{0,1}")
    assert code == 1 and report["results"]["failed"] == "b"
    fat = tmp_json("fat.json")
    invoke("gen", "fat-clique", "--h-order", "5", "--multiplicity", "2", "-o", fat, "--quiet")
    code, report = invoke("verify", "thm1", "--graph", fat, "--D", "8")
    assert code == 0 and report["results"]["edge_count"] == 20 and report["results"]["hypothesis_holds"]
    code, report = invoke("verify", "key-inequality", "--graph", g8, "--set", "S", "--D", "8")
    assert code == 0 and report["results"]["violations"] == []


def test_verify_missing_inputs(g8):
    assert invoke("verify", "nice", "--graph", g8)[0] == 2
    assert invoke("verify", "thm1", "--graph", g8)[0] == 2


def test_extract(g8, tmp_json):
    out = tmp_json("e.json")
    code, report = invoke("extract", "2deg", g8, "--set", "S", "--D", "8", "-o", out)
    assert code == 0 and report["results"]["removed_count"] == 0 and report["results"]["nice"]
    doc = load(out)
    assert len(doc.sets["S"]) == 20 and doc.order is not None
    code, report = invoke("extract", "mad4", g8, "--set", "S", "--D", "8")
    assert code == 0 and report["results"]["nice"] and report["results"]["claims"]["r3_lt_2S"]


def test_extract_mad4_rejects_k5(tmp_json):
    k5 = tmp_json("k5.json")
    dump(k5, SimpleGraph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)]), sets={"S": [0, 1]})
    code, report = invoke("extract", "mad4", k5, "--set", "S", "--D", "4")
    assert code == 1 and "mad = 4" in report["results"]["error"]


def test_search_and_determinism():
    code, report = invoke("search", "f", "--D", "8", "--samples", "20", "--seed", "1")
    assert code == 0 and report["results"]["anchor_used"] and report["results"]["best"] >= 20
    _, again = invoke("search", "f", "--D", "8", "--samples", "20", "--seed", "1")
    assert payload(report) == payload(again)
    assert invoke("search", "f", "--D", "4", "--samples", "0")[0] == 2


def test_search_g_filters_by_mad():
    code, report = invoke("search", "g", "--D", "8", "--samples", "10", "--seed", "3")
    assert code == 0 and report["results"]["best"] >= 20


def test_parse_errors_exit_2(tmp_json):
    bad = tmp_json("bad.json")
    with open(bad, "w") as fh:
        fh.write('{"n": 3, "edges": [[0, 5]]}')
    assert invoke("analyze", "mad", bad)[0] == 2
    assert invoke("analyze", "mad", tmp_json("missing.json"))[0] == 2
    assert invoke("nonsense")[0] == 2


def test_quiet_and_schema_flags(g8, capsys):
    capsys.readouterr()
    invoke("verify", "nice", "--graph", g8, "--set", "S", "--quiet")
    assert capsys.readouterr().out.strip() == "pass"
    assert run(["--json-schema"])[0] == 0
    assert json.loads(capsys.readouterr().out)["title"]


def test_module_entry_point(g8):
    proc = subprocess.run(
        [sys.executable, "-m", "sqclique", "analyze", "degeneracy", g8],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["degeneracy"] == 2
