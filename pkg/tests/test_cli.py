import json

import networkx as nx
import pytest

from xbgraphs.cli import main
from xbgraphs.survey import SurveySpec, run_survey, survey_record, verify
from xbgraphs.constructions import XbParams


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_dot(tmp_path, capsys):
    out = tmp_path / "g.dot"
    code, _, _ = run(capsys, "construct", "xb", "5,12,1,8,7", "--format", "dot", "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert text.count("label=") == 60


def test_construct_rejects_bad_params(capsys):
    code, _, err = run(capsys, "construct", "xb1", "4")
    assert code == 2 and "m must be divisible by 3" in err
    code, _, err = run(capsys, "construct", "xb", "3,12,2,4,2")
    assert code == 2 and "a" in err
    code, _, _ = run(capsys, "construct", "xb", "3,12")
    assert code == 2
    code, _, _ = run(capsys, "construct", "cube", "3")
    assert code == 2


def test_construct_htg_graph6(capsys):
    code, out, _ = run(capsys, "construct", "htg", "2,12,6", "--format", "graph6")
    assert code == 0
    assert nx.from_graph6_bytes(out.strip().encode()).number_of_nodes() == 24


def test_verify_eta_graph(capsys):
    code, out, _ = run(capsys, "verify", "xb", "3,12,1,4,10", "--oracle", "--orbits")
    rep = json.loads(out)
    assert code == 0
    assert rep["theorem_case"] == "OddEven"
    assert rep["aut_order"] == 72 and rep["group_order"] == 36 and rep["group_regular"]
    assert rep["stabilizer_order"] == 2 and rep["c_invariant"] is False
    assert rep["cayley_involutions"] == 3 and rep["findings"] == []
    assert sum(o["size"] for o in rep["edge_orbits"]) == 54


def test_verify_invalid_case(capsys):
    code, out, _ = run(capsys, "verify", "xb", "3,12,1,4,2", "--oracle")
    rep = json.loads(out)
    assert code == 0
    assert rep["theorem_case"] == "Invalid" and rep["aut_order"] == 18
    assert rep["c_subgroup_transitive"] is False


def test_verify_xb2(capsys):
    code, out, _ = run(capsys, "verify", "xb2", "3", "--oracle")
    rep = json.loads(out)
    assert code == 0 and rep["stabilizer_order"] == 1 and rep["c_invariant"] is True
    assert rep["aut_order"] == 24


def test_verify_seed_only_changes_relabeling(capsys):
    _, a, _ = run(capsys, "verify", "xb", "5,12,1,8,7", "--oracle", "--seed", "1")
    _, b, _ = run(capsys, "verify", "xb", "5,12,1,8,7", "--oracle", "--seed", "2")
    assert a == b


def test_verify_limit(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "xb", "3,12,1,4,10", "--oracle", "--limit", "10")
    assert code == 4 and "limit" in err
    monkeypatch.setenv("XBGRAPHS_ORACLE_LIMIT", "10")
    code, _, _ = run(capsys, "verify", "xb", "3,12,1,4,10", "--oracle")
    assert code == 4


def test_finding_exit_code(monkeypatch, capsys):
    import xbgraphs.survey as survey

    monkeypatch.setattr(survey, "_expected_oracle", lambda family, rep: ["forced"])
    code, out, _ = run(capsys, "verify", "xb", "5,12,1,8,7", "--oracle")
    assert code == 3 and json.loads(out)["findings"] == ["forced"]


def test_survey_and_report(tmp_path, capsys):
    out = tmp_path / "s.jsonl"
    code, _, _ = run(capsys, "survey", "--m", "3-4", "--n", "8,12", "--out", str(out))
    assert code == 0
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    assert lines and all(r["agree"] for r in lines)
    keys = [tuple(r[k] for k in "mnabl") for r in lines]
    assert keys == sorted(keys)
    code, text, _ = run(capsys, "report", str(out))
    summary = json.loads(text)
    assert code == 0 and summary["tuples"] == len(lines) and summary["disagreements"] == []


def test_survey_empty_range(tmp_path, capsys):
    out = tmp_path / "e.jsonl"
    code, _, _ = run(capsys, "survey", "--m", "", "--n", "8", "--out", str(out))
    assert code == 0 and out.read_text() == ""


def test_survey_rejects_bad_n(capsys):
    code, _, err = run(capsys, "survey", "--m", "3", "--n", "10")
    assert code == 2 and "multiples of 4" in err


def test_survey_case_filter(capsys):
    code, out, _ = run(capsys, "survey", "--m", "3-5", "--n", "12", "--case", "OddOdd", "--no-oracle")
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and recs and {r["case"] for r in recs} == {"OddOdd"}


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.toml"
    cfg.write_text('[survey]\nm = [3]\nn = [8]\noracle = false\n')
    code, out, _ = run(capsys, "--config", str(cfg), "survey")
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and {r["m"] for r in recs} == {3} and all(r["oracle"] is None for r in recs)
    code, _, _ = run(capsys, "--config", str(tmp_path / "missing.toml"), "survey")
    assert code == 2


def test_workers_do_not_change_output(capsys):
    _, one, _ = run(capsys, "survey", "--m", "3", "--n", "8,12")
    _, two, _ = run(capsys, "survey", "--m", "3", "--n", "8,12", "--workers", "2")
    assert one == two


def test_n8_transitive_lines_have_known_shape():
    spec = SurveySpec(ms=[3, 4, 5, 6], ns=[8])
    for rec in run_survey(spec):
        if rec["oracle"]["c_transitive"]:
            a, b, l = rec["a"], rec["b"], rec["l"]  # noqa: E741
            assert (l % 2 == 1 and (a, b) == (5, 4)) or (l in (2, 6) and (a, b) in {(1, 4), (5, 4)})


def test_survey_record_captures_errors():
    rec = survey_record(XbParams(3, 12, 2, 4, 2), oracle=False, oracle_max_order=200)
    assert rec["error"] and rec["agree"] is None


def test_verify_other_families():
    rep = verify("mobius", (5,), oracle=True)
    assert rep.theorem_case == "N4_MobiusOrPrism" and rep.aut_order == 40
    rep = verify("htg", (2, 12, 6), oracle=True)
    assert rep.theorem_case is None and rep.aut_order == 144
    with pytest.raises(ValueError):
        verify("xb", (3, 12, 2, 4, 2))
