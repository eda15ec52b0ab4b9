"""Command line interface: outputs, exit codes, environment seeding."""

from __future__ import annotations

import json

import pytest

from domaincheck.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_corpus_list(capsys):
    code, out, _ = run_cli(capsys, "corpus", "list")
    lines = out.strip().splitlines()
    assert code == 0
    assert "diamond 4" in lines and "p1_0 1" in lines
    assert len(lines) == 104


def test_classify_side_nat(capsys):
    code, out, _ = run_cli(capsys, "classify", "--poset", "side_nat")
    d = json.loads(out)
    assert code == 0
    assert d["is_quasi_continuous"] and not d["is_continuous"]


def test_classify_named(capsys):
    code, out, _ = run_cli(capsys, "classify", "--poset", "diamond")
    d = json.loads(out)
    assert code == 0 and d["is_continuous"]


def test_classify_from_file(tmp_path, capsys):
    path = tmp_path / "vee.json"
    path.write_text(
        json.dumps({"name": "vee", "elements": ["z", "x", "y"], "le": [["z", "x"], ["z", "y"]]})
    )
    code, out, _ = run_cli(capsys, "classify", "--poset", str(path))
    assert code == 0 and json.loads(out)["is_dcpo"]


def test_topology_scott_diamond(capsys):
    code, out, _ = run_cli(capsys, "topology", "--poset", "diamond", "--kind", "scott")
    d = json.loads(out)
    assert code == 0
    assert d["opens"][0] == [] and d["opens"][-1] == ["bot", "l", "r", "top"]
    assert ["top"] in d["opens"]
    assert len(d["opens"]) == 6


def test_topology_rejects_side_nat(capsys):
    code, _, err = run_cli(capsys, "topology", "--poset", "side_nat", "--kind", "scott")
    assert code == 2 and "finite" in err


def test_waybelow_table(capsys):
    code, out, _ = run_cli(capsys, "waybelow", "--poset", "p2_1", "--sets")
    d = json.loads(out)
    assert code == 0
    assert ["e0", "e1"] in d["points"]
    assert [["e0"], ["e1"]] in d["sets"]


def test_converge_family_interleaved(tmp_path, capsys):
    net = tmp_path / "net.json"
    net.write_text(
        json.dumps(
            {
                "index": "omega",
                "period": 2,
                "tracks": [{"kind": "ascend"}, {"kind": "const", "value": "a"}],
            }
        )
    )
    ideal = tmp_path / "ideal.json"
    ideal.write_text(json.dumps({"kind": "eventual"}))
    code, out, _ = run_cli(
        capsys,
        "converge",
        "--mode",
        "family",
        "--poset",
        "side_nat",
        "--net",
        str(net),
        "--ideal",
        str(ideal),
        "--point",
        "a",
    )
    d = json.loads(out)
    assert code == 0 and d["holds"] and d["witness"]["shape"] == "pair_schema"
    code, out, _ = run_cli(
        capsys,
        "converge",
        "--mode",
        "topo",
        "--topology",
        "lawson",
        "--poset",
        "side_nat",
        "--net",
        str(net),
        "--ideal",
        str(ideal),
        "--point",
        "a",
    )
    d = json.loads(out)
    assert code == 0 and not d["holds"]


def test_converge_finite_net(tmp_path, capsys):
    net = tmp_path / "net.json"
    net.write_text(
        json.dumps(
            {
                "index": {"name": "chain2", "elements": ["c0", "c1"], "le": [["c0", "c1"]]},
                "map": {"c0": "bot", "c1": "top"},
            }
        )
    )
    ideal = tmp_path / "ideal.json"
    ideal.write_text(json.dumps({"kind": "eventual"}))
    code, out, _ = run_cli(
        capsys,
        "converge",
        "--mode",
        "eventual",
        "--poset",
        "diamond",
        "--net",
        str(net),
        "--ideal",
        str(ideal),
        "--point",
        "top",
    )
    assert code == 0 and json.loads(out)["holds"]


def test_rudin_extraction(tmp_path, capsys):
    fam = tmp_path / "fam.json"
    fam.write_text(json.dumps({"sets": [["l", "r"], ["top"]]}))
    code, out, _ = run_cli(capsys, "rudin", "--poset", "diamond", "--family", str(fam))
    d = json.loads(out)
    assert code == 0
    assert d["directed_set"] == ["l", "top"]


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "sidenat", "--format", "json")
    assert code == 0 and json.loads(out)["failures"] == []
    code, out, _ = run_cli(capsys, "verify", "--suite", "_inject-failure")
    assert code == 1 and json.loads(out)["passed"] == 0
    code, _, err = run_cli(capsys, "verify", "--suite", "bogus")
    assert code == 2 and "unknown suite" in err


def test_verify_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("DOMAINCHECK_SEED", "99")
    code, out, _ = run_cli(capsys, "verify", "--suite", "_inject-failure")
    assert code == 1 and json.loads(out)["seed"] == 99
    code, out, _ = run_cli(capsys, "verify", "--suite", "_inject-failure", "--seed", "3")
    assert json.loads(out)["seed"] == 3


def test_missing_file_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys,
        "converge",
        "--mode",
        "family",
        "--poset",
        "diamond",
        "--net",
        "/nonexistent/net.json",
        "--ideal",
        "/nonexistent/ideal.json",
        "--point",
        "top",
    )
    assert code == 2 and err.startswith("error:")


def test_unknown_poset_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "classify", "--poset", "wat")
    assert code == 2 and "wat" in err
