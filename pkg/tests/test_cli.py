"""Command-line interface: determinism, exit codes, report shapes."""

from __future__ import annotations

import json

import pytest

import causalorder as co
from causalorder.cli import main


def run(*argv):
    return main(list(argv))


@pytest.fixture
def chain3_file(tmp_path, chain3):
    path = tmp_path / "chain3.json"
    path.write_text(json.dumps(co.causality_to_dict(chain3)))
    return str(path)


@pytest.fixture
def l33_file(tmp_path, l33):
    path = tmp_path / "l33.json"
    path.write_text(json.dumps(co.causality_to_dict(l33)))
    return str(path)


# ---------------------------------------------------------------------------
# sprinkle
# ---------------------------------------------------------------------------

def test_sprinkle_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["sprinkle", "--dim", "1", "--box", "0:1,0:1", "--n", "30", "--seed", "5"]
    assert run(*args, "--output", str(out1)) == 0
    assert run(*args, "--output", str(out2)) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_sprinkle_lattice_fixture(tmp_path, l33):
    out = tmp_path / "lat.json"
    assert run("sprinkle", "--dim", "1", "--box", "0:2,0:2", "--mode", "lattice",
               "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert len(doc["events"]) == 9
    c = co.causality_from_dict(doc["causality"])
    assert (c.relation == l33.relation).all()


def test_sprinkle_empty(tmp_path):
    out = tmp_path / "empty.json"
    assert run("sprinkle", "--dim", "1", "--box", "0:1,0:1", "--n", "0",
               "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["events"] == [] and doc["causality"]["points"] == []


def test_sprinkle_bad_box_is_usage_error(tmp_path):
    assert run("sprinkle", "--box", "zap", "--output", str(tmp_path / "x")) == 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_passing_suites(chain3_file, tmp_path):
    out = tmp_path / "report.jsonl"
    rc = run("verify", "--input", chain3_file, "--suite", "crossing,reversal",
             "--output", str(out))
    assert rc == 0
    lines = [json.loads(line) for line in out.read_text().splitlines()]
    assert lines[-1] == {"summary": {"all_hold": True}}
    assert any(entry.get("law") == "crossing-property" for entry in lines)


def test_verify_default_suites_fail_on_distributivity(chain3_file, tmp_path):
    out = tmp_path / "report.jsonl"
    rc = run("verify", "--input", chain3_file, "--output", str(out))
    assert rc == 2
    lines = [json.loads(line) for line in out.read_text().splitlines()]
    failing = [e["law"] for e in lines if e.get("verdict") == "fails"]
    assert any(law.startswith("IV[") or law.startswith("V[") for law in failing)
    # failures carry counterexamples
    bad = next(e for e in lines if e.get("verdict") == "fails" and e.get("counterexample"))
    assert bad["counterexample"]


def test_verify_measure_suite(chain3_file, tmp_path, chain3):
    mfile = tmp_path / "measure.json"
    mfile.write_text(json.dumps(co.constant_measure(chain3).to_dict()))
    rc = run("verify", "--input", chain3_file, "--suite", "measure-axioms,monotonicity",
             "--measure", str(mfile), "--output", str(tmp_path / "m.jsonl"))
    assert rc == 0


def test_verify_measure_suite_needs_measure(chain3_file):
    assert run("verify", "--input", chain3_file, "--suite", "measure-axioms") == 1


def test_verify_broken_relation_exits_2(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(
        {"points": ["a", "b", "c"], "relation": [[1, 1, 0], [0, 1, 1], [0, 0, 1]]}
    ))
    assert run("verify", "--input", str(path)) == 2


def test_verify_cap_exits_3(l33_file):
    assert run("verify", "--input", l33_file, "--max-n", "5") == 3


def test_verify_missing_file_exits_1():
    assert run("verify", "--input", "/definitely/not/here.json") == 1


def test_verify_unknown_suite_exits_1(chain3_file):
    assert run("verify", "--input", chain3_file, "--suite", "nope") == 1


# ---------------------------------------------------------------------------
# reconstruct
# ---------------------------------------------------------------------------

def test_reconstruct_l33(l33_file, tmp_path):
    out = tmp_path / "rec.json"
    assert run("reconstruct", "--input", l33_file, "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["domain"] == []
    assert doc["agreement"]["diffs"] == []
    assert doc["diagnostics"]["11"]["ribbon_pairs"] == 9


def test_reconstruct_empty_input(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"points": [], "relation": []}))
    out = tmp_path / "rec.json"
    assert run("reconstruct", "--input", str(path), "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["domain"] == [] and doc["relation"] == []


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------

def test_entropy_values(tmp_path):
    out = tmp_path / "e.json"
    assert run("entropy", "--t", "1", "--alpha", "1", "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert abs(doc["entropy"] - 12.56637) < 5e-6

    assert run("entropy", "--t", "2", "--alpha", "1", "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert abs(doc["entropy"] - 50.26548) < 5e-6


def test_entropy_bekenstein_hawking(tmp_path):
    import math

    out = tmp_path / "e.json"
    assert run("entropy", "--t", "2", "--bekenstein-hawking", "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["entropy_in_kB_over_lp2"] == math.pi * 4.0
    assert doc["alpha"] == 0.25


def test_entropy_with_mc_check(tmp_path):
    out = tmp_path / "e.json"
    assert run("entropy", "--t", "1", "--mc-samples", "200000", "--seed", "4",
               "--output", str(out)) == 0
    doc = json.loads(out.read_text())
    assert abs(doc["mc_entropy"] - doc["entropy"]) / doc["entropy"] < 0.02


def test_entropy_1plus1_apex_rejected(tmp_path):
    assert run("entropy", "--t", "1", "--apex", "0,0",
               "--output", str(tmp_path / "e.json")) == 2
