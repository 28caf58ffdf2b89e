import json
import subprocess
import sys

import pytest

from balance_lab.cli import main
from balance_lab.coloring import ListColoring


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def split_file(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "split", "--n", "12", "--k", "2")
    assert code == 0
    p = tmp_path / "split.json"
    p.write_text(out)
    return p


def test_named_and_girth(capsys):
    code, out, _ = run(capsys, "named", "bull")
    assert code == 0 and json.loads(out)["m"] == 5
    code, out, _ = run(capsys, "girth", "p4")
    assert out.strip() == "inf"
    code, out, _ = run(capsys, "girth", "c7")
    assert out.strip() == "7"


def test_half_family(capsys):
    code, out, _ = run(capsys, "half-family", "k5")
    assert code == 0 and json.loads(out)["count"] == 6


def test_ex(capsys):
    code, out, _ = run(capsys, "ex", "--n", "6", "--family", "c3c4c5")
    assert json.loads(out)["value"] == 6


def test_find_balanced_none_exit_code(capsys, split_file):
    code, out, _ = run(capsys, "find-balanced", "--coloring", str(split_file), "--target", "c8")
    assert code == 3 and json.loads(out)["found"] is False


def test_find_balanced_witness(capsys, tmp_path):
    p = tmp_path / "rb.json"
    p.write_text(ListColoring.uniform(6, "rb").to_json())
    code, out, _ = run(capsys, "find-balanced", "--coloring", str(p), "--target", "c6", "--workers", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data["witness"]["edges"]) == 6


def test_oracles(capsys):
    code, out, _ = run(capsys, "bal-exact", "--n", "5", "--target", "c4")
    assert json.loads(out)["value"] == 1
    code, out, _ = run(capsys, "lbal-exact", "--n", "5", "--target", "k5")
    assert json.loads(out)["value"] == 4
    code, _, err = run(capsys, "bal-exact", "--n", "9", "--target", "c4")
    assert code == 2 and "24" in err


def test_construct_round_trip(capsys):
    for argv in (["split", "--n", "8", "--k", "2"], ["clique-split", "--n", "6", "--a", "0"],
                 ["typeb", "--n", "10", "--t", "4", "--rb", "0,1;8,9"], ["single-edge", "--n", "5"],
                 ["k5", "--n", "30", "--eps", "0.5"]):
        code, out, _ = run(capsys, "construct", *argv)
        assert code == 0
        c = ListColoring.from_json(out)
        assert ListColoring.from_json(c.to_json()) == c
    code, _, _ = run(capsys, "construct", "typeb", "--n", "10", "--t", "4", "--rb", "0,11")
    assert code == 2


def test_engine(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "typeb", "--n", "12", "--t", "4", "--rb", "0,1")
    p = tmp_path / "tb.json"
    p.write_text(out)
    code, out, _ = run(capsys, "engine", "c4k2", "--coloring", str(p), "--k", "1")
    data = json.loads(out)
    assert code == 0 and data["case"] == "case2.1" and not data["fallback"]
    code, out, _ = run(capsys, "engine", "odd", "--coloring", str(p), "--k", "1", "--alpha", "1")
    assert code == 0 and json.loads(out)["case"] == "path-closure"


def test_engine_none(capsys, split_file):
    code, out, _ = run(capsys, "engine", "c4k", "--coloring", str(split_file), "--k", "2")
    assert code == 3 and json.loads(out)["case"] == "none"


def test_formulas(capsys):
    code, out, _ = run(capsys, "formula", "k5", "--n", "100", "--eps", "0.1")
    data = json.loads(out)
    assert code == 0 and data["lower"] < data["upper"]
    code, out, _ = run(capsys, "formula", "structural", "--n", "6", "--ex", "6")
    assert json.loads(out)["value"] == "21/2"
    code, out, _ = run(capsys, "formula", "c4k", "--n", "20", "--k", "2")
    assert json.loads(out) == {"formula": "c4k", "lower": 19, "upper_strict": 74}
    code, out, _ = run(capsys, "formula", "lf-ex", "--n", "10", "--orders", "3,3")
    assert json.loads(out)["value"] == 10


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "thm4.2", "--n", "7")
    rep = json.loads(out)
    assert code == 0 and rep["first_detail"]["ex_half_k5"] == 7 and rep["seed_source"] == "auto"
    code, out1, _ = run(capsys, "verify", "--claim", "thm3.5", "--n", "12", "--trials", "5", "--seed", "9")
    code, out2, _ = run(capsys, "verify", "--claim", "thm3.5", "--n", "12", "--trials", "5", "--seed", "9",
                        "--workers", "2")
    assert out1 == out2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--claim", "nope", "--n", "5"])
    assert exc.value.code == 2


def test_export_dot(capsys, tmp_path, split_file):
    code, out, _ = run(capsys, "export-dot", "--coloring", str(split_file))
    assert out.count("color=red") == 11 and out.count("color=blue") == 55
    p = tmp_path / "rb.json"
    p.write_text(ListColoring.uniform(4, "rb").to_json())
    code, out, _ = run(capsys, "find-balanced", "--coloring", str(p), "--target", "c4")
    w = tmp_path / "w.json"
    w.write_text(out)
    code, out, _ = run(capsys, "export-dot", "--coloring", str(p), "--witness", str(w), "--target", "c4")
    assert out.count("color=purple") == 6 and out.count("penwidth=2") == 4


def test_stats(capsys, split_file):
    code, out, _ = run(capsys, "stats", "--coloring", str(split_file))
    assert json.loads(out)["red_size"] == 11


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "balance_lab", "formula", "bal-odd", "--n", "100", "--k", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["value"] == "100"
