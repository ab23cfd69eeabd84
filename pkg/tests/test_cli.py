"""Command-line surface: flags, exit codes, stdout/stderr discipline."""

import json

import pytest

from clecc import parse_edge_list, write_edge_list
from clecc.cli import cli_main
from conftest import toy2

BARBELL_CSV = """\
source,target,layer
a,b,l1
b,a,l1
a,c,l1
c,a,l1
b,c,l1
c,b,l1
d,e,l1
e,d,l1
d,f,l1
f,d,l1
e,f,l1
f,e,l1
c,d,l1
d,c,l1
"""


@pytest.fixture
def barbell_csv(tmp_path):
    path = tmp_path / "barbell.csv"
    path.write_text(BARBELL_CSV)
    return str(path)


@pytest.fixture
def toy2_csv(tmp_path):
    path = tmp_path / "toy2.csv"
    path.write_text(write_edge_list(toy2()))
    return str(path)


def test_detect_barbell(barbell_csv, capsys):
    code = cli_main(
        ["detect", "--input", barbell_csv, "--alpha", "1", "--validity", "min-size:3"]
    )
    out = capsys.readouterr()
    assert code == 0
    doc = json.loads(out.out)
    assert [g["nodes"] for g in doc["groups"]] == [["a", "b", "c"], ["d", "e", "f"]]
    assert doc["removals"] == []  # --log-removals not given


def test_detect_log_removals(barbell_csv, capsys):
    code = cli_main(
        [
            "detect", "--input", barbell_csv, "--alpha", "1",
            "--validity", "min-size:3", "--log-removals",
        ]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["removals"][0]["pair"] == ["c", "d"]


def test_detect_alpha_out_of_range(tmp_path, capsys):
    path = tmp_path / "three_layer.csv"
    path.write_text("a,b,l1\na,b,l2\na,b,l3\n")
    code = cli_main(["detect", "--input", str(path), "--alpha", "5"])
    out = capsys.readouterr()
    assert code == 2
    assert out.out == ""  # no partial results on stdout
    assert "[1, 3]" in out.err


def test_detect_random_needs_seed(barbell_csv, capsys):
    code = cli_main(["detect", "--input", barbell_csv, "--alpha", "1", "--ties", "random"])
    out = capsys.readouterr()
    assert code == 1
    assert out.out == ""
    assert "--seed" in out.err


def test_detect_seed_without_random(barbell_csv, capsys):
    code = cli_main(["detect", "--input", barbell_csv, "--alpha", "1", "--seed", "3"])
    assert code == 1


def test_detect_output_file(barbell_csv, tmp_path, capsys):
    dest = tmp_path / "result.json"
    code = cli_main(
        [
            "detect", "--input", barbell_csv, "--alpha", "1",
            "--validity", "min-size:3", "--output", str(dest),
        ]
    )
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(dest.read_text())["alpha"] == 1


def test_detect_oracle_flag(barbell_csv, capsys):
    code = cli_main(
        [
            "detect", "--input", barbell_csv, "--alpha", "1",
            "--validity", "min-size:3", "--oracle",
        ]
    )
    out = capsys.readouterr()
    assert code == 0
    assert "oracle check passed" in out.err


def test_detect_missing_input_file(tmp_path, capsys):
    code = cli_main(["detect", "--input", str(tmp_path / "nope.csv"), "--alpha", "1"])
    assert code == 2


def test_detect_dedupe(tmp_path, capsys):
    path = tmp_path / "dup.csv"
    path.write_text("x,y,l1\nx,y,l1\ny,x,l1\n")
    code = cli_main(["detect", "--input", str(path), "--alpha", "1", "--dedupe"])
    out = capsys.readouterr()
    assert code == 0
    assert "1 duplicate" in out.err


def test_detect_delimiter(tmp_path, capsys):
    path = tmp_path / "semi.csv"
    path.write_text("a;b;l1\nb;a;l1\n")
    code = cli_main(
        ["detect", "--input", str(path), "--alpha", "1", "--delimiter", ";"]
    )
    assert code == 0


def test_measure_pair(toy2_csv, capsys):
    code = cli_main(["measure", "--input", toy2_csv, "--alpha", "2", "--pair", "x,y"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "0.0\n"


def test_measure_table(toy2_csv, capsys):
    code = cli_main(["measure", "--input", toy2_csv, "--alpha", "2"])
    out = capsys.readouterr()
    assert code == 0
    lines = out.out.strip().split("\n")
    assert lines[0] == "x,y,clecc"
    assert lines[1:] == ["u,x,0.0", "x,y,0.0"]


def test_measure_oracle(toy2_csv, capsys):
    code = cli_main(["measure", "--input", toy2_csv, "--alpha", "2", "--oracle"])
    assert code == 0


def test_measure_unknown_pair(toy2_csv, capsys):
    code = cli_main(["measure", "--input", toy2_csv, "--alpha", "1", "--pair", "x,zz"])
    out = capsys.readouterr()
    assert code == 2
    assert out.out == ""


def test_generate_planted_round_trip(tmp_path, capsys):
    edge_file = tmp_path / "net.csv"
    truth_file = tmp_path / "truth.json"
    code = cli_main(
        [
            "generate", "planted", "--sizes", "6,6", "--layers", "2",
            "--p-in", "0.9", "--p-out", "0.1", "--seed", "5",
            "--output", str(edge_file), "--truth", str(truth_file),
        ]
    )
    assert code == 0
    net = parse_edge_list(edge_file.read_text()).network
    assert net.node_count == 12
    truth = json.loads(truth_file.read_text())
    assert [g["id"] for g in truth["groups"]] == [0, 1]


def test_generate_planted_bad_probability(tmp_path, capsys):
    code = cli_main(
        [
            "generate", "planted", "--sizes", "4", "--layers", "1",
            "--p-in", "1.5", "--p-out", "0.1", "--seed", "5",
            "--output", str(tmp_path / "x.csv"),
        ]
    )
    assert code == 1


def test_generate_scenario4(tmp_path):
    dest = tmp_path / "scenario.csv"
    code = cli_main(["generate", "scenario4", "--seed", "7", "--output", str(dest)])
    assert code == 0
    # 110k edge lines plus header
    assert sum(1 for _ in dest.open()) == 110_001


def test_eval_nmi(tmp_path, capsys):
    truth = tmp_path / "truth.json"
    predicted = tmp_path / "pred.json"
    truth.write_text(json.dumps({"groups": [{"id": 0, "nodes": ["a", "b"]}], "singletons": ["c"]}))
    predicted.write_text(json.dumps({"groups": [{"id": 0, "nodes": ["a", "b"]}], "singletons": ["c"]}))
    code = cli_main(["eval", "nmi", "--truth", str(truth), "--predicted", str(predicted)])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "1.0\n"


def test_eval_nmi_domain_mismatch(tmp_path, capsys):
    truth = tmp_path / "truth.json"
    predicted = tmp_path / "pred.json"
    truth.write_text(json.dumps({"groups": [], "singletons": ["a", "b"]}))
    predicted.write_text(json.dumps({"groups": [], "singletons": ["a"]}))
    code = cli_main(["eval", "nmi", "--truth", str(truth), "--predicted", str(predicted)])
    out = capsys.readouterr()
    assert code == 2
    assert out.out == ""


def test_unicode_labels_round_trip(tmp_path, capsys):
    # an isolated dyad always dissolves: its pair is removed (value 1.0
    # by the 0/0 convention) and both size-1 sides become singletons
    path = tmp_path / "uni.csv"
    path.write_text("ánna,– bob –,приязнь\n– bob –,ánna,приязнь\n", encoding="utf-8")
    code = cli_main(["detect", "--input", str(path), "--alpha", "1", "--validity", "min-size:2"])
    out = capsys.readouterr()
    assert code == 0
    doc = json.loads(out.out)
    assert doc["groups"] == []
    assert doc["singletons"] == sorted(["ánna", "– bob –"])


def test_detect_empty_input(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    path.write_text("# nothing but comments\n")
    code = cli_main(["detect", "--input", str(path), "--alpha", "1"])
    out = capsys.readouterr()
    assert code == 2
    assert out.out == ""


def test_unknown_flag(capsys):
    assert cli_main(["detect", "--nope"]) == 1


def test_missing_command(capsys):
    code = cli_main([])
    out = capsys.readouterr()
    assert code == 1
    assert out.out == ""


def test_help_exits_zero(capsys):
    assert cli_main(["--help"]) == 0
