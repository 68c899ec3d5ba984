import io
import json
import subprocess
import sys

import pytest

from patternclass.cli import run
from patternclass.graph import cycle_graph, path_graph
from patternclass.io import emit_edge_list, encode_graph6
from patternclass.ordered import OccurrenceWitness
from patternclass.recognizers import RecognitionResult


def cli(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "p4": write("p4.txt", emit_edge_list(path_graph(4))),
        "k13": write("k13.txt", "4\n0 3\n1 3\n2 3\n"),
        "c4": write("c4.txt", emit_edge_list(cycle_graph(4))),
        "c5": write("c5.txt", emit_edge_list(cycle_graph(5))),
        "loop": write("loop.txt", "3\n0 1\n0 0\n"),
        "batch": write("batch.g6", encode_graph6(path_graph(4)) + "\n" + encode_graph6(cycle_graph(4)) + "\n"),
    }


def test_check_p4_violation(files):
    code, out, _ = cli("check", "--graph", files["p4"], "--ordering", "0,1,2,3", "--family", "4,3")
    assert code == 1
    assert "co-Chordal" in out and "[1, 2, 4]" in out and "[0, 1, 3]" in out


def test_check_json_witness_round_trips(files):
    code, out, _ = cli("check", "--graph", files["p4"], "--ordering", "0,1,2,3", "--family", "4,3", "--format", "json")
    rec = json.loads(out)
    assert code == 1 and rec["avoids"] is False
    w = OccurrenceWitness.from_dict(rec["witness"])
    assert w.positions == (1, 2, 4) and w.vertices == (0, 1, 3)


def test_check_avoids(files):
    code, out, _ = cli("check", "--graph", files["p4"], "--ordering", "1,0,2,3", "--family", "Chordal")
    assert code == 0 and out.strip() == "avoids"


def test_recognize_star(files):
    code, out, _ = cli("recognize", "--graph", files["k13"], "--class", "star")
    assert code == 0 and "member" in out and "certificate 0 1 2 3" in out


def test_recognize_json_lossless(files):
    code, out, _ = cli("--format", "json", "recognize", "--graph", files["c4"], "--class", "chordal")
    assert code == 1
    res = RecognitionResult.from_dict(json.loads(out))
    assert not res.is_member and res.witness is not None
    assert res.to_dict() == json.loads(out)


def test_text_and_json_agree(files):
    for cls in ("chordal", "co-chordal", "bipartite", "threshold", "interval"):
        code_t, text, _ = cli("recognize", "--graph", files["c4"], "--class", cls)
        code_j, js, _ = cli("recognize", "--graph", files["c4"], "--class", cls, "--format", "json")
        assert code_t == code_j
        assert json.loads(js)["verdict"] in text


def test_recognize_complement_flag(files):
    code, out, _ = cli("recognize", "--graph", files["c4"], "--class", "chordal", "--complement")
    assert code == 0 and out.startswith("co-chordal")


def test_self_loop_is_parse_error(files):
    code, out, err = cli("recognize", "--graph", files["loop"], "--class", "chordal")
    assert code == 2 and out == "" and "line 3: self-loop at vertex 0" in err


def test_usage_errors(files):
    assert cli()[0] == 2
    assert cli("recognize", "--graph", files["c4"])[0] == 2
    assert cli("recognize", "--graph", files["c4"], "--class", "planar")[0] == 2
    assert cli("check", "--graph", files["c4"], "--ordering", "0,1", "--family", "4")[0] == 2
    assert cli("check", "--graph", files["c4"], "--ordering", "0,1,2,3", "--family", "banana")[0] == 2
    assert cli("search", "--graph", files["c4"], "--kind", "astar")[0] == 2
    assert cli("color", "--graph", files["c4"], "--word", "EX")[0] == 2
    assert cli("chromatic")[0] == 2
    code, _, err = cli("classify", "--graph", "/nonexistent/file")
    assert code == 2 and "cannot read" in err


def test_search(files):
    code, out, _ = cli("search", "--graph", files["p4"], "--kind", "bfs", "--start", "0")
    assert code == 0 and out.strip() == "0 1 2 3"
    code, out, _ = cli("search", "--graph", files["p4"], "--kind", "lexbfs", "--start", "0", "--sweeps", "3",
                       "--trace", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and sorted(rec["ordering"]) == [0, 1, 2, 3] and len(rec["trace"]) == 4


def test_classify(files):
    code, out, _ = cli("classify", "--graph", files["c4"], "--format", "json")
    rows = json.loads(out)["classes"]
    assert code == 0 and len(rows) == 44
    verdicts = {(r["class"], r["complemented"]): r["verdict"] for r in rows}
    assert verdicts[("chordal", False)] == "non-member" and verdicts[("chordal", True)] == "member"


def test_oracle(files):
    assert cli("oracle", "--graph", files["c4"], "--family", "4")[0] == 1
    code, out, _ = cli("oracle", "--graph", files["p4"], "--family", "4")
    assert code == 0 and out.startswith("member; ordering")
    assert cli("oracle", "--graph", files["p4"], "--family", "4", "--limit", "3")[0] == 2


def test_oracle_limit_env(files, monkeypatch):
    monkeypatch.setenv("PATTERNCLASS_ORACLE_LIMIT", "3")
    assert cli("oracle", "--graph", files["p4"], "--family", "4")[0] == 2
    monkeypatch.setenv("PATTERNCLASS_ORACLE_LIMIT", "x")
    assert cli("oracle", "--graph", files["p4"], "--family", "4")[0] == 2


def test_color_and_chromatic(files):
    assert cli("color", "--graph", files["c5"], "--word", "EE")[:2] == (1, "none\n")
    code, out, _ = cli("color", "--graph", files["c5"], "--word", "EEN", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and [p["kind"] for p in rec["coloring"]] == ["independent", "independent", "clique"]
    assert cli("chromatic", "--graph", files["c5"])[:2] == (0, "3\n")
    assert cli("chromatic", "--graph", files["c5"], "--via-orderings")[:2] == (0, "3\n")


def test_listings():
    code, out, _ = cli("families", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 87 and [r["index"] for r in rows] == list(range(87, 0, -1))
    assert {"index", "bits", "patterns", "label", "convention"} <= set(rows[0])
    code, out, _ = cli("families", "--order", "ascending")
    assert code == 0 and len(out.strip().splitlines()) == 87
    code, out, _ = cli("patterns")
    assert code == 0 and "Interval" in out and len(out.strip().splitlines()) >= 27


def test_stdin_and_env_format(monkeypatch):
    monkeypatch.setenv("PATTERNCLASS_FORMAT", "json")
    code, out, _ = cli("recognize", "--graph", "-", "--class", "forest", stdin="3\n0 1\n1 2\n", monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["verdict"] == "member"
    monkeypatch.setenv("PATTERNCLASS_FORMAT", "yaml")
    assert cli("patterns")[0] == 2


def test_flags_before_and_after_subcommand(files):
    a = cli("--graph", files["c4"], "--format", "json", "recognize", "--class", "bipartite")
    b = cli("recognize", "--class", "bipartite", "--graph", files["c4"], "--format", "json")
    assert a == b and a[0] == 0


def test_batch(files):
    code, out, _ = cli("recognize", "--graph", files["batch"], "--class", "chordal")
    lines = out.strip().splitlines()
    assert code == 1 and lines[0].startswith("[0] chordal: member") and lines[1].startswith("[1] chordal: non-member")
    code, out, _ = cli("recognize", "--graph", files["batch"], "--class", "bipartite", "--format", "json")
    assert code == 0 and [r["graph"] for r in json.loads(out)] == [0, 1]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "patternclass", "recognize", "--graph", files["k13"], "--class", "star"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "certificate" in proc.stdout
