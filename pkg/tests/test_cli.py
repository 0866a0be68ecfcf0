import io
import json
import subprocess
import sys

import pytest

from planar_turan.cli import emit_report, main
from planar_turan.graph import from_graph6

PRISM = "6 9\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5\n"


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_verify_table():
    code, out, _ = run(["verify", "--pattern", "c3c3", "--n-max", "7", "--jobs", "1"])
    assert code == 0
    rows = [line.split() for line in out.splitlines()[2:]]
    assert [(int(r[0]), int(r[1])) for r in rows] == [(3, 3), (4, 6), (5, 9), (6, 11), (7, 13)]
    assert all(r[3] == "yes" for r in rows)


def test_verify_json_schema():
    code, out, _ = run(["verify", "--pattern", "c3c4", "--n-max", "5", "--json"])
    d = json.loads(out)
    assert code == 0
    assert {"command", "pattern", "rows", "elapsed_ms", "version"} <= set(d)
    assert set(d["rows"][0]) >= {"n", "computed", "formula", "match"}
    assert [r["computed"] for r in d["rows"]] == [3, 6, 9]


def test_verify_csv():
    code, out, _ = run(["verify", "--pattern", "2c3", "--n-max", "4", "--csv"])
    assert code == 0
    assert out.splitlines() == ["n,computed,formula,match,exact,discrepancy", "3,3,3,1,1,", "4,6,6,1,1,"]


def test_verify_union_reports_candidates():
    code, out, _ = run(["verify", "--pattern", "c3uc4", "--n-max", "5", "--json"])
    d = json.loads(out)
    assert code == 0
    assert d["rows"][-1]["candidates"] == {"corollary": 9, "cited": 9}
    assert d["rows"][-1]["discrepancy"] is False


def test_verify_budget_bracket_exits_one():
    code, out, _ = run(["verify", "--pattern", "c3c3", "--n-max", "3", "--budget", "0"])
    assert code == 1 and "NO" in out


def test_json_is_stable_modulo_elapsed():
    a = json.loads(run(["verify", "--pattern", "c3c3", "--n-max", "5", "--json"])[1])
    b = json.loads(run(["verify", "--pattern", "c3c3", "--n-max", "5", "--json"])[1])
    for d in (a, b):
        d.pop("elapsed_ms")
    assert a == b


def test_extremal_graph6():
    code, out, _ = run(["extremal", "--pattern", "c3c4", "--n", "10", "--format", "graph6"])
    g = from_graph6(out.strip())
    assert code == 0 and (g.n, g.m) == (10, 21)


def test_extremal_edgelist_and_small_n():
    code, out, _ = run(["extremal", "--pattern", "c3c3", "--n", "6"])
    assert code == 0 and out.splitlines()[0] == "6 11"
    code, out, _ = run(["extremal", "--pattern", "c3c3", "--n", "150"])
    assert code == 0 and out.splitlines()[0] == "150 370"
    assert run(["extremal", "--pattern", "c3c3", "--n", "150", "--format", "graph6"])[0] == 2
    assert run(["extremal", "--pattern", "theta4", "--n", "8"])[0] == 2
    assert run(["extremal", "--pattern", "c3c3", "--n", "2"])[0] == 2


def test_check(tmp_path):
    f = tmp_path / "prism.edges"
    f.write_text(PRISM)
    code, out, _ = run(["check", "--pattern", "c3c3", str(f)])
    assert code == 1 and out.startswith("NOT FREE")
    code, out, _ = run(["check", "--pattern", "c3c3", "--json", str(f)])
    assert json.loads(out)["witness"]["bridge"] == [0, 3]
    code, out, _ = run(["check", "--pattern", "c3c3", "--graph6"], stdin="DhC\n")
    assert code == 0 and out == "FREE\n"


def test_faces_json_for_k4():
    code, out, _ = run(["faces", "--graph6", "--json"], stdin="C~\n")
    d = json.loads(out)
    assert code == 0
    assert d["stats"]["f"] == {"3": 4} and d["stats"]["e3"] == 6 and d["stats"]["e33"] == 6
    assert d["stats"]["property1_ok"] is True


def test_faces_text_from_stdin():
    code, out, _ = run(["faces"], stdin="4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert code == 0 and "f4=2" in out and "property 1: ok" in out


def test_blocks():
    code, out, _ = run(["blocks", "--graph6"], stdin="D^{\n")
    assert code == 0
    assert "+3" in out and "bad" in out
    code, out, _ = run(["blocks", "--graph6", "--json"], stdin="C~\n")
    (b,) = json.loads(out)["blocks"]
    assert b["excess"] == 0
    code, out, _ = run(["blocks", "--graph6"], stdin="D~{\n")
    assert code == 1 and out == "NOT PLANAR\n"


def test_harness():
    code, out, _ = run(["harness", "--lemma", "rv", "--n-max", "5", "--json"])
    d = json.loads(out)
    assert code == 0 and d["violations"] == [] and d["examined"] > 0
    code, out, _ = run(["harness", "--lemma", "face_block_c34", "--n-max", "6"])
    assert code == 1 and "VIOLATION" in out


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["bogus"], ""),
        (["verify", "--pattern", "c3c3"], ""),
        (["verify", "--pattern", "c9c9", "--n-max", "5"], ""),
        (["verify", "--pattern", "c3c3", "--n-max", "12"], ""),
        (["verify", "--pattern", "c3c3", "--n-max", "5", "--jobs", "0"], ""),
        (["check", "--pattern", "c3c3", "/nonexistent/file"], ""),
        (["check", "--pattern", "c3c3"], "3 2\n0 1\n0 1\n"),
        (["faces", "--graph6"], "C~x\n"),
        (["harness", "--lemma", "lemma41", "--n-max", "9"], ""),
    ],
)
def test_usage_errors_exit_two(argv, stdin):
    code, _, err = run(argv, stdin)
    assert code == 2
    assert "error" in err


def test_input_error_mentions_line():
    _, _, err = run(["check", "--pattern", "c3c3"], "3 2\n0 1\n0 1\n")
    assert "line 3" in err


def test_emit_report_rejects_csv_for_other_commands():
    with pytest.raises(ValueError):
        emit_report({"command": "faces"}, io.StringIO(), "csv")


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "planar_turan", "extremal", "--pattern", "c3c3", "--n", "7", "--format", "graph6"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert p.returncode == 0 and from_graph6(p.stdout.strip()).m == 13


def test_turan_jobs_env(monkeypatch):
    from planar_turan.search import default_jobs

    monkeypatch.setenv("TURAN_JOBS", "3")
    assert default_jobs() == 3
