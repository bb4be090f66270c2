import io
import json
import subprocess
import sys

import pytest

from oddcycles.cli import parse_range, run
from oddcycles.constructions import t_star
from oddcycles.graph import from_graph6, to_graph6
from oddcycles.constructions import gamma2_bound


def call(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_t_star(capsys):
    code, out, _ = call(["construct", "t-star", "--r", "3", "--n", "10"], capsys)
    assert code == 0
    g = from_graph6(out.strip())
    assert g.m == 19 and g == t_star(3, 10)


def test_construct_needs_parameters(capsys):
    code, _, err = call(["construct", "t-star-star", "--n", "10"], capsys)
    assert code == 64 and "--b" in err


def test_analyze_c5_from_stdin(capsys, monkeypatch):
    code, out, _ = call(["analyze"], capsys, stdin="Dhc\n", monkeypatch=monkeypatch)
    assert code == 0
    row = json.loads(out)
    assert (row["odd_girth"], row["gamma2"], row["d2"]) == (5, 1, 1)
    assert row["spectrum"] == [5] and row["weakly_pancyclic"] is True


def test_analyze_from_file(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Bw\nDhc\n")
    code, out, _ = call(["analyze", "--file", str(path)], capsys)
    assert code == 0 and len(out.splitlines()) == 2


@pytest.mark.parametrize("r, n", [(3, 8), (4, 10), (5, 12), (6, 16)])
def test_analyze_t_star_shows_equality_values(capsys, r, n):
    code, out, _ = call(["analyze", to_graph6(t_star(r, n))], capsys)
    row = json.loads(out)
    assert row["d2"] == r - 2 and row["gamma2"] == gamma2_bound(r)
    assert row["longest_odd_cycle"] == (r if r % 2 else r - 1)


def test_bipartize_and_starter(capsys):
    code, out, _ = call(["bipartize", "Dhc", "--kind", "edge"], capsys)
    assert code == 0 and json.loads(out)["edge"]["size"] == 1
    code, out, _ = call(["starter", "D~{", "--r", "3", "--s", "1", "--k", "2"], capsys)
    assert code == 0 and json.loads(out)["starter"]["set"] == [0, 1, 2, 3, 4]


def test_verify_degree_c5(capsys):
    code, out, _ = call(["verify", "--lemma", "degree", "--host-length", "5"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["checked"] == 512 and report["violations"] == []
    assert report["elapsed_ms"] is None


def test_verify_timing_flag(capsys):
    _, out, _ = call(["verify", "--lemma", "degree", "--host-length", "5", "--timing"], capsys)
    assert isinstance(json.loads(out)["elapsed_ms"], int)


def test_search_violations_exit_1(capsys):
    code, out, _ = call(["search", "--target", "theorem6", "--n", "7", "--r", "3"], capsys)
    assert code == 1 and json.loads(out)["violations"]


def test_search_budget_exit_2(capsys):
    code, out, _ = call(["search", "--target", "theorem6", "--n", "8", "--r", "3", "--budget", "3"], capsys)
    assert code == 2 and json.loads(out)["complete"] is False


def test_error_exit_codes(capsys):
    assert call(["analyze", "A~x"], capsys)[0] == 65
    assert call(["frobnicate"], capsys)[0] == 64
    assert call(["verify", "--lemma", "degree", "--host-length", "6"], capsys)[0] == 64
    assert call(["search", "--target", "theorem6", "--n", "7", "--r", "9"], capsys)[0] == 64
    assert call(["verify"], capsys)[0] == 64
    assert call(["analyze", "--budget", "3", to_graph6(t_star(5, 12))], capsys)[0] == 2


def test_out_file_is_appended(capsys, tmp_path):
    path = tmp_path / "r.jsonl"
    for _ in range(2):
        assert call(["verify", "--lemma", "www", "--k", "2", "--out", str(path)], capsys)[0] == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 2 and lines[0] == lines[1]


def test_parse_range():
    assert parse_range("4-6") == [4, 5, 6]
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("6,8") == [6, 8]


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "oddcycles.cli", "construct", "complete-bipartite", "--a", "1", "--b", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "A_"
