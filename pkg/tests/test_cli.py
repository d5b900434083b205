from __future__ import annotations

import json
import subprocess
import sys

import pytest

from stablecore.cli import main
from stablecore.formats import parse_edge_list, to_edge_list
from stablecore.graph import spider


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_p3_inline(self, capsys):
        code, out, _ = run(capsys, "analyze", "--edges", "3 2;0 1;1 2")
        assert code == 0
        d = json.loads(out)
        assert d["core"] == [0, 2] and d["pend"] == [0, 2] and d["core_pend"] == [0, 2]

    def test_p4_file(self, capsys, tmp_path):
        f = tmp_path / "p4.txt"
        f.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run(capsys, "analyze", str(f))
        assert code == 0 and json.loads(out)["has_perfect_matching"] is True

    def test_stdin(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "analyze", "-", stdin="3 2\n0 1\n1 2\n", monkeypatch=monkeypatch)
        assert code == 0 and json.loads(out)["alpha"] == 2

    def test_graph6_input(self, capsys):
        code, out, _ = run(capsys, "analyze", "--edges", "Bg")
        assert code == 0 and json.loads(out)["core"] == [0, 2]

    def test_output_file(self, capsys, tmp_path):
        f = tmp_path / "r.json"
        code, out, _ = run(capsys, "analyze", "--edges", "2 1;0 1", "-o", str(f))
        assert code == 0 and out == ""
        assert json.loads(f.read_text())["n"] == 2

    def test_malformed_line(self, capsys):
        code, _, err = run(capsys, "analyze", "--edges", "3 2;0 1;1 x")
        assert code == 2 and "line 3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "analyze", str(tmp_path / "nope"))
        assert code == 2 and "cannot read" in err

    def test_cycle(self, capsys):
        code, _, err = run(capsys, "analyze", "--edges", "3 3;0 1;1 2;0 2")
        assert code == 3 and "cycle found" in err

    def test_disconnected(self, capsys):
        code, _, err = run(capsys, "analyze", "--edges", "4 2;0 1;2 3")
        assert code == 3 and "disconnected" in err

    def test_two_sources_rejected(self, capsys, tmp_path):
        code, _, _ = run(capsys, "analyze", str(tmp_path / "x"), "--edges", "2 1;0 1")
        assert code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--bogus"])
        assert exc.value.code == 2


class TestVerify:
    def test_filtered(self, capsys):
        code, out, err = run(capsys, "verify", "--theorem", "th6", "--max-n", "6")
        assert code == 0
        (line,) = out.splitlines()
        assert json.loads(line)["theorem_id"] == "th6"
        assert "th6" in err

    def test_comma_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "th6,th7", "--max-n", "5")
        assert code == 0 and [json.loads(x)["theorem_id"] for x in out.splitlines()] == ["th6", "th7"]

    def test_counterexample_exit(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "even_dist", "--max-n", "5")
        assert code == 1
        rec = json.loads(out)
        assert rec["counterexample"]["edge_list"].startswith("5 4\n")

    def test_random_deterministic(self, capsys):
        argv = ["verify", "--random", "--n", "40", "--count", "30", "--seed", "7", "--theorem", "th6,th7,cor8"]
        _, a, _ = run(capsys, *argv)
        _, b, _ = run(capsys, *argv)
        assert a == b and a

    def test_output_puts_table_on_stdout(self, capsys, tmp_path):
        f = tmp_path / "v.jsonl"
        code, out, _ = run(capsys, "verify", "--theorem", "th6", "--max-n", "4", "-o", str(f))
        assert code == 0 and out.startswith("theorem")
        assert json.loads(f.read_text())["instances_checked"] == 1 + 3 + 16

    def test_unknown_theorem(self, capsys):
        code, _, err = run(capsys, "verify", "--theorem", "th99")
        assert code == 2 and "th99" in err

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "verify", "--max-n", "9")
        assert code == 2

    def test_n_needs_random(self, capsys):
        code, _, _ = run(capsys, "verify", "--n", "5")
        assert code == 2


class TestGenerateConvert:
    def test_spider(self, capsys):
        code, out, _ = run(capsys, "generate", "--spider", "3")
        assert code == 0 and parse_edge_list(out).edges == spider(3).edges
        assert out.startswith("7 6\n")

    def test_random(self, capsys):
        _, a, _ = run(capsys, "generate", "--random", "20", "5")
        _, b, _ = run(capsys, "generate", "--random", "20", "5")
        assert a == b and a.startswith("20 19\n")

    def test_prufer(self, capsys):
        code, out, _ = run(capsys, "generate", "--prufer", "3,3,3", "--to", "json")
        assert code == 0 and json.loads(out)["n"] == 5

    def test_bad_prufer(self, capsys):
        code, _, _ = run(capsys, "generate", "--prufer", "9 9")
        assert code == 2

    def test_roundtrip(self, capsys, monkeypatch):
        text = to_edge_list(spider(4))
        _, g6, _ = run(capsys, "convert", "-", "--to", "graph6", stdin=text, monkeypatch=monkeypatch)
        _, back, _ = run(capsys, "convert", "-", "--to", "edge-list", stdin=g6, monkeypatch=monkeypatch)
        assert back == text

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "convert", "--edges", "3 2;0 1;1 2", "--to", "dot")
        assert code == 0 and "0 [shape=box, style=filled];" in out

    def test_convert_non_tree(self, capsys):
        code, out, _ = run(capsys, "convert", "--edges", "3 3;0 1;1 2;0 2", "--to", "graph6")
        assert code == 0 and out == "Bw\n"


class TestSearch:
    def test_distribution(self, capsys):
        code, out, err = run(capsys, "search", "--k-rule", "min-bipartition", "--max-n", "6", "--max-candidates", "2")
        assert code == 0
        d = json.loads(out)
        assert d["k_rule"] == "min_bipartition" and len(d["candidates"]) <= 2
        assert "pendants" in err

    def test_both_rules(self, capsys):
        _, out, _ = run(capsys, "search", "--max-n", "5")
        assert [json.loads(x)["k_rule"] for x in out.splitlines()] == ["half_n", "min_bipartition"]


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "stablecore.cli", "generate", "--spider", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.startswith("5 4\n")
