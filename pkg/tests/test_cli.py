import io
import json
import os
import subprocess
import sys

import pytest

from neutro.expr.cli import _Out, main
from neutro.graph import SAMPLE_COGNITIVE_MAP, NeutroAdjacency


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_ok(self, capsys):
        assert cli(capsys, "eval", "(0.3,0.4,0.2) -> (0.7,0.1,0.4)") == (0, "(0.7,0.1,0.3)\n", "")

    def test_flags(self, capsys):
        code, out, _ = cli(capsys, "eval", "--conj", "v2", "I & F")
        assert (code, out) == (0, "F\n")
        code, out, _ = cli(capsys, "--order", "F>I>T", "eval", "(1+T)*(1+F)")
        assert (code, out) == (0, "1+T+2F\n")

    def test_exit_codes(self, capsys):
        code, _, err = cli(capsys, "eval", "anti(")
        assert code == 1 and "1:6" in err
        code, _, err = cli(capsys, "eval", "I/I")
        assert code == 2 and "undefined" in err
        code, _, err = cli(capsys, "eval", "--order", "T>X", "I")
        assert code == 3

    def test_json(self, capsys):
        code, out, _ = cli(capsys, "--json", "eval", "(2+5I)*(1+I)")
        rec = json.loads(out)
        assert code == 0
        assert rec["input"] == "(2+5I)*(1+I)"
        assert rec["value"] == "2+12I"
        assert rec["value_kind"] == "neutro"
        assert len(rec["config_fingerprint"]) == 12

    def test_json_error(self, capsys):
        code, out, _ = cli(capsys, "eval", "--json", "I/I")
        assert code == 2
        assert json.loads(out)["error_kind"] == "eval"


class TestBatch:
    SCRIPT = "# comment\n(1+T)*(1+F) => 1+2T+F\n:conj v2\nI & F\nI/I\n1+1\n"

    def test_stops_at_first_error(self, capsys, tmp_path):
        p = tmp_path / "in.nx"
        p.write_text(self.SCRIPT)
        code, out, err = cli(capsys, "batch", str(p))
        assert code == 2
        assert out.splitlines() == ["(1+T)*(1+F) => 1+2T+F", "I & F => F"]
        assert "I/I => error: undefined" in err

    def test_keep_going(self, capsys, tmp_path):
        p = tmp_path / "in.nx"
        p.write_text(self.SCRIPT)
        code, out, err = cli(capsys, "batch", "--keep-going", str(p))
        assert code == 2
        assert out.splitlines()[-1] == "1+1 => 2"
        assert "# 1 checked, 1 failed" in err

    def test_mismatch(self, capsys, tmp_path):
        p = tmp_path / "in.nx"
        p.write_text("5 => 6\n")
        code, _, err = cli(capsys, "batch", str(p))
        assert code == 2 and "mismatch: got 5, expected 6" in err

    def test_parse_error_code(self, capsys, tmp_path):
        p = tmp_path / "in.nx"
        p.write_text("(1+\n")
        assert cli(capsys, "batch", str(p))[0] == 1

    def test_bad_command_code(self, capsys, tmp_path):
        p = tmp_path / "in.nx"
        p.write_text(":order nonsense\n1\n")
        assert cli(capsys, "batch", str(p))[0] == 3

    def test_missing_file(self, capsys, tmp_path):
        assert cli(capsys, "batch", str(tmp_path / "nope.nx"))[0] == 3

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("I*I\n"))
        assert cli(capsys, "batch", "-") == (0, "I*I => I\n", "")

    def test_selftest(self, capsys):
        code, out, err = cli(capsys, "selftest")
        assert code == 0
        assert "0 failed" in err


class TestRepl:
    def test_session(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(":conj v2\nI & F\n:show config\nanti(\n:quit\nT\n"))
        code, out, err = cli(capsys, "repl")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "F"
        assert "literal and v2" in out
        assert "syntax error" in err
        assert lines[-1] != "T"


class TestTablesAndGraphs:
    def test_table(self, capsys):
        code, out, _ = cli(capsys, "table", "and-v1")
        assert code == 0
        assert out.splitlines()[0].split() == ["and", "T", "I", "F"]

    def test_unknown_table(self, capsys):
        assert cli(capsys, "table", "bogus")[0] == 3

    def test_graph(self, capsys, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text(SAMPLE_COGNITIVE_MAP.render())
        assert cli(capsys, "graph", str(p)) == (0, "valid, directed, n=7\n", "")

    def test_invalid_graph(self, capsys, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text(NeutroAdjacency(((0, 2), (2, 0))).render())
        code, out, _ = cli(capsys, "graph", str(p))
        assert code == 2 and out.startswith("invalid")
        assert cli(capsys, "graph", "--loose", str(p))[0] == 0


class _Tty(io.StringIO):
    def isatty(self):
        return True


class TestColor:
    def test_errors_colored_on_tty(self, monkeypatch):
        monkeypatch.delenv("NO_COLOR", raising=False)
        err = _Tty()
        _Out(False, io.StringIO(), err).error("boom")
        assert err.getvalue() == "\033[31mboom\033[0m\n"

    def test_no_color_env(self, monkeypatch):
        monkeypatch.setenv("NO_COLOR", "1")
        err = _Tty()
        _Out(False, io.StringIO(), err).error("boom")
        assert err.getvalue() == "boom\n"


def test_module_entry_point():
    env = dict(os.environ, NO_COLOR="1")
    res = subprocess.run(
        [sys.executable, "-m", "neutro", "eval", "anti(I)"], capture_output=True, text=True, env=env, check=False
    )
    assert res.returncode == 0
    assert res.stdout == "T|F\n"
