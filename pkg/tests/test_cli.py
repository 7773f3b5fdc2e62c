import io
import json
import subprocess
import sys

import pytest

from chiy.cli import OutputRecord, main
from chiy.catalog import parse_builtin


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


class TestCompute:
    def test_cp2_text(self):
        code, text = run("compute", "--manifold", "cp:2")
        assert code == 0
        assert "1 - y + y^2" in text
        assert "todd       1" in text and "euler      3" in text and "signature  1" in text

    def test_k3_json(self):
        code, text = run("compute", "--manifold", "hyp:2:4", "--json")
        doc = json.loads(text)
        assert code == 0
        assert doc["name"] == "hyp:2:4" and doc["dim"] == 2
        assert doc["chi_y"] == ["2", "-20", "2"]
        assert (doc["euler"], doc["signature"], doc["todd"]) == ("24", "-16", "2")
        assert doc["checks"] == {"serre": True, "euler_top_chern": True, "hodge_oracle": True}

    def test_missing_file(self, tmp_path):
        assert run("compute", "--spec-file", str(tmp_path / "missing.json"))[0] == 2

    def test_spec_file(self, tmp_path):
        path = tmp_path / "k3.json"
        path.write_text(json.dumps({"kind": "explicit", "dim": 2, "chern": {"1,1": 0, "2": 24}, "name": "K3"}))
        code, text = run("compute", "--spec-file", str(path), "--json")
        doc = json.loads(text)
        assert code == 0 and doc["name"] == "K3" and doc["chi_y"] == ["2", "-20", "2"]
        assert doc["checks"]["hodge_oracle"] is None

    def test_invalid_spec_names_field(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"kind": "explicit", "dim": 2, "chern": {"3": 1}}))
        assert run("compute", "--spec-file", str(path))[0] == 1
        assert "chern" in capsys.readouterr().err

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run("compute", "--spec-file", str(path))[0] == 1

    @pytest.mark.parametrize("argv", [
        ["compute"],
        ["compute", "--manifold", "cp:1", "--spec-file", "x.json"],
        ["compute", "--manifold", "cp:-1"],
        ["compute", "--manifold", "blob:3"],
        ["frobnicate"],
        [],
    ])
    def test_usage_errors_exit_1(self, argv):
        assert run(*argv)[0] == 1

    def test_rational_strings(self, tmp_path):
        # c_1 = 1 on a curve is not realized by a manifold; chi_y = (1 - y)/2
        path = tmp_path / "odd.json"
        path.write_text(json.dumps({"kind": "explicit", "dim": 1, "chern": {"1": 1}}))
        code, text = run("compute", "--spec-file", str(path), "--json")
        doc = json.loads(text)
        assert code == 0 and doc["chi_y"] == ["1/2", "-1/2"] and doc["todd"] == "1/2"

    @pytest.mark.parametrize("ident", ["cp:0", "cp:3", "hyp:3:5", "prod:cp:1:hyp:2:4", "prod:hyp:1:3:hyp:1:4"])
    def test_json_round_trip(self, ident):
        _, text = run("compute", "--manifold", ident, "--json")
        record = OutputRecord.from_json(json.loads(text))
        assert record == OutputRecord.from_spec(parse_builtin(record.name))
        assert record.to_json() == json.loads(text)


class TestVerify:
    def test_symbolic(self):
        code, text = run("verify", "--suite", "symbolic")
        assert code == 0 and "FAIL" not in text and text.count("[PASS]") == 9

    def test_modesum(self):
        code, text = run("verify", "--suite", "modesum", "--n-max", "1000")
        assert code == 0
        assert "ratio" in text and "1.99" in text

    def test_bogus_suite(self, capsys):
        assert run("verify", "--suite", "bogus")[0] == 1
        assert "unknown suite" in capsys.readouterr().err

    def test_failed_invariant_exits_1(self, monkeypatch, capsys):
        import chiy.cli as cli
        monkeypatch.setattr(cli, "symbolic_checks", lambda: [("always fails", lambda: False)])
        code, text = run("verify", "--suite", "symbolic")
        assert code == 1 and "[FAIL] always fails" in text
        assert "always fails" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chiy", "compute", "--manifold", "cp:2", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["chi_y"] == ["1", "-1", "1"]
