import json

import pytest

from quotshrink.cli import analyze, main
from quotshrink import catalog as C

S5 = {"schema": 1, "degree": 5, "generators": ["(1 2 3 4 5)", "(1 2)"], "normal_generators": ["(1 2 3)", "(2 3 4)", "(3 4 5)"]}


@pytest.fixture
def s5_file(tmp_path):
    p = tmp_path / "s5.json"
    p.write_text(json.dumps(S5))
    return p


def test_reduce_text(s5_file, capsys):
    assert main(["reduce", str(s5_file), "--trace"]) == 0
    out = capsys.readouterr().out
    assert "m = 2" in out and "stage1" in out


def test_reduce_json_and_verify(s5_file, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert main(["reduce", str(s5_file), "--json", "-o", str(cert)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["m"] == 2 and doc["schema"] == 1
    assert main(["verify", str(cert)]) == 0
    doc["images"][0] = "(1 2)"
    cert.write_text(json.dumps(doc))
    assert main(["verify", str(cert)]) == 1
    assert "KernelMismatch" in capsys.readouterr().err


def test_min_degree_txt(tmp_path, capsys):
    p = tmp_path / "v4.txt"
    p.write_text("4\n(1 2)(3 4)\n(1 3)(2 4)\n")
    assert main(["min-degree", str(p), "--format", "txt"]) == 0
    assert capsys.readouterr().out.strip() == "P = 4"


def test_not_normal_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({**S5, "normal_generators": ["(1 2)"]}))
    assert main(["reduce", str(p)]) == 1
    assert "NotNormal" in capsys.readouterr().err


def test_malformed_input_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({**S5, "generators": ["(1 2 2)"]}))
    assert main(["reduce", str(p)]) == 1
    assert "MalformedCycles" in capsys.readouterr().err
    assert main(["reduce", str(tmp_path / "missing.json")]) == 1


def test_invariant_violation_exit_2(s5_file, monkeypatch, capsys):
    from quotshrink import quotient
    from quotshrink.errors import BoundViolation

    def boom(*a, **k):
        raise BoundViolation("forced")

    monkeypatch.setattr(quotient, "_check_bound", boom)
    assert main(["reduce", str(s5_file)]) == 2
    assert "BoundViolation" in capsys.readouterr().err


def test_batch(tmp_path, capsys):
    p = tmp_path / "batch.json"
    p.write_text(json.dumps([S5, {**S5, "normal_generators": ["(1 2)"]}]))
    assert main(["reduce", "--batch", str(p)]) == 1
    res = json.loads(capsys.readouterr().out)["results"]
    assert res[0]["ok"] and res[0]["result"]["m"] == 2
    assert not res[1]["ok"] and res[1]["error"] == "NotNormal"


def test_reduce_radical_and_analyze(tmp_path, capsys):
    doc = {
        "schema": 1,
        "degree": 10,
        "generators": ["(1 2 3 4 5)", "(1 2)", "(6 7 8 9 10)", "(6 7)"],
        "normal_generators": ["(1 2 3)", "(2 3 4)", "(3 4 5)", "(6 7 8)", "(7 8 9)", "(8 9 10)"],
    }
    p = tmp_path / "ss.json"
    p.write_text(json.dumps(doc))
    assert main(["reduce-radical", str(p), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["m"] <= 4
    assert main(["analyze", str(p), "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["transitive"] is False
    assert info["N"]["minimal_normal"] is False
    assert info["N"]["factor_orders"] == [60, 60]


def test_analyze_blocks():
    info = analyze(C.dihedral(6))
    assert info["primitive"] is False
    assert [[1, 4], [2, 5], [3, 6]] in info["minimal_block_systems"]


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    assert capsys.readouterr().out.count("PASS") >= 7


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(S5)))
    assert main(["reduce", "-", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["m"] == 2
