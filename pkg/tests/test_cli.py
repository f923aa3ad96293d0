import json
import subprocess
import sys

from heckesym.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_verify_builtin_dj3(capsys):
    code, doc = run_cli(capsys, "verify", "--builtin", "dj", "--dim", "3")
    assert code == 0
    assert doc["ok"] is True
    assert {c["name"] for c in doc["checks"]} == {"hecke-relation", "braid-relation"}
    assert doc["version"]


def test_verify_builtin_flip(capsys):
    code, doc = run_cli(capsys, "verify", "--builtin", "flip", "--dim", "2")
    assert code == 0 and doc["ok"]


def test_verify_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2,')
    code = main(["verify", str(path)])
    captured = capsys.readouterr()
    assert code == 2
    assert "line" in captured.err and "column" in captured.err


def test_verify_missing_input(capsys):
    code = main(["verify"])
    assert code == 2


def test_verify_perturbed_matrix(tmp_path, capsys):
    code, doc = run_cli(capsys, "builtin", "--builtin", "dj", "--dim", "2")
    doc["matrix"][0][3] = "1"
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps(doc))
    code, rep = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert not rep["ok"]
    braid = next(c for c in rep["checks"] if c["name"] == "braid-relation")
    assert braid["status"] == "fail" and "entry" in braid["detail"]


def test_analyze_dj2(capsys):
    code, doc = run_cli(capsys, "analyze", "--builtin", "dj", "--dim", "2")
    assert code == 0 and doc["ok"]
    assert doc["n"] == 2
    assert doc["theta"] == [["q^2", "0"], ["0", "q"]]
    assert doc["dims"] == [1, 2, 1, 0]
    assert doc["lambda_dims"] == [1, 2, 1, 0]
    assert doc["trace_table"][0]["match"] is True


def test_analyze_at_root_of_unity(capsys):
    code, doc = run_cli(
        capsys, "analyze", "--builtin", "dj", "--dim", "2", "--field", "cyclotomic", "--order", "3", "--q", "e"
    )
    assert code == 0 and doc["ok"]
    assert doc["f"] is not None
    assert doc["field"] == {"kind": "cyclotomic", "order": 3}


def test_analyze_dim1(capsys):
    code, doc = run_cli(capsys, "analyze", "--builtin", "dj", "--dim", "1")
    assert code == 0 and doc["n"] == 1


def test_analyze_no_top_component(capsys):
    code, doc = run_cli(capsys, "analyze", "--builtin", "dj", "--dim", "2", "--max-degree", "1")
    assert code == 0
    assert any(c["status"] == "skip" and c["name"] == "profile" for c in doc["checks"])


def test_builtin_roundtrip(tmp_path, capsys):
    code, doc = run_cli(capsys, "builtin", "--builtin", "dj", "--dim", "2")
    assert code == 0
    path = tmp_path / "dj2.json"
    path.write_text(json.dumps(doc))
    code, rep = run_cli(capsys, "verify", str(path))
    assert code == 0 and rep["ok"]


def test_identities(capsys):
    code, doc = run_cli(capsys, "identities", "--n", "3")
    assert code == 0 and doc["ok"]
    assert doc["n_max"] == 3


def test_hessian_report(capsys):
    code, doc = run_cli(capsys, "hessian", "--report")
    assert code == 0 and doc["ok"]
    assert doc["group_order"] == 216
    assert doc["order_census"]["4"] == 54
    assert any(cls["size"] == 8 and cls["element_order"] == 3 for cls in doc["classes"])


def test_resultant(capsys):
    code, doc = run_cli(capsys, "resultant", "--case1")
    assert code == 0 and doc["status"] == "PASS"
    assert "27*a^3*b^3*c^3" in doc["identity"]


def test_obstruct_cases(capsys):
    for case in (1, 2, 3, 4):
        code, doc = run_cli(capsys, "obstruct", "--case", str(case))
        assert code == 0, case
        assert doc["ok"] and doc["case"] == case
        assert "contradiction reproduced" in doc["verdict"]


def test_obstruct_with_params(capsys):
    code, doc = run_cli(capsys, "obstruct", "--case", "1", "--params", "1,2,3")
    assert code == 0
    assert doc["sample"]["type_A"] is True
    assert doc["sample"]["resultant"] != "0"
    code = main(["obstruct", "--case", "3", "--params", "1,2,3"])
    assert code == 2  # cases 3 and 4 need a = b
    capsys.readouterr()


def test_skl3(capsys):
    code, doc = run_cli(capsys, "skl3", "--a", "1", "--b", "1", "--c", "2", "--check", "typeA")
    assert code == 0 and doc["result"] is True
    code, doc = run_cli(capsys, "skl3", "--a", "1", "--b", "1", "--c", "1", "--check", "regular")
    assert code == 0 and doc["result"] is False
    code, doc = run_cli(capsys, "skl3", "--a", "1", "--b", "1", "--c", "0", "--check", "tensors")
    assert code == 0 and "symmetric_cubic" in doc


def test_reports_are_byte_identical(capsys):
    outs = []
    for _ in range(2):
        code = main(["analyze", "--builtin", "dj", "--dim", "2"])
        assert code == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    for _ in range(2):
        code = main(["hessian", "--report"])
        assert code == 0
        outs.append(capsys.readouterr().out)
    assert outs[2] == outs[3]


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "heckesym", "skl3", "--a", "1", "--b", "1", "--c", "2"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["result"] is True


def test_pretty_flag(capsys):
    code = main(["verify", "--builtin", "dj", "--dim", "2", "--pretty"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("{\n")
