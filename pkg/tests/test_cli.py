import io
import json
import subprocess
import sys

import jsonschema
import pytest

from liecentral.cli import run
from liecentral.dsl import load_algebra_text
from liecentral.catalog import by_family, hsp
from liecentral.report import schema

SCHEMA = schema()
BROKEN = "algebra broken { basis X1, X2, X3; [X1, X2] = X1; [X1, X3] = X2; }\n"


def invoke(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def report_of(argv):
    code, text = invoke(argv)
    rep = json.loads(text)
    jsonschema.validate(rep, SCHEMA)
    assert rep["exit_code"] == code
    return code, rep


@pytest.fixture
def broken_file(tmp_path):
    p = tmp_path / "broken.lie"
    p.write_text(BROKEN)
    return str(p)


def test_h2_isp(capsys):
    code, rep = report_of(["h2", "--catalog", "isp", "--n", "1"])
    assert code == 0 and rep["status"] == "ok"
    r = rep["results"]
    assert r["dim_h2"] == 1 and r["declared_matches"]
    assert r["representatives"] == [[["Z1", "Z2", "1"]]]


def test_check_hsp():
    code, rep = report_of(["check", "--catalog", "hsp", "--n", "1"])
    assert code == 0 and rep["results"]["jacobi_ok"] is True


def test_h2_non_jacobi_input(broken_file, capsys):
    code, rep = report_of(["h2", "--input", broken_file])
    assert code == 1 and rep["status"] == "failure"
    assert rep["results"]["failing_triples"] == [{"triple": ["X1", "X2", "X3"], "residual": {"X2": "1"}}]
    assert "jacobi fails" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["h2", "--input", "/nonexistent/file.lie"],
    ["h2", "--catalog", "e8", "--n", "1"],
    ["catalog", "sp", "--n", "0"],
    ["fock", "--lambda", "0"],
    ["fock", "--checks", "nope"],
    ["fock", "--levels", "4", "--margin-override", "9"],
    ["fock", "--margin-override", "ww=x"],
])
def test_input_errors(argv, capsys):
    code, rep = report_of(argv)
    assert code == 2 and rep["status"] == "input_error"
    assert capsys.readouterr().err.startswith("error:")


def test_argparse_errors_are_input_errors(capsys):
    assert run(["frobnicate"], stdout=io.StringIO()) == 2
    assert run(["h2"], stdout=io.StringIO()) == 2


def test_parse_error_in_file(tmp_path, capsys):
    p = tmp_path / "bad.lie"
    p.write_text("algebra bad { basis X; [X,Q] = X; }")
    code, _ = report_of(["check", "--input", str(p)])
    assert code == 2
    assert "unknown basis name Q at line 1" in capsys.readouterr().err


def test_extend_prints_lie_document():
    code, text = invoke(["extend", "--catalog", "isp", "--n", "1"])
    assert code == 0
    ext = load_algebra_text(text).to_algebra()
    assert ext.same_table(hsp(2).algebra)
    assert ext.basis[-1] == "I1"


def test_extend_json_and_cochain_file(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps([[["Z1", "Z2", "2"]]]))
    code, rep = report_of(["extend", "--catalog", "isp", "--n", "1", "--cochains", str(good), "--json"])
    assert code == 0 and rep["results"]["central_ok"] and rep["results"]["jacobi_ok"]
    assert rep["results"]["cochains"] == [[["Z1", "Z2", "1"]]]

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[["W1_1", "Z1", "1"]]]))
    code, rep = report_of(["extend", "--catalog", "isp", "--n", "1", "--cochains", str(bad), "--json"])
    assert code == 1
    assert rep["results"]["failing_triples"][0]["triple"] == ["W1_1", "W1_2", "Z1"]

    garbage = tmp_path / "garbage.json"
    garbage.write_text("[[[\"Nope\", \"Z1\", \"1\"]]]")
    code, _ = report_of(["extend", "--catalog", "isp", "--n", "1", "--cochains", str(garbage), "--json"])
    assert code == 2


def test_extend_from_file_roundtrip(tmp_path):
    p = tmp_path / "a2.lie"
    p.write_text("algebra a2 { basis A1, A2; }")
    code, text = invoke(["extend", "--input", str(p), "--name", "h"])
    assert code == 0
    assert text == "algebra h {\n  basis A1, A2, I1;\n  [A1, A2] = I1;\n}\n"


@pytest.mark.parametrize("fmt", ["lie", "json"])
def test_catalog_emit(fmt, tmp_path):
    code, text = invoke(["catalog", "hsp", "--n", "2", "--emit", fmt])
    assert code == 0
    assert load_algebra_text(text).to_algebra().same_table(by_family("hsp", 2).algebra)
    p = tmp_path / f"hsp.{fmt}"
    p.write_text(text)
    code, rep = report_of(["h2", "--input", str(p)])
    assert code == 0 and rep["results"]["dim_h2"] == 0


def test_catalog_report():
    code, rep = report_of(["catalog", "il", "--n", "3"])
    assert code == 0
    assert rep["results"]["declared"]["pi1"] == "Z2"
    assert rep["results"]["dim"] == 10


def test_oracle():
    code, rep = report_of(["oracle", "--n", "2"])
    o = rep["results"]["oracle"]
    assert code == 0 and o["verdict"] and not o["wz_law_failures"] and not o["ww_law_failures"]
    assert ["W1_1", "W2_2", [["W1_2", "2"]]] in o["constants"] or len(o["constants"]) > 0


def test_fock_report():
    code, rep = report_of(["fock", "--modes", "1", "--levels", "12", "--lambda", "1/3"])
    assert code == 0
    checks = rep["results"]["fock"]["checks"]
    assert set(checks) == {"hermiticity", "heisenberg", "wz", "ww", "rescale"}
    assert checks["ww"]["residual"] <= 1e-9


def test_fock_margin_zero_fails():
    code, rep = report_of(["fock", "--checks", "heisenberg", "--margin-override", "0"])
    assert code == 1
    assert rep["results"]["fock"]["checks"]["heisenberg"]["residual"] > 1


def test_fock_negative_lambda_note():
    code, rep = report_of(["fock", "--lambda", "-2", "--checks", "heisenberg,rescale"])
    assert code == 0 and rep["results"]["fock"]["config"]["qp_swapped"]
    assert "swapping" in rep["results"]["fock"]["note"]


@pytest.mark.parametrize("argv", [
    ["h2", "--catalog", "isp", "--n", "2"],
    ["fock", "--modes", "2", "--levels", "5"],
    ["oracle", "--n", "1"],
])
def test_reports_deterministic(argv):
    assert invoke(argv) == invoke(argv)


def test_fingerprint_tracks_content(tmp_path):
    a = tmp_path / "a.lie"
    b = tmp_path / "b.lie"
    a.write_text("algebra h { basis X, Y, I; [X,Y] = I; }")
    b.write_text("algebra h {\n  basis X, Y, I;\n  [Y, X] = -I;  # same algebra\n}\n")
    fa = report_of(["check", "--input", str(a)])[1]["input_fingerprint"]
    fb = report_of(["check", "--input", str(b)])[1]["input_fingerprint"]
    fc = report_of(["check", "--catalog", "heisenberg", "--n", "1"])[1]["input_fingerprint"]
    assert fa == fb != fc


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "liecentral.cli", "h2", "--catalog", "isp", "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["dim_h2"] == 1
