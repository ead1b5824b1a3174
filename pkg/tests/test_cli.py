import io
import json
import subprocess
import sys

import pytest

from saitotree.cli import main


def run(argv, stdin="", monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    monkeypatch.setattr(sys, "stdout", out)
    monkeypatch.setattr(sys, "stderr", err)
    code = main(argv)
    return code, out.getvalue(), err.getvalue()


def family(name, *params, monkeypatch):
    code, doc, _ = run(["family", name, *map(str, params)], monkeypatch=monkeypatch)
    assert code == 0
    return doc


def test_family_moduli_pipeline(monkeypatch):
    doc = family("r_cusps", 4, monkeypatch=monkeypatch)
    code, out, _ = run(["moduli", "-"], doc, monkeypatch)
    assert code == 0 and "total dimension 11" in out


def test_charexp_tjurina(monkeypatch):
    code, doc, _ = run(["from-charexp", "9", "12", "17"], monkeypatch=monkeypatch)
    code, out, _ = run(["tjurina", "-", "--modularity", "29", "--format", "json"], doc, monkeypatch)
    assert code == 0
    assert json.loads(out)["moduli"]["tjurina"] == {"mu": 98, "modularity": 29, "tau": 80}


def test_dicriticity_json(monkeypatch):
    doc = family("cusp", monkeypatch=monkeypatch)
    code, out, _ = run(["dicriticity", "-", "--format", "json"], doc, monkeypatch)
    rep = json.loads(out)
    assert rep["dicriticity"] == [1, 1, 0] and rep["configuration"] == [1, 1, 0]


@pytest.mark.parametrize("cmd, needle", [("saito-number", "saito number 2"),
                                         ("profile", "valuations 2 1 1 1 1"),
                                         ("gluing", "black 3: tangency=0"),
                                         ("dot", "graph saito")])
def test_other_commands(cmd, needle, monkeypatch):
    doc = family("double_cusp", monkeypatch=monkeypatch)
    code, out, _ = run([cmd, "-"], doc, monkeypatch)
    assert code == 0 and needle in out


def test_file_input_and_batch(tmp_path, monkeypatch):
    for name in ("cusp", "double_cusp"):
        (tmp_path / f"{name}.tree").write_text(family(name, monkeypatch=monkeypatch))
    code, out, _ = run(["dicriticity", str(tmp_path / "cusp.tree")], monkeypatch=monkeypatch)
    assert code == 0 and "white" in out
    (tmp_path / "broken.tree").write_text("saito-tree v1\nvertex 0 parents=- n=a\n")
    code, out, err = run(["saito-number", "--batch", str(tmp_path)], monkeypatch=monkeypatch)
    res = json.loads(out)
    assert code == 1 and "error" in res[str(tmp_path / "broken.tree")]
    assert res[str(tmp_path / "double_cusp.tree")]["saito_number"] == 2


def test_exit_codes(monkeypatch):
    assert run(["family", "nope"], monkeypatch=monkeypatch)[0] == 1
    assert run(["dicriticity", "-"], "garbage", monkeypatch)[0] == 1
    assert run(["frobnicate"], monkeypatch=monkeypatch)[0] == 2
    assert run(["tjurina", "-"], monkeypatch=monkeypatch)[0] == 2
    assert run(["dicriticity", "/no/such/file"], monkeypatch=monkeypatch)[0] == 2


def test_selftest(monkeypatch):
    code, out, _ = run(["selftest"], monkeypatch=monkeypatch)
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "saitotree", "family", "cusp"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("saito-tree v1")
