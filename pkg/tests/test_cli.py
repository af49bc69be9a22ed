import json
import subprocess
import sys

from symplie.cli import main


def run(*args):
    return main(list(args))


def test_dim(capsys):
    assert run("dim", "--genus", "4", "[2 2]") == 0
    assert capsys.readouterr().out.strip() == "308"
    assert run("dim", "--genus", "4", "[32^21]") == 0


def test_eval(capsys):
    assert run("eval", "--genus", "3", "q0(Ht[a1,b1,a1,b1])") == 0
    assert capsys.readouterr().out.strip() == "12"


def test_eval_error_exit_code(capsys):
    assert run("eval", "--genus", "4", "Ht[a1,a9]") == 2
    assert "exceeds genus 4" in capsys.readouterr().err


def test_genus_required():
    assert run("eval", "q0(a1)") == 2


def test_decompose_named_and_expression(capsys):
    assert run("decompose", "--genus", "3", "hg2") == 0
    assert capsys.readouterr().out.strip() == "[2^2]"
    assert run("decompose", "--genus", "2", "a1⊗a1") == 0
    assert capsys.readouterr().out.strip() == "[2]"


def test_verify_single_check_json(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert run("verify", "--genus", "4", "--check", "detector-table", "--json", str(path)) == 0
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert set(doc) == {"genus", "engine_version", "checks", "summary"}
    assert doc["summary"] == {"pass": 1, "fail": 0, "skipped": 0}
    assert set(doc["checks"][0]) == {"id", "paper_location", "status", "expected", "computed", "elapsed_ms", "notes"}


def test_verify_reports_failure(capsys):
    assert run("verify", "--genus", "3", "--check", "closed-[21^2]-third") == 1


def test_verify_unknown_check():
    assert run("verify", "--genus", "3", "--check", "nope") == 2


def test_reports_identical_modulo_timing(tmp_path):
    docs = []
    for name in ("a.json", "b.json"):
        p = tmp_path / name
        run("verify", "--genus", "3", "--check", "cycle-[2^2]", "--check", "bracket-[2]", "--json", str(p))
        d = json.loads(p.read_text(encoding="utf-8"))
        for c in d["checks"]:
            c.pop("elapsed_ms")
        docs.append(d)
    assert docs[0] == docs[1]


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "symplie", "dim", "--genus", "2", "[1]"], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "4"
