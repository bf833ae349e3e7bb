import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from bettistab.cli import run_cli
from bettistab.schemas import SCHEMAS

GOLDEN = Path(__file__).parent / "golden"
CUBIC = ["--ring", "x1,x2,x3", "--ideal", "x1*x2^2, x1*x3^2, x2^3, x1^3"]
JUMP3 = ["--ring", "x1,x2,x3", "--ideal", "x1^3*x2, x2^4, x1^2*x3^2, x2^3*x3"]
FAMILY = ["--ring", "a,b,c", "--family", "a^(2n)*b^(2n)*c^(2n), b^(4n)*c^(2n), a^(3n)*c^(3n), a^(6n-1)*b"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_betti_m2_and_skeleton():
    code, out, _ = run("betti", *CUBIC, "--skeleton")
    assert code == 0
    assert out == (GOLDEN / "betti_small_cubic.txt").read_text() + "\n0 -> R(-7) -> R(-4) ++ R^3(-5) -> R^4(-3) -> I -> 0\n"


def test_betti_power_and_lattice_method():
    a = run("betti", *CUBIC, "--power", "2")
    b = run("betti", *CUBIC, "--power", "2", "--method", "lattice", "--lattice-warn", "1")
    assert a[0] == b[0] == 0 and a[1] == b[1]
    assert "warning[capacity]" in b[2]


@pytest.mark.parametrize("cmd, argv", [
    ("betti", ["betti", *CUBIC, "--format", "json"]),
    ("stabseq", ["stabseq", *JUMP3, "--max-power", "6", "--format", "json", "--include-bettis"]),
    ("stabseq", ["stabseq", *JUMP3, "--max-power", "3", "--format", "json"]),
    ("sweep", ["sweep", *FAMILY, "--n", "1..2", "--max-power", "18", "--format", "json"]),
])
def test_json_validates(cmd, argv):
    code, out, _ = run(*argv)
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMAS[cmd])


def test_stabseq_json_fields():
    data = json.loads(run("stabseq", *JUMP3, "--max-power", "6", "--format", "json", "--include-bettis")[1])
    assert data["stab_seq"] == [1, 3] and data["estimated_stab"] is None and data["stable_run_length"] == 3
    assert data["ideal"] == ["x2^3*x3", "x2^4", "x1^2*x3^2", "x1^3*x2"] and data["r"] == 4
    assert set(data["tables"]) == {"1", "3"}


def test_csv_headers():
    out = run("betti", *CUBIC, "--format", "csv")[1].splitlines()
    assert out[0] == "d,i,j,multiplicity" and out[1] == "1,0,3,4"
    out = run("stabseq", *JUMP3, "--max-power", "4", "--format", "csv")[1].splitlines()
    assert out[0] == "d,i,j,multiplicity" and {l.split(",")[0] for l in out[1:]} == {"1", "3"}
    out = run("sweep", *FAMILY, "--n", "1..2", "--max-power", "18", "--format", "csv")[1].splitlines()
    assert out == ["n,stab_estimate,seq", "1,6,1;2;6", "2,11,1;2;3;5;6;11"]


def test_stabseq_notes():
    out = run("stabseq", "--ring", "x,y", "--ideal", "x^2, y^3", "--max-power", "3", "--lookahead", "5")[1]
    assert "estimated Stab: none" in out and "not equigenerated" in out


@pytest.mark.parametrize("argv, code, kind", [
    (["betti", "--ring", "a,b", "--ideal", "a*c"], 2, "parse"),
    (["betti", "--ring", "a,b"], 2, "usage"),
    (["frobnicate"], 2, "usage"),
    (["betti", "--ring", "a,b", "--ideal", "1"], 2, "domain"),
    (["sweep", "--ring", "a", "--family", "a^(n-3)", "--n", "1..2", "--max-power", "2"], 2, "domain"),
    (["stabseq", *JUMP3, "--max-power", "0"], 2, "usage"),
    (["check", "--count", "3", "--seed", "0", "--max-gens", "12", "--taylor-cap", "2"], 1, "capacity"),
])
def test_errors(argv, code, kind):
    c, out, err = run(*argv)
    assert c == code
    assert err.startswith(f"bettistab: error[{kind}]: ")


def test_check_reports_disagreement(monkeypatch):
    import bettistab.corpus as corpus
    from bettistab import BettiTable
    real = corpus.hilbert_consistency
    monkeypatch.setattr(corpus, "hilbert_consistency", lambda I, B: real(I, BettiTable({**dict(B.entries), (0, 99): 1})))
    code, out, err = run("check", "--count", "2", "--seed", "5")
    assert code == 3 and "error[check]: ideal #0 ring" in err and "2 disagreement(s)" in out


def test_check_passes():
    code, out, _ = run("check", "--count", "30", "--seed", "11")
    assert code == 0 and out == "checked 30 ideals (seed 11): 0 disagreement(s)\n"


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "bettistab", "betti", *CUBIC], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == (GOLDEN / "betti_small_cubic.txt").read_text()
