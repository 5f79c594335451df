from pathlib import Path
import subprocess
import sys

import pytest

from genassoc.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out.decode(), err.decode()


def test_expand_examples(capsysbinary):
    code, out, _ = run(capsysbinary, "expand", "E6", "[1,1,1,1,1,1]", "--minus-simple", "2")
    assert code == 0 and out == "[1,0,1,1,1,1]\n"
    code, out, _ = run(capsysbinary, "expand", "E6", "[1,2,2,3,2,1]", "--minus-simple", "6")
    assert out == "[1,1,2,2,1,0] + [0,1,0,1,1,0]\n"
    code, out, _ = run(capsysbinary, "expand", "E6", "[0,0,0,0,0,0]")
    assert code == 0 and out == "\n"
    code, out, _ = run(capsysbinary, "expand", "B3", "1,1,2", "--minus-simple", "2")
    assert out == "[1,0,0] + 2*[0,0,1]\n"


def test_expand_usage_errors(capsysbinary):
    code, out, err = run(capsysbinary, "expand", "E6", "[1,2]")
    assert code == 2 and out == "" and "rank is 6" in err
    code, _, err = run(capsysbinary, "expand", "A2", "[1,x]")
    assert code == 2
    code, _, err = run(capsysbinary, "expand", "A2", "[1,1]", "--minus-simple", "3")
    assert code == 2


def test_table_is_golden(capsysbinary):
    code, out, _ = run(capsysbinary, "table", "e6")
    assert code == 0
    assert out == (GOLDEN / "e6_table.txt").read_text()


def test_roots(capsysbinary):
    code, out, _ = run(capsysbinary, "roots", "A3")
    assert code == 0
    orbit_lines = [ln for ln in out.splitlines() if ln.startswith("# orbit")]
    assert [ln.split()[3] for ln in orbit_lines] == ["(6):", "(3):"]
    assert "# orbit 1 (3): [0,-1,0] [0,1,0] [1,1,1]" in out
    code, out, _ = run(capsysbinary, "roots", "A1")
    assert "# orbit 0 (2): [-1] [1]" in out
    code, out, _ = run(capsysbinary, "roots", "C3")
    assert out.count("# orbit") == 3
    assert "# orbit 2 (4): [0,0,-1] [0,0,1] [0,2,1] [2,2,1]" in out


def test_clusters(capsysbinary):
    code, out, _ = run(capsysbinary, "clusters", "A3")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# A3: 14 clusters" and len(lines) == 15


def test_polytope_off(capsysbinary):
    code, out, err = run(capsysbinary, "polytope", "A3", "--rho", "--format", "off")
    assert code == 0
    body = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
    assert body[0] == "OFF" and body[1] == "14 9 21"
    assert "verified" in err


def test_polytope_support_values(capsysbinary):
    code, out, _ = run(capsysbinary, "polytope", "C3", "--support", "5/2,4,9/2", "--format", "json")
    assert code == 0 and '"mode": "custom"' in out
    code, out, err = run(capsysbinary, "polytope", "A3", "--support", "1,3")
    assert code == 2 and out == "" and "inadmissible" in err
    code, _, err = run(capsysbinary, "polytope", "A3", "--support", "1,2,3,4")
    assert code == 2
    code, _, err = run(capsysbinary, "polytope", "A3", "--support", "1,zz")
    assert code == 2
    code, _, err = run(capsysbinary, "polytope", "A4", "--format", "off")
    assert code == 2 and "rank 3" in err


def test_verify(capsysbinary):
    code, out, err = run(capsysbinary, "verify", "G2", "--full")
    assert code == 0 and "FAIL" not in out and "0 failed" in err
    code, out, _ = run(capsysbinary, "verify", "C3", "--seed", "4", "--threads", "2")
    assert code == 0


def test_oracle(capsysbinary):
    code, out, _ = run(capsysbinary, "oracle", "C3")
    assert code == 0 and "PASS" in out and "FAIL" not in out
    code, _, err = run(capsysbinary, "oracle", "D4")
    assert code == 2


def test_bad_type_and_command(capsysbinary):
    assert run(capsysbinary, "roots", "H3")[0] == 2
    assert run(capsysbinary, "frobnicate", "A3")[0] == 2
    assert run(capsysbinary)[0] == 2


def test_thread_env(capsysbinary, monkeypatch):
    monkeypatch.setenv("GENASSOC_THREADS", "2")
    code, out2, _ = run(capsysbinary, "clusters", "D4")
    monkeypatch.setenv("GENASSOC_THREADS", "1")
    code1, out1, _ = run(capsysbinary, "clusters", "D4")
    assert code == code1 == 0 and out1 == out2
    monkeypatch.setenv("GENASSOC_THREADS", "lots")
    assert run(capsysbinary, "clusters", "D4")[0] == 2


def test_determinism(capsysbinary):
    a = run(capsysbinary, "polytope", "B3", "--format", "json")
    b = run(capsysbinary, "polytope", "B3", "--format", "json", "--threads", "3")
    assert a == b


def test_module_entry_point_streams():
    p = subprocess.run([sys.executable, "-m", "genassoc.cli", "expand", "A2", "[1,2]"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "[1,1] + [0,1]\n" and p.stderr == ""
    p = subprocess.run([sys.executable, "-m", "genassoc.cli", "expand", "A2", "[1]"],
                       capture_output=True, text=True)
    assert p.returncode == 2 and p.stdout == "" and p.stderr


@pytest.mark.parametrize("argv", [["--help"], ["table", "--help"]])
def test_help_exits_zero(argv, capsysbinary):
    assert main(argv) == 0
