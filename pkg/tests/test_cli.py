import json
import subprocess
import sys
from fractions import Fraction

import pytest

from conftest import GIESEKING
from tautforge import cli, discgeo
from tautforge.surface_flip import punctured_surface, serialize_surface


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def f8(tmp_path, capsys):
    path = tmp_path / "f8.tri"
    code, out, _ = run(capsys, "layer", "--surface", "ptorus", "--word", "RL", "--out", str(path))
    assert code == 0
    return path


def test_layer_then_enumerate(f8, capsys):
    code, out, _ = run(capsys, "taut", "enumerate", str(f8), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] >= 1
    assert all(x == 2 for s in doc["structures"] for prof in s["cusp_pi_profile"] for x in prof)


def test_layer_writes_only_out(tmp_path, f8):
    assert sorted(p.name for p in tmp_path.iterdir()) == ["f8.tri"]
    assert f8.read_text().startswith("tautri 1\ntets 2\n")


def test_layer_to_stdout_and_spec(tmp_path, capsys):
    from tautforge.layering import MonodromySpec
    spec = tmp_path / "spec.json"
    spec.write_text(MonodromySpec.from_word("RLL").to_json())
    code, out, _ = run(capsys, "layer", "--spec", str(spec), "--json")
    assert code == 0 and json.loads(out)["tets"] == 3
    code, out2, _ = run(capsys, "layer", "--word", "RLL", "--json")
    assert json.loads(out2)["triangulation"] == json.loads(out)["triangulation"]


def test_validate_garbage(tmp_path, capsys):
    bad = tmp_path / "garbage.txt"
    bad.write_text("tautri 1\ntets 1\ntet 0: 0 1023 | nonsense\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 1 and "line 3" in err


def test_validate_reports(f8, tmp_path, capsys):
    code, out, _ = run(capsys, "validate", str(f8), "--json")
    assert code == 0 and json.loads(out)["orientable"]
    g = tmp_path / "g.tri"
    g.write_text(GIESEKING)
    code, out, _ = run(capsys, "validate", str(g))
    assert code == 1 and "not orientable" in out


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/x.tri")
    assert code == 1 and err


def test_degenerate_layering_exit_3(capsys):
    code, _, err = run(capsys, "layer", "--word", "RRR")
    assert code == 3 and "construction failed" in err


def test_bad_word_and_args(capsys):
    assert run(capsys, "layer", "--word", "RX")[0] == 1
    assert run(capsys, "layer")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_taut_check(f8, capsys):
    code, out, _ = run(capsys, "taut", "check", str(f8), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["taut"] and doc["prop9"]
    code, out, _ = run(capsys, "taut", "check", str(f8), "--coor", "5")
    assert code == 0
    code, _, err = run(capsys, "taut", "check", str(f8), "--coor", "6")
    assert code == 1 and "out of range" in err


def test_carried(f8, capsys):
    code, out, _ = run(capsys, "carried", str(f8), "--max-total", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    fib = [s for s in doc["surfaces"] if s["total"] == 2]
    assert fib and all(s["euler_char"] == -1 and len(s["components"]) == 1 for s in fib)


def test_discs(f8, capsys):
    code, out, _ = run(capsys, "discs", str(f8), "--coor", "0", "--tet", "0",
                       "--max-cusps", "3")
    assert code == 0 and "admissible" in out
    code, out, _ = run(capsys, "discs", str(f8), "--coor", "0", "--tet", "0",
                       "--max-cusps", "3", "--json")
    doc = json.loads(out)
    assert doc["summary"]["patterns"] == len(doc["patterns"]) > 0
    assert all("contribution" in a for p in doc["patterns"] for a in p["arcs"])
    assert run(capsys, "discs", str(f8), "--tet", "9")[0] == 1


def test_discs_property_failure_exit_2(f8, capsys, monkeypatch):
    monkeypatch.setattr(discgeo, "g_dot_oracle", lambda m, p: Fraction(99))
    code, _, err = run(capsys, "discs", str(f8), "--max-cusps", "2")
    assert code == 2 and "property violation" in err


def test_flippath(tmp_path, capsys):
    a = tmp_path / "a.surf"
    a.write_text(serialize_surface(punctured_surface(0, 4)))
    code, out, _ = run(capsys, "flippath", str(a), str(a), "--json")
    assert code == 0 and json.loads(out)["flips"] == []
    b = tmp_path / "b.surf"
    b.write_text(serialize_surface(punctured_surface(1, 2)))
    code, out, _ = run(capsys, "flippath", str(a), str(b))
    assert code == 1 and "no path" in out


def test_thread_variable(f8, capsys, monkeypatch):
    monkeypatch.setenv("TAUTFORGE_THREADS", "4")
    assert run(capsys, "validate", str(f8))[0] == 0
    monkeypatch.setenv("TAUTFORGE_THREADS", "many")
    code, _, err = run(capsys, "validate", str(f8))
    assert code == 1 and "TAUTFORGE_THREADS" in err


def test_console_output_is_byte_deterministic(f8):
    cmds = [["validate", str(f8), "--json"], ["taut", "enumerate", str(f8)],
            ["carried", str(f8), "--max-total", "4", "--json"],
            ["discs", str(f8), "--max-cusps", "3", "--json"]]
    for argv in cmds:
        outs = [subprocess.run([sys.executable, "-m", "tautforge.cli"] + argv,
                               capture_output=True, check=True).stdout for _ in range(2)]
        assert outs[0] == outs[1]
