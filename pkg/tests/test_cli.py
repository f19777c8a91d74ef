import json
import os
import subprocess
import sys

from traceskein.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_torus(capsys):
    code, out, _ = run(capsys, "expand", "--surface", "t1p", "--loops", "a b")
    assert code == 0
    assert out.split() == ["+t[ab⁻¹]", "+t[ab]"]


def test_expand_sphere_curve_names(capsys):
    code, out, _ = run(capsys, "expand", "--surface", "s4p", "--loops", "<α> <β>")
    assert code == 0
    assert out.strip() == "+t[c1 ∪ c3] +t[c2 ∪ c4] −t[δ] −t[γ]"


def test_expand_multicurve_is_itself(capsys):
    code, out, _ = run(capsys, "expand", "--surface", "t1p", "--loops", "abAB", "--ascii")
    assert (code, out.strip()) == (0, "+t[a b A B]")


def test_bracket_outputs(capsys):
    assert run(capsys, "bracket", "--surface", "s4p", "--loops", "alpha beta")[1].strip() \
        == "+2·t[δ] −2·t[γ]"
    assert run(capsys, "bracket", "--surface", "s4p", "--loops", "x1 x2")[1].strip() == "0"
    assert run(capsys, "bracket", "--surface", "t1p", "--loops", "a b")[1].strip() \
        == "+t[ab] −t[ab⁻¹]"


def test_newton_reports(capsys):
    code, out, _ = run(capsys, "newton", "--surface", "s4p", "--loops", "alpha | beta",
                       "--bracket", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert {d["label"] for d in data["newton"]["certified"]} == {"gamma", "delta"}
    code, out, _ = run(capsys, "newton", "--surface", "t1p", "--element", "1: a; 1: a, a")
    assert "unknown   a  " in out
    code, out, _ = run(capsys, "newton", "--surface", "t1p", "--loops", "a")
    assert "certified a" in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "expand", "--surface", "t1p", "--loops", "a q")
    assert code == 2 and "position" in err
    assert run(capsys, "expand", "--surface", "nowhere", "--loops", "a")[0] == 2
    assert run(capsys, "bracket", "--surface", "t1p", "--loops", "a b a")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify_sphere_example_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "figure1")
    assert code == 0
    assert "product: +t[c1 + c3] +t[c2 + c4] -t[delta] -t[gamma]" in out
    assert "bracket: +2*t[delta] -2*t[gamma]" in out


def test_verify_small_sweeps_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bracket", "--samples", "5",
                       "--format", "json", "--seed", "3")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["suites"][0]["checked"] == 10


def test_verify_failure_exit_1(capsys, monkeypatch):
    from traceskein import sweeps

    def broken(seed=0, samples=None):
        r = sweeps.SweepResult("broken")
        r.checked = 1
        r.fail(sweeps.punctured_torus(), "demo", words=["a"])
        return r

    monkeypatch.setitem(sweeps.SWEEPS, "figure1", broken)
    code, out, _ = run(capsys, "verify", "--suite", "figure1")
    assert code == 1 and "reproduce: --seed 0" in out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "traceskein", "bracket", "--surface", "t1p",
                          "--loops", "a b", "--ascii"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "+t[a b] -t[a B]"
