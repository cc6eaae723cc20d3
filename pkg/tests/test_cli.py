import json
import subprocess
import sys
from pathlib import Path

import pytest

from multisemi import FIXTURE_NAMES
from multisemi.cli import main
from multisemi.io import load_multiop

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def data(name):
    return DATA / f"{name}.json"


def test_check_hecke(capsys):
    code, out, _ = run(capsys, "check", data("hecke_a2"))
    assert code == 0
    assert "associative" in out and "multigroup" in out and "identity e" in out


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_check_every_fixture(capsys, name):
    code, out, _ = run(capsys, "check", data(name))
    assert code == 0 and out.startswith("associative")


def test_green_egg_box(capsys):
    code, out, _ = run(capsys, "green", data("kl_b2_T"))
    assert code == 0
    rows = [line.split("|") for line in out.splitlines() if line.startswith("R_")]
    cells = {r[0].strip(): [c.strip() for c in r[1:]] for r in rows}
    assert cells == {"R_s": ["{s,sts}", "{st}"], "R_t": ["{ts}", "{t,tst}"]}
    assert "incidence matrix:\n11\n11" in out


def test_green_commutation_witness(capsys):
    code, out, _ = run(capsys, "green", data("t_531"), "--json")
    assert code == 0
    env = json.loads(out)
    assert env["command"] == "green"


def test_construct_rejects_small_n(capsys):
    code, _, err = run(capsys, "construct", "no_quasi_idempotent", "--n", "2")
    assert code == 2 and err.startswith("error:")


CONSTRUCT_ARGS = [
    ["trivial", "--n", "3"],
    ["trivial", "--n", "3", "--subset", "all"],
    ["coset", "--group", "S3", "--subgroup", "e,s"],
    ["coset", "--group", "D4", "--subgroup", "r0,r2", "--level", "cosets"],
    ["ideal", "--semigroup", "brandt2", "--kind", "J"],
    ["ideal", "--semigroup", "band2x2", "--kind", "L"],
    ["monogenic", "--semigroup", "C6"],
    ["subword", "--alphabet", "2", "--max-len", "2"],
    ["no_quasi_idempotent", "--n", "4"],
    ["poset_band", "--chains", "3"],
    ["poset_band", "--chains", "2,1"],
    ["double_variant", "--input", data("kl_a2"), "--x", "s", "--y", "t"],
    ["disconnected_union", "--input", data("kl_a2"), "--input2", data("two_element")],
    ["inflation", "--input", data("two_element"), "--map", "a,a,b"],
    ["adjoin_zero", "--input", data("two_element")],
    ["adjoin_identity", "--input", data("kl_b2_T")],
    ["strip_zero", "--input", data("kl_a2")],
]


@pytest.mark.parametrize("args", CONSTRUCT_ARGS, ids=lambda a: "-".join(str(x) for x in a[:3]))
def test_construct_then_check(capsys, tmp_path, args):
    target = tmp_path / "out.json"
    code, out, err = run(capsys, "construct", *args, "-o", target)
    assert code == 0, err
    code, out, err = run(capsys, "check", target)
    assert code == 0, out + err


def test_odot_zero_on_quasi_semigroup(capsys, tmp_path):
    q, z = tmp_path / "q.json", tmp_path / "z.json"
    assert run(capsys, "quotient", data("kl_b2_T"), "--partition", "s,sts;t,tst", "-o", q)[0] == 0
    assert run(capsys, "construct", "adjoin_zero", "--input", q, "--mode", "odot", "-o", z)[0] == 0
    code, out, _ = run(capsys, "check", z)
    assert code == 0 and "class: semigroup" in out
    code, _, err = run(capsys, "construct", "adjoin_zero", "--input", data("two_element"), "--mode", "odot")
    assert code == 2 and "quasi-semigroup" in err


def test_construct_pipeline_through_stdin():
    for args in (["poset_band", "--chains", "2"], ["subword", "--alphabet", "1", "--max-len", "3"]):
        made = subprocess.run([sys.executable, "-m", "multisemi", "construct", *args],
                              capture_output=True, text=True, check=True)
        checked = subprocess.run([sys.executable, "-m", "multisemi", "check", "-"],
                                 input=made.stdout, capture_output=True, text=True)
        assert checked.returncode == 0, checked.stderr


def test_json_envelope(capsys):
    code, out, _ = run(capsys, "--json", "check", data("hecke_a2"))
    env = json.loads(out)
    assert code == 0 and set(env) == {"command", "input", "result"}
    assert env["result"]["multigroup"] is True and env["result"]["identity"] == "e"
    assert env["input"]["file"].endswith("hecke_a2.json")


def test_exit_one_with_witness(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"elements": ["a", "b"], "table": [[["b"], ["a"]], [[], []]]}', encoding="utf-8")
    code, out, _ = run(capsys, "check", bad)
    assert code == 1 and out.startswith("not associative at")
    code, out, _ = run(capsys, "check", bad, "--json")
    env = json.loads(out)
    assert code == 1 and env["result"]["associative"] is False and len(env["witness"]) == 3


def test_exit_one_on_non_congruence(capsys):
    code, out, _ = run(capsys, "quotient", data("kl_a2"), "--partition", "e,s")
    assert code == 1 and "not a congruence" in out


@pytest.mark.parametrize("argv", [
    ["check", "missing.json"],
    ["bogus"],
    ["construct", "trivial"],
    ["hecke", "E8"],
    ["hecke", "A2", "--q", "x"],
    ["quotient", str(DATA / "kl_a2.json"), "--rees", "s"],
    ["census", "--n", "0", "--exhaustive"],
    ["fixture", "nope"],
])
def test_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_exit_three(capsys):
    code, _, err = run(capsys, "census", "--n", "4", "--exhaustive")
    assert code == 3 and "error" in err
    code, _, _ = run(capsys, "census", "--n", "3", "--exhaustive")
    assert code == 3


def test_fixture_output(capsys, tmp_path):
    target = tmp_path / "f.json"
    code, out, _ = run(capsys, "fixture", "kl_a2", "-o", target)
    assert code == 0 and target.read_text(encoding="utf-8") == data("kl_a2").read_text(encoding="utf-8")
    code, out, _ = run(capsys, "fixture", "two_element")
    assert out == data("two_element").read_text(encoding="utf-8")


def test_hecke_command(capsys, tmp_path):
    target = tmp_path / "h.json"
    code, _, _ = run(capsys, "hecke", "A2", "--q", "3/2", "-o", target)
    assert code == 0
    assert load_multiop(target.read_text(encoding="utf-8")) == load_multiop(data("hecke_a2").read_text(encoding="utf-8"))


def test_census_command(capsys):
    code, out, _ = run(capsys, "census", "--n", "1,2", "--exhaustive")
    assert code == 0 and "associative=2 " in out and "associative=50 " in out
    code, out, _ = run(capsys, "--json", "census", "--n", "6", "--samples", "20", "--seed", "4")
    env = json.loads(out)
    assert env["result"]["reports"][0]["samples"] == 20 and env["input"]["seed"] == 4
    code, out, _ = run(capsys, "census", "--n", "3", "--single-valued")
    assert code == 0 and "113/19683" in out


def test_quotient_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "quotient", data("kl_a2"), "--rees", "sts")
    assert code == 0 and load_multiop(out).n == 5
    target = tmp_path / "q.json"
    code, _, _ = run(capsys, "quotient", data("kl_b2_T"), "--partition", "s,sts;t,tst", "-o", target)
    assert code == 0 and load_multiop(target.read_text(encoding="utf-8")).n == 4


def test_rep_command(capsys):
    code, out, _ = run(capsys, "rep", data("kl_a2"), "--element", "s")
    assert code == 0 and "left regular representation: ok" in out
    grid = out.split("tau_s:\n")[1].split()
    assert len(grid) == 6 and all(set(r) <= {"0", "1"} and len(r) == 6 for r in grid)


def test_nilpotent_command(capsys, tmp_path):
    code, out, _ = run(capsys, "nilpotent", data("t_531"))
    assert code == 0 and out.startswith("not nilpotent")
    target = tmp_path / "w.json"
    run(capsys, "construct", "trivial", "--n", "3", "-o", target)
    code, out, _ = run(capsys, "--json", "nilpotent", target)
    env = json.loads(out)
    assert env["result"]["nilpotent"] is True and env["result"]["degree"] == 2


def test_console_script():
    r = subprocess.run(["multisemi", "check", str(data("hecke_a2"))], capture_output=True, text=True)
    assert r.returncode == 0 and "multigroup" in r.stdout
