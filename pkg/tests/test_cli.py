import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from qwatson import registry
from qwatson.cli import main

HERE = Path(__file__).parent


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    lines = out.splitlines()
    assert code == 0 and len(lines) == len(registry.roster())
    ident, family, constraint, label = lines[[l.split("\t")[0] for l in lines].index("prop-b")].split("\t")
    assert (family, constraint) == ("watson", "m<=n") and label


def test_verify_order_zero(capsys):
    code, out, err = run(capsys, "verify", "--identity", "thm-a", "--n-max", "0")
    doc = json.loads(out)
    assert code == 0
    assert {r["n"] for r in doc["records"]} == {0}
    assert all(r["lhs"] == r["rhs_closed"] == "1" for r in doc["records"])
    assert "PASS=16" in err


def test_verify_family_selector(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "base", "--n-max", "2", "--format", "csv")
    ids = {line.split(",")[0] for line in out.splitlines()[1:]}
    assert code == 0 and ids == {s.id for s in registry.roster() if s.family == "base"}


def test_verify_markdown_to_file(capsys, tmp_path):
    target = tmp_path / "r.md"
    code, out, _ = run(capsys, "verify", "--identity", "thm-l,prop-a", "--n-max", "2", "--format", "md",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# Verification report")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--identity", "no-such-id"],
        ["verify", "--n-min", "3", "--n-max", "2"],
        ["verify", "--points", "0"],
        ["verify", "--pool", "1/2,1"],
        ["verify", "--pool", "x"],
        ["verify", "--seed", "-4"],
        ["point", "--identity", "nope", "--rho", "1/2"],
        ["point", "--identity", "prop-b", "--rho", "1/2", "--n", "0", "--m", "1"],
        ["point", "--identity", "sear", "--rho", "1/2", "--n", "2"],
        ["point", "--identity", "thm-a", "--rho", "1"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--format", "xml"])
    assert info.value.code == 2


def test_point_jain_watson_order_zero(capsys):
    code, out, _ = run(capsys, "point", "--identity", "jain-watson", "--rho", "2/3", "--alpha", "3/5",
                       "--gamma", "-2", "--n", "0")
    assert code == 0
    assert "lhs          1\n" in out and "rhs_closed   1\n" in out


def test_point_andrews_watson_cancellation(capsys):
    code, out, _ = run(capsys, "point", "--identity", "andrews-watson", "--rho", "1/2", "--n", "1")
    assert code == 0 and "lhs          0\n" in out and "rhs_closed   0\n" in out


def test_point_shows_derived(capsys):
    code, out, _ = run(capsys, "point", "--identity", "thm-a", "--rho", "1/2", "--alpha", "2/3",
                       "--gamma=-3/2", "--n", "3", "--ell", "1", "--m", "2")
    assert code == 0
    assert out.count("-38966832/7811375") == 3


def test_point_sear(capsys):
    code, out, _ = run(capsys, "point", "--identity", "sear", "--rho", "2/3", "--n", "3",
                       "--values", "1/2,3/5,-5/3,2/5,3/2")
    assert code == 0 and "23659675/159028923" in out


def test_point_at_a_pole(capsys):
    code, _, err = run(capsys, "point", "--identity", "thm-k", "--rho", "2/3", "--alpha", "3/5",
                       "--gamma", "5/3", "--n", "2")
    assert code == 2 and "pole" in err


def test_stable_output_is_byte_identical(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        target = tmp_path / name
        main(["verify", "--identity", "dixon", "--n-max", "4", "--ell-max", "1", "--m-max", "1",
              "--points", "2", "--seed", "8", "--stable-output", "--out", str(target)])
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
    doc = json.loads(outs[0])
    assert (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode() == outs[0]


def _subprocess(*argv, env_extra=None):
    env = dict(os.environ, **(env_extra or {}))
    return subprocess.run([sys.executable, *argv], capture_output=True, text=True, env=env, cwd=HERE)


def test_module_entry_point():
    proc = _subprocess("-m", "qwatson", "verify", "--identity", "jain-watson", "--n-max", "1")
    assert proc.returncode == 0 and json.loads(proc.stdout)["summary"]["total"]["PASS"] == 2


def test_no_color_keeps_stderr_plain():
    proc = _subprocess("-m", "qwatson", "verify", "--identity", "jain-watson", "--n-max", "1",
                       env_extra={"NO_COLOR": "1"})
    assert "\033[" not in proc.stderr


def test_color_only_on_terminals(capsys, monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    _, _, err = run(capsys, "verify", "--identity", "jain-watson", "--n-max", "1")
    assert "\033[" not in err


def test_corrupted_fixture_exits_one():
    proc = _subprocess("corrupt_jain_watson.py", "verify", "--identity", "jain-watson-corrupted",
                       "--n-max", "3", "--stable-output")
    assert proc.returncode == 1
    fails = [r for r in json.loads(proc.stdout)["records"] if r["status"] == "FAIL"]
    assert fails and all(r["lhs"] and r["rhs_closed"] and r["lhs"] != r["rhs_closed"] for r in fails)
    assert "FAIL jain-watson-corrupted" in proc.stderr
