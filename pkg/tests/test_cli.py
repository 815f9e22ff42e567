import json
import subprocess
import sys
from pathlib import Path

import pytest

from trivalent.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "p -> q", "--logic", "df", "--assign", "p=0,q=1")[:2] == (0, "1/2\n")
    assert run(capsys, "eval", "p & q", "--conn", "cooper", "--assign", "p=1,q=0.5")[1] == "1\n"
    assert run(capsys, "eval", "T", "--assign")[1] == "1\n"


@pytest.mark.parametrize("argv", [
    ["eval", "p ->"],
    ["eval", "p & q", "--assign", "p=1"],
    ["eval", "p", "--assign", "p=0.3"],
    ["eval", "p", "--assign", "p=1", "--logic", "xx"],
])
def test_eval_errors_exit_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_valid_exit_codes(capsys):
    code, out, _ = run(capsys, "valid", "-p", "p", "-p", "p->q", "-c", "q", "--logic", "cc", "--via", "sequent")
    assert code == 0 and out.startswith("valid") and "SRef" in out
    code, out, _ = run(capsys, "valid", "-p", "p", "-p", "p->q", "-c", "q", "--logic", "df", "--via", "tableau")
    assert code == 1 and "countermodel: p=1/2, q=0" in out
    assert run(capsys, "valid", "-c", "~(~p -> p)", "--logic", "df")[0] == 0
    assert run(capsys, "valid", "-p", "p", "-c", "q", "-c", "r", "--via", "tableau")[0] == 2
    assert run(capsys, "valid", "-p", "p", "-c", "q", "--via", "sequent", "--logic", "f")[0] == 2


def test_valid_json(capsys):
    code, out, _ = run(capsys, "valid", "-p", "p", "-p", "p->q", "-c", "q", "--logic", "cc", "--via", "sequent",
                       "--json")
    payload = json.loads(out)
    assert code == 0 and payload["schema"] == 1 and payload["valid"] and payload["proof"]["nodes"]
    code, out, _ = run(capsys, "valid", "-p", "p", "-p", "p->q", "-c", "q", "--json")
    payload = json.loads(out)
    assert code == 1 and payload["countermodel"] == {"p": "1/2", "q": "0"}


@pytest.mark.parametrize("via", ["semantic", "tableau", "sequent"])
@pytest.mark.parametrize("logic", ["df", "cc"])
def test_engines_agree_from_the_command_line(capsys, via, logic):
    cases = [(["p"], "p | q"), (["p -> q", "~q"], "~p"), ([], "(p -> q) -> p"), (["~(p -> q)"], "p -> ~q")]
    codes = []
    for premises, conclusion in cases:
        argv = ["valid", "-c", conclusion, "--logic", logic, "--via", via]
        for p in premises:
            argv += ["-p", p]
        codes.append(run(capsys, *argv)[0])
    expected = {"df": [0, 1, 0, 0], "cc": [0, 1, 1, 0]}[logic]
    assert codes == expected


def test_tableau_and_sequent_commands(capsys):
    code, out, _ = run(capsys, "tableau", "--label", "~(A -> B):1", "--label", "A -> ~B:0", "--logic", "cc")
    assert code == 0 and out.rstrip().endswith("closed")
    code, out, _ = run(capsys, "tableau", "-p", "p", "-p", "p -> q", "-c", "q", "--json")
    assert code == 1 and json.loads(out)["countermodel"] == {"p": "1/2", "q": "0"}
    code, out, _ = run(capsys, "sequent", "p ; q ; r", "--logic", "cc")
    assert code == 1 and "p=1/2, q=0, r=0" in out
    code, out, _ = run(capsys, "sequent", "~(A -> B) ; A -> ~B ; A -> ~B", "--logic", "cc", "--json")
    assert code == 0 and json.loads(out)["derivation"]["nodes"][0]["rule"] == "neg-0"


def test_props_is_byte_identical(capsys):
    first = run(capsys, "props")[1]
    second = run(capsys, "props")[1]
    assert first == second
    assert "TT     ×   ✓         ×" in first
    assert json.loads(run(capsys, "props", "--json")[1])["schema"] == 1


def test_algebra_command(capsys):
    code, out, _ = run(capsys, "algebra", "check", str(DATA / "df3.alg"), "--class", "lp")
    assert code == 0 and "filter {1/2, 1}" in out
    code, out, _ = run(capsys, "algebra", "check", str(DATA / "bool2.alg"), "--class", "definetti")
    assert code == 1 and "no element is fixed by negation" in out
    code, _, err = run(capsys, "algebra", "check", str(DATA / "bad_table.alg"))
    assert code == 2 and "line 3" in err


def test_assert_command(capsys):
    assert run(capsys, "assert", "a -> c", str(DATA / "dist.txt"), "--logic", "cc")[:2] == (0, "0.75\n")
    code, _, err = run(capsys, "assert", "F -> T", str(DATA / "dist.txt"))
    assert code == 2 and "classical value" in err
    assert run(capsys, "assert", "a", str(DATA / "missing.txt"))[0] == 2


def test_module_entry_point():
    result = subprocess.run([sys.executable, "-m", "trivalent", "eval", "p -> q", "--assign", "p=1,q=0"],
                            capture_output=True, text=True, check=False)
    assert result.returncode == 0 and result.stdout == "0\n"
