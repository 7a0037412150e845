import json
import subprocess
import sys

import pytest

from ncwitt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ghost(capsys):
    code, out, _ = run(capsys, "ghost", "--prime", "2", "--trunc", "2", "--coords", "X*Y;0")
    assert code == 0
    assert json.loads(out) == {"ghost": [{"X*Y": "1"}, {"X*Y*X*Y": "1"}]}


def test_ghost_pads_to_truncation(capsys):
    code, out, _ = run(capsys, "ghost", "--prime", "3", "--trunc", "3", "--coords", "X")
    assert json.loads(out)["ghost"][2] == {"X*X*X*X*X*X*X*X*X": "1"}


def test_ghost_too_many_coords(capsys):
    with pytest.raises(SystemExit):
        main(["ghost", "--prime", "2", "--trunc", "1", "--coords", "X;Y"])


def test_necklace(capsys):
    code, out, _ = run(capsys, "necklace", "(X+Y)^2")
    assert json.loads(out) == {"text": "X*X + 2*X*Y + Y*Y", "terms": {"X*X": "1", "X*Y": "2", "Y*Y": "1"}}
    code, out, _ = run(capsys, "necklace", "--mod", "2", "(X+Y)^2")
    assert json.loads(out)["terms"] == {"X*X": "1", "Y*Y": "1"}


def test_necklace_other_generators(capsys):
    code, out, _ = run(capsys, "necklace", "--gens", "a,b,c", "c*a*b - b*c*a")
    assert code == 0 and json.loads(out)["text"] == "0"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "necklace", "X Y")
    assert code == 2 and "position 2" in err


def test_witt_add_and_mul(capsys):
    _, out, _ = run(capsys, "witt-add", "--prime", "2", "--a", "1,0", "--b", "1,0")
    assert json.loads(out) == {"coords": ["2", "-1"]}
    _, out, _ = run(capsys, "witt-mul", "--prime", "2", "--a", "0,1", "--b", "0,1")
    assert json.loads(out) == {"coords": ["0", "2"]}


def test_witt_big_coordinates_are_exact(capsys):
    big = 10 ** 40
    _, out, _ = run(capsys, "witt-mul", "--prime", "3", "--a", f"{big},0", "--b", "1,0")
    assert json.loads(out)["coords"] == [str(big), "0"]


@pytest.mark.parametrize("theorem", ["lemma-trace", "lemma-necklace", "thm-1-1", "thm-1-2"])
def test_verify(capsys, theorem):
    code, out, _ = run(capsys, "verify", "--theorem", theorem, "--prime", "3", "--trunc", "3")
    report = json.loads(out)
    assert code == 0
    assert report["verdict"] == "holds" and report["prime"] == 3 and report["check"] == theorem


def test_verify_composite_prime(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "lemma-trace", "--prime", "4")
    assert code == 2 and "not a prime" in err


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify-sweep", "--max-prime", "7")
    reports = json.loads(out)
    assert code == 0
    assert [r["prime"] for r in reports] == [2] * 4 + [3] * 4 + [5] * 4 + [7] * 4


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "lemma-trace", "--prime", "2", "--format", "text")
    assert out.startswith("[HOLDS]")


def test_eval(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"dimension": 2, "modulus": 2, "assign": {"X": [[0, 0], [1, 0]], "Y": [[0, 1], [0, 0]]}}))
    code, out, _ = run(capsys, "eval", "--matrices", str(f), "X*Y")
    assert json.loads(out) == {"matrix": [["0", "0"], ["0", "1"]]}
    f.write_text(json.dumps({"dimension": 2, "modulus": "int", "assign": {"X": [[1, 1], [0, 1]], "Y": [[2, 0], [0, 3]]}}))
    _, out, _ = run(capsys, "eval", "--matrices", str(f), "X^3*Y - 1")
    assert json.loads(out) == {"matrix": [["1", "9"], ["0", "2"]]}


def test_eval_missing_matrix(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"dimension": 1, "modulus": "int", "assign": {"X": [[2]]}}))
    code, _, err = run(capsys, "eval", "--matrices", str(f), "--gens", "X,Y", "X*Y")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncwitt", "verify", "--theorem", "lemma-necklace", "--prime", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["witness"]["necklace"] == {"X*X*Y*Y": "1", "X*Y*X*Y": "1"}
