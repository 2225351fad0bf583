import json
import subprocess
import sys

import pytest

from gclab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "4")
    assert code == 0
    js = json.loads(out)
    assert js["schema"] == "gclab/1" and js["n"] == 4 and js["d"] == 32


def test_dim_flag_form(capsys):
    assert json.loads(run(capsys, "dim", "--n", "3")[1])["d"] == 6


def test_hilbert_quotient(capsys):
    code, out, _ = run(capsys, "hilbert", "4", "--r", "12")
    assert code == 0
    assert json.loads(out)["hilbert"] == [1, 9, 9, 1]


def test_decompose(capsys):
    js = json.loads(run(capsys, "decompose", "4", "--d", "1,1,0")[1])
    assert js["total"] == 5


def test_tnt(capsys):
    code, out, _ = run(capsys, "tnt", "4")
    assert code == 0 and json.loads(out)["tnt"] is True


def test_t2(capsys):
    assert json.loads(run(capsys, "t2", "4")[1])["outcome"] == "inapplicable"
    assert json.loads(run(capsys, "t2", "5")[1])["witness"] is True


def test_present(capsys):
    code, out, _ = run(capsys, "present", "--square-zero", "2")
    assert code == 0
    assert out.splitlines()[-2:] == ["x_1_1 + x_1_2", "x_1_1*x_1_2"]


@pytest.mark.parametrize("argv", [
    ["dim"],
    ["dim", "1"],
    ["hilbert", "4", "--r", "-1"],
    ["dim", "4", "--jobs", "0"],
    ["decompose", "4", "--d", "1,1"],
    ["nonsense"],
    ["tnt", "4", "--method", "magic"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 64


def test_csv_and_text(capsys):
    code, out, _ = run(capsys, "hilbert", "4", "--format", "csv")
    assert code == 0 and out.startswith("key,value")
    code, out, _ = run(capsys, "dim", "4", "--format", "text")
    assert code == 0 and "32" in out


def test_out_file(tmp_path, capsys):
    p = tmp_path / "o.json"
    assert main(["dim", "4", "--out", str(p)]) == 0
    assert json.loads(p.read_text())["d"] == 32


def test_verify_paper_deterministic(capsys):
    code, first, _ = run(capsys, "verify-paper", "4")
    assert code == 0
    code, second, _ = run(capsys, "verify-paper", "4")
    assert first == second
    js = json.loads(first)
    assert all(c["passed"] for c in js["checks"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gclab", "dim", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["d"] == 6


def test_jobs_width_does_not_change_output(capsys):
    _, one, _ = run(capsys, "tnt", "4", "--jobs", "1")
    _, two, _ = run(capsys, "tnt", "4", "--jobs", "2")
    assert one == two
