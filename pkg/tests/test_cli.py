import json
import subprocess
import sys

from braidkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, lines


def test_wp_identity(capsys):
    code, lines = run_cli(capsys, "wp", "1 2 1 -2 -1 -2")
    assert code == 0
    assert lines[0]["identity"] is True


def test_wp_nonidentity_and_empty(capsys):
    code, lines = run_cli(capsys, "wp", "1")
    assert code == 0 and lines[0]["identity"] is False
    code, lines = run_cli(capsys, "wp", "")
    assert code == 0 and lines[0]["identity"] is True


def test_parse_error_exit_code(capsys):
    code, lines = run_cli(capsys, "wp", "1 junk")
    assert code == 2
    assert lines[0]["code"] == 2


def test_compare_commands(capsys):
    code, lines = run_cli(capsys, "compare", "dehornoy", "", "1")
    assert code == 0 and lines[0]["result"] == "LT"
    code, lines = run_cli(capsys, "compare", "pure", "", "1 1")
    assert code == 0 and lines[0]["result"] == "LT"


def test_compare_pure_rejects_non_pure(capsys):
    code, lines = run_cli(capsys, "compare", "pure", "1", "1")
    assert code == 3
    assert lines[0]["code"] == 3


def test_burau_and_modular(capsys):
    code, lines = run_cli(capsys, "burau", "1", "--n", "2")
    assert code == 0
    assert lines[0]["matrix"][0][1] == {"variable": "t", "terms": {"1": 1}}
    code, lines = run_cli(capsys, "modular", "1 2 1")
    assert code == 0 and lines[0]["matrix"] == [[0, -1], [1, 0]]


def test_jones_and_tl_and_comb(capsys):
    code, lines = run_cli(capsys, "jones", "1 1 1")
    assert code == 0 and lines[0]["jones"]["terms"] == {"1": 1, "3": 1, "4": -1}
    code, lines = run_cli(capsys, "tl", "1", "--n", "2")
    assert code == 0 and lines[0]["trace"]["terms"] == {"3": -1}
    code, lines = run_cli(capsys, "comb", "n=3; 1 1")
    assert code == 0 and lines[0]["coordinates"] == ["1", ""]


def test_fuzz_exit_codes(capsys):
    code, lines = run_cli(capsys, "fuzz", "markov", "--trials", "20", "--seed", "4")
    assert code == 0 and lines[0]["violations"] == 0
    code, lines = run_cli(capsys, "fuzz", "order", "--trials", "15", "--seed", "4", "--len-max", "6")
    assert code == 0 and lines[0]["violations"] == 0
    code, lines = run_cli(capsys, "fuzz", "markov", "--trials", "0")
    assert code == 0 and lines[0]["trials"] == 0


def test_batch_mode(capsys, tmp_path):
    batch = tmp_path / "batch.txt"
    batch.write_text("n=3; 1 2 -1 -2 # commutator\n\n1 1 # squared\nnot-a-braid\n")
    code, lines = run_cli(capsys, "wp", "--file", str(batch))
    assert code == 2
    assert [obj["line"] for obj in lines] == [1, 3, 4]
    assert lines[0]["label"] == "commutator"
    assert lines[0]["identity"] is False
    assert lines[1]["degree"] == 2
    assert lines[2]["code"] == 2


def test_batch_output_is_byte_identical(capsys, tmp_path):
    batch = tmp_path / "batch.txt"
    batch.write_text("1 1\nn=3; 1 2\n")
    code1 = main(["jones", "--file", str(batch)])
    out1 = capsys.readouterr().out
    code2 = main(["jones", "--file", str(batch)])
    out2 = capsys.readouterr().out
    assert (code1, out1) == (code2, out2)
    assert out1.count("\n") == 2


def test_fuzz_deterministic_output(capsys):
    code1 = main(["fuzz", "markov", "--trials", "30", "--seed", "9"])
    out1 = capsys.readouterr().out
    code2 = main(["fuzz", "markov", "--trials", "30", "--seed", "9"])
    out2 = capsys.readouterr().out
    assert (code1, out1) == (code2, out2)


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "braidkit", "wp", "1 -1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["identity"] is True


def test_budget_exit_code(capsys):
    code, lines = run_cli(
        capsys, "compare", "dehornoy", "", "1 2 -1", "--budget", "0"
    )
    assert code == 4
    assert lines[0]["code"] == 4
