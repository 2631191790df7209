import subprocess
import sys

from domset import parse_ds
from domset.cli import main

STAR5 = "p ds 5 4\n1 2\n1 3\n1 4\n1 5\n"


def run_cli(*argv) -> int:
    return main(list(argv))


def test_solve_from_file(tmp_path, capsys):
    inst = tmp_path / "star.ds"
    inst.write_text(STAR5)
    code = run_cli("solve", str(inst), "--algo", "hedom5", "--no-wallclock")
    out = capsys.readouterr().out
    assert code == 0
    assert out == "1\n1\n"


def test_solve_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "domset", "solve", "--algo", "greedy"],
        input=STAR5,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n1\n"


def test_solve_trace_lines_on_stderr(tmp_path, capsys):
    inst = tmp_path / "star.ds"
    inst.write_text(STAR5)
    code = run_cli("solve", str(inst), "--no-wallclock", "--trace")
    captured = capsys.readouterr()
    assert code == 0
    stages = [line for line in captured.err.splitlines() if line.startswith("{")]
    assert len(stages) == 5
    assert '"stage": "reductions"' in stages[0]


def test_verify_valid_and_invalid(tmp_path, capsys):
    inst = tmp_path / "star.ds"
    inst.write_text(STAR5)
    good = tmp_path / "good.sol"
    good.write_text("1\n1\n")
    bad = tmp_path / "bad.sol"
    bad.write_text("1\n2\n")
    assert run_cli("verify", str(inst), str(good)) == 0
    assert "valid size=1" in capsys.readouterr().out
    assert run_cli("verify", str(inst), str(bad)) == 1
    assert "first_uncovered=3" in capsys.readouterr().out


def test_oracle_output(tmp_path, capsys):
    inst = tmp_path / "p4.ds"
    inst.write_text("p ds 4 3\n1 2\n2 3\n3 4\n")
    assert run_cli("oracle", str(inst)) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "2"
    assert len(lines[1].split()) == 2


def test_gen_writes_parseable_instance(tmp_path, capsys):
    out = tmp_path / "g.ds"
    assert run_cli("gen", "--kind", "tree", "--n", "9", "--seed", "4", "--out", str(out)) == 0
    g = parse_ds(out.read_bytes())
    assert g.n == 9
    assert g.m == 8


def test_gen_rejects_bad_params(capsys):
    assert run_cli("gen", "--kind", "gnp", "--n", "10") == 2  # missing p
    assert run_cli("gen", "--kind", "gnp", "--n", "0", "--p", "0.5") == 2


def test_bench_end_to_end(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for i in range(2):
        run_cli("gen", "--kind", "gnp", "--n", "14", "--p", "0.3", "--seed", str(i), "--out", str(corpus / f"i{i}.ds"))
    capsys.readouterr()
    out = tmp_path / "results.csv"
    code = run_cli(
        "bench", "--dir", str(corpus), "--algos", "greedy,hedom5",
        "--seed", "7", "--no-wallclock", "--oracle-max-n", "16", "--out", str(out),
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("instance,algo,seed")
    assert len(lines) == 1 + 4 + 2  # header + records + summaries


def test_bench_empty_directory_warns_but_succeeds(tmp_path, capsys):
    corpus = tmp_path / "empty"
    corpus.mkdir()
    code = run_cli("bench", "--dir", str(corpus), "--algos", "greedy", "--out", str(tmp_path / "r.csv"))
    captured = capsys.readouterr()
    assert code == 0
    assert "no .ds instances" in captured.err


def test_bench_rejects_unknown_algorithm(tmp_path, capsys):
    corpus = tmp_path / "c"
    corpus.mkdir()
    assert run_cli("bench", "--dir", str(corpus), "--algos", "greedy,quantum") == 2


def test_usage_errors_exit_2(capsys):
    assert run_cli("frobnicate") == 2
    assert run_cli("solve", "--algo", "nope") == 2


def test_missing_file_exits_3(capsys):
    assert run_cli("solve", "/nonexistent/file.ds") == 3
    assert run_cli("verify", "/nonexistent/file.ds", "/also/missing.sol") == 3


def test_parse_error_exits_3_with_line_number(tmp_path, capsys):
    inst = tmp_path / "bad.ds"
    inst.write_text("p ds 3 1\n1 9\n")
    assert run_cli("solve", str(inst)) == 3
    assert "line 2" in capsys.readouterr().err


def test_solve_deterministic_across_processes(tmp_path):
    inst = tmp_path / "g.ds"
    subprocess.run(
        [sys.executable, "-m", "domset", "gen", "--kind", "gnp", "--n", "120", "--p", "0.05",
         "--seed", "3", "--out", str(inst)],
        check=True,
    )
    cmd = [sys.executable, "-m", "domset", "solve", str(inst), "--algo", "sa", "--seed", "11",
           "--no-wallclock", "--sa-epochs", "10"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True)
    second = subprocess.run(cmd, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
