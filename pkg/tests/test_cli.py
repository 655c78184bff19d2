import csv
import re

import pytest

from hamparity import cli
from hamparity.digraph import bipartition, parse_edge_list, write_edge_list, Digraph
from hamparity.general import fibonacci
from hamparity.result import ParityResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(out):
    return dict(line.split("=", 1) for line in out.strip().splitlines())


@pytest.fixture
def triangle_file(tmp_path, triangle):
    p = tmp_path / "tri.txt"
    p.write_text(write_edge_list(triangle))
    return p


def test_parity_general_triangle(capsys, triangle_file):
    code, out, _ = run(capsys, "parity", str(triangle_file), "--solver", "general")
    assert code == 0
    r = report(out)
    assert r["parity"] == "1"
    assert r["solver"] == "general"
    assert r["prefixes_examined"] == "5"
    assert {"seed", "diagonal", "candidates_generated", "contributing_count", "wall_ms"} <= set(r)


def test_parity_auto_picks_bipartite(capsys, tmp_path, four_cycle):
    p = tmp_path / "c4.txt"
    p.write_text(write_edge_list(four_cycle))
    code, out, _ = run(capsys, "parity", str(p))
    assert code == 0
    assert report(out)["solver"] == "bipartite"
    assert report(out)["parity"] == "1"


def test_parity_auto_never_bipartite_on_odd_cycle(capsys, triangle_file):
    code, out, _ = run(capsys, "parity", str(triangle_file), "--solver", "auto")
    assert code == 0 and report(out)["solver"] == "general"


def test_parity_theorem3_mod3(capsys, triangle_file):
    code, out, _ = run(capsys, "parity", str(triangle_file), "--solver", "theorem3", "-K", "3")
    assert code == 0
    assert report(out)["count_mod_K"] == "1"


@pytest.mark.parametrize("solver", ["heldkarp", "brute", "theorem3", "bipartite"])
def test_parity_oracles_on_four_cycle(capsys, tmp_path, four_cycle, solver):
    p = tmp_path / "c4.txt"
    p.write_text(write_edge_list(four_cycle))
    code, out, _ = run(capsys, "parity", str(p), "--solver", solver)
    assert code == 0 and report(out)["parity"] == "1"


def test_parity_derandomized(capsys, triangle_file):
    code, out, _ = run(capsys, "parity", str(triangle_file), "--derandomize")
    r = report(out)
    assert code == 0 and r["parity"] == "1" and r["solver"] == "general+derandomized"


def test_parity_reports_are_reproducible(capsys, tmp_path):
    p = tmp_path / "g.txt"
    assert run(capsys, "gen", "-n", "10", "-p", "0.5", "--seed", "3", "-o", str(p))[0] == 0
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "parity", str(p), "--seed", "7")
        outs.append(re.sub(r"wall_ms=.*", "", out))
    assert outs[0] == outs[1]


def test_thread_count_does_not_change_report(capsys, tmp_path, monkeypatch):
    p = tmp_path / "g.txt"
    run(capsys, "gen", "-n", "12", "-p", "0.5", "--seed", "1", "-o", str(p))
    _, single, _ = run(capsys, "parity", str(p), "--solver", "general")
    monkeypatch.setenv("HAMPARITY_THREADS", "3")
    _, multi, _ = run(capsys, "parity", str(p), "--solver", "general")
    strip = lambda s: re.sub(r"wall_ms=.*", "", s)  # noqa: E731
    assert strip(single) == strip(multi)


@pytest.mark.parametrize("text, argv", [
    ("3 1\n1 9\n", []),
    ("1 0\n", []),
    ("3 3\n1 2\n2 3\n3 1\n", ["--solver", "bipartite"]),
    ("3 3\n1 2\n2 3\n3 1\n", ["--solver", "heldkarp", "-K", "3"]),
    ("3 3\n1 2\n2 3\n3 1\n", ["--solver", "bipartite", "--derandomize"]),
    ("11 0\n", ["--solver", "brute"]),
    ("12 0\n", ["--solver", "theorem3", "-K", "5"]),
])
def test_parity_usage_errors_exit_2(capsys, tmp_path, text, argv):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    code, _, err = run(capsys, "parity", str(p), *argv)
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "parity", str(tmp_path / "nope.txt"))[0] == 2


def test_gen_edgeless(capsys, tmp_path):
    p = tmp_path / "e.txt"
    assert run(capsys, "gen", "-n", "6", "-p", "0", "-o", str(p))[0] == 0
    assert p.read_text() == "6 0\n"


def test_gen_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "gen", "-n", "9", "-p", "0.4", "--seed", "5", "-o", str(a))
    run(capsys, "gen", "-n", "9", "-p", "0.4", "--seed", "5", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_gen_bipartite(capsys, tmp_path):
    p = tmp_path / "b.txt"
    assert run(capsys, "gen", "-n", "8", "-p", "0.5", "--bipartite", "-o", str(p))[0] == 0
    bipartition(parse_edge_list(p.read_text()))
    assert run(capsys, "gen", "-n", "7", "--bipartite")[0] == 2


def test_gen_stdout(capsys):
    code, out, _ = run(capsys, "gen", "-n", "3", "-p", "1")
    assert code == 0 and out.startswith("3 6\n")


def test_verify_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "4", "--trials", "1")
    assert code == 0
    assert "0 mismatches" in out


def test_verify_detects_corrupted_solver(capsys, monkeypatch):
    real = cli.parity_general

    def broken(g, **kw):
        res = real(g, **kw)
        return ParityResult(1 - res.parity, res.solver, res.diagonal)

    monkeypatch.setattr(cli, "parity_general", broken)
    code, out, _ = run(capsys, "verify", "--n-max", "4", "--trials", "1")
    assert code == 1
    assert "MISMATCH" in out


def test_bench_general_fibonacci_column(capsys, tmp_path):
    out = tmp_path / "bench.csv"
    code, _, _ = run(capsys, "bench", "--n-min", "12", "--n-max", "24", "--step", "2",
                     "--solver", "general", "-o", str(out))
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert list(rows[0]) == cli.BENCH_COLUMNS
    assert [int(r["n"]) for r in rows] == list(range(12, 25, 2))
    for r in rows:
        assert int(r["prefixes_examined"]) == fibonacci(int(r["n"]) + 2)
    cands = [int(r["candidates_generated"]) for r in rows]
    ratios = [b / a for a, b in zip(cands, cands[1:])]
    geo = 1.0
    for q in ratios:
        geo *= q
    geo **= 1 / len(ratios)
    phi2 = ((1 + 5**0.5) / 2) ** 2
    assert abs(geo - phi2) < 0.15 * phi2


@pytest.mark.parametrize("solver", ["bipartite", "heldkarp"])
def test_bench_other_solvers(capsys, tmp_path, solver):
    out = tmp_path / "bench.csv"
    code, _, _ = run(capsys, "bench", "--n-min", "4", "--n-max", "12", "--step", "2",
                     "--solver", solver, "-o", str(out))
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 5 and all(r["solver"] == solver for r in rows)


def test_bench_unwritable(capsys, tmp_path):
    code, _, _ = run(capsys, "bench", "--n-min", "4", "--n-max", "4",
                     "-o", str(tmp_path / "no" / "such" / "dir.csv"))
    assert code == 2


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "hamparity", "gen", "-n", "2", "-p", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2 2\n1 2\n2 1\n"
