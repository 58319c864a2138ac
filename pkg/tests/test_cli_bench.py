import json
import subprocess
import sys

import pytest

from qgraph.bench import CSV_COLUMNS, ExperimentConfig, SweepPoint, fit_slope, parse_sweep, rows_to_csv, run_sweep
from qgraph.cli import main
from qgraph.errors import InvalidArgs
from qgraph.graph import read_edge_list


def run_cli(args, capsys):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_er_header(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, stdout, _ = run_cli(["gen", "er", "--n", 64, "--m", 256, "--seed", 7, "--out", out], capsys)
    assert code == 0 and stdout.split() == ["64", "256"]
    assert out.read_text().splitlines()[0] == "p 64 256 unweighted"


def test_gen_sparse_gadget(tmp_path, capsys):
    out = tmp_path / "s.txt"
    code, stdout, _ = run_cli(["gen", "sparse-gadget", "--d", 3, "--width", 3, "--seed", 1, "--out", out], capsys)
    assert code == 0
    assert out.read_text().splitlines()[0].split()[:2] == ["p", "11"]
    assert (tmp_path / "s.json").exists()


def test_gen_bad_edge_count(tmp_path, capsys):
    code, _, err = run_cli(["gen", "er", "--n", 5, "--m", 3, "--out", tmp_path / "x.txt"], capsys)
    assert code == 2 and "error" in err


def _write(tmp_path, name, kind, n, capsys):
    p = tmp_path / name
    run_cli(["gen", kind, "--n", n, "--out", p], capsys)
    return p


def test_run_diameter_json(tmp_path, capsys):
    p4 = _write(tmp_path, "p4.txt", "path", 4, capsys)
    code, stdout, _ = run_cli(["run", "diameter", "--graph", p4, "--mode", "idealized"], capsys)
    rep = json.loads(stdout)
    assert code == 0 and rep["schema"] == 1
    assert rep["value"] == 3 and rep["witness"]["vertices"] == [0, 1, 2, 3]
    assert rep["ledger"]["charged_queries"] > 0
    assert rep["seed"] == 0 and rep["config"]["fidelity"] == "idealized"


def test_run_approx_on_cycle(tmp_path, capsys):
    c12 = _write(tmp_path, "c12.txt", "cycle", 12, capsys)
    code, stdout, _ = run_cli(["run", "approx-diameter", "--graph", c12, "--s", 4, "--seed", 9], capsys)
    assert code == 0 and 4 <= json.loads(stdout)["value"] <= 6


@pytest.mark.parametrize("alg", ["ecc", "radius", "acim", "rw", "brute"])
def test_run_other_algorithms(tmp_path, capsys, alg):
    g = tmp_path / "g.txt"
    run_cli(["gen", "er", "--n", 30, "--m", 60, "--weights", "uniform:1:4", "--out", g], capsys)
    out = tmp_path / "r.json"
    code, _, _ = run_cli(["run", alg, "--graph", g, "--out", out], capsys)
    assert code == 0 and json.loads(out.read_text())["algorithm"] == alg


def test_run_disconnected(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text("p 4 2 unweighted\n0 1 1\n2 3 1\n")
    code, _, err = run_cli(["run", "diameter", "--graph", p], capsys)
    assert code == 2 and "graph not connected" in err


def test_run_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("p 3 5 unweighted\n0 1 1\n")
    code, _, _ = run_cli(["run", "diameter", "--graph", p], capsys)
    assert code == 2


def test_verify_exit_codes(tmp_path, capsys):
    g = tmp_path / "s.txt"
    run_cli(["gen", "sparse-gadget", "--d", 10, "--seed", 3, "--out", g], capsys)
    assert run_cli(["verify", g], capsys)[0] == 0
    side = tmp_path / "s.json"
    meta = json.loads(side.read_text())
    meta["gap_minima"][2] -= 0.5
    side.write_text(json.dumps(meta))
    assert run_cli(["verify", g], capsys)[0] == 1
    side.unlink()
    assert run_cli(["verify", g], capsys)[0] == 2


def test_bench_zero_trials():
    with pytest.raises(InvalidArgs):
        run_sweep(ExperimentConfig("diameter", [SweepPoint(16, 32)], trials=0))
    with pytest.raises(InvalidArgs):
        run_sweep(ExperimentConfig("diameter", []))


def test_bench_csv_deterministic(tmp_path):
    def once(name):
        cfg = ExperimentConfig("approx-diameter", parse_sweep("32:64,64:128"), trials=2,
                               csv_path=str(tmp_path / name))
        rows, rep = run_sweep(cfg)
        return rows, rep, (tmp_path / name).read_text().splitlines()

    rows, rep, lines = once("a.csv")
    _, _, lines2 = once("b.csv")
    assert lines[0].startswith("# generated")
    assert lines[1:] == lines2[1:]
    assert lines[1].split(",") == list(CSV_COLUMNS)
    assert len(rows) == 4 and len(lines) == 6
    assert rows_to_csv(rows).splitlines() == lines[1:]
    assert rep.ratio_spread is not None and all(p.ratio > 0 for p in rep.points)


def test_bench_cli_writes_report(tmp_path, capsys):
    out, csv_path = tmp_path / "rep.json", tmp_path / "rows.csv"
    code, _, _ = run_cli(["bench", "--algorithm", "diameter", "--sweep", "32:64,64:128",
                          "--trials", 2, "--tolerance", 10, "--csv", csv_path, "--out", out], capsys)
    rep = json.loads(out.read_text())
    assert code == 0 and rep["passed"] and rep["schema"] == 1
    assert len(csv_path.read_text().splitlines()) == 6


def test_bench_config_file(tmp_path, capsys):
    cfg = {"algorithm": "qpbfs", "generator": "regular", "trials": 1,
           "sweep": [{"n": 64, "m": 256, "s": 16}, {"n": 128, "m": 512, "s": 32}],
           "sim": {"seed": 3}, "tolerance": 100}
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    code, stdout, _ = run_cli(["bench", "--config", path], capsys)
    assert code == 0 and json.loads(stdout)["model"] == "s_pow_1.5"


def test_slope_fit():
    assert fit_slope([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)


def test_console_entry_point(tmp_path):
    p = tmp_path / "p.txt"
    r = subprocess.run([sys.executable, "-m", "qgraph", "gen", "path", "--n", "5", "--out", str(p)],
                       capture_output=True, text=True)
    assert r.returncode == 0 and read_edge_list(p).m == 4
