import json
import subprocess
import sys

import jsonschema
import pytest

from parityfactors import schemas
from parityfactors.cli import main
from parityfactors.graph import complete_graph, format_graph, parse_graph, star_graph


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(format_graph(complete_graph(4)))
    return str(path)


def test_gen_remark(capsys):
    code, out, err = run(capsys, ["gen", "remark", "--n", "10", "--a", "1", "--b", "3"])
    assert code == 0
    assert json.loads(err) == {"s": 7, "t": 3, "eta": -2}
    jsonschema.validate(json.loads(err), schemas.REMARK_SIDE)
    assert parse_graph(out).m == 45 - 3


def test_gen_complete(capsys):
    code, out, _ = run(capsys, ["gen", "complete", "--n", "4"])
    assert code == 0 and parse_graph(out) == complete_graph(4)


def test_gen_random_deterministic(capsys):
    argv = ["gen", "random", "--n", "8", "--p", "0.5", "--seed", "7"]
    _, one, _ = run(capsys, argv)
    _, two, _ = run(capsys, argv)
    assert one == two
    _, frac, _ = run(capsys, ["gen", "random", "--n", "8", "--p", "1/2", "--seed", "7"])
    assert frac == one


def test_gen_g6_roundtrip(capsys):
    _, out, _ = run(capsys, ["gen", "clique-minus", "--n", "9", "--t", "4", "--format", "g6"])
    g = parse_graph(out, "g6")
    assert (g.n, g.m) == (9, 36 - 6)


def test_gen_bad_params(capsys):
    assert run(capsys, ["gen", "complete"])[0] == 1
    assert run(capsys, ["gen", "remark", "--n", "10", "--a", "1", "--b", "2"])[0] == 1


def test_bad_probability_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "parityfactors", "gen", "random", "--n", "4", "--p", "3/2", "--seed", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1


def test_factor_commands(capsys, k4_file, tmp_path):
    code, out, _ = run(capsys, ["factor", k4_file, "--f-const", "1"])
    res = json.loads(out)
    assert code == 0 and res["exists"] and len(res["edges"]) == 2
    jsonschema.validate(res, schemas.FACTOR)
    code, out, _ = run(capsys, ["factor", k4_file, "--h", "3,3,1,1"])
    assert code == 0 and json.loads(out)["exists"] is False
    star = tmp_path / "star.txt"
    star.write_text(format_graph(star_graph(3)))
    res = json.loads(run(capsys, ["factor", str(star), "--a", "1", "--b", "3"])[1])
    assert res["exists"] and len(res["edges"]) == 3


def test_factor_usage_errors(capsys, k4_file, tmp_path):
    assert run(capsys, ["factor", k4_file, "--h", "1,1"])[0] == 1
    assert run(capsys, ["factor", k4_file])[0] == 1
    assert run(capsys, ["factor", k4_file, "--f-const", "1", "--a", "1", "--b", "3"])[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 7\n")
    code, _, err = run(capsys, ["factor", str(bad), "--f-const", "1"])
    assert code == 1 and "line 2" in err


def test_factor_summary(capsys, k4_file):
    code, out, _ = run(capsys, ["factor", k4_file, "--f-const", "1", "--summary"])
    assert out.strip() == "factor with 2 edges"


def test_check_commands(capsys, k4_file, tmp_path):
    code, out, _ = run(capsys, ["check", k4_file, "--mode", "niessen", "--a", "1", "--b", "3"])
    rep = json.loads(out)
    jsonschema.validate(rep, schemas.CRITERION_REPORT)
    assert code == 0 and not rep["satisfied"] and rep["witness"]["eta"] == -2
    c6 = tmp_path / "c6.txt"
    c6.write_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    rep = json.loads(run(capsys, ["check", str(c6), "--mode", "tutte", "--f-const", "2"])[1])
    assert rep["satisfied"]
    exhaustive = json.loads(
        run(capsys, ["check", k4_file, "--mode", "all-parity-exhaustive", "--a", "1", "--b", "3"])[1]
    )
    jsonschema.validate(exhaustive, schemas.ALL_PARITY)
    assert exhaustive["satisfied"] is False


def test_check_guard_exit_code(capsys, tmp_path):
    big = tmp_path / "k15.txt"
    big.write_text(format_graph(complete_graph(15)))
    code, _, err = run(capsys, ["check", str(big), "--mode", "tutte", "--f-const", "2"])
    assert code == 2 and "guard" in err
    code, _, _ = run(capsys, ["check", str(big), "--mode", "tutte", "--f-const", "2", "--max-n", "3"])
    assert code == 2


def test_theorem_commands(capsys, tmp_path, k4_file):
    k48 = tmp_path / "k48.txt"
    k48.write_text(format_graph(complete_graph(48)))
    rep = json.loads(run(capsys, ["theorem", str(k48), "--a", "1", "--b", "3"])[1])
    jsonschema.validate(rep, schemas.HYPOTHESIS_REPORT)
    assert rep["all_hold"]
    rep = json.loads(run(capsys, ["theorem", k4_file, "--a", "1", "--b", "3"])[1])
    assert not rep["all_hold"] and "n_bound" in rep["failed"]
    k10 = tmp_path / "k10.txt"
    k10.write_text(format_graph(complete_graph(10)))
    assert json.loads(run(capsys, ["theorem", str(k10), "--k", "3"])[1])["all_hold"]


def test_experiment_sample(capsys):
    argv = ["experiment", "sample", "--gen", "clique-minus:20,4", "--a", "1", "--b", "3",
            "--trials", "10", "--seed", "1"]
    code, one, _ = run(capsys, argv)
    rep = json.loads(one)
    jsonschema.validate(rep, schemas.EXPERIMENT_REPORT)
    assert code == 0 and rep["params"]["instance"] == {"construction": "clique-minus", "params": ["20", "4"]}
    assert run(capsys, argv)[1] == one


def test_experiment_sample_with_pool_matches_serial(capsys):
    argv = ["experiment", "sample", "--gen", "random:14,3/4,2", "--a", "2", "--b", "4",
            "--trials", "8", "--seed", "3"]
    serial = run(capsys, argv + ["--threads", "1"])[1]
    pooled = run(capsys, argv + ["--threads", "2"])[1]
    assert serial == pooled


def test_experiment_frontier(capsys):
    argv = ["experiment", "frontier", "--a", "1", "--b", "3", "--n-min", "4", "--n-max", "10", "--seed", "5"]
    code, one, _ = run(capsys, argv)
    rep = json.loads(one)
    jsonschema.validate(rep, schemas.EXPERIMENT_REPORT)
    assert code == 0 and len(rep["rows"]) == 7
    assert all(not r["conclusion"] for r in rep["rows"])
    assert run(capsys, argv)[1] == one


def test_experiment_requires_seed():
    proc = subprocess.run(
        [sys.executable, "-m", "parityfactors", "experiment", "frontier", "--a", "1", "--b", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1


def test_pipe_gen_into_consumers():
    for fmt in ("edges", "g6"):
        gen = subprocess.run(
            [sys.executable, "-m", "parityfactors", "gen", "petersen", "--format", fmt],
            capture_output=True, text=True, check=True,
        )
        fac = subprocess.run(
            [sys.executable, "-m", "parityfactors", "factor", "--format", fmt, "--f-const", "3"],
            input=gen.stdout, capture_output=True, text=True, check=True,
        )
        res = json.loads(fac.stdout)
        assert res["exists"] and len(res["edges"]) == 15
