import io
import subprocess
import sys

import pytest

from chsnorms import cli
from chsnorms.errors import ExtremalViolation


def run(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def tsv(text):
    lines = text.splitlines()
    head = lines[0].split("\t")
    return [dict(zip(head, ln.split("\t"))) for ln in lines[1:]]


def test_norm_k3_d6():
    code, out, _ = run("--format", "tsv", "norm", "--family", "K3", "--d", "6")
    assert code == 0
    (row,) = tsv(out)
    assert row["exact_dth_power"] == "31/1"
    assert float(row["norm"]) == pytest.approx(31 ** (1 / 6))
    assert row["norm"].startswith("1.772")
    assert len(row["norm"].replace(".", "")) == 12


def test_walks_k4():
    code, out, _ = run("--format", "tsv", "walks", "--family", "K4", "--k", "7")
    assert code == 0 and tsv(out) == [{"graph": "K4", "k": "7", "closed_walks": "2184"}]
    code, out, _ = run("--format", "tsv", "walks", "--family", "K4", "--k", "3", "--all")
    assert [r["closed_walks"] for r in tsv(out)] == ["0", "12", "24"]


def test_verify_trees():
    code, out, _ = run("--format", "tsv", "verify", "--mode", "trees", "--n", "6", "--d", "4")
    assert code == 0
    (row,) = tsv(out)
    assert row["max"] == row["top_value"] == "25/1"
    assert row["argmax_count"] == row["argmax_top"] == "6"
    assert row["bound_violations"] == "0"


def test_compare_k3_pair():
    code, out, _ = run("--format", "tsv", "compare", "--graph6", "EwCW", "EBj?")
    assert code == 0
    (row,) = tsv(out)
    assert (row["distinguishing_d"], row["g_dth_power"], row["h_dth_power"]) == ("6", "120/1", "112/1")


def test_compare_not_cospectral():
    code, out, _ = run("--format", "tsv", "compare", "--family", "K3", "P3")
    assert code == 0 and tsv(out)[0]["singularly_cospectral"] == "false"


def test_pair_and_stdin(monkeypatch):
    code, out, _ = run("--format", "tsv", "pair", "--graph6", "-", stdin="Bw\n",
                       monkeypatch=monkeypatch)
    assert code == 0 and tsv(out)[0]["distinguishing_d"] == "6"


def test_compare_stdin(monkeypatch):
    code, out, _ = run("--format", "tsv", "compare", "--graph6", "-", stdin="EwCW\nEBj?\n",
                       monkeypatch=monkeypatch)
    assert code == 0 and tsv(out)[0]["h_dth_power"] == "112/1"


def test_edges_file(tmp_path):
    p = tmp_path / "p3.txt"
    p.write_text("3 2\n1 2\n2 3\n")
    code, out, _ = run("--format", "tsv", "norm", "--edges", str(p), "--d", "2,4")
    assert code == 0
    rows = tsv(out)
    assert rows[0]["graph"] == "Bg" and [r["exact_dth_power"] for r in rows] == ["2/1", "4/1"]


def test_spectrum_and_bounds():
    code, out, _ = run("--format", "tsv", "spectrum", "--family", "K2,2")
    assert code == 0 and tsv(out)[0]["eigenvalues"] == "2,0,0,-2"
    code, out, _ = run("--format", "tsv", "bounds", "--family", "K5", "--d", "4")
    row = tsv(out)[0]
    assert row["spectral_lower_ok"] == "true" and abs(float(row["spectral_lower_slack"])) < 1e-9


def test_partitions_and_table():
    code, out, _ = run("--format", "tsv", "partitions", "--d", "4")
    assert [r["partition"] for r in tsv(out)] == ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]
    assert [r["z"] for r in tsv(out)] == ["4", "3", "8", "4", "24"]
    code, out, _ = run("--format", "tsv", "table", "--kind", "K", "--n-min", "3", "--n-max", "3",
                       "--d", "4,6")
    assert [r["exact_dth_power"] for r in tsv(out)] == ["9/1", "31/1"]


def test_text_format_default():
    code, out, _ = run("norm", "--family", "K3", "--d", "4")
    assert code == 0 and out.splitlines()[0].split() == ["graph", "d", "exact_dth_power", "norm",
                                                          "route_agreement"]


@pytest.mark.parametrize("argv", [
    ["norm", "--family", "K3", "--d", "5"],
    ["norm", "--family", "X3"],
    ["norm", "--graph6", "B "],
    ["norm"],
    ["norm", "--family", "K3", "--graph6", "Bw"],
    ["norm", "--family", "K3", "--bogus"],
    ["frobnicate"],
    ["pair", "--family", "K2,2"],
    ["compare", "--graph6", "Bw"],
    ["compare", "--graph6", "Bw", "Cw"],
    ["norm", "--edges", "/nonexistent/file"],
    ["verify", "--n", "12"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and err


def test_max_n_env(monkeypatch):
    monkeypatch.setenv("CHS_MAX_N", "4")
    code, _, err = run("verify", "--n", "5", "--d", "2")
    assert code == 2 and "CHS_MAX_N" in err
    code, _, _ = run("verify", "--n", "4", "--d", "2")
    assert code == 0


def test_violation_exit_3(monkeypatch):
    def boom(*a, **k):
        raise ExtremalViolation("synthetic")
    monkeypatch.setattr(cli.extremal, "verify_theorem2_multi", boom)
    code, _, err = run("verify", "--n", "4")
    assert code == 3 and "synthetic" in err


def test_deterministic_output():
    argv = ["--format", "tsv", "verify", "--n", "5", "--d", "2,4,6"]
    assert run(*argv)[1] == run(*argv)[1]
    assert run(*argv)[1] == run(*argv, "--jobs", "2", "--shard-count", "3")[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "chsnorms", "--format", "tsv", "walks",
                          "--family", "K3", "--k", "4"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[1].endswith("\t18")
