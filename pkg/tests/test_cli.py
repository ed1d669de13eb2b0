import io
import subprocess
import sys

import pytest

from pathcolor.cli import run
from pathcolor.constructs import cycle_graph
from pathcolor.io import format_graph, parse_coloring, parse_graph


def call(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": call(argv, stdin, monkeypatch, capsys)


def test_pipeline_through_real_pipes():
    exe = [sys.executable, "-m", "pathcolor.cli"]
    gen = subprocess.run(exe + ["gen", "gd", "--a", "3", "--b", "3"], capture_output=True, text=True, check=True)
    col = subprocess.run(exe + ["color", "--method", "spc5"], input=gen.stdout, capture_output=True, text=True, check=True)
    ver = subprocess.run(exe + ["verify", "--property", "strong"], input=col.stdout, capture_output=True, text=True)
    assert ver.returncode == 0 and "connected" in ver.stdout


def test_all_one_c6_is_negative(cli, tmp_path):
    g = tmp_path / "c6.txt"
    g.write_text(format_graph(cycle_graph(6)))
    c = tmp_path / "c6.col"
    c.write_text("k 1 property strong\n" + "".join(f"e {i + 1} {(i + 1) % 6 + 1} 1\n" for i in range(6)))
    code, out, _ = cli(["verify", "--input", str(g), "--coloring", str(c), "--property", "strong"])
    assert code == 1 and "NOT connected" in out


def test_exact_c5(cli):
    _, c5, _ = cli(["gen", "named", "--name", "c5"])
    code, out, _ = cli(["exact", "--input", "-", "--property", "strong", "--kmax", "4"], c5)
    assert code == 0 and out.strip() == "3"
    code, out, _ = cli(["exact", "--property", "strong", "--kmax", "2"], c5)
    assert code == 1 and out.strip() == "none"


def test_exit_codes(cli, tmp_path):
    assert cli(["ears", "--input", "-"], "p edge 3 x\n")[0] == 2
    assert cli(["ears", "--input", str(tmp_path / "missing.txt")])[0] == 2
    _, c7, _ = cli(["gen", "named", "--name", "c7"])
    assert cli(["color", "--method", "mod3"], c7)[0] == 3
    assert cli(["color", "--method", "twotree"], c7)[0] == 3
    _, p4, _ = cli(["gen", "named", "--name", "k2"])
    assert cli(["color", "--method", "spc5"], p4)[0] == 3
    _, k6, _ = cli(["gen", "named", "--name", "k6"])
    assert cli(["exact", "--kmax", "3"], k6)[0] == 3
    assert cli(["color", "--method", "spc5", "--property", "nonrep"], k6)[0] == 3
    assert cli(["verify"], k6)[0] == 2


def test_gen_kinds_are_deterministic(cli):
    for argv in (
        ["gen", "gd", "--a", "4", "--b", "3"],
        ["gen", "mod3", "--base", "k4", "--seed", "5"],
        ["gen", "random2c", "--n", "12", "--extra", "4", "--seed", "2"],
        ["gen", "randmin2c", "--n", "12", "--extra", "4", "--seed", "2"],
        ["gen", "kedge", "--n", "10", "--k", "4", "--seed", "1"],
        ["gen", "named", "--name", "octahedron"],
    ):
        code, out1, _ = cli(argv)
        _, out2, _ = cli(argv)
        assert code == 0 and out1 == out2
        parse_graph(out1)


def test_mod3_from_base_file(cli, tmp_path):
    base = tmp_path / "base.txt"
    base.write_text(format_graph(cycle_graph(4)))
    code, out, _ = cli(["gen", "mod3", "--base-file", str(base), "--seed", "1"])
    assert code == 0
    code, col, _ = cli(["color", "--method", "mod3"], out)
    assert code == 0 and parse_coloring(col)[1].k == 3


def test_twotree_writes_witness_file(cli, tmp_path):
    _, k5, _ = cli(["gen", "named", "--name", "k5"])
    col = tmp_path / "k5.col"
    code, _, _ = cli(["color", "--method", "twotree", "--property", "nonrep", "--output", str(col)], k5)
    assert code == 0
    wit = tmp_path / "k5.col.witness"
    assert len(wit.read_text().splitlines()) == 20
    code, out, _ = cli(["verify", "--input", str(col), "--witness", str(wit)])
    assert code == 0 and "valid" in out
    # a graph file plus separate coloring also works
    g = tmp_path / "k5.txt"
    g.write_text(k5)
    assert cli(["verify", "--input", str(g), "--coloring", str(col)])[0] == 0


def test_ears_listing(cli):
    _, f4, _ = cli(["gen", "named", "--name", "fourears"])
    code, out, _ = cli(["ears", "--longest-first", "--validate-claims"], f4)
    assert code == 0
    assert out.splitlines()[0] == "c ears 4 lengths 10 4 3 2"
    assert "claim nonincreasing pass" in out
    code, out, _ = cli(["ears"], f4)
    assert code == 0 and out.count("\near ") == 3


def test_search_and_export_dot(cli):
    _, c6, _ = cli(["gen", "named", "--name", "c6"])
    code, out, _ = cli(["search", "--k", "3", "--budget", "5000", "--seed", "1"], c6)
    assert code == 0 and out.startswith("k 3 property strong")
    code, out2, _ = cli(["search", "--k", "3", "--budget", "5000", "--seed", "1"], c6)
    assert out == out2
    code, dot, _ = cli(["export-dot"], out)
    assert code == 0 and "color=" in dot
    code, dot, _ = cli(["export-dot"], c6)
    assert code == 0 and "1 -- 2;" in dot
    _, c5, _ = cli(["gen", "named", "--name", "c5"])
    assert cli(["search", "--k", "2", "--budget", "500"], c5)[:2] == (1, "none\n")


def test_report_writes_csv_and_figures(cli, tmp_path):
    _, gd, _ = cli(["gen", "gd"])
    src = tmp_path / "gd.txt"
    src.write_text(gd)
    out = tmp_path / "rep"
    code, listing, _ = cli(["report", "--input", str(src), "--input", str(src), "--outdir", str(out)])
    assert code == 0
    summary = (out / "summary.csv").read_text().splitlines()
    assert summary[0].startswith("name,n,m,method")
    assert summary[1].startswith("gd,57,60,spc5,strong,5,5,True")
    assert summary[2].startswith("gd_2,")
    for name in ("gd_coloring.png", "gd_color_counts.png", "gd_ears.png", "gd_edges.csv"):
        assert (out / name).stat().st_size > 0
    assert (out / "gd_coloring.png").read_bytes()[:4] == b"\x89PNG"
