import csv
import io
import json

import pytest

from arbotri.cli import BENCH_HEADER, main
from arbotri.graph import count_triangles_exact, load_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exact_k4(tmp_path, capsys, k4_text):
    f = tmp_path / "k4.txt"
    f.write_text(k4_text)
    code, out, _ = run(capsys, "exact", "--input", str(f))
    assert code == 0
    doc = json.loads(out)
    assert (doc["T"], doc["kappa"], doc["n"], doc["m"], doc["schema"]) == (4, 3, 4, 6, 1)


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    assert run(capsys, "exact", "--input", str(bad))[0] == 3
    assert run(capsys, "exact", "--input", str(tmp_path / "missing.txt"))[0] == 3
    assert run(capsys, "exact")[0] == 2
    assert run(capsys, "gadget", "--M", "60", "--alpha-star", "8", "--k", "4", "--gamma", "0.1",
               "--seed", "0")[0] == 4
    with pytest.raises(SystemExit) as info:
        main(["exact", "--bogus"])
    assert info.value.code == 2


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "--spec", "planted:n=200,alpha=3,t=100", "--seed", "1", "--output", str(out))[0] == 0
    g = load_edge_list(out.read_text())
    assert count_triangles_exact(g) >= 100


def test_estimate_fixed_t_tilde(capsys):
    code, out, err = run(capsys, "estimate", "--gen", "clique:n=12", "--seed", "3", "--t-tilde", "220",
                         "--sample-scale", "0.01", "--with-exact", "--verbose")
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "fixed_t_tilde" and doc["exact_T"] == 220
    assert len(doc["report"]["records"]) == doc["report"]["s"]
    assert "degeneracy" in err


def test_estimate_search_is_deterministic(capsys):
    argv = ["estimate", "--gen", "clique:n=10", "--seed", "5", "--alpha", "9", "--sample-scale", "0.01"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b
    assert json.loads(a)["mode"] == "search"


def test_gadget_forced_zeros_and_export(tmp_path, capsys):
    code, out, _ = run(capsys, "gadget", "--M", "64", "--alpha-star", "8", "--k", "16", "--gamma", "0.25",
                       "--force", "zeros", "--seed", "0")
    assert code == 0 and json.loads(out)["T"] == 0
    edges = tmp_path / "gx.txt"
    inst = tmp_path / "x.txt"
    code, out, _ = run(capsys, "gadget", "--M", "64", "--alpha-star", "8", "--k", "16", "--gamma", "0.25",
                       "--dist", "D1", "--seed", "4", "--explicit", str(edges), "--instance", str(inst))
    doc = json.loads(out)
    assert count_triangles_exact(load_edge_list(edges.read_text())) == doc["T"] == 8 * doc["popcount"]
    assert inst.read_text().startswith("{")


def test_gadget_distinguish(capsys):
    code, out, _ = run(capsys, "gadget", "--M", "400", "--alpha-star", "10", "--k", "40", "--gamma", "0.25",
                       "--force", "ones", "--seed", "1", "--distinguish", "--sample-scale", "0.002")
    assert code == 0
    assert json.loads(out)["distinguish"]["label"] == "D1"


def test_bench_header_and_rows(capsys):
    argv = ["bench", "--family", "clique:n=8", "--seeds", "0,1", "--t-tilde-exact", "--sample-scale", "0.01"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == BENCH_HEADER
    assert len(rows) == 3 and rows[1][2] == "56" and rows[1][-1] == ""
    assert run(capsys, *argv)[1] == out


def test_bench_sweep(capsys):
    code, out, _ = run(capsys, "bench", "--family", "cliques:n=200,q=4,count=2,m=300", "--sweep", "count=2,4",
                       "--t-tilde-exact", "--sample-scale", "0.01")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert [r[2] for r in rows] == ["8", "16"]
