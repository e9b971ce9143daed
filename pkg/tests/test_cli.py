import json
import subprocess
import sys

import numpy as np
import pytest

from nnborder import GenSpec, generate
from nnborder.cli import main
from nnborder.io import ParseError, read_csv, read_indices, write_csv

COLLINEAR_CSV = "x,y,label\n0,0,red\n1,0,red\n5,0,blue\n6,0,blue\n"


@pytest.fixture
def collinear(tmp_path):
    p = tmp_path / "c4.csv"
    p.write_text(COLLINEAR_CSV)
    return p


def test_gen_writes_rows_and_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["gen", "--kind", "blobs", "--n", "100", "--dim", "2", "--classes", "3", "--rng", "7"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 101  # header + rows


@pytest.mark.parametrize("argv", [["gen", "--kind", "spiral", "--n", "3", "--out", "x"], ["reduce", "f", "--bogus"]])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_gen_invalid_spec_exit_2(tmp_path):
    assert main(["gen", "--kind", "blobs", "--n", "2", "--classes", "3", "--out", str(tmp_path / "x.csv")]) == 2


def test_csv_round_trip(tmp_path):
    P = generate(GenSpec("annuli", 50, 3, 3, rng_seed=2))
    write_csv(P, tmp_path / "p.csv")
    Q = read_csv(tmp_path / "p.csv")
    assert Q.labels == P.labels
    assert Q.points.tobytes() == P.points.tobytes()


def test_csv_without_header_and_label_tokens(tmp_path):
    p = tmp_path / "p.csv"
    p.write_text("0.5,1,cat\n2,3,dog\n-1,1e-3,42\n")
    P = read_csv(p)
    assert P.n == 3 and P.dim == 2
    assert P.labels == ("cat", "dog", "42")


@pytest.mark.parametrize("text", ["", "x,label\n", "1,2,a\n3,b\n", "1,2,a\nfoo,2,b\n", "1,nan,a\n"])
def test_csv_parse_errors(tmp_path, text):
    p = tmp_path / "bad.csv"
    p.write_text(text)
    with pytest.raises(ParseError):
        read_csv(p)


@pytest.mark.parametrize("algo", ["seeded", "mst", "brute"])
def test_reduce_collinear(tmp_path, collinear, algo):
    out, stats = tmp_path / "idx.txt", tmp_path / "stats.jsonl"
    assert main(["reduce", str(collinear), "--algo", algo, "--out", str(out), "--stats", str(stats)]) == 0
    assert out.read_text() == "1\n2\n"
    rec = json.loads(stats.read_text())
    assert list(rec) == ["n", "d", "k", "inversion_calls", "lp_tests", "elapsed_ms", "algorithm"]
    assert (rec["n"], rec["d"], rec["k"]) == (4, 2, 2)


def test_reduce_three_way_identical_and_deterministic(tmp_path):
    src = tmp_path / "p.csv"
    assert main(["gen", "--kind", "blobs", "--n", "40", "--classes", "3", "--rng", "5", "--out", str(src)]) == 0
    outs = {}
    for algo in ["seeded", "mst", "brute"]:
        o = tmp_path / f"{algo}.txt"
        main(["reduce", str(src), "--algo", algo, "--out", str(o), "--stats", str(tmp_path / "s")])
        outs[algo] = o.read_bytes()
    assert outs["seeded"] == outs["mst"] == outs["brute"]

    for run in range(2):
        main(["reduce", str(src), "--out", str(tmp_path / f"r{run}"), "--certificates", str(tmp_path / f"c{run}"),
              "--stats", str(tmp_path / "s")])
    assert (tmp_path / "r0").read_bytes() == (tmp_path / "r1").read_bytes()
    assert (tmp_path / "c0").read_bytes() == (tmp_path / "c1").read_bytes()


def test_reduce_certificates(tmp_path, collinear):
    certs = tmp_path / "certs.jsonl"
    assert main(["reduce", str(collinear), "--out", str(tmp_path / "i"), "--stats", str(tmp_path / "s"),
                 "--certificates", str(certs)]) == 0
    recs = [json.loads(line) for line in certs.read_text().splitlines()]
    assert [r["point"] for r in recs] == [1, 2]
    for r in recs:
        assert r["point"] in (r["i"], r["j"])
        assert r["center"][0] == pytest.approx(3.0)


def test_reduce_single_class(tmp_path, capsys):
    p = tmp_path / "one.csv"
    p.write_text("0,0,a\n1,0,a\n0,1,a\n")
    out = tmp_path / "idx"
    assert main(["reduce", str(p), "--out", str(out)]) == 0
    assert out.read_text() == ""
    assert json.loads(capsys.readouterr().err)["k"] == 0


def test_reduce_data_errors(tmp_path):
    dup = tmp_path / "dup.csv"
    dup.write_text("0,0,a\n1,1,b\n0,0,b\n")
    assert main(["reduce", str(dup)]) == 3
    bad = tmp_path / "bad.csv"
    bad.write_text("0,0,a\n1,x,b\n")
    assert main(["reduce", str(bad)]) == 2
    assert main(["reduce", str(tmp_path / "missing.csv")]) == 2


def test_reduce_seed_index_out_of_range(collinear):
    assert main(["reduce", str(collinear), "--seed-index", "9"]) == 2


def test_reduce_stdout(collinear, capsys):
    assert main(["reduce", str(collinear)]) == 0
    assert capsys.readouterr().out == "1\n2\n"


@pytest.mark.parametrize("indices, code", [("0\n1\n2\n3\n", 0), ("1\n2\n", 0), ("1\n", 4)])
def test_verify(tmp_path, collinear, indices, code, capsys):
    idx = tmp_path / "idx"
    idx.write_text(indices)
    assert main(["verify", str(collinear), str(idx), "--queries", "20000", "--rng", "1"]) == code
    rep = json.loads(capsys.readouterr().out)
    assert rep["queries"] == 20000
    if code:
        assert rep["disagreements"] > 0
    else:
        assert rep["agreements"] + rep["skipped_ties"] == 20000


def test_verify_bad_index_file(tmp_path, collinear):
    idx = tmp_path / "idx"
    idx.write_text("one\n")
    assert main(["verify", str(collinear), str(idx)]) == 2
    idx.write_text("17\n")
    assert main(["verify", str(collinear), str(idx)]) == 2


def test_read_indices_skips_blank_lines(tmp_path):
    p = tmp_path / "i"
    p.write_text("3\n\n1\n")
    assert read_indices(p) == [3, 1]


def test_bench_small(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--ns", "200,400", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "algorithm,n,k,inversion_calls,lp_tests,elapsed_ms,seed_is_border"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 4
    for algo, n, k, calls, *_rest, seed_border in rows:
        if algo == "seeded":
            assert int(calls) == int(k) + (0 if seed_border == "True" else 1)
    slopes = json.loads(capsys.readouterr().out)["loglog_slope"]
    assert set(slopes) == {"seeded", "mst"}


def test_bench_single_size_slope_absent(capsys):
    assert main(["bench", "--ns", "300", "--algos", "seeded"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.err)["loglog_slope"] == {"seeded": None}
    assert captured.out.startswith("algorithm,n,")


def test_bench_rejects_bad_lists():
    assert main(["bench", "--ns", "a,b"]) == 2
    assert main(["bench", "--ns", "100", "--algos", "brute"]) == 2


def test_console_exit_code(tmp_path):
    dup = tmp_path / "dup.csv"
    dup.write_text("0,0,a\n0,0,b\n")
    proc = subprocess.run([sys.executable, "-m", "nnborder.cli", "reduce", str(dup)], capture_output=True, text=True)
    assert proc.returncode == 3
    assert "error" in proc.stderr
