import csv
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from inducibility import make_digraph, random_digraph, to_arclist
from inducibility.cli import emit_convergence, run
from inducibility.digraph import read_arclist


def schema(verb):
    text = resources.files("inducibility").joinpath(f"schemas/{verb}.schema.json").read_text()
    return json.loads(text)


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def s3_file(tmp_path):
    p = tmp_path / "s3.arcs"
    p.write_text(to_arclist(make_digraph(3, [(0, 1), (0, 2)])))
    return str(p)


def test_alpha_text(capsys):
    code, out, _ = call(capsys, "alpha", "--k", "3", "--tol", "1e-12")
    assert code == 0
    assert out.splitlines()[:2] == ["alpha = 0.464101615", "x = 0.366025404"]


def test_kst_text(capsys):
    code, out, _ = call(capsys, "kst", "--s", "2", "--t", "2")
    assert code == 0 and out.splitlines() == ["exact 3/8", "value 0.375"]
    _, out, _ = call(capsys, "kst", "--s", "1", "--t", "2")
    assert out.splitlines() == ["exact n/a", "value 0.464101615"]


def test_count_text(capsys, s3_file):
    code, out, _ = call(capsys, "count", "--pattern", "star:3", "--in", s3_file)
    assert code == 0 and out.splitlines() == ["copies 1", "density 1 (1/1)"]


def test_count_oracle_agrees(capsys, tmp_path):
    for seed in range(10):
        p = tmp_path / f"g{seed}.arcs"
        p.write_text(to_arclist(random_digraph(7, 0.4, ("general", "oriented")[seed % 2], seed)))
        for pat in ("star:3", "star:4", "kst:2,2", "kst:1,3"):
            fast = call(capsys, "count", "--pattern", pat, "--in", str(p), "--json")[1]
            slow = call(capsys, "count", "--pattern", pat, "--in", str(p), "--json", "--oracle")[1]
            a, b = json.loads(fast), json.loads(slow)
            assert a.pop("oracle") is False and b.pop("oracle") is True
            assert a == b


def test_construct_writes_arclist(capsys, tmp_path):
    out_file = tmp_path / "c.arcs"
    code, out, _ = call(capsys, "construct", "--kind", "kst", "--n", "8", "--s", "2", "--t", "2", "--out", str(out_file))
    assert code == 0 and out.splitlines() == ["copies 36", "density 0.514285714"]
    assert read_arclist(out_file).num_arcs == 16
    code, out, err = call(capsys, "construct", "--kind", "star", "--n", "3", "--k", "3")
    assert out == "n 3\n0 1\n0 2\n" and "copies 1" in err


def test_construct_missing_params(capsys):
    assert call(capsys, "construct", "--kind", "star", "--n", "5")[0] == 2
    assert call(capsys, "construct", "--kind", "kst", "--n", "5", "--s", "2")[0] == 2


def test_compress_text(capsys, tmp_path, s3_file):
    out_file = tmp_path / "r.arcs"
    code, out, _ = call(capsys, "compress", "--k", "3", "--in", s3_file, "--out", str(out_file))
    assert code == 0
    assert out.splitlines() == [
        "before copies 1 density 1",
        "after copies 1 density 1",
        "profile 2/3 1/3",
        "steps 0",
    ]
    assert read_arclist(out_file).num_arcs == 2


def test_search_json(capsys):
    code, out, _ = call(capsys, "search", "--n", "4", "--pattern", "star:3", "--mode", "oriented")
    rep = json.loads(out)
    assert code == 0 and rep["max_copies"] == 3 and rep["graphs_examined"] == 729
    jsonschema.validate(rep, schema("search"))


def test_search_over_cap(capsys):
    code, out, err = call(capsys, "search", "--n", "6", "--pattern", "star:3", "--mode", "general")
    assert code == 1 and "n <= 5" in err and out == ""


def test_aux3(capsys, s3_file):
    code, out, _ = call(capsys, "aux3", "--in", s3_file, "--check-c5")
    assert code == 0 and out == "n 3\n0 1 2\n# c5_free true\n"


def test_errors(capsys, tmp_path):
    assert call(capsys, "count", "--pattern", "star:3", "--in", str(tmp_path / "missing"))[0] == 1
    bad = tmp_path / "bad.arcs"
    bad.write_text("n 3\n0 1\n0 1\n")
    code, _, err = call(capsys, "count", "--pattern", "star:3", "--in", str(bad))
    assert code == 1 and "duplicate" in err
    assert call(capsys, "count", "--pattern", "wheel:3", "--in", str(bad))[0] == 1
    assert call(capsys, "alpha", "--k", "2")[0] == 1
    assert call(capsys, "alpha", "--k", "3", "--bogus")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys)[0] == 2


def test_convergence_csv(tmp_path, capsys):
    path = tmp_path / "conv.csv"
    rows = emit_convergence(3, [30, 60, 120], path)
    with open(path) as fh:
        table = list(csv.DictReader(fh))
    assert list(table[0]) == ["n", "construction_density", "alpha", "gap"]
    assert len(table) == 3
    gaps = [float(r["gap"]) for r in table]
    assert all(g > 0 for g in gaps) and gaps[0] > gaps[1] > gaps[2]
    assert [r["gap"] for r in rows] == sorted((r["gap"] for r in rows), reverse=True)
    single = emit_convergence(3, [3])
    assert single[0]["construction_density"] == 1
    with pytest.raises(ValueError):
        emit_convergence(3, [])
    assert call(capsys, "convergence", "--k", "3", "--n", "")[0] == 2
    assert call(capsys, "convergence", "--k", "3", "--n", "60,30")[0] == 2


@pytest.mark.parametrize(
    "verb,argv",
    [
        ("alpha", ["alpha", "--k", "4"]),
        ("kst", ["kst", "--s", "2", "--t", "3"]),
        ("kst", ["kst", "--s", "1", "--t", "3"]),
        ("count", ["count", "--pattern", "kst:1,2", "--in", "{s3}"]),
        ("compress", ["compress", "--k", "3", "--in", "{s3}"]),
        ("aux3", ["aux3", "--in", "{s3}", "--check-c5"]),
        ("aux3", ["aux3", "--in", "{s3}"]),
        ("convergence", ["convergence", "--k", "3", "--n", "10,20"]),
        ("construct", ["construct", "--kind", "star", "--n", "9", "--k", "3", "--out", "{tmp}"]),
        ("bench", ["bench", "--suite", "search"]),
    ],
)
def test_json_schemas(capsys, s3_file, tmp_path, verb, argv):
    argv = [a.format(s3=s3_file, tmp=tmp_path / "o.arcs") for a in argv] + ["--json"]
    code, out, _ = call(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), schema(verb))


def test_bench_csv(capsys):
    code, out, _ = call(capsys, "bench", "--suite", "counting")
    rows = list(csv.DictReader(out.splitlines()))
    assert code == 0 and rows and set(rows[0]) == {"suite", "case", "n", "seconds", "result"}


def test_determinism(capsys, s3_file):
    for argv in (["alpha", "--k", "5"], ["compress", "--k", "3", "--in", s3_file], ["search", "--n", "3", "--pattern", "kst:1,2"]):
        first = call(capsys, *argv)[1]
        assert call(capsys, *argv)[1] == first


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "inducibility", "kst", "--s", "2", "--t", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "exact 3/8"
