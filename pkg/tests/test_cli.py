import json
import subprocess
import sys
from fractions import Fraction

import pytest

from fpoly import generators as gen
from fpoly.cli import main
from fpoly.fcalc import curvature_report
from fpoly.graph_io import write_graph
from fpoly.poly import BiPoly, FVector, RatPoly, UniPoly


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, G in {
        "torus16.el": gen.torus_16(),
        "k5.el": gen.complete(5),
        "k2.el": gen.complete(2),
        "c4.json": gen.cycle(4),
        "w5.el": gen.wheel(5),
    }.items():
        write_graph(G, tmp_path / name)
        paths[name] = str(tmp_path / name)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fvector_torus(capsys, files):
    for algo in ("ph", "gb", "brute"):
        code, out, _ = run(capsys, "fvector", files["torus16.el"], "--algo", algo)
        assert code == 0
        assert "f = 1 + 16 t + 48 t^2 + 32 t^3" in out
        assert "f-vector = (16, 48, 32)" in out


def test_fvector_json_round_trip(capsys, files):
    code, out, _ = run(capsys, "fvector", files["w5.el"], "--json", "--seed", "3")
    data = json.loads(out)
    assert FVector(data["f_vector"]) == (6, 10, 5)
    assert UniPoly.from_json(data["f_function"]) == UniPoly([1, 6, 10, 5])


def test_euler(capsys, files):
    assert run(capsys, "euler", files["k5.el"]) == (0, "1\n", "")
    code, out, _ = run(capsys, "euler", files["torus16.el"], "--json")
    assert json.loads(out) == {"euler_characteristic": 0}


def test_curvature(capsys, files):
    code, out, _ = run(capsys, "curvature", files["k2.el"], "--poly")
    assert code == 0
    assert out.splitlines() == ["0\t1/2\t1 + 1/2 t", "1\t1/2\t1 + 1/2 t", "total\t1"]
    code, out, _ = run(capsys, "curvature", files["w5.el"], "--json")
    data = json.loads(out)
    report = curvature_report(gen.wheel(5))
    for row in data["vertices"]:
        assert Fraction(row["curvature"]) == report.values[row["vertex"]]
        assert RatPoly.from_json(row["poly"]) == report.polys[row["vertex"]]
    assert data["total"] == 1


def test_indices(capsys, files):
    code, out, _ = run(capsys, "indices", files["torus16.el"], "--seed", "4", "--json")
    data = json.loads(out)
    assert data["total"] == 0
    total = sum((UniPoly.from_json(r["poly"]) for r in data["vertices"]), UniPoly())
    assert UniPoly([1]) + UniPoly([0, 1]) * total == UniPoly([1, 16, 48, 32])
    code, text, _ = run(capsys, "indices", files["torus16.el"], "--seed", "4")
    assert text.splitlines()[-1] == "total\t\t0"


def test_wu(capsys, files):
    code, out, _ = run(capsys, "wu", files["k2.el"], "--algo", "brute")
    assert code == 0
    assert out.splitlines()[:2] == ["2\t2", "2\t1"]
    assert out.splitlines()[-1] == "omega = -1"
    code, out, _ = run(capsys, "wu", files["k2.el"], "--algo", "ph", "--cutoff", "0", "--json")
    data = json.loads(out)
    assert data["f_matrix"] == [[2, 2], [2, 1]] and data["wu_characteristic"] == -1
    assert BiPoly.from_json(data["f_matrix"])(-1, -1) == -1


def test_wu_two_files(capsys, files):
    code, out, _ = run(capsys, "wu", files["k5.el"], files["c4.json"], "--json")
    assert code == 0
    assert json.loads(out)["f_matrix"][0][0] == 4


def test_verify(capsys, files):
    for name in files:
        code, out, _ = run(capsys, "verify", files[name], "--seed", "2")
        assert code == 0, out
        assert out.splitlines() == ["poincare-hopf\tok", "gauss-bonnet\tok"]


def test_verify_detects_mismatch(capsys, files, monkeypatch):
    from fpoly import fcalc

    monkeypatch.setattr(fcalc, "f_function_gb", lambda G: UniPoly([1]))
    code, out, _ = run(capsys, "verify", files["k2.el"])
    assert code == 1 and "gauss-bonnet\tFAIL" in out


def test_gen(capsys, tmp_path, files):
    out_file = tmp_path / "w.el"
    assert run(capsys, "gen", "wheel", "4", "-o", str(out_file))[0] == 0
    assert out_file.read_text() == "5 8\n0 1\n0 2\n0 3\n0 4\n1 2\n1 4\n2 3\n3 4\n"
    code, out, _ = run(capsys, "gen", "er", "10", "0.5", "--seed", "7")
    assert out == run(capsys, "gen", "er", "10", "0.5", "--seed", "7")[1]
    assert run(capsys, "gen", "torus16")[1].startswith("16 48\n")
    assert run(capsys, "gen", "barycentric", files["k2.el"])[1] == "3 2\n0 2\n1 2\n"
    code, out, _ = run(capsys, "gen", "join", files["k2.el"], files["k2.el"])
    assert out.startswith("4 6\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["nope"],
        ["gen", "cycle", "2"],
        ["gen", "cycle"],
        ["gen", "blob", "3"],
        ["fvector", "x.el", "--algo", "magic"],
        ["bench", "--n-list", "a,b"],
        ["bench", "--samples", "0"],
        ["fvector", "x.el", "--threads", "0"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 64


def test_io_errors(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n0 7\n")
    assert run(capsys, "euler", str(bad))[0] == 2
    assert run(capsys, "euler", str(tmp_path / "missing.el"))[0] == 2
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    assert run(capsys, "fvector", str(bad_json))[0] == 2


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--n-list", "5,10", "--samples", "2", "--seed", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n\tsamples\tmean_seconds"
    assert [line.split("\t")[:2] for line in lines[1:]] == [["5", "2"], ["10", "2"]]


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "fpoly", "euler", files["torus16.el"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "0\n"


def test_verify_random_er(capsys, tmp_path):
    for k in range(50):
        path = tmp_path / f"er{k}.el"
        write_graph(gen.erdos_renyi(5 + k % 12, 0.5, 3000 + k), path)
        code, out, _ = run(capsys, "verify", str(path), "--seed", str(k))
        assert code == 0, (k, out)
