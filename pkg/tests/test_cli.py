import math
import subprocess
import sys

import pytest

from rainbowsat.cli import EXIT_OK, EXIT_UNSATURATED, EXIT_USAGE, main
from rainbowsat.io import parse_metadata, read_graph, sidecar_path, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def test_construct_rotated_even(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, stdout, _ = run(capsys, "construct", "rotated-even", "--n", "16", "--r", "4", "-o", str(out))
    assert code == EXIT_OK
    assert fields(stdout)["edges"] == "48"
    assert read_graph(out).edge_count == 48
    assert parse_metadata(sidecar_path(out).read_text())["construction"] == "rotated-even"


def test_construct_steiner_bound(capsys):
    code, stdout, _ = run(capsys, "construct", "k3-steiner", "--n", "100", "--t", "3")
    assert code == EXIT_OK
    assert int(fields(stdout)["edges"]) <= math.floor(3 / math.log2(3) * 100 * math.log2(100)) + 300


def test_construct_fallback(capsys):
    code, stdout, _ = run(capsys, "construct", "acyclic-edge", "--n", "3", "--pattern", "P4")
    f = fields(stdout)
    assert code == EXIT_OK and f["fallback"] == "true" and f["edges"] == "3"


def test_construct_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        run(capsys, "construct", "triangle-edge", "--n", "50", "--pattern", "K3", "--seed", "3", "-o", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_verify_and_mutation(tmp_path, capsys):
    g = tmp_path / "g.txt"
    run(capsys, "construct", "acyclic-edge", "--n", "12", "--pattern", "P4", "-o", str(g))
    code, _, _ = run(capsys, "verify", str(g), "--pattern", "P4")
    assert code == EXIT_OK
    G = read_graph(g)
    u, v, _ = G.edges()[0]
    write_graph(G.remove_edge(u, v), g)
    code, stdout, _ = run(capsys, "verify", str(g), "--pattern", "P4")
    assert code == EXIT_UNSATURATED
    assert "unsaturated=" in stdout or "rainbow_copy=" in stdout


def test_verify_parse_error(tmp_path, capsys):
    g = tmp_path / "bad.txt"
    g.write_text("3 2\n0 1\n")
    code, _, err = run(capsys, "verify", str(g), "--pattern", "K3")
    assert code == EXIT_USAGE and "ParseError: line 2" in err


@pytest.mark.parametrize("argv,expect", [
    (["--pattern", "K4", "--t", "6"], "Θ(n log n) [clause (iii)"),
    (["--pattern", "S3", "--t", "3"], "Θ(n²) [clause (i)"),
    (["--pattern", "rotated_K5", "--t", "10"], "unresolved (class B)"),
])
def test_classify(capsys, argv, expect):
    code, stdout, _ = run(capsys, "classify", *argv)
    assert code == EXIT_OK and expect in stdout


def test_classify_palette_error(capsys):
    code, _, err = run(capsys, "classify", "--pattern", "K4", "--t", "5")
    assert code == EXIT_USAGE and "PaletteTooSmall" in err


def test_exact_sat(tmp_path, capsys):
    w = tmp_path / "w.txt"
    code, stdout, _ = run(capsys, "exact-sat", "--n", "4", "--t", "3", "--pattern", "K3", "-o", str(w))
    assert code == EXIT_OK and fields(stdout)["value"] == "6"
    assert read_graph(w).edge_count == 6
    code, _, err = run(capsys, "exact-sat", "--n", "10", "--t", "3", "--pattern", "K3")
    assert code == EXIT_USAGE and "TooLarge" in err


def test_dot_output(tmp_path, capsys):
    d = tmp_path / "g.dot"
    run(capsys, "construct", "hkl", "--n", "9", "--k", "4", "--l", "2", "--t", "12", "-o", str(d),
        "--format", "dot")
    assert d.read_text().startswith("graph G {")


def test_report_csv(capsys):
    code, stdout, _ = run(capsys, "report", "--n", "20")
    lines = stdout.strip().splitlines()
    assert code == EXIT_OK
    assert lines[0].startswith("construction,params,n,t")
    assert len(lines) == 1 + 10


def test_usage_error():
    proc = subprocess.run([sys.executable, "-m", "rainbowsat.cli", "construct"], capture_output=True)
    assert proc.returncode == EXIT_USAGE


def test_stdout_is_deterministic():
    argv = [sys.executable, "-m", "rainbowsat.cli", "classify", "--pattern", "C5"]
    a = subprocess.run(argv, capture_output=True).stdout
    b = subprocess.run(argv, capture_output=True).stdout
    assert a == b and a
