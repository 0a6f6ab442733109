import io

import numpy as np
import pytest

from alignplot import runner
from alignplot.bench import BenchmarkMismatch, benchmark
from alignplot.cli import main
from alignplot.io import (FastaError, parse_fasta, pgm_pixels, read_fasta, select_record, write_dots,
                          write_pgm, write_tsv)
from alignplot.model import PlotConfig, PlotGrid, Sequence
from alignplot.runner import compute_plot

from conftest import random_seq


def parse_tsv(text):
    lines = text.splitlines()
    assert lines[0] == "# x_offset y_offset score"
    out = {}
    for line in lines[1:]:
        x, y, s = line.split("\t")
        out[int(x), int(y)] = s
    return out


def parse_pgm(data):
    head, rest = data.split(b"\n", 1)
    assert head == b"P5"
    dims, rest = rest.split(b"\n", 1)
    maxval, pixels = rest.split(b"\n", 1)
    cols, rows = map(int, dims.split())
    assert maxval == b"255"
    return np.frombuffer(pixels, np.uint8).reshape(rows, cols)


def test_fasta_single_and_multi():
    assert [(r.header, r.sequence) for r in parse_fasta([">s", "ACGT"])] == [("s", "ACGT")]
    recs = parse_fasta(">a\nAC\nGT\n>b\nTT\n".splitlines())
    assert [r.sequence for r in recs] == ["ACGT", "TT"]
    assert parse_fasta([">q desc", "ac gt", "", "nn"])[0].sequence == "ACGTNN"
    assert select_record(recs, "b").sequence == "TT"


@pytest.mark.parametrize("text, line", [
    ("ACGT\n", 1),
    ("", None),
    ("\n\n", 2),
    (">a\nAC\n>b\n", 3),
    (">a\nA>C\n", 2),
])
def test_fasta_errors(text, line):
    with pytest.raises(FastaError) as err:
        parse_fasta(text.splitlines(keepends=True))
    assert err.value.line == line


def test_read_fasta_file(tmp_path):
    p = tmp_path / "a.fa"
    p.write_text(">s\nACGT\n")
    assert read_fasta(p)[0].sequence == "ACGT"
    with pytest.raises(FastaError):
        select_record(read_fasta(p), "missing")


def test_tsv_format():
    g = PlotGrid(np.array([[4]], np.int32), window=2)
    buf = io.StringIO()
    write_tsv(g, buf)
    assert buf.getvalue() == "# x_offset y_offset score\n0\t0\t2.0\n"
    buf = io.StringIO()
    write_tsv(PlotGrid(np.zeros((2, 2), np.int32), window=2), buf, threshold=1)
    assert buf.getvalue() == "# x_offset y_offset score\n"
    g = PlotGrid(np.array([[1, -1], [3, 0]], np.int32), window=2, step=5)
    text = parse_tsv(_tsv(g))
    assert text == {(0, 0): "0.5", (0, 1): "-0.5", (5, 0): "1.5", (5, 1): "0.0"}


def _tsv(g, **kw):
    buf = io.StringIO()
    write_tsv(g, buf, **kw)
    return buf.getvalue()


def test_dots_and_threshold():
    g = PlotGrid(np.array([[4, 1], [3, 4]], np.int32), window=2, step=3)
    buf = io.StringIO()
    write_dots(g, buf, threshold=3)
    assert buf.getvalue().splitlines() == ["# x_offset y_offset", "0\t0", "3\t0", "3\t1"]
    assert set(parse_tsv(_tsv(g, threshold=3))) == {(0, 0), (3, 0), (3, 1)}
    assert len(parse_tsv(_tsv(g, threshold=3, dense=True))) == 4


def test_pgm_format():
    w = 4
    g = PlotGrid(np.array([[2 * w, 0, w, -3]], np.int32), window=w)
    buf = io.BytesIO()
    write_pgm(g, buf)
    assert buf.getvalue() == b"P5\n4 1\n255\n" + bytes([255, 0, 128, 0])
    assert pgm_pixels(g, threshold=2 * w).tolist() == [[255, 0, 0, 0]]


def test_round_trip(rng):
    x, y = random_seq(rng, 4, 80), random_seq(rng, 4, 90)
    g = compute_plot(x, y, PlotConfig(window_w=10, step_h=3))
    cells = parse_tsv(_tsv(g))
    for (xo, yo), s in cells.items():
        assert float(s) * 2 == g.values[xo // 3, yo]
    buf = io.BytesIO()
    write_pgm(g, buf)
    px = parse_pgm(buf.getvalue())
    scores = np.clip(g.values / 2, 0, 10)
    assert np.array_equal(px, np.floor(255 * scores / 10 + 0.5).astype(np.uint8))


def _write_fasta(path, seq):
    path.write_text(f">{path.stem}\n{seq.text()}\n")
    return str(path)


def test_cli_dp_and_sea8_identical(tmp_path, rng):
    fx = _write_fasta(tmp_path / "x.fa", Sequence.from_text("".join(rng.choice(list("ACGT"), 120))))
    fy = _write_fasta(tmp_path / "y.fa", Sequence.from_text("".join(rng.choice(list("ACGT"), 140))))
    outs = {}
    for mode in ("dp", "sea8", "sea16", "blcs"):
        out = tmp_path / f"{mode}.tsv"
        assert main(["--x", fx, "--y", fy, "--window", "20", "--step", "5", "--mode", mode,
                     "--threshold", "8", "--output", str(out), "--workers", "2"]) == 0
        outs[mode] = out.read_bytes()
    assert len(set(outs.values())) == 1
    assert outs["dp"].count(b"\n") > 1
    pgm = tmp_path / "p.pgm"
    assert main(["--x", fx, "--y", fy, "--window", "20", "--format", "pgm", "--output", str(pgm)]) == 0
    assert parse_pgm(pgm.read_bytes()).shape == (21, 121)


def test_cli_errors(tmp_path, capsys):
    fx = tmp_path / "x.fa"
    fx.write_text("ACGT\n")
    assert main(["--x", str(fx), "--y", str(fx)]) == 1
    assert "line 1" in capsys.readouterr().err
    fx.write_text(">x\nACGT\n")
    assert main(["--x", str(fx), "--y", str(fx), "--window", "10"]) == 1
    assert main(["--x", str(fx), "--y", str(fx), "--window", "300", "--mode", "sea8"]) == 1
    assert main(["--x", str(tmp_path / "nope.fa"), "--y", str(fx)]) == 1


def test_cli_bench(tmp_path, capsys):
    p = tmp_path / "x.fa"
    p.write_text(">x\n" + "ACGTTGCA" * 10 + "\n")
    assert main(["--x", str(p), "--y", str(p), "--window", "8", "--step", "1", "--bench",
                 "--bench-modes", "dp,sea8", "--json"]) == 0
    assert '"mode": "sea8"' in capsys.readouterr().out


def test_benchmark_single_mode(rng):
    x = random_seq(rng, 4, 60)
    rep = benchmark(x, x, PlotConfig(window_w=10, step_h=5), ["sea8"])
    assert [t.speedup for t in rep.timings] == [1.0]
    assert "Seaweed, 8-bit lanes" in rep.table()


def test_benchmark_detects_mismatch(rng, monkeypatch):
    x = random_seq(rng, 4, 60)
    broken = dict(runner.ENGINES)
    broken["sea8"] = lambda xb, yb, w, r: runner.ENGINES["dp"](xb, yb, w, r) + 2
    monkeypatch.setattr(runner, "ENGINES", broken)
    with pytest.raises(BenchmarkMismatch):
        benchmark(x, x, PlotConfig(window_w=10, step_h=5), ["dp", "sea8"])
    with pytest.raises(ValueError):
        benchmark(x, x, PlotConfig(window_w=10), ["heur"])
