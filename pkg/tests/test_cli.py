import json
import math

import pytest

from arc_census.cli import main
from arc_census.fileio import parse_arcs, serialize_arcs
from arc_census.errors import ParseError
from conftest import rotated_triangle


@pytest.fixture
def tri_file(tmp_path):
    path = tmp_path / "tri.arcs"
    path.write_text(serialize_arcs(rotated_triangle()))
    return str(path)


def test_round_trip():
    arcs = rotated_triangle()
    text = serialize_arcs(arcs)
    back = parse_arcs(text.splitlines())
    for a, b in zip(arcs, back):
        assert abs(a.center.x - b.center.x) < 1e-12
        assert abs(a.center.y - b.center.y) < 1e-12
        assert abs(a.theta_start - b.theta_start) < 1e-12
        assert abs(a.theta_end - b.theta_end) < 1e-12


def test_parse_colors_and_comments():
    arcs = parse_arcs(["# comment", "", "0.0 0.0 0.0 1.0 r",
                       "3.0 0.0 1.0 2.0 b"])
    assert [a.color for a in arcs] == ["red", "blue"]


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_arcs(["1 2 3"])
    with pytest.raises(ParseError):
        parse_arcs(["0 0 0 1 purple"])
    with pytest.raises(ParseError):
        parse_arcs(["0 0 5 1"])


def test_count_and_oracle(tri_file, capsys):
    assert main(["count", tri_file]) == 0
    assert "total 6" in capsys.readouterr().out
    assert main(["oracle", tri_file]) == 0
    assert "total 6" in capsys.readouterr().out


def test_count_json(tri_file, capsys):
    assert main(["count", tri_file, "--report", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["total"] == 6
    assert "by_type" in data and "diagnostics" in data


def test_compare_ok(tri_file, capsys):
    assert main(["compare", tri_file]) == 0
    out = capsys.readouterr().out
    assert "diff     0" in out


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.arcs"
    bad.write_text("1 2 3\n")
    assert main(["count", str(bad)]) == 1
    tangent = tmp_path / "tangent.arcs"
    tangent.write_text("0 0 0 6.283185307179586\n2 0 0 6.283185307179586\n")
    assert main(["count", str(tangent)]) == 2
    assert main(["oracle", str(tangent)]) == 2
    capsys.readouterr()


def test_empty_input(tmp_path, capsys):
    empty = tmp_path / "empty.arcs"
    empty.write_text("")
    assert main(["count", str(empty)]) == 0
    assert "total 0" in capsys.readouterr().out


def test_gen_deterministic(capsys):
    assert main(["gen", "--n", "6", "--seed", "5"]) == 0
    out1 = capsys.readouterr().out
    assert main(["gen", "--n", "6", "--seed", "5"]) == 0
    out2 = capsys.readouterr().out
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 6
    assert main(["gen", "--n", "0"]) == 0
    assert capsys.readouterr().out == ""


def test_small_k_and_bichromatic_flags(tmp_path, capsys):
    gen = tmp_path / "g.arcs"
    assert main(["gen", "--n", "40", "--seed", "2", "--box", "2.0"]) == 0
    gen.write_text(capsys.readouterr().out)
    assert main(["count", str(gen), "--small-k", "--report", "json"]) == 0
    small = json.loads(capsys.readouterr().out)
    assert main(["count", str(gen), "--report", "json"]) == 0
    full = json.loads(capsys.readouterr().out)
    assert small["total"] == full["total"]
    assert main(["count", str(gen), "--bichromatic", "direct",
                 "--report", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert main(["count", str(gen), "--bichromatic", "identity",
                 "--report", "json"]) == 0
    i = json.loads(capsys.readouterr().out)
    assert d["total"] == i["total"]


def test_bench_csv(capsys):
    assert main(["bench", "--sizes", "50", "--seeds", "1",
                 "--algo", "oracle"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "algo,n,seed,K,seconds,cells,resamples"
    assert len(lines) == 2
    row = lines[1].split(",")
    assert row[0] == "oracle" and row[1] == "50"
    assert main(["bench", "--sizes", "abc"]) == 1
    capsys.readouterr()
