import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquecurv import constructions as C
from cliquecurv.cli import main
from cliquecurv.complex import f_vector, sphere_profiles
from cliquecurv.curvature import curvature_report
from cliquecurv.dimension import DimensionValue, dimension_value, validate_d_graph
from cliquecurv.errors import IndexOutOfRange, ParseError, SelfLoop
from cliquecurv.io import (
    format_edge_list,
    format_graph_json,
    parse_graph,
    parse_rational,
    parse_report,
    read_graph_document,
    render_rational,
    render_report,
    render_tsv,
)

from conftest import corpus


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---- parsing ---------------------------------------------------------------

def test_parse_edge_list():
    assert parse_graph(b"n 3\n0 1\n1 2\n2 0\n") == C.complete(3)
    assert parse_graph("# triangle\n0 1  # first\n\n1 2\n2 0\n") == C.complete(3)
    assert parse_graph("n 4\n0 1\n").n == 4
    assert parse_graph("").n == 0


def test_parse_json():
    g, labels = read_graph_document('{"n":2,"edges":[[0,1]]}')
    assert g == C.complete(2) and labels is None
    g, labels = read_graph_document(b'  {"n": 3, "edges": [], "labels": ["a", "b", "c"]}')
    assert g == C.discrete(3) and labels == ["a", "b", "c"]


def test_parse_errors_are_positioned():
    with pytest.raises(SelfLoop) as ei:
        parse_graph("0 0\n")
    assert ei.value.line == 1
    with pytest.raises(IndexOutOfRange) as ei:
        parse_graph("n 2\n0 1\n1 5\n")
    assert ei.value.line == 3
    with pytest.raises(ParseError) as ei:
        parse_graph("0 1\n1 x\n")
    assert (ei.value.line, ei.value.column) == (2, 3)
    assert "line 2, column 3" in str(ei.value)
    with pytest.raises(ParseError) as ei:
        parse_graph("0 1 2\n")
    assert ei.value.column == 5
    with pytest.raises(ParseError):
        parse_graph("0 1\nn 3\n")
    with pytest.raises(ParseError) as ei:
        parse_graph('{"n": 2,\n "edges": [[0, 1]')
    assert ei.value.line == 2
    with pytest.raises(ParseError):
        parse_graph('{"n": 2, "edges": [[0, "1"]]}')
    with pytest.raises(SelfLoop):
        parse_graph('{"n": 2, "edges": [[1, 1]]}')
    with pytest.raises(ParseError):
        parse_graph(b"\xff\xfe")


def test_rationals():
    assert render_rational(F(0)) == "0/1"
    assert render_rational(F(-3, 5)) == "-3/5"
    assert render_rational(4) == "4/1"
    assert parse_rational("-3/5") == F(-3, 5)
    assert parse_rational("7") == 7
    with pytest.raises(ParseError):
        parse_rational("1/0")


@given(st.fractions())
def test_rational_round_trip(x):
    assert parse_rational(render_rational(x)) == x


# ---- reports ---------------------------------------------------------------

@pytest.mark.parametrize("recipe", ["platonic:cube", "cross:5", "wheel:7", "er:10:0.5:3"])
def test_report_round_trips(recipe):
    g = C.from_recipe(recipe)
    reports = [
        curvature_report(g),
        validate_d_graph(g, 2),
        validate_d_graph(g, 4),
        dimension_value(g),
        dimension_value(g, per_vertex=True),
    ]
    if recipe == "cross:5":
        reports.append(curvature_report(g, "euler-form", 4))
    for rep in reports:
        text = render_report(rep)
        assert parse_report(text) == rep
        assert render_report(parse_report(text)) == text


def test_report_has_no_floats():
    text = render_report(curvature_report(C.stellated_cube_boundary(4), "euler-form", 3))
    doc = json.loads(text)

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(doc)


def test_parse_report_errors():
    with pytest.raises(ParseError):
        parse_report('{"kind": "nope"}')
    with pytest.raises(ParseError):
        parse_report('{"kind": "curvature"}')
    with pytest.raises(ParseError):
        parse_report("[1,")


def test_tsv_table():
    g = C.cross_polytope(4)
    profiles = sphere_profiles(g)
    text = render_tsv(curvature_report(g, "euler-form", 3), profiles)
    lines = text.splitlines()
    assert lines[0].split("\t") == ["vertex", "degree", "V_1", "V_2", "K"]
    assert lines[1].split("\t") == ["0", "6", "12", "8", "0/1"]
    assert len(lines) == 9
    wide = render_tsv(curvature_report(g, "euler-form", 5), profiles).splitlines()
    assert wide[1].split("\t")[2:6] == ["12", "8", "0", "0"]


def test_graph_writers():
    g = C.wheel(4)
    assert parse_graph(format_edge_list(g, comment="w4")) == g
    assert parse_graph(format_graph_json(g)) == g
    assert read_graph_document(format_graph_json(C.discrete(2), ["x", "y"]))[1] == ["x", "y"]


# ---- command line ------------------------------------------------------------

def test_gen_cross(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run(capsys, "gen", "cross:4", "-o", str(out))
    assert code == 0
    g = parse_graph(out.read_bytes())
    assert (g.n, g.edge_count) == (8, 24)


def test_gen_stellated_six(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "stellated-cube:6", "-o", str(out))[0] == 0
    g = parse_graph(out.read_bytes())
    assert (g.n, g.edge_count) == (536, 8216)


def test_gen_json_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "cyclic:4", "--format", "json")
    assert code == 0 and json.loads(out) == {"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}


def test_gen_unknown(capsys):
    code, out, err = run(capsys, "gen", "platonic:nosuch")
    assert code == 2 and out == "" and "nosuch" in err


def test_gen_round_trip_all_recipes(tmp_path, capsys):
    for recipe, g in corpus()[::3] + corpus()[-33:]:
        out = tmp_path / "g.txt"
        assert run(capsys, "gen", recipe, "-o", str(out))[0] == 0, recipe
        assert f_vector(parse_graph(out.read_bytes())) == f_vector(g), recipe


def write(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(format_edge_list(g))
    return str(p)


def test_analyze_cube(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, C.platonic("cube")))
    doc = json.loads(out)
    assert code == 0
    assert doc["total"] == "-4/1" and doc["euler_characteristic"] == -4 and doc["gbc_holds"] is True


def test_analyze_stellated_euler_form(capsys):
    code, out, _ = run(capsys, "analyze", "--gen", "stellated-cube:5", "--method", "euler-form", "--dim", "4")
    doc = json.loads(out)
    assert code == 0
    assert doc["classes"] == {"2/15": 80, "-1/15": 40, "0/1": 32, "-3/5": 10}
    assert doc["total"] == "2/1"


def test_analyze_complete_seven(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, C.complete(7)))
    doc = json.loads(out)
    assert code == 0
    assert doc["per_vertex"] == ["1/7"] * 7 and doc["total"] == "1/1"


def test_analyze_stdin_and_tsv(monkeypatch, capsys):
    import io as _io
    import sys

    monkeypatch.setattr(sys, "stdin", _io.TextIOWrapper(_io.BytesIO(format_edge_list(C.wheel(5)).encode())))
    code, out, _ = run(capsys, "analyze", "-", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "vertex\tdegree\tV_1\tK"
    assert lines[-1] == "5\t5\t5\t1/6"


def test_analyze_usage_errors(tmp_path, capsys):
    assert run(capsys, "analyze", "--gen", "cube:3", "--method", "euler-form")[0] == 2
    assert run(capsys, "analyze", "--gen", "cross:3", "--method", "euler-form", "--dim", "1")[0] == 2
    assert run(capsys, "analyze")[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n2 2\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "frobnicate")[0] == 2


def test_analyze_is_byte_deterministic(capsys):
    outs = {run(capsys, "analyze", "--gen", "er:12:0.5:42")[1] for _ in range(3)}
    assert len(outs) == 1


@pytest.mark.parametrize("recipe, expected", [
    ("platonic:dodecahedron", "1/1"),
    ("complete:4", "3/1"),
    ("wheel:6", "2/1"),
])
def test_dim(capsys, recipe, expected):
    code, out, _ = run(capsys, "dim", "--gen", recipe)
    assert code == 0 and out.strip() == expected


def test_dim_per_vertex_and_json(capsys):
    code, out, _ = run(capsys, "dim", "--gen", "path:3", "--per-vertex")
    assert code == 0 and out.splitlines() == ["0\t1/1", "1\t1/1", "2\t1/1"]
    code, out, _ = run(capsys, "dim", "--gen", "path:3", "--format", "json")
    assert parse_report(out) == DimensionValue(F(1))


def test_validate_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "validate", "--gen", "cross:4", "--dim", "3")
    assert code == 0 and json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "validate", write(tmp_path, C.complete(4)), "--dim", "3")
    viol = json.loads(out)["violations"]
    assert code == 1
    assert any(v["rule"] == "sphere-euler-char" and "χ(S(0))=1, expected 2" in v["detail"] for v in viol)
    code, out, _ = run(capsys, "validate", "--gen", "rect-hexeract", "--dim", "5", "--format", "text")
    assert code == 1 and "sphere-connected" in out


def test_validate_detect_cli(capsys):
    code, out, _ = run(capsys, "validate", "--gen", "cross:5", "--detect", "--max", "6", "--format", "text")
    assert code == 0 and out.startswith("valid 4-graph")
    code, _, err = run(capsys, "validate", "--gen", "complete:4", "--detect", "--max", "4")
    assert code == 1 and "no dimension" in err
    assert run(capsys, "validate", "--gen", "cross:4")[0] == 2
    assert run(capsys, "validate", "--gen", "cross:4", "--dim", "3", "--detect")[0] == 2
    assert run(capsys, "validate", "--gen", "cross:4", "--dim", "-1")[0] == 2


def test_check_gbc(capsys):
    code, out, _ = run(capsys, "check-gbc", "--gen", "platonic:cube")
    assert code == 0 and out.strip() == "gbc true total=-4/1 chi=-4"


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "cliquecurv", "dim", "--gen", "complete:3"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "2/1"
