import json
import xml.etree.ElementTree as ET

import pytest

from nonnesting.cli import main, parse_range
from nonnesting.render import render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_main(capsys):
    code, out, _ = run(capsys, "verify", "main", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "PASS main n=4"
    assert "u^4 + t + 2t*u + 3t*u^2 + 11t*u^4 + 15t^2" in out


def test_map_psi(capsys):
    assert run(capsys, "map", "psi", "228183175437954696")[1] == "694573691457318822\n"


def test_poly_eulerian(capsys):
    assert run(capsys, "poly", "eulerian", "4")[1] == "1 + 11t + 11t^2 + t^3\n"


def test_poly_json_and_set(capsys):
    code, out, _ = run(capsys, "poly", "class", "--n", "3", "--set", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["terms"] == [[1, 3, 1], [2, 0, 1], [2, 1, 2], [3, 0, 1]]


def test_a_closed_refuses_k2(capsys):
    code, _, err = run(capsys, "poly", "a_closed", "3", "--k", "2")
    assert code == 2 and "main theorem" in err


def test_stats_and_check(capsys):
    code, out, _ = run(capsys, "stats", "228183175437954696")
    assert code == 0 and "des=9 plat=1 wdes=10" in out and "sigma=281375496" in out
    assert run(capsys, "check", "1221", "nonnesting")[:2] == (1, "false\n")
    assert run(capsys, "check", "121212", "B")[:2] == (0, "true\n")
    assert run(capsys, "check", "3142", "pattern", "--pattern", "321")[1] == "false\n"


def test_map_variants(capsys):
    assert run(capsys, "map", "lk", "ENEENENENENEEENNNN")[1] == "EEEEEENNENNNNNENEN\n"
    assert run(capsys, "map", "f_k", "113322", "--value", "1")[1] == "223311\n"
    assert run(capsys, "map", "f_k", "1212", "--value", "1")[0] == 2
    code, out, _ = run(capsys, "map", "phi_inv", "112324354657896789", "--sigma", "281375496")
    assert out == "228183175437954696\n"
    assert run(capsys, "map", "pi", "EENN", "--sigma", "21")[1] == "2121\n"


def test_parse_errors(capsys):
    code, _, err = run(capsys, "stats", "12a3")
    assert code == 2 and "position 3" in err
    code, _, err = run(capsys, "map", "lk", "ENX")
    assert code == 2 and "position" in err


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "verify", "main", "--n", "5", "--cap", "10")
    assert code == 3 and "error" in err


def test_unknown_identity_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "nope"])


def test_verify_range_and_json(capsys):
    code, out, _ = run(capsys, "verify", "eq13", "--n", "1-3", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["params"]["n"] for r in rows] == [1, 2, 3]
    assert all(r["status"] == "pass" for r in rows)


def test_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "b_asymmetry", "--n", "1", "--k", "2")
    assert code == 1 and out.startswith("FAIL") and "witness" in out


def test_deterministic_output(capsys):
    first = run(capsys, "enumerate", "nonnesting", "3")[1]
    assert first == run(capsys, "enumerate", "nonnesting", "3")[1]
    assert len(first.splitlines()) == 30


def test_parse_range():
    assert parse_range("4") == [4]
    assert parse_range("1-3") == [1, 2, 3]
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("1,5") == [1, 5]


def test_render_file(tmp_path, capsys):
    out = tmp_path / "fig.svg"
    code, _, _ = run(
        capsys, "render", "--sigma", "2531674", "--path", "EENNEEENEENNNN", "--lk", "--out", str(out)
    )
    assert code == 0
    root = ET.parse(out).getroot()
    assert root.tag.endswith("svg")


def test_render_contents():
    svg = render_svg((2, 5, 3, 1, 6, 7, 4), "EENNEEENEENNNN", "ENENENENENENEN")
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    polylines = root.findall(f"{ns}polyline")
    assert [p.get("stroke") for p in polylines] == ["blue", "magenta"]
    labels = [t.text for t in root.findall(f"{ns}text")]
    assert labels == list("2531674") * 2
    red = [l for l in root.findall(f"{ns}line") if l.get("stroke") == "red"]
    # three descents, each with a vertical and a horizontal line, plus 21 notches
    assert len(red) == 6 + 21
    assert "http" not in svg.replace('xmlns="http://www.w3.org/2000/svg"', "")
