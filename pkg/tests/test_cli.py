import json

import pytest

from cambrian.cli import main
from cambrian.export import export_lattice
from cambrian.groups import ParseError, UnsupportedRank, catalan_formula, degrees, group_order_formula, parse_group_spec
from cambrian.projections import cambrian_lattice
from cambrian.weak_order import lattice_of

from conftest import ctx_of, group


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_group_spec():
    assert parse_group_spec("B2").entries == ((1, 4), (4, 1))
    a3 = parse_group_spec("A3")
    assert a3.m(0, 1) == a3.m(1, 2) == 3 and a3.m(0, 2) == 2
    assert parse_group_spec("I2(7)").m(0, 1) == 7
    d4 = parse_group_spec("D4")
    assert sorted((s, t) for s in range(4) for t in range(s + 1, 4) if d4.m(s, t) == 3) == [(0, 2), (1, 2), (2, 3)]
    for bad in ("X3", "A", "I2(x)", "H5", "E9"):
        with pytest.raises(ParseError):
            parse_group_spec(bad)
    for small in ("B1", "D3", "I2(2)", "A0"):
        with pytest.raises(UnsupportedRank):
            parse_group_spec(small)


@pytest.mark.parametrize(
    "name, order, catalan",
    [("A2", 6, 5), ("A3", 24, 14), ("A4", 120, 42), ("B2", 8, 6), ("B3", 48, 20), ("D4", 192, 50), ("H3", 120, 32), ("I2(5)", 10, 7), ("I2(7)", 14, 9), ("H4", 14400, 280), ("F4", 1152, 105), ("E6", 51840, 833)],
)
def test_formulas(name, order, catalan):
    assert group_order_formula(name) == order
    assert catalan_formula(name) == catalan
    assert max(degrees(name)) * len(degrees(name)) == 2 * sum(d - 1 for d in degrees(name))


def test_spec_examples(capsys):
    assert run(capsys, "sortables", "B2", "-c", "s0,s1", "--count")[:2] == (0, "6\n")
    assert run(capsys, "project", "B2", "-c", "s0,s1", "-w", "s1,s0", "--down")[:2] == (0, "s1\n")
    assert run(capsys, "project", "B2", "-c", "s0,s1", "-w", "s1", "--up")[:2] == (0, "s1s0s1\n")
    code, out, _ = run(capsys, "verify", "A3", "--all-c")
    assert code == 0 and "s2s1s0" in out and "FAIL" not in out


def test_sorting_word_command(capsys):
    code, out, _ = run(capsys, "sorting-word", "B2", "-c", "s0,s1", "-w", "s1,s0")
    assert code == 0 and out == "s1 | s0\nc-sortable: no\n"
    code, out, _ = run(capsys, "sorting-word", "B2", "-w", "s0,s1,s0,s1", "--format", "json")
    assert json.loads(out) == {"blocks": [[0, 1], [0, 1]], "id": 7, "sortable": True, "word": "01|01"}


def test_info_and_catalan(capsys):
    code, out, _ = run(capsys, "info", "A3", "--format", "json")
    doc = json.loads(out)
    assert doc["order"] == 24 and len(doc["coxeter_elements"]) == 4 and "s0" in doc["naming"]
    code, out, _ = run(capsys, "catalan", "H3", "--all-c")
    assert code == 0 and [line.split("\t")[1] for line in out.splitlines()] == ["32"] * 4


def test_congruence_command(capsys):
    code, out, _ = run(capsys, "congruence", "B2", "-c", "s0,s1")
    assert out == "6 classes, 1 non-singleton\n{s1, s1s0, s1s0s1}\n"
    code, out, _ = run(capsys, "congruence", "B2", "--forcing", "--format", "json")
    doc = json.loads(out)
    assert len(doc["ji"]) == 6


def test_user_errors_exit_1(capsys, tmp_path):
    assert run(capsys, "info", "Q7")[0] == 1
    assert run(capsys, "info")[0] == 1
    assert run(capsys, "sortables", "A3", "-c", "s0,s1")[0] == 1
    assert run(capsys, "project", "A3", "-w", "s7")[0] == 1
    assert run(capsys, "info", "E7")[0] == 1
    assert run(capsys, "info", "--matrix", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "verify", "A3", "-c", "s0,s1,s2", "--all-c")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1


def test_matrix_file_and_output(capsys, tmp_path):
    m = tmp_path / "b2.json"
    m.write_text(json.dumps({"rank": 2, "m": [[1, 4], [4, 1]]}))
    out_path = tmp_path / "lat.dot"
    code, out, _ = run(capsys, "lattice", "--matrix", str(m), "-c", "s0,s1", "--output", str(out_path))
    assert code == 0 and out == ""
    assert out_path.read_bytes() == export_lattice(cambrian_lattice(ctx_of("B2", (0, 1))), "dot")
    bad = tmp_path / "inf.json"
    bad.write_text(json.dumps({"rank": 2, "m": [[1, 0], [0, 1]]}))
    assert run(capsys, "info", "--matrix", str(bad))[0] == 1


def test_output_is_deterministic(capsys):
    first = run(capsys, "lattice", "A3", "-c", "s1,s0,s2", "--format", "json")[1]
    second = run(capsys, "lattice", "A3", "-c", "s1,s0,s2", "--format", "json")[1]
    assert first == second


def test_export_examples():
    a1 = export_lattice(lattice_of(group("A1")), "dot").decode()
    assert a1.count("label=") == 1 + 1 and a1.count("->") == 1
    b2 = export_lattice(cambrian_lattice(ctx_of("B2", (0, 1))), "dot").decode()
    assert b2.startswith("digraph {\n  rankdir=BT;\n")
    assert b2.count("label=") == 6 and b2.count("->") == 6
    assert '  0 [label=""];' in b2 and '[label="01|01"]' in b2
    doc = json.loads(export_lattice(cambrian_lattice(ctx_of("B2", (0, 1))), "json"))
    assert doc["elements"][0] == {"id": 0, "word": ""}
    assert sorted(map(tuple, doc["covers"])) == [(0, 1), (0, 2), (1, 3), (2, 7), (3, 5), (5, 7)]
    with pytest.raises(ValueError):
        export_lattice(lattice_of(group("A1")), "svg")
