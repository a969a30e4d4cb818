import io
import json

import pytest

from plithogenic.cli import main

from conftest import DATA, GOLDEN


def run(*argv):
    out = io.StringIO()
    try:
        code = main([str(a) for a in argv], out)
    except SystemExit as e:
        code = e.code
    return code, out.getvalue()


@pytest.mark.parametrize(
    "golden, argv",
    [
        ("fuzzy_table.rows", ["table", DATA / "fuzzy_pair.json"]),
        ("intuitionistic_table.rows", ["table", DATA / "intuitionistic_pair.json"]),
        ("neutrosophic_table.rows", ["table", DATA / "neutrosophic_pair.json"]),
        ("anti_value.rows", ["not", DATA / "sizes.json"]),
        ("logic_and.rows", ["and", DATA / "logic.json"]),
    ],
)
def test_golden_rows(golden, argv):
    code, out = run(*argv, "--format", "rows")
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_golden_tuple_point():
    people = DATA / "people.json"
    point = ["--point", "a1", "w2", "h3", "--format", "rows"]
    text = "".join(run(cmd, people, *point)[1] for cmd in ("and", "or", "not"))
    assert text == (GOLDEN / "tuple_point.rows").read_text()


def test_table_human_two_decimals():
    code, out = run("table", DATA / "fuzzy_pair.json")
    assert code == 0
    lines = out.splitlines()
    assert lines[4].split()[-5:] == ["0.42", "0.23", "0.73", "0.48", "0.45"]
    assert lines[5].split()[-5:] == ["0.88", "0.37", "0.57", "0.92", "0.45"]


def test_and_neutrosophic_rows():
    code, out = run("and", DATA / "neutrosophic_pair.json", "--format", "rows")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 5
    assert rows[0]["degree"] == pytest.approx([0.2, 0.15, 0.7])


def test_validate_success_is_silent():
    assert run("validate", DATA / "fuzzy_pair.json") == (0, "")


def test_validation_failure_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"version": 1, "schemas": [{"name": "s", "values": ["a", "b"], "contradictions": [0.2, 1]}]}))
    code, _ = run("validate", bad)
    assert code == 2
    assert "dominant contradiction must be 0" in capsys.readouterr().err


def test_mismatched_experts_exit_2(tmp_path):
    doc = json.loads((DATA / "fuzzy_pair.json").read_text())
    doc["subjects"][0]["experts"]["C"] = [[0.1, 0.2, 0.3], [0.4, 0.5]]
    path = tmp_path / "three.json"
    path.write_text(json.dumps(doc))
    assert run("and", path, "--experts", "A", "Z")[0] == 2


def test_usage_errors_exit_1():
    assert run()[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("and", DATA / "fuzzy_pair.json", "--norm", "lukasiewicz")[0] == 1
    assert run("number", "--op", "scale", "--c", "0", "--a", "0.5")[0] == 1


def test_compare_commands():
    assert run("leq", DATA / "fuzzy_pair.json", "--experts", "A", "A") == (0, "true\n")
    code, out = run("eq", DATA / "fuzzy_pair.json", "--style", "plithogenic", "--format", "rows")
    assert code == 0 and json.loads(out)["result"] is False


def test_distance_command():
    code, out = run("distance", DATA / "fuzzy_pair.json", "--measure", "hamming", "--format", "rows")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx((0.1 + 0.2 + 0.1 + 0.2 + 0.1) / 5)
    assert run("distance", DATA / "intuitionistic_pair.json")[0] == 2


def test_number_inline():
    code, out = run("number", "--op", "add", "--c", "0,1/2", "--a", "0.6,0.2", "--b", "0.3,0.4", "--format", "rows")
    assert code == 0
    assert json.loads(out)["degrees"] == pytest.approx([0.72, 0.3], abs=1e-12)
    code, out = run("number", "--op", "pow", "--lambda", "2", "--c", "0,1", "--a", "0.5,0.5")
    assert (code, out) == (0, "0.2500 0.7500\n")
    assert run("number", "--op", "scale", "--lambda", "0", "--c", "0", "--a", "0.5")[0] == 2


def test_number_from_document():
    code, out = run("number", DATA / "sizes.json", "--op", "scale", "--lambda", "1", "--format", "rows")
    assert code == 0 and json.loads(out)["degrees"] == [0.8, 0.1, 0.3, 0.4, 0.2]


def test_not_forms():
    code, out = run("not", DATA / "fuzzy_pair.json", "--form", "complement")
    assert code == 0 and "0.40" in out
    # anti-value needs a value at contradiction 1 on every attribute
    assert run("not", DATA / "fuzzy_pair.json")[0] == 2


def test_save_pipeline_is_idempotent(tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    code, out1 = run("and", DATA / "neutrosophic_pair.json", "--format", "rows", "--save", first)
    assert code == 0
    code, out2 = run("and", first, "--experts", "A", "B", "--format", "rows", "--save", second)
    assert code == 0 and out1 == out2
    assert first.read_bytes() == second.read_bytes()
    # the stored result reads back exactly
    doc = json.loads(first.read_text())
    stored = doc["subjects"][0]["experts"]["A and B"]
    rows = [json.loads(line)["degree"] for line in out1.splitlines()]
    assert [d for part in stored for d in part] == rows


def test_save_negation_adds_refined_subject(tmp_path):
    out = tmp_path / "neg.json"
    assert run("not", DATA / "sizes.json", "--save", out)[0] == 0
    code, _ = run("validate", out)
    assert code == 0
    doc = json.loads(out.read_text())
    assert [s["name"] for s in doc["subjects"]] == ["x", "x (not A)"]
