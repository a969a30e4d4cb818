import json

import pytest

from plithogenic.document import DocumentError, dumps, load, loads, save
from plithogenic.ops import MultiEvaluation, p_and
from plithogenic.schema import MultiAttributeSchema

from conftest import DATA

ALL = sorted(DATA.glob("*.json"))


def test_two_attribute_document_loads():
    doc = load(DATA / "fuzzy_pair.json")
    assert set(doc.schemas) == {"color", "height", "object"}
    assert isinstance(doc.schemas["object"], MultiAttributeSchema)
    subject = doc.subject()
    assert list(subject.experts) == ["A", "B"]
    a = subject.experts["A"]
    assert isinstance(a, MultiEvaluation)
    assert [d.t for d in a.parts[0].degrees] == [0.6, 0.2, 0.7]


def test_fraction_strings():
    doc = load(DATA / "fuzzy_pair.json")
    assert doc.schemas["color"].contradictions[1] == 1 / 3


@pytest.mark.parametrize("path", ALL, ids=lambda p: p.name)
def test_round_trip_byte_identical(path, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    save(load(path), first)
    save(load(first), second)
    assert first.read_bytes() == second.read_bytes()


def test_round_trip_with_result(tmp_path):
    doc = load(DATA / "neutrosophic_pair.json")
    s = doc.subject()
    s.experts["A and B"] = p_and(s.experts["A"], s.experts["B"])
    text = dumps(doc)
    again = loads(text)
    assert again.subject().experts["A and B"] == s.experts["A and B"]
    assert dumps(again) == text


def minimal(**schema):
    base = {"name": "size", "values": ["small", "big"], "contradictions": [0, 1]}
    base.update(schema)
    return {"version": 1, "schemas": [base], "subjects": []}


def test_dominant_axiom_violation():
    with pytest.raises(DocumentError, match="dominant contradiction must be 0"):
        loads(json.dumps(minimal(contradictions=[0.2, 1])))


def test_every_violation_reported():
    data = minimal(contradictions=[0.2, 1.5])
    data["schemas"].append({"name": "other", "values": ["a", "a"]})
    with pytest.raises(DocumentError) as err:
        loads(json.dumps(data))
    assert len(err.value.problems) >= 3


def test_parse_error_position():
    with pytest.raises(DocumentError, match=r"<string>:2:"):
        loads('{"version": 1,\n "schemas": [}')


def test_referential_integrity():
    data = minimal()
    data["subjects"] = [{"name": "x", "schema": "nope", "kind": "fuzzy", "experts": {}}]
    with pytest.raises(DocumentError, match="unknown schema"):
        loads(json.dumps(data))


def test_degree_shape_checked():
    data = minimal()
    data["subjects"] = [{"name": "x", "schema": "size", "kind": "intuitionistic", "experts": {"A": [0.1, [0.2, 0.3]]}}]
    with pytest.raises(DocumentError, match="2 components"):
        loads(json.dumps(data))
    data["subjects"][0]["experts"]["A"] = [[0.7, 0.4], [0.2, 0.3]]
    with pytest.raises(DocumentError, match="t \\+ f"):
        loads(json.dumps(data))


def test_version_checked():
    data = minimal()
    data["version"] = 7
    with pytest.raises(DocumentError, match="version"):
        loads(json.dumps(data))


def test_missing_file(tmp_path):
    with pytest.raises(DocumentError):
        load(tmp_path / "absent.json")


def test_subject_selection():
    doc = load(DATA / "fuzzy_pair.json")
    with pytest.raises(DocumentError):
        doc.subject("y")
    with pytest.raises(DocumentError):
        doc.subject().expert("C")
