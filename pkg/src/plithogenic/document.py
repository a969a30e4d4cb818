"""JSON documents holding schemas and expert evaluations.

Layout::

    {
      "version": 1,
      "schemas": [
        {"name": "color", "values": [...], "contradictions": [...],
         "dominant": "green", "sorted": false},
        {"name": "object", "components": ["color", "height"]}
      ],
      "subjects": [
        {"name": "x", "schema": "object", "kind": "fuzzy",
         "experts": {"A": [[0.6, 0.2, 0.7], [0.8, 0.5]]}}
      ]
    }

A multi-attribute schema lists previously declared schemas by name, and its
degrees nest one list per component. A degree is a number (fuzzy),
``[t, f]`` or ``[t, i, f]``. Numbers may also be written as ``"p/q"``
strings; they are saved back as decimals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .degree import Degree, Kind
from .ops import AnyEvaluation, Evaluation, MultiEvaluation
from .schema import AttributeSchema, MultiAttributeSchema, SchemaError

VERSION = 1


class DocumentError(ValueError):
    """A document failed to parse or broke an invariant."""

    def __init__(self, problems):
        self.problems = [problems] if isinstance(problems, str) else list(problems)
        super().__init__("\n".join(self.problems))


@dataclass
class Subject:
    """An element, proposition or event evaluated by one or more experts."""

    name: str
    schema: AttributeSchema | MultiAttributeSchema
    kind: Kind
    experts: dict[str, AnyEvaluation] = field(default_factory=dict)

    def expert(self, label: str) -> AnyEvaluation:
        try:
            return self.experts[label]
        except KeyError:
            raise DocumentError(f"subject {self.name!r} has no expert {label!r}") from None


@dataclass
class Document:
    schemas: dict[str, AttributeSchema | MultiAttributeSchema] = field(default_factory=dict)
    subjects: list[Subject] = field(default_factory=list)
    version: int = VERSION

    def subject(self, name: str | None = None) -> Subject:
        if name is None:
            if len(self.subjects) != 1:
                raise DocumentError(
                    f"document has {len(self.subjects)} subjects; pick one of {[s.name for s in self.subjects]}"
                )
            return self.subjects[0]
        for s in self.subjects:
            if s.name == name:
                return s
        raise DocumentError(f"no subject named {name!r}")


def _number(x: Any, where: str) -> float:
    if isinstance(x, bool):
        raise DocumentError(f"{where}: expected a number, got {x!r}")
    if isinstance(x, (int, float)):
        return float(x)
    if isinstance(x, str):
        try:
            return float(Fraction(x.strip()))
        except (ValueError, ZeroDivisionError):
            pass
    raise DocumentError(f"{where}: expected a number, got {x!r}")


def _parse_schema(raw: dict, known: dict, where: str):
    if not isinstance(raw, dict) or "name" not in raw:
        raise DocumentError(f"{where}: a schema needs a name")
    name = raw["name"]
    if "components" in raw:
        parts = []
        for c in raw["components"]:
            if c not in known or not isinstance(known[c], AttributeSchema):
                raise DocumentError(f"{where}: component {c!r} is not a declared single-attribute schema")
            parts.append(known[c])
        try:
            return MultiAttributeSchema(name, tuple(parts))
        except SchemaError as e:
            raise DocumentError([f"{where} ({name}): {v}" for v in e.violations]) from None
    values = raw.get("values")
    if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
        raise DocumentError(f"{where} ({name}): values must be a list of labels")
    cs = raw.get("contradictions")
    if cs is not None:
        cs = [_number(c, f"{where} ({name}) contradictions") for c in cs]
    dominant = raw.get("dominant", values[0] if values else None)
    if isinstance(dominant, str) and dominant not in values:
        raise DocumentError(f"{where} ({name}): dominant value {dominant!r} is not among the values")
    try:
        return AttributeSchema.build(name, values, cs, dominant, raw.get("sorted"))
    except SchemaError as e:
        raise DocumentError([f"{where} ({name}): {v}" for v in e.violations]) from None


def _parse_degree(x: Any, kind: Kind, where: str) -> Degree:
    parts = [x] if not isinstance(x, list) else x
    if len(parts) != int(kind):
        raise DocumentError(f"{where}: a {kind.name.lower()} degree has {int(kind)} components, got {x!r}")
    try:
        return Degree.from_components([_number(p, where) for p in parts])
    except ValueError as e:
        raise DocumentError(f"{where}: {e}") from None


def _parse_evaluation(schema, kind: Kind, raw: Any, where: str) -> AnyEvaluation:
    if isinstance(schema, MultiAttributeSchema):
        if not isinstance(raw, list) or len(raw) != len(schema.components):
            raise DocumentError(f"{where}: expected one degree list per component of {schema.name!r}")
        parts = tuple(
            _parse_evaluation(s, kind, r, f"{where} [{s.name}]") for s, r in zip(schema.components, raw)
        )
        return MultiEvaluation(schema, parts)
    if not isinstance(raw, list) or len(raw) != len(schema):
        raise DocumentError(f"{where}: expected {len(schema)} degrees for attribute {schema.name!r}")
    degrees = tuple(_parse_degree(x, kind, f"{where} [{v}]") for x, v in zip(raw, schema.values))
    return Evaluation(schema, degrees)


def parse(data: Any) -> Document:
    """Build a document from decoded JSON, reporting every problem found."""
    if not isinstance(data, dict):
        raise DocumentError("top level must be an object")
    version = data.get("version")
    if version != VERSION:
        raise DocumentError(f"unsupported document version {version!r}, expected {VERSION}")
    problems: list[str] = []
    schemas: dict = {}
    for k, raw in enumerate(data.get("schemas", [])):
        try:
            s = _parse_schema(raw, schemas, f"schemas[{k}]")
        except DocumentError as e:
            problems.extend(e.problems)
            continue
        if s.name in schemas:
            problems.append(f"schemas[{k}]: duplicate schema name {s.name!r}")
        schemas[s.name] = s
    subjects = []
    for k, raw in enumerate(data.get("subjects", [])):
        where = f"subjects[{k}]"
        try:
            if not isinstance(raw, dict) or "name" not in raw:
                raise DocumentError(f"{where}: a subject needs a name")
            ref = raw.get("schema")
            if ref not in schemas:
                raise DocumentError(f"{where} ({raw['name']}): unknown schema {ref!r}")
            try:
                kind = Kind.parse(raw.get("kind", "fuzzy"))
            except ValueError as e:
                raise DocumentError(f"{where}: {e}") from None
            experts = {}
            for label, ev in raw.get("experts", {}).items():
                experts[label] = _parse_evaluation(schemas[ref], kind, ev, f"{where} ({raw['name']}) expert {label}")
            subjects.append(Subject(raw["name"], schemas[ref], kind, experts))
        except DocumentError as e:
            problems.extend(e.problems)
    if problems:
        raise DocumentError(problems)
    return Document(schemas, subjects, version)


def loads(text: str, source: str = "<string>") -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None
    return parse(data)


def load(path: str | Path) -> Document:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"{path}: {e.strerror}") from None
    return loads(text, str(path))


def _schema_json(s) -> dict:
    if isinstance(s, MultiAttributeSchema):
        return {"name": s.name, "components": [c.name for c in s.components]}
    return {
        "name": s.name,
        "values": list(s.values),
        "contradictions": list(s.contradictions),
        "dominant": s.dominant,
        "sorted": s.sorted,
    }


def degree_json(d: Degree):
    return d.t if d.kind is Kind.FUZZY else list(d.components())


def evaluation_json(ev: AnyEvaluation):
    if isinstance(ev, MultiEvaluation):
        return [evaluation_json(p) for p in ev.parts]
    return [degree_json(d) for d in ev.degrees]


def to_json(doc: Document) -> dict:
    declared = {}
    for s in doc.schemas.values():
        # components first so every reference resolves on reload
        if isinstance(s, MultiAttributeSchema):
            for c in s.components:
                declared.setdefault(c.name, c)
        declared.setdefault(s.name, s)
    return {
        "version": doc.version,
        "schemas": [_schema_json(s) for s in declared.values()],
        "subjects": [
            {
                "name": sub.name,
                "schema": sub.schema.name,
                "kind": sub.kind.name.lower(),
                "experts": {k: evaluation_json(v) for k, v in sub.experts.items()},
            }
            for sub in doc.subjects
        ],
    }


def dumps(doc: Document) -> str:
    return json.dumps(to_json(doc), indent=2, ensure_ascii=False) + "\n"


def save(doc: Document, path: str | Path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")
