"""Attribute schemas: values, dominant value and contradiction degrees."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .degree import EPS, unit

# Two contradiction degrees closer than this denote the same attribute value.
COINCIDE_TOL = 1e-9


class SchemaError(ValueError):
    """Raised when a schema breaks one or more contradiction axioms."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class AttributeSchema:
    """One attribute: ordered values, the dominant one, and contradictions.

    ``contradictions[k]`` is the contradiction degree between the dominant
    value and ``values[k]``. When ``sorted`` is set the contradictions must be
    non-decreasing in list order.
    """

    name: str
    values: tuple[str, ...]
    contradictions: tuple[float, ...]
    dominant_index: int = 0
    sorted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "contradictions", tuple(float(c) for c in self.contradictions))
        problems = schema_violations(self)
        if problems:
            raise SchemaError(problems)
        object.__setattr__(self, "contradictions", tuple(unit(c) for c in self.contradictions))

    @classmethod
    def build(
        cls,
        name: str,
        values: Sequence[str],
        contradictions: Sequence[float] | None = None,
        dominant: str | int | None = 0,
        sorted: bool | None = None,
    ) -> "AttributeSchema":
        """Convenience constructor.

        ``contradictions=None`` spaces them evenly from the first value, or
        sets them all to zero when ``dominant`` is ``None``. ``sorted=None``
        infers the flag from the data.
        """
        values = tuple(values)
        if dominant is None:
            dominant_index = 0
            if contradictions is None:
                contradictions = [0.0] * len(values)
        elif isinstance(dominant, str):
            dominant_index = values.index(dominant)
        else:
            dominant_index = int(dominant)
        if contradictions is None:
            contradictions = default_contradictions(len(values))
        contradictions = tuple(float(c) for c in contradictions)
        if sorted is None:
            sorted = is_non_decreasing(contradictions)
        return cls(name, values, contradictions, dominant_index, sorted)

    def __len__(self):
        return len(self.values)

    @property
    def dominant(self) -> str:
        return self.values[self.dominant_index]

    def index(self, label: str) -> int:
        try:
            return self.values.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not a value of attribute {self.name!r}") from None

    def contradiction(self, label: str) -> float:
        return self.contradictions[self.index(label)]


@dataclass(frozen=True)
class ContradictionMatrix:
    """Full pairwise contradiction function between attribute values."""

    values: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "matrix", tuple(tuple(float(x) for x in row) for row in self.matrix))

    def relative_to(self, dominant: str, name: str = "attribute") -> AttributeSchema:
        """Project onto the row of ``dominant`` (the only row operators use)."""
        k = self.values.index(dominant)
        return AttributeSchema.build(name, self.values, self.matrix[k], dominant=k)


@dataclass(frozen=True)
class MultiAttributeSchema:
    """Several attributes treated as one m-dimensional attribute."""

    name: str
    components: tuple[AttributeSchema, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise SchemaError(["a multi-attribute schema needs at least one component"])
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise SchemaError([f"component attribute names must be unique, got {names}"])

    @property
    def cardinality(self) -> int:
        """Number of m-tuples in the Cartesian product of the value sets."""
        return math.prod(len(c) for c in self.components)

    def component(self, name: str) -> AttributeSchema:
        for c in self.components:
            if c.name == name:
                return c
        raise KeyError(name)

    def product(self):
        """Iterate over every m-tuple of value labels, first attribute slowest."""
        from itertools import product

        return product(*(c.values for c in self.components))


class Placement(enum.Enum):
    COINCIDES = "coincides"
    BETWEEN = "between"
    ABOVE = "above"


@dataclass(frozen=True)
class RefinedValue:
    """An anti-value produced by negating an attribute value.

    ``lower``/``upper`` index the schema values bracketing the new
    contradiction degree. For ``COINCIDES`` both equal the matching index;
    for ``ABOVE`` (past the last value) ``upper`` is ``None``.
    """

    label: str
    contradiction: float
    placement: Placement
    lower: int
    upper: int | None = field(default=None)

    @property
    def coincides_with(self) -> int | None:
        return self.lower if self.placement is Placement.COINCIDES else None


def is_non_decreasing(xs: Sequence[float]) -> bool:
    return all(a <= b for a, b in zip(xs, xs[1:]))


def schema_violations(schema: AttributeSchema | ContradictionMatrix) -> list[str]:
    """List every broken contradiction axiom; an empty list means valid."""
    if isinstance(schema, ContradictionMatrix):
        return _matrix_violations(schema)
    out = []
    n = len(schema.values)
    if n < 1:
        out.append("an attribute needs at least one value")
    if len(set(schema.values)) != n:
        out.append("attribute value labels must be unique")
    if len(schema.contradictions) != n:
        out.append(f"expected {n} contradiction degrees, got {len(schema.contradictions)}")
    for label, c in zip(schema.values, schema.contradictions):
        if math.isnan(c) or c < -EPS or c > 1 + EPS:
            out.append(f"contradiction of {label!r} must lie in [0, 1], got {c}")
    if not 0 <= schema.dominant_index < max(n, 1):
        out.append(f"dominant index {schema.dominant_index} out of range")
    elif n and len(schema.contradictions) == n and abs(schema.contradictions[schema.dominant_index]) > EPS:
        out.append("dominant contradiction must be 0")
    if schema.sorted and not is_non_decreasing(schema.contradictions):
        out.append("schema is flagged sorted but contradictions decrease")
    return out


def _matrix_violations(m: ContradictionMatrix) -> list[str]:
    out = []
    n = len(m.values)
    if len(m.matrix) != n or any(len(row) != n for row in m.matrix):
        return [f"matrix must be {n}x{n}"]
    for r in range(n):
        for s in range(n):
            x = m.matrix[r][s]
            if math.isnan(x) or x < 0 or x > 1:
                out.append(f"entry ({m.values[r]}, {m.values[s]}) must lie in [0, 1], got {x}")
        if m.matrix[r][r] != 0:
            out.append(f"zero diagonal: c({m.values[r]}, {m.values[r]}) = {m.matrix[r][r]}")
    for r in range(n):
        for s in range(r + 1, n):
            if m.matrix[r][s] != m.matrix[s][r]:
                out.append(
                    f"symmetry: c({m.values[r]}, {m.values[s]}) = {m.matrix[r][s]} "
                    f"but c({m.values[s]}, {m.values[r]}) = {m.matrix[s][r]}"
                )
    return out


def validate(schema) -> list[str]:
    """Axiom violations for a schema, matrix or multi-attribute schema."""
    if isinstance(schema, MultiAttributeSchema):
        return [f"{c.name}: {v}" for c in schema.components for v in schema_violations(c)]
    return schema_violations(schema)


def default_contradictions(n: int) -> tuple[float, ...]:
    """Evenly spaced degrees from 0 (first value) to 1 (last value)."""
    if n < 1:
        raise ValueError("need at least one attribute value")
    if n == 1:
        return (0.0,)
    return tuple(k / (n - 1) for k in range(n))


class Canonical(enum.Enum):
    CRISP = "crisp"
    FUZZY = "fuzzy"
    INTUITIONISTIC = "intuitionistic"
    NEUTROSOPHIC = "neutrosophic"


def canonical_schema(kind: Canonical | str) -> AttributeSchema:
    """The appurtenance attribute that reduces a plithogenic set to a classical one."""
    kind = Canonical(kind) if not isinstance(kind, Canonical) else kind
    if kind is Canonical.FUZZY:
        return AttributeSchema("appurtenance", ("membership",), (0.0,), 0, True)
    if kind is Canonical.NEUTROSOPHIC:
        return AttributeSchema(
            "appurtenance", ("membership", "indeterminacy", "nonmembership"), (0.0, 0.5, 1.0), 0, True
        )
    return AttributeSchema("appurtenance", ("membership", "nonmembership"), (0.0, 1.0), 0, True)


def split(multi: MultiAttributeSchema | AttributeSchema) -> tuple[AttributeSchema, ...]:
    if isinstance(multi, AttributeSchema):
        return (multi,)
    return multi.components


def split_index(schema: AttributeSchema) -> int:
    """How many leading values have contradiction below one half."""
    if not is_non_decreasing(schema.contradictions):
        raise ValueError(f"split index needs sorted contradictions, attribute {schema.name!r} is not")
    return sum(1 for c in schema.contradictions if c < 0.5)


def _snap(x: float) -> float:
    # 1 - 0.86 is 0.14000000000000001 in binary; keep twelve decimals.
    return round(x, 12)


def negate_value(schema: AttributeSchema, index: int, name: str | None = None) -> RefinedValue:
    """Locate anti(v) for ``values[index]`` at contradiction ``1 - c``.

    An anti-value whose degree matches an existing one (within
    ``COINCIDE_TOL``) is that value; otherwise it sits between the two
    values bracketing it and is labelled ``name`` or ``anti(<label>)``.
    """
    cs = schema.contradictions
    if not is_non_decreasing(cs):
        raise ValueError(f"negation needs sorted contradictions, attribute {schema.name!r} is not")
    target = 1.0 - cs[index]
    matches = [k for k, c in enumerate(cs) if abs(c - target) <= COINCIDE_TOL]
    if matches:
        mirror = len(cs) - 1 - index
        k = mirror if mirror in matches else matches[0]
        return RefinedValue(schema.values[k], cs[k], Placement.COINCIDES, k, k)
    label = name or f"anti({schema.values[index]})"
    target = _snap(target)
    below = [k for k, c in enumerate(cs) if c < target]
    lower = below[-1] if below else 0
    if lower == len(cs) - 1:
        return RefinedValue(label, target, Placement.ABOVE, lower, None)
    return RefinedValue(label, target, Placement.BETWEEN, lower, lower + 1)


def refine(schema: AttributeSchema, names: Mapping[str, str] | None = None):
    """Negate every value; return the refined schema and the index map.

    The refined schema lists the anti-values by increasing contradiction,
    i.e. in reverse of the original order. ``order[k]`` is the original index
    whose anti-value is at position ``k``.
    """
    names = dict(names or {})
    n = len(schema)
    anti = [negate_value(schema, k, names.get(schema.values[k])) for k in range(n)]
    order = sorted(range(n), key=lambda k: (anti[k].contradiction, -k))
    labels, seen = [], set()
    for k in order:
        label = anti[k].label
        if label in seen:
            label = names.get(schema.values[k]) or f"anti({schema.values[k]})"
        if label in seen:
            raise SchemaError([f"anti-value label {label!r} is not unique"])
        seen.add(label)
        labels.append(label)
    cs = [anti[k].contradiction for k in order]
    if cs[0] != 0.0:
        raise ValueError(
            f"attribute {schema.name!r} has no value at contradiction 1, "
            "so no anti-value lands on the dominant position"
        )
    refined = AttributeSchema(schema.name, tuple(labels), tuple(cs), 0, True)
    return refined, tuple(order), tuple(anti)
