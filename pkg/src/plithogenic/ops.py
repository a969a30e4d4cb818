"""Plithogenic intersection, union, negation, inclusion and equality."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .degree import DEFAULT_NORMS, Degree, Kind, Mode, NormPair, blend, midpoint
from .schema import AttributeSchema, MultiAttributeSchema, is_non_decreasing, negate_value, refine


@dataclass(frozen=True)
class Evaluation:
    """Degrees of one element (or proposition, or event) per attribute value."""

    schema: AttributeSchema
    degrees: tuple[Degree, ...]

    def __post_init__(self):
        degrees = tuple(d if isinstance(d, Degree) else Degree.from_components(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if len(degrees) != len(self.schema):
            raise ValueError(
                f"attribute {self.schema.name!r} has {len(self.schema)} values but {len(degrees)} degrees were given"
            )
        kinds = {d.kind for d in degrees}
        if len(kinds) > 1:
            raise ValueError(f"mixed degree kinds in one evaluation: {sorted(k.name for k in kinds)}")

    @property
    def kind(self) -> Kind:
        return self.degrees[0].kind

    def __getitem__(self, label: str) -> Degree:
        return self.degrees[self.schema.index(label)]

    def rows(self) -> list[tuple[float, ...]]:
        return [d.components() for d in self.degrees]


@dataclass(frozen=True)
class MultiEvaluation:
    """One evaluation per component attribute of a multi-attribute schema."""

    schema: MultiAttributeSchema
    parts: tuple[Evaluation, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if tuple(p.schema for p in self.parts) != self.schema.components:
            raise ValueError("multi-attribute evaluation parts must follow the schema components")
        kinds = {p.kind for p in self.parts}
        if len(kinds) > 1:
            raise ValueError("mixed degree kinds across attributes")

    @classmethod
    def of(cls, schema: MultiAttributeSchema, degrees: Sequence[Sequence]) -> "MultiEvaluation":
        return cls(schema, tuple(Evaluation(s, tuple(d)) for s, d in zip(schema.components, degrees, strict=True)))

    @property
    def kind(self) -> Kind:
        return self.parts[0].kind

    def part(self, name: str) -> Evaluation:
        return self.parts[self.schema.components.index(self.schema.component(name))]

    def at(self, point: Sequence[str]) -> tuple[Degree, ...]:
        """Degrees at one m-tuple of value labels."""
        return tuple(e[label] for e, label in zip(self.parts, point, strict=True))


AnyEvaluation = Union[Evaluation, MultiEvaluation]


def _check_pair(a, b):
    if type(a) is not type(b):
        raise ValueError("cannot combine a single-attribute and a multi-attribute evaluation")
    if a.schema != b.schema:
        raise ValueError(f"schema mismatch: {a.schema.name!r} vs {b.schema.name!r}")
    if a.kind != b.kind:
        raise ValueError(f"kind mismatch: {a.kind.name.lower()} vs {b.kind.name.lower()}")


def combine(x: Degree, y: Degree, c: float, mode: Mode, pair: NormPair = DEFAULT_NORMS) -> Degree:
    """Aggregate two degrees of one attribute value with contradiction ``c``."""
    if x.kind != y.kind:
        raise ValueError("kind mismatch")
    t = blend(x.t, y.t, c, mode, pair)
    if x.kind is Kind.FUZZY:
        return Degree.fuzzy(t)
    f = blend(x.f, y.f, c, mode.opposite(), pair)
    if x.kind is Kind.INTUITIONISTIC:
        return Degree.intuitionistic(t, f)
    return Degree.neutrosophic(t, midpoint(x.i, y.i, pair), f)


def _fuse(a, b, mode, pair):
    pair = NormPair.parse(pair)
    _check_pair(a, b)
    if isinstance(a, MultiEvaluation):
        return MultiEvaluation(a.schema, tuple(_fuse(x, y, mode, pair) for x, y in zip(a.parts, b.parts)))
    cs = a.schema.contradictions
    return Evaluation(a.schema, tuple(combine(x, y, c, mode, pair) for x, y, c in zip(a.degrees, b.degrees, cs)))


def p_and(a: AnyEvaluation, b: AnyEvaluation, pair: NormPair | str = DEFAULT_NORMS) -> AnyEvaluation:
    """Plithogenic intersection, value by value."""
    return _fuse(a, b, Mode.AND, pair)


def p_or(a: AnyEvaluation, b: AnyEvaluation, pair: NormPair | str = DEFAULT_NORMS) -> AnyEvaluation:
    """Plithogenic union, value by value."""
    return _fuse(a, b, Mode.OR, pair)


class Negation(enum.Enum):
    ANTI_VALUE = "anti-value"
    REVERSE = "reverse"
    DEGREE_COMPLEMENT = "complement"

    @classmethod
    def parse(cls, value) -> "Negation":
        if isinstance(value, cls):
            return value
        key = str(value).lower().replace("_", "-")
        aliases = {"antivalue": "anti-value", "anti": "anti-value", "degree-complement": "complement"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown negation form {value!r}") from None


class Variant(enum.Enum):
    """How a single intuitionistic or neutrosophic degree is complemented.

    ``SWAP`` exchanges t and f; ``SWAP_INVERT_I`` also maps i to 1 - i
    (neutrosophic only); ``COMPLEMENT`` maps t, f to 1 - t, 1 - f.
    """

    SWAP = "swap"
    SWAP_INVERT_I = "swap-invert-i"
    COMPLEMENT = "complement"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("_", "-"))
        except ValueError:
            raise ValueError(f"unknown complement variant {value!r}") from None


def complement(d: Degree, variant: Variant | str = Variant.SWAP) -> Degree:
    variant = Variant.parse(variant)
    if d.kind is Kind.FUZZY:
        return Degree.fuzzy(1.0 - d.t)
    if d.kind is Kind.INTUITIONISTIC:
        if variant is Variant.SWAP_INVERT_I:
            raise ValueError("swap-invert-i applies to neutrosophic degrees only")
        if variant is Variant.SWAP:
            return Degree.intuitionistic(d.f, d.t)
        # may leave the t + f <= 1 region; Degree rejects that
        return Degree.intuitionistic(1.0 - d.t, 1.0 - d.f)
    if variant is Variant.SWAP:
        return Degree.neutrosophic(d.f, d.i, d.t)
    if variant is Variant.SWAP_INVERT_I:
        return Degree.neutrosophic(d.f, 1.0 - d.i, d.t)
    return Degree.neutrosophic(1.0 - d.t, d.i, 1.0 - d.f)


def p_not(
    a: AnyEvaluation,
    form: Negation | str = Negation.ANTI_VALUE,
    variant: Variant | str = Variant.SWAP,
    names: Mapping[str, str] | None = None,
) -> AnyEvaluation:
    """Plithogenic negation.

    ``ANTI_VALUE`` moves each degree onto anti(v) at contradiction 1 - c and
    returns an evaluation over the refined schema (values listed by
    increasing contradiction). ``REVERSE`` reverses the degree list against
    the same values. ``DEGREE_COMPLEMENT`` complements every degree in
    place using ``variant``.
    """
    form = Negation.parse(form)
    if isinstance(a, MultiEvaluation):
        parts = tuple(p_not(e, form, variant, names) for e in a.parts)
        schema = MultiAttributeSchema(a.schema.name, tuple(p.schema for p in parts))
        return MultiEvaluation(schema, parts)
    if form is Negation.DEGREE_COMPLEMENT:
        return Evaluation(a.schema, tuple(complement(d, variant) for d in a.degrees))
    if not is_non_decreasing(a.schema.contradictions):
        raise ValueError(f"{form.value} negation needs sorted contradictions, attribute {a.schema.name!r} is not")
    if form is Negation.REVERSE:
        return Evaluation(a.schema, a.degrees[::-1])
    refined, order, _ = refine(a.schema, names)
    return Evaluation(refined, tuple(a.degrees[k] for k in order))


class Style(enum.Enum):
    SIMPLE = "simple"
    PLITHOGENIC = "plithogenic"

    @classmethod
    def parse(cls, value) -> "Style":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown inclusion style {value!r}") from None


# Indeterminacy sits half way between membership and nonmembership.
I_FACTOR = 0.5


def degree_leq(x: Degree, y: Degree, style: Style | str = Style.SIMPLE) -> bool:
    """One-value inclusion x <= y (t grows, i and f shrink)."""
    style = Style.parse(style)
    if x.t > y.t:
        return False
    if x.kind >= Kind.INTUITIONISTIC and x.f < y.f:
        return False
    if x.kind is Kind.NEUTROSOPHIC:
        factor = I_FACTOR if style is Style.PLITHOGENIC else 1.0
        if x.i < factor * y.i:
            return False
    return True


def _scaled(d: Degree, s: float) -> tuple[float, ...]:
    return tuple(s * v for v in d.components())


def _raw_leq(x: Sequence[float], y: Sequence[float], kind: Kind, i_factor: float) -> bool:
    if x[0] > y[0]:
        return False
    if kind is Kind.INTUITIONISTIC:
        return x[1] >= y[1]
    if kind is Kind.NEUTROSOPHIC:
        return x[1] >= i_factor * y[1] and x[2] >= y[2]
    return True


def value_leq(x: Degree, y: Degree, c: float, style: Style | str = Style.SIMPLE) -> bool:
    """Inclusion test at one attribute value with contradiction ``c``.

    Below one half the test runs forward, from ``c = 0.5`` on it is reversed.
    The plithogenic style compares against ``(1 - c)`` times ``y``.
    """
    style = Style.parse(style)
    if style is Style.SIMPLE:
        return degree_leq(x, y) if c < 0.5 else degree_leq(y, x)
    xs, ys = x.components(), _scaled(y, 1.0 - c)
    if c < 0.5:
        return _raw_leq(xs, ys, x.kind, I_FACTOR)
    return _raw_leq(ys, xs, x.kind, I_FACTOR)


def p_leq(a: AnyEvaluation, b: AnyEvaluation, style: Style | str = Style.SIMPLE) -> bool:
    _check_pair(a, b)
    if isinstance(a, MultiEvaluation):
        return all(p_leq(x, y, style) for x, y in zip(a.parts, b.parts))
    cs = a.schema.contradictions
    return all(value_leq(x, y, c, style) for x, y, c in zip(a.degrees, b.degrees, cs))


def p_eq(a: AnyEvaluation, b: AnyEvaluation, style: Style | str = Style.SIMPLE) -> bool:
    return p_leq(a, b, style) and p_leq(b, a, style)


# Operations at a single point of a multi-attribute space.


def _point_index(a: MultiEvaluation, point: Sequence[str]) -> list[int]:
    if len(point) != len(a.parts):
        raise ValueError(f"expected a {len(a.parts)}-tuple of values, got {len(point)}")
    return [e.schema.index(label) for e, label in zip(a.parts, point)]


def tuple_and(a: MultiEvaluation, b: MultiEvaluation, point: Sequence[str], pair=DEFAULT_NORMS) -> tuple[Degree, ...]:
    """Intersection restricted to the m-tuple ``point``."""
    _check_pair(a, b)
    pair = NormPair.parse(pair)
    idx = _point_index(a, point)
    return tuple(
        combine(x.degrees[k], y.degrees[k], x.schema.contradictions[k], Mode.AND, pair)
        for x, y, k in zip(a.parts, b.parts, idx)
    )


def tuple_or(a: MultiEvaluation, b: MultiEvaluation, point: Sequence[str], pair=DEFAULT_NORMS) -> tuple[Degree, ...]:
    _check_pair(a, b)
    pair = NormPair.parse(pair)
    idx = _point_index(a, point)
    return tuple(
        combine(x.degrees[k], y.degrees[k], x.schema.contradictions[k], Mode.OR, pair)
        for x, y, k in zip(a.parts, b.parts, idx)
    )


def tuple_not(a: MultiEvaluation, point: Sequence[str]) -> tuple[tuple[str, ...], tuple[Degree, ...]]:
    """Anti-point of ``point`` and the degrees it carries over."""
    idx = _point_index(a, point)
    labels = tuple(negate_value(e.schema, k).label for e, k in zip(a.parts, idx))
    return labels, tuple(e.degrees[k] for e, k in zip(a.parts, idx))
