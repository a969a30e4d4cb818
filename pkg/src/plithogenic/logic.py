"""Plithogenic logic propositions and finite plithogenic probability spaces.

Both layers are thin labels over evaluations; every operator delegates to
:mod:`plithogenic.ops`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .degree import DEFAULT_NORMS, NormPair
from .ops import AnyEvaluation, Evaluation, MultiEvaluation, Negation, Variant, p_and, p_not, p_or
from .schema import AttributeSchema, MultiAttributeSchema, split


@dataclass(frozen=True)
class Proposition:
    """A statement with a truth degree per attribute value."""

    text: str
    evaluation: AnyEvaluation


@dataclass(frozen=True)
class Event:
    """An event with a chance of occurrence per attribute value.

    Chances are not normalised; they need not sum to 1.
    """

    label: str
    evaluation: AnyEvaluation


Statement = Union[Proposition, Event]


def _name(x: Statement) -> str:
    return x.text if isinstance(x, Proposition) else x.label


def _same_type(p: Statement, q: Statement):
    if type(p) is not type(q):
        raise TypeError("cannot combine a proposition with an event")


def conjoin(p: Statement, q: Statement, pair: NormPair | str = DEFAULT_NORMS) -> Statement:
    _same_type(p, q)
    ev = p_and(p.evaluation, q.evaluation, pair)
    return type(p)(f"({_name(p)} and {_name(q)})", ev)


def disjoin(p: Statement, q: Statement, pair: NormPair | str = DEFAULT_NORMS) -> Statement:
    _same_type(p, q)
    ev = p_or(p.evaluation, q.evaluation, pair)
    return type(p)(f"({_name(p)} or {_name(q)})", ev)


def negate(p: Statement, form: Negation | str = Negation.ANTI_VALUE, variant: Variant | str = Variant.SWAP) -> Statement:
    return type(p)(f"not {_name(p)}", p_not(p.evaluation, form, variant))


@dataclass(frozen=True)
class ProbabilitySpace:
    """Finitely many events over one (possibly multi-attribute) schema."""

    schema: AttributeSchema | MultiAttributeSchema
    events: tuple[Event, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if not self.events:
            raise ValueError("a probability space needs at least one event")
        kinds = set()
        for e in self.events:
            if e.evaluation.schema != self.schema:
                raise ValueError(f"event {e.label!r} does not use the space's schema")
            kinds.add(e.evaluation.kind)
        if len(kinds) > 1:
            raise ValueError("events mix degree kinds")


def _cells(ev: AnyEvaluation) -> list[tuple[float, ...]]:
    if isinstance(ev, MultiEvaluation):
        return [c for part in ev.parts for c in part.rows()]
    return ev.rows()


def space_summary(space: ProbabilitySpace) -> tuple[list[str], list[tuple[str, list[tuple[float, ...]]]]]:
    """Column headers and one row of chance cells per event.

    Headers read ``attribute:value``. A cell is the degree tuple for that
    value: ``(t,)``, ``(t, f)`` or ``(t, i, f)``.
    """
    headers = [f"{s.name}:{v}" for s in split(space.schema) for v in s.values]
    rows = [(e.label, _cells(e.evaluation)) for e in space.events]
    return headers, rows


def relabel(p: Statement, name: str) -> Statement:
    if isinstance(p, Proposition):
        return replace(p, text=name)
    return replace(p, label=name)


__all__ = [
    "Evaluation",
    "Event",
    "ProbabilitySpace",
    "Proposition",
    "conjoin",
    "disjoin",
    "negate",
    "relabel",
    "space_summary",
]
