"""Scalar degrees, t-norm/t-conorm pairs and the contradiction-weighted blend.

Every plithogenic operator reduces to :func:`blend`: a convex combination of
a t-norm and its t-conorm, weighted by the contradiction degree of the
attribute value being aggregated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# Float noise allowance for range and sum checks.
EPS = 1e-12


def unit(value: float, name: str = "value") -> float:
    """Return ``value`` as a float in [0, 1], or raise ``ValueError``.

    Values within ``EPS`` of a bound are snapped onto it so that arithmetic
    noise from convex combinations does not trip the check. Anything further
    out is an error, never clamped.
    """
    x = float(value)
    if math.isnan(x) or x < -EPS or x > 1.0 + EPS:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return min(1.0, max(0.0, x))


class Kind(enum.IntEnum):
    """Number of components in a degree."""

    FUZZY = 1
    INTUITIONISTIC = 2
    NEUTROSOPHIC = 3

    @classmethod
    def parse(cls, value: "Kind | int | str") -> "Kind":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            key = value.strip().upper()
            aliases = {"IF": "INTUITIONISTIC", "IFS": "INTUITIONISTIC", "N": "NEUTROSOPHIC", "F": "FUZZY"}
            try:
                return cls[aliases.get(key, key)]
            except KeyError:
                raise ValueError(f"unknown degree kind {value!r}") from None
        return cls(int(value))


@dataclass(frozen=True)
class Degree:
    """A single-valued appurtenance (or truth, or chance) degree.

    ``t`` is the membership/truth part; ``f`` exists for intuitionistic and
    neutrosophic degrees, ``i`` for neutrosophic ones only. Unused parts are
    ``None``.
    """

    kind: Kind
    t: float
    i: float | None = None
    f: float | None = None

    def __post_init__(self):
        kind = Kind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "t", unit(self.t, "t"))
        if kind >= Kind.INTUITIONISTIC:
            if self.f is None:
                raise ValueError(f"{kind.name.lower()} degree needs a non-membership part f")
            object.__setattr__(self, "f", unit(self.f, "f"))
        elif self.f is not None:
            raise ValueError("fuzzy degree has no f part")
        if kind is Kind.NEUTROSOPHIC:
            if self.i is None:
                raise ValueError("neutrosophic degree needs an indeterminacy part i")
            object.__setattr__(self, "i", unit(self.i, "i"))
        elif self.i is not None:
            raise ValueError(f"{kind.name.lower()} degree has no i part")
        if kind is Kind.INTUITIONISTIC and self.t + self.f > 1.0 + EPS:
            raise ValueError(f"intuitionistic degree needs t + f <= 1, got t={self.t}, f={self.f}")

    @classmethod
    def fuzzy(cls, t: float) -> "Degree":
        return cls(Kind.FUZZY, t)

    @classmethod
    def intuitionistic(cls, t: float, f: float) -> "Degree":
        return cls(Kind.INTUITIONISTIC, t, f=f)

    @classmethod
    def neutrosophic(cls, t: float, i: float, f: float) -> "Degree":
        return cls(Kind.NEUTROSOPHIC, t, i=i, f=f)

    @classmethod
    def from_components(cls, components) -> "Degree":
        """Build from a bare number, ``(t, f)`` or ``(t, i, f)``."""
        if isinstance(components, (int, float)):
            return cls.fuzzy(components)
        parts = tuple(components)
        if len(parts) == 1:
            return cls.fuzzy(parts[0])
        if len(parts) == 2:
            return cls.intuitionistic(*parts)
        if len(parts) == 3:
            return cls.neutrosophic(*parts)
        raise ValueError(f"a degree has 1, 2 or 3 components, got {len(parts)}")

    def components(self) -> tuple[float, ...]:
        """Components in reading order: ``(t,)``, ``(t, f)`` or ``(t, i, f)``."""
        if self.kind is Kind.FUZZY:
            return (self.t,)
        if self.kind is Kind.INTUITIONISTIC:
            return (self.t, self.f)
        return (self.t, self.i, self.f)

    def __iter__(self):
        return iter(self.components())


class NormPair(enum.Enum):
    """A t-norm together with its dual t-conorm."""

    PRODUCT = "product"
    MINMAX = "minmax"

    @classmethod
    def parse(cls, value: "NormPair | str") -> "NormPair":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown norm pair {value!r}; use 'product' or 'minmax'") from None


class Mode(enum.Enum):
    AND = "and"
    OR = "or"

    def opposite(self) -> "Mode":
        return Mode.OR if self is Mode.AND else Mode.AND


DEFAULT_NORMS = NormPair.PRODUCT


def tnorm(a: float, b: float, pair: NormPair = DEFAULT_NORMS) -> float:
    if pair is NormPair.PRODUCT:
        return a * b
    return min(a, b)


def tconorm(a: float, b: float, pair: NormPair = DEFAULT_NORMS) -> float:
    if pair is NormPair.PRODUCT:
        return a + b - a * b
    return max(a, b)


def fuzzy_complement(a: float) -> float:
    return 1.0 - a


def blend(a: float, b: float, c0: float, mode: Mode = Mode.AND, pair: NormPair = DEFAULT_NORMS) -> float:
    """Contradiction-weighted aggregation of two fuzzy degrees.

    With ``mode=AND`` the result is ``(1 - c0) * tnorm + c0 * tconorm``; with
    ``mode=OR`` the weights swap. ``c0 = 0`` gives the plain t-norm (or
    t-conorm), ``c0 = 1`` the opposite one, ``c0 = 0.5`` their midpoint for
    both modes.
    """
    lo = tnorm(a, b, pair)
    hi = tconorm(a, b, pair)
    if mode is Mode.AND:
        return (1.0 - c0) * lo + c0 * hi
    return (1.0 - c0) * hi + c0 * lo


def midpoint(a: float, b: float, pair: NormPair = DEFAULT_NORMS) -> float:
    """Average of t-norm and t-conorm, the rule applied to indeterminacy."""
    return 0.5 * (tnorm(a, b, pair) + tconorm(a, b, pair))
