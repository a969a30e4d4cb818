"""Refined degrees: membership, indeterminacy and nonmembership split into parts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .degree import DEFAULT_NORMS, EPS, Kind, NormPair, midpoint, tconorm, tnorm, unit
from .ops import Style


@dataclass(frozen=True)
class RefinedDegree:
    """Sub-degrees ``T`` (length p), ``I`` (r) and ``F`` (s).

    A refined fuzzy degree keeps its parts in ``T``; its negation moves them
    to ``F``, so exactly one of the two blocks is filled for kind 1. The sum
    bounds are not enforced here (union can exceed them); see
    :attr:`within_bounds`.
    """

    kind: Kind
    T: tuple[float, ...] = ()
    I: tuple[float, ...] = ()
    F: tuple[float, ...] = ()

    def __post_init__(self):
        kind = Kind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        for name in "TIF":
            block = tuple(unit(x, f"{name}-part") for x in getattr(self, name))
            object.__setattr__(self, name, block)
        p, r, s = self.shape
        if kind is Kind.FUZZY:
            if r or (p == 0) == (s == 0):
                raise ValueError("refined fuzzy degree needs parts in exactly one of T or F, and no I")
        elif kind is Kind.INTUITIONISTIC:
            if r or p < 1 or s < 1 or p + s < 3:
                raise ValueError(f"refined intuitionistic degree needs p, s >= 1 and p + s >= 3, got {(p, s)}")
        elif p < 1 or r < 1 or s < 1 or p + r + s < 4:
            raise ValueError(f"refined neutrosophic degree needs p, r, s >= 1 and p + r + s >= 4, got {(p, r, s)}")

    @property
    def shape(self) -> tuple[int, int, int]:
        return len(self.T), len(self.I), len(self.F)

    @property
    def within_bounds(self) -> bool:
        """Whether the sum constraint of this kind holds."""
        total = sum(self.T) + sum(self.I) + sum(self.F)
        if self.kind is Kind.NEUTROSOPHIC:
            return total <= sum(self.shape) + EPS
        return total <= 1.0 + EPS


def _check(a: RefinedDegree, b: RefinedDegree):
    if a.kind != b.kind or a.shape != b.shape:
        raise ValueError(f"refined degrees differ in kind or shape: {a.shape} vs {b.shape}")


def _zip(op, xs: Sequence[float], ys: Sequence[float], pair) -> tuple[float, ...]:
    return tuple(op(x, y, pair) for x, y in zip(xs, ys))


def refined_and(a: RefinedDegree, b: RefinedDegree, pair: NormPair | str = DEFAULT_NORMS) -> RefinedDegree:
    _check(a, b)
    pair = NormPair.parse(pair)
    return RefinedDegree(
        a.kind, _zip(tnorm, a.T, b.T, pair), _zip(midpoint, a.I, b.I, pair), _zip(tconorm, a.F, b.F, pair)
    )


def refined_or(a: RefinedDegree, b: RefinedDegree, pair: NormPair | str = DEFAULT_NORMS) -> RefinedDegree:
    _check(a, b)
    pair = NormPair.parse(pair)
    return RefinedDegree(
        a.kind, _zip(tconorm, a.T, b.T, pair), _zip(midpoint, a.I, b.I, pair), _zip(tnorm, a.F, b.F, pair)
    )


def refined_not(a: RefinedDegree) -> RefinedDegree:
    """Swap the T and F blocks; I is kept."""
    return RefinedDegree(a.kind, a.F, a.I, a.T)


def refined_leq(
    a: RefinedDegree, b: RefinedDegree, style: Style | str = Style.SIMPLE, c: float = 0.0
) -> bool:
    """All T parts grow, all I and F parts shrink.

    The plithogenic style scales every part of ``b`` by ``1 - c`` (``c`` the
    contradiction of the attribute value, below one half) on every block.
    """
    _check(a, b)
    style = Style.parse(style)
    s = 1.0
    if style is Style.PLITHOGENIC:
        c = unit(c, "contradiction")
        if c >= 0.5:
            raise ValueError("plithogenic refined inclusion takes a contradiction below 0.5")
        s = 1.0 - c
    return (
        all(x <= s * y for x, y in zip(a.T, b.T))
        and all(x >= s * y for x, y in zip(a.I, b.I))
        and all(x >= s * y for x, y in zip(a.F, b.F))
    )
