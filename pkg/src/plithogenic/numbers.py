"""Single-valued uni-attribute plithogenic numbers and their arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .degree import EPS, unit
from .schema import is_non_decreasing


@dataclass(frozen=True)
class PlithogenicNumber:
    """Fuzzy degrees ``a_i`` paired with contradictions ``c_i``.

    Contradictions start at 0 and never decrease.
    """

    degrees: tuple[float, ...]
    contradictions: tuple[float, ...]

    def __post_init__(self):
        a = tuple(unit(x, "degree") for x in self.degrees)
        c = tuple(unit(x, "contradiction") for x in self.contradictions)
        if not a:
            raise ValueError("a plithogenic number needs at least one degree")
        if len(a) != len(c):
            raise ValueError(f"{len(a)} degrees but {len(c)} contradictions")
        if abs(c[0]) > EPS:
            raise ValueError(f"first contradiction must be 0, got {c[0]}")
        if not is_non_decreasing(c):
            raise ValueError("contradictions must be non-decreasing")
        object.__setattr__(self, "degrees", a)
        object.__setattr__(self, "contradictions", c)

    @classmethod
    def equidistant(cls, degrees: Sequence[float]) -> "PlithogenicNumber":
        n = len(degrees)
        return cls(tuple(degrees), tuple(k / (n - 1) for k in range(n)) if n > 1 else (0.0,))

    def __len__(self):
        return len(self.degrees)


def _aligned(a: PlithogenicNumber, b: PlithogenicNumber):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if a.contradictions != b.contradictions:
        raise ValueError("plithogenic numbers must share their contradiction degrees")


def _positive(lam: float) -> float:
    lam = float(lam)
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    return lam


def pn_add(a: PlithogenicNumber, b: PlithogenicNumber) -> PlithogenicNumber:
    _aligned(a, b)
    out = tuple(
        (1 - c) * (x + y - x * y) + c * (x * y) for x, y, c in zip(a.degrees, b.degrees, a.contradictions)
    )
    return PlithogenicNumber(out, a.contradictions)


def pn_mul(a: PlithogenicNumber, b: PlithogenicNumber) -> PlithogenicNumber:
    _aligned(a, b)
    out = tuple(
        (1 - c) * (x * y) + c * (x + y - x * y) for x, y, c in zip(a.degrees, b.degrees, a.contradictions)
    )
    return PlithogenicNumber(out, a.contradictions)


def pn_scale(lam: float, a: PlithogenicNumber) -> PlithogenicNumber:
    """Scalar multiple ``lam * A``."""
    lam = _positive(lam)
    if lam == 1.0:
        return a
    out = tuple((1 - c) * (1 - (1 - x) ** lam) + c * x**lam for x, c in zip(a.degrees, a.contradictions))
    return PlithogenicNumber(out, a.contradictions)


def pn_pow(a: PlithogenicNumber, lam: float) -> PlithogenicNumber:
    """Power ``A ** lam``."""
    lam = _positive(lam)
    if lam == 1.0:
        return a
    out = tuple((1 - c) * x**lam + c * (1 - (1 - x) ** lam) for x, c in zip(a.degrees, a.contradictions))
    return PlithogenicNumber(out, a.contradictions)
