"""Distance and similarity measures between degree vectors.

Each measure accepts plithogenic numbers or plain sequences of floats in
[0, 1] of equal length.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .numbers import PlithogenicNumber

Vector = PlithogenicNumber | Sequence[float]


def _pair(a: Vector, b: Vector) -> tuple[tuple[float, ...], tuple[float, ...]]:
    xs = a.degrees if isinstance(a, PlithogenicNumber) else tuple(float(v) for v in a)
    ys = b.degrees if isinstance(b, PlithogenicNumber) else tuple(float(v) for v in b)
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if not xs:
        raise ValueError("measures need at least one component")
    return xs, ys


def _ratio(num: float, den: float, same: bool) -> float:
    # 0/0 happens only for two all-zero vectors, which are identical
    if den == 0.0:
        return 1.0 if same else 0.0
    return min(1.0, max(0.0, num / den))


def dice(a: Vector, b: Vector) -> float:
    xs, ys = _pair(a, b)
    dot = sum(x * y for x, y in zip(xs, ys))
    return _ratio(2 * dot, sum(x * x + y * y for x, y in zip(xs, ys)), xs == ys)


def cosine(a: Vector, b: Vector) -> float:
    xs, ys = _pair(a, b)
    dot = sum(x * y for x, y in zip(xs, ys))
    den = math.sqrt(sum(x * x for x in xs)) * math.sqrt(sum(y * y for y in ys))
    if den == 0.0:
        return 1.0 if xs == ys else 0.0
    return min(1.0, max(0.0, dot / den))


def jaccard(a: Vector, b: Vector) -> float:
    xs, ys = _pair(a, b)
    dot = sum(x * y for x, y in zip(xs, ys))
    return _ratio(dot, sum(x * x + y * y - x * y for x, y in zip(xs, ys)), xs == ys)


def hamming_distance(a: Vector, b: Vector) -> float:
    xs, ys = _pair(a, b)
    return sum(abs(x - y) for x, y in zip(xs, ys)) / len(xs)


def hamming_similarity(a: Vector, b: Vector) -> float:
    return 1.0 - hamming_distance(a, b)


def euclidean_distance(a: Vector, b: Vector) -> float:
    xs, ys = _pair(a, b)
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(xs, ys)) / len(xs))


def euclidean_similarity(a: Vector, b: Vector) -> float:
    return 1.0 - euclidean_distance(a, b)


MEASURES: dict[str, Callable[[Vector, Vector], float]] = {
    "dice": dice,
    "cosine": cosine,
    "jaccard": jaccard,
    "hamming": hamming_distance,
    "hamming-similarity": hamming_similarity,
    "euclidean": euclidean_distance,
    "euclidean-similarity": euclidean_similarity,
}
