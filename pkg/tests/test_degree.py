import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plithogenic.degree import Degree, Kind, Mode, NormPair, blend, midpoint, tconorm, tnorm, unit

from conftest import unit_floats

PAIRS = list(NormPair)


def test_unit_snaps_tiny_overshoot():
    assert unit(1.0 + 1e-14) == 1.0
    assert unit(-1e-14) == 0.0


@pytest.mark.parametrize("bad", [-0.1, 1.5, math.nan])
def test_unit_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        unit(bad)


def test_kind_parse_aliases():
    assert Kind.parse("IF") is Kind.INTUITIONISTIC
    assert Kind.parse("neutrosophic") is Kind.NEUTROSOPHIC
    assert Kind.parse(1) is Kind.FUZZY
    with pytest.raises(ValueError):
        Kind.parse("hesitant")


def test_degree_shapes():
    assert Degree.from_components(0.3).components() == (0.3,)
    assert Degree.from_components((0.3, 0.6)).components() == (0.3, 0.6)
    assert Degree.from_components((0.3, 0.2, 0.6)).components() == (0.3, 0.2, 0.6)
    with pytest.raises(ValueError):
        Degree.from_components((0.1, 0.2, 0.3, 0.4))


def test_intuitionistic_sum_constraint():
    with pytest.raises(ValueError, match="t \\+ f"):
        Degree.intuitionistic(0.7, 0.4)
    # neutrosophic parts are independent
    Degree.neutrosophic(1.0, 1.0, 1.0)


def test_missing_or_extra_parts():
    with pytest.raises(ValueError):
        Degree(Kind.INTUITIONISTIC, 0.2)
    with pytest.raises(ValueError):
        Degree(Kind.FUZZY, 0.2, f=0.1)
    with pytest.raises(ValueError):
        Degree(Kind.INTUITIONISTIC, 0.2, i=0.1, f=0.1)


def test_blend_examples():
    assert blend(0.6, 0.7, 0.0) == pytest.approx(0.42)
    assert blend(0.6, 0.7, 1.0) == pytest.approx(0.88)
    assert blend(0.5, 0.4, 0.5) == pytest.approx(0.45)
    assert blend(0.5, 0.4, 0.5, Mode.OR) == pytest.approx(0.45)
    assert blend(0.6, 0.7, 0.0, pair=NormPair.MINMAX) == 0.6


def test_norm_pair_parse():
    assert NormPair.parse("MinMax") is NormPair.MINMAX
    with pytest.raises(ValueError):
        NormPair.parse("lukasiewicz")


@given(unit_floats, unit_floats, unit_floats, st.sampled_from(PAIRS))
def test_blend_stays_between_norms(a, b, c, pair):
    lo, hi = tnorm(a, b, pair), tconorm(a, b, pair)
    for mode in Mode:
        v = blend(a, b, c, mode, pair)
        assert lo - 1e-12 <= v <= hi + 1e-12


@given(unit_floats, unit_floats, unit_floats, st.sampled_from(PAIRS))
def test_blend_sum_and_duality(a, b, c, pair):
    s = blend(a, b, c, Mode.AND, pair) + blend(a, b, c, Mode.OR, pair)
    assert s == pytest.approx(tnorm(a, b, pair) + tconorm(a, b, pair), abs=1e-12)
    assert blend(a, b, c, Mode.AND, pair) == pytest.approx(blend(a, b, 1 - c, Mode.OR, pair), abs=1e-12)


@given(unit_floats, unit_floats, st.sampled_from(PAIRS))
def test_midpoint_symmetric(a, b, pair):
    assert midpoint(a, b, pair) == midpoint(b, a, pair)
    assert midpoint(a, b, pair) == pytest.approx(blend(a, b, 0.5, Mode.AND, pair), abs=1e-12)
