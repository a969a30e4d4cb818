from pathlib import Path

import pytest
from hypothesis import strategies as st

from plithogenic import AttributeSchema, Degree, Evaluation

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def degrees(draw, kind: int):
    if kind == 1:
        return Degree.fuzzy(draw(unit_floats))
    if kind == 2:
        t = draw(unit_floats)
        return Degree.intuitionistic(t, draw(st.floats(0.0, 1.0 - t)))
    return Degree.neutrosophic(draw(unit_floats), draw(unit_floats), draw(unit_floats))


@st.composite
def sorted_schemas(draw, min_size: int = 1, max_size: int = 6):
    n = draw(st.integers(min_size, max_size))
    rest = sorted(draw(st.lists(unit_floats, min_size=n - 1, max_size=n - 1)))
    return AttributeSchema.build("attr", [f"v{k}" for k in range(n)], [0.0, *rest])


@st.composite
def evaluation_pairs(draw, kind: int | None = None, count: int = 2):
    kind = kind or draw(st.sampled_from([1, 2, 3]))
    schema = draw(sorted_schemas())
    return tuple(
        Evaluation(schema, tuple(draw(degrees(kind)) for _ in schema.values)) for _ in range(count)
    )


@pytest.fixture
def data_dir():
    return DATA
