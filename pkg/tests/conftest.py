"""Shared fixtures and strategy helpers for the test suite."""

import pytest
from hypothesis import strategies as st

from maxplus import FunctionTable, GroundSpace, IdempotentMeasure, Point


# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------

# Finite weights well inside the range where max/+ are exact.
finite_weights = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)

# Weights that may also be bottom (represented as None before coercion).
maybe_bottom = st.one_of(st.none(), finite_weights)


def measures_on(space: GroundSpace):
    """Strategy producing normalized measures on ``space``.

    Draws a non-empty subset of the points with finite raw weights and
    re-normalizes, so every generated measure satisfies the norm axiom.
    """
    ids = list(space.point_ids)
    return (
        st.dictionaries(
            st.sampled_from(ids), finite_weights, min_size=1, max_size=len(ids)
        )
        .map(lambda raw: IdempotentMeasure.from_weights(space, raw))
    )


def tables_on(space: GroundSpace):
    """Strategy producing total test functions on ``space``."""
    ids = list(space.point_ids)
    return st.lists(
        finite_weights, min_size=len(ids), max_size=len(ids)
    ).map(lambda vals: FunctionTable(space, dict(zip(ids, vals))))


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def abc_space() -> GroundSpace:
    """Three bare points, no coordinates."""
    return GroundSpace("X", [Point("a"), Point("b"), Point("c")])


@pytest.fixture
def uv_space() -> GroundSpace:
    """Two bare points, used as a pushforward target."""
    return GroundSpace("Y", [Point("u"), Point("v")])


@pytest.fixture
def segment_space() -> GroundSpace:
    """Five points on the unit interval plus two off-grid atoms."""
    pts = [Point(f"g{i}", (i * 0.25,)) for i in range(5)]
    pts += [Point("a0", (0.3,)), Point("a1", (0.9,))]
    return GroundSpace("L", pts)
