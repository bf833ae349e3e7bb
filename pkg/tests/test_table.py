import json

import pytest
from hypothesis import given, strategies as st

from bettistab import BettiTable, render_m2, resolution_skeleton, same_shape, shape_key
from reference_grids import SMALL_CUBIC_RENDER, grid_text, parse_grid

CUBIC = BettiTable({(0, 3): 4, (1, 4): 1, (1, 5): 3, (2, 7): 1})

tables = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 30)).filter(lambda ij: ij[1] >= ij[0]),
    st.integers(1, 2000), min_size=1, max_size=10).map(BettiTable)


def test_render_exact():
    assert render_m2(CUBIC) == SMALL_CUBIC_RENDER
    assert "·" in render_m2(CUBIC, typographic=True)


def test_render_wide_entries_align():
    B = BettiTable({(0, 117): 560, (1, 119): 1101, (2, 120): 5})
    lines = render_m2(B).splitlines()
    assert len({len(l) for l in lines}) == 1
    assert lines[0] == "     -   0    1 2"


def test_skeleton():
    assert resolution_skeleton(CUBIC) == "0 -> R(-7) -> R(-4) ++ R^3(-5) -> R^4(-3) -> I -> 0"
    assert resolution_skeleton(CUBIC, typographic=True) == "0 → R(−7) → R(−4) ⊕ R^3(−5) → R^4(−3) → I → 0"


def test_validation():
    with pytest.raises(ValueError):
        BettiTable({})
    with pytest.raises(ValueError):
        BettiTable({(0, 1): -1})
    assert BettiTable({(0, 1): 1, (1, 3): 0}) == BettiTable({(0, 1): 1})
    assert CUBIC[5, 5] == 0 and CUBIC.totals() == [4, 4, 1] and CUBIC.row_range() == (3, 5)


def test_shape_key():
    k = shape_key(CUBIC, 3, 1)
    assert k.offsets == frozenset({(0, 0), (1, 1), (1, 2), (2, 4)})
    assert k.row_offsets == frozenset({(0, 0), (1, 0), (1, 1), (2, 2)})
    shifted = BettiTable({(i, j + 3): 7 * m for (i, j), m in CUBIC.entries.items()})
    assert same_shape(CUBIC, 1, shifted, 2, 3)
    assert not same_shape(CUBIC, 1, shifted, 2, 2)
    with pytest.raises(ValueError):
        shape_key(CUBIC, 0, 1)


@given(tables)
def test_json_round_trip(B):
    assert BettiTable.from_json(json.loads(json.dumps(B.to_json()))) == B


@given(tables)
def test_grid_round_trip(B):
    assert parse_grid(grid_text(B)) == B
    body = render_m2(B).splitlines()[2:]
    assert parse_grid("\n".join(body)) == B
