from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bettistab import (DomainError, LinearExponentFamily, MonomialIdeal, RingContext, exact_linear_fit,
                       family_sweep, i_n_family, instantiate, power, stab_seq, stab_seq_closed_form,
                       stab_seq_closed_form_check, betti_koszul)
from bettistab.stabilization import format_sequence, power_tables
from reference_grids import JUMP_AT_3, QUARTIC_TRIPLE, SQUARES


def test_sequence_starts_at_one_and_reports_estimate():
    rep = stab_seq(JUMP_AT_3, 12, lookahead=7, keep_tables=True)
    assert rep.stab_seq == (1, 3) and rep.estimated_stab == 3 and rep.stable_run_length == 9
    assert set(rep.tables) == {1, 3} and rep.sequence_text() == "{1, 3}"
    short = stab_seq(JUMP_AT_3, 5, lookahead=7)
    assert short.stab_seq == (1, 3) and short.estimated_stab is None


def test_lookahead_zero_and_validation():
    assert stab_seq(QUARTIC_TRIPLE, 2, lookahead=0).estimated_stab == 2
    with pytest.raises(ValueError):
        stab_seq(QUARTIC_TRIPLE, 0)
    with pytest.raises(ValueError):
        stab_seq(QUARTIC_TRIPLE, 3, lookahead=-1)


def test_single_power_and_complete_intersection():
    assert stab_seq(SQUARES, 1, lookahead=0).stab_seq == (1,)
    assert stab_seq(SQUARES, 8, lookahead=7).estimated_stab == 1


def test_non_equigenerated_flag():
    I = MonomialIdeal.from_exponents(RingContext.standard(2), [[2, 0], [0, 3]])
    rep = stab_seq(I, 4, lookahead=1)
    assert not rep.equigenerated and rep.shift_r == 2


def test_workers_do_not_change_tables():
    assert power_tables(JUMP_AT_3, 5, workers=2) == power_tables(JUMP_AT_3, 5, workers=1)


def test_family_instantiate():
    F = i_n_family()
    assert instantiate(F, 1) == MonomialIdeal.from_exponents(
        RingContext(("a", "b", "c")), [[2, 2, 2], [0, 4, 2], [3, 0, 3], [5, 1, 0]])
    bad = LinearExponentFamily(RingContext(("a",)), (((1, -3),),))
    with pytest.raises(DomainError, match="variable a"):
        instantiate(bad, 2)
    with pytest.raises(DomainError):
        instantiate(LinearExponentFamily(F.ring, F.generators, n_min=2), 1)


def test_linear_fit():
    fit = exact_linear_fit([(2, 11), (3, 23), (4, 35)])
    assert (fit.slope, fit.intercept) == (12, -13) and fit.formula() == "12n - 13"
    assert fit.range_text() == "n=2..4" and fit(5) == 47
    assert exact_linear_fit([(1, 1), (2, 2), (3, 4)]) is None
    assert exact_linear_fit([(1, 1)]) is None
    half = exact_linear_fit([(1, 1), (3, 2)])
    assert half.slope == Fraction(1, 2) and half.formula() == "(1/2)n + (1/2)"


@given(st.integers(-20, 20), st.integers(-50, 50), st.lists(st.integers(0, 30), min_size=2, max_size=6, unique=True))
def test_fit_recovers_any_line(a, b, xs):
    fit = exact_linear_fit([(x, a * x + b) for x in xs])
    assert fit.slope == a and fit.intercept == b


def test_closed_form():
    assert stab_seq_closed_form(2) == (1, 2, 3, 5, 6, 11)
    seq = stab_seq_closed_form(5)
    assert max(seq) == 12 * 5 - 13 and len(seq) == 2 * 5 + 2
    assert stab_seq_closed_form_check(3, [23, 1, 2, 3, 5, 6, 11, 17])
    with pytest.raises(ValueError):
        stab_seq_closed_form(1)


def test_small_family_sweep():
    res = family_sweep(i_n_family(), (1, 2), max_power=18)
    assert res.reports[1].stab_seq == (1, 2, 6)
    assert res.stab_fit.slope == 5 and res.stab_fit.intercept == 1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3).filter(any), min_size=1, max_size=4))
def test_sequence_matches_shape_changes(rows):
    I = MonomialIdeal.from_exponents(RingContext.standard(3), rows)
    rep = stab_seq(I, 5, lookahead=2)
    keys = [rep.shapes[d] for d in range(1, 6)]
    assert list(rep.stab_seq) == [1] + [d for d in range(2, 6) if keys[d - 1] != keys[d - 2]]
    assert rep.shapes[1].offsets == {(i, j - rep.shift_r) for i, j in betti_koszul(I).entries}
    assert format_sequence(rep.stab_seq).startswith("{1")
