import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bettistab import ContextError, DomainError, Monomial, MonomialIdeal, RingContext, power
from bettistab.monomials import (MAX_EXPONENT, canonical_order, divides, ideal_product, is_equigenerated,
                                 lcm_pair, min_gen_degree, minimal_rows, powers)

R3 = RingContext.standard(3)


def mono(*e, ring=R3):
    return Monomial(ring, e)


exps3 = st.lists(st.integers(0, 5), min_size=3, max_size=3).map(tuple)
gens3 = st.lists(exps3.filter(any), min_size=1, max_size=6)


def test_ring_validation():
    assert str(RingContext(("a", "b"))) == "a,b"
    for bad in [(), ("a", "a"), ("1x",), ("a b",)]:
        with pytest.raises(ValueError):
            RingContext(bad)


def test_monomial_basics():
    m = mono(1, 2, 0)
    assert m.degree == 3 and str(m) == "x1*x2^2"
    assert str(mono(0, 0, 0)) == "1" and mono(0, 0, 0).is_unit
    assert mono(1, 0, 0).divides(m) and not m.divides(mono(1, 0, 0))
    assert m.lcm(mono(0, 0, 4)) == mono(1, 2, 4)
    assert m * m == mono(2, 4, 0)


def test_rejects_bad_exponents_and_mixed_rings():
    with pytest.raises(DomainError):
        mono(-1, 0, 0)
    with pytest.raises(DomainError):
        mono(MAX_EXPONENT + 1, 0, 0)
    with pytest.raises((DomainError, ValueError)):
        mono(1, 2)
    other = RingContext(("a", "b", "c"))
    with pytest.raises(ContextError):
        divides(mono(1, 0, 0), mono(1, 0, 0, ring=other))


def test_ideal_rejects_zero_and_unit():
    with pytest.raises(ValueError):
        MonomialIdeal(R3, [])
    with pytest.raises(ValueError):
        MonomialIdeal(R3, [mono(0, 0, 0), mono(1, 0, 0)])


def test_minimal_generators_and_order():
    I = MonomialIdeal(R3, [mono(2, 0, 0), mono(3, 1, 0), mono(0, 1, 0), mono(0, 1, 0)])
    assert I.generators == (mono(0, 1, 0), mono(2, 0, 0))
    assert min_gen_degree(I) == 1 and is_equigenerated(I) is None
    assert mono(5, 5, 5) in I and mono(1, 0, 3) not in I


def test_power_small():
    I = MonomialIdeal(R3, [mono(1, 0, 0), mono(0, 1, 0)])
    assert power(I, 2).generators == (mono(0, 2, 0), mono(1, 1, 0), mono(2, 0, 0))
    with pytest.raises(DomainError):
        power(I, 0)
    assert [d for d, _ in powers(I, 3)] == [1, 2, 3]
    assert is_equigenerated(I ** 3) == 3


@given(gens3)
def test_minimal_rows_is_antichain_generating_same_ideal(rows):
    arr = np.array(rows, dtype=np.int64)
    m = minimal_rows(arr)
    for a in m:
        for b in m:
            if a is not b and not np.array_equal(a, b):
                assert not np.all(a <= b)
    # every input row is divisible by some minimal row
    for r in arr:
        assert np.any(np.all(m <= r, axis=1))
    assert np.array_equal(canonical_order(m), np.arange(len(m)))


@settings(max_examples=40)
@given(gens3, gens3)
def test_product_matches_pairwise_products(a, b):
    I, J = MonomialIdeal.from_exponents(R3, a), MonomialIdeal.from_exponents(R3, b)
    prods = [g * h for g in I.generators for h in J.generators]
    assert ideal_product(I, J) == MonomialIdeal(R3, prods)
    assert I * J == J * I


@settings(max_examples=30)
@given(gens3, st.integers(1, 4))
def test_incremental_powers_match_direct(rows, d):
    I = MonomialIdeal.from_exponents(R3, rows)
    direct = I
    for _ in range(d - 1):
        direct = ideal_product(direct, I)
    assert power(I, d) == direct


@given(exps3, exps3)
def test_lcm_is_least_common_multiple(a, b):
    x, y = mono(*a), mono(*b)
    m = lcm_pair(x, y)
    assert x.divides(m) and y.divides(m)
    assert m == y.lcm(x)
