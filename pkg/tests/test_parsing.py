import pytest
from hypothesis import given, strategies as st

from bettistab import MonomialIdeal, ParseError, RingContext, format_ideal, parse_family, parse_ideal, parse_monomial
from bettistab.parsing import parse_family_monomial, parse_range, parse_ring
from bettistab.stabilization import i_n_family, I_N_FAMILY_TEXT

ABC = RingContext(("a", "b", "c"))
X3 = RingContext.standard(3)


def test_monomials():
    assert parse_monomial("a^2*b^2*c^2", ABC).exponents == (2, 2, 2)
    assert parse_monomial("x1*x2^2*x1", X3).exponents == (2, 2, 0)
    assert parse_monomial(" x3 ^ 4 ", X3).exponents == (0, 0, 4)
    assert parse_monomial("1", X3).is_unit
    assert parse_monomial("a^(3)", ABC).exponents == (3, 0, 0)


def test_family_monomial():
    assert parse_family_monomial("a^(6n-1)*b", ABC) == ((6, -1), (0, 1), (0, 0))
    assert parse_family_monomial("a^(n + 2)*c^(2*n)", ABC) == ((1, 2), (0, 0), (2, 0))
    assert parse_family(I_N_FAMILY_TEXT, ABC) == i_n_family()


@pytest.mark.parametrize("text, pos", [
    ("a*d", 2), ("a^", 2), ("a^-1", 2), ("a**b", 2), ("a b", 2), ("a^(n)", 3), ("a$", 1), ("*a", 0),
])
def test_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_monomial(text, ABC)
    assert exc.value.position == pos
    assert f"position {pos}" in str(exc.value)


def test_ideal_error_position_is_global():
    with pytest.raises(ParseError) as exc:
        parse_ideal("a^2, b*q", ABC)
    assert exc.value.position == 7
    for bad in ["", "a,,b", "a,"]:
        with pytest.raises(ParseError):
            parse_ideal(bad, ABC)


def test_family_reserves_parameter():
    with pytest.raises(ParseError):
        parse_family("n^2", RingContext(("n", "m")))
    with pytest.raises(ParseError):
        parse_family("a^(-n+3)", ABC)


def test_ring_and_range():
    assert parse_ring("x, y ,z").variable_names == ("x", "y", "z")
    with pytest.raises(ParseError):
        parse_ring("x,x")
    assert parse_range("2..4") == (2, 4) and parse_range("3") == (3, 3)
    for bad in ["4..2", "a..b", "1-3"]:
        with pytest.raises(ParseError):
            parse_range(bad)


ideals = st.lists(st.lists(st.integers(0, 7), min_size=3, max_size=3).filter(any), min_size=1, max_size=6)


@given(ideals)
def test_parse_print_parse(rows):
    I = MonomialIdeal.from_exponents(X3, rows)
    text = format_ideal(I)
    J = parse_ideal(text, X3)
    assert J == I and format_ideal(J) == text


@given(st.lists(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 6)), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_family_print_parse(gens):
    from bettistab import LinearExponentFamily
    F = LinearExponentFamily(ABC, gens)
    assert parse_family(str(F), ABC) == F
