import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitlaw.nf import NumberField
from splitlaw.parse import ParseError, format_poly, format_zpoly, parse_field, parse_poly, parse_zpoly


def test_basic():
    assert parse_zpoly("x^5 - x - 1") == [-1, -1, 0, 0, 0, 1]
    assert parse_poly("x^5-x-1").k == 5
    assert parse_zpoly("x**2 + 2x + 1") == [1, 2, 1]
    assert parse_zpoly("(x+1)^3") == [1, 3, 3, 1]
    assert parse_zpoly("-3*x^2 + 3x^2 + 4") == [4]


def test_number_field_polynomial():
    K = parse_field("y^4+7*y^2-2*y+14")
    f = parse_poly("x^4 - ([0,0,1]+3)*x^2 - 1", "x", K)
    b = K.theta
    assert f.coeffs == (K(-1), K(0), -(b * b + 3), K(0), K(1))


@pytest.mark.parametrize("text", ["x^5 + [0,?]", "x^", "x^5 + + ", "x^5 + z", "((x+1)", "x^5 $ 1", ""])
def test_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text, "x", parse_field("y^2+5"))


def test_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_zpoly("x^5 + z")
    assert info.value.pos == 6
    assert "^" in str(info.value)


def test_brackets_need_field():
    with pytest.raises(ParseError):
        parse_zpoly("x + [1,2]")


def test_nonmonic_rejected():
    with pytest.raises(ParseError):
        parse_poly("2x^2 + 1")


def test_field_parsing():
    assert parse_field(None).is_rational and parse_field("Q").is_rational
    assert parse_field("y^3-y-1").g == (-1, -1, 0, 1)
    with pytest.raises(ParseError):
        parse_field("2y^2+1")


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=8))
def test_roundtrip_integer(c):
    f = c + [1]
    assert parse_zpoly(format_zpoly(f)) == f
    assert format_poly(parse_poly(format_zpoly(f))) == format_zpoly(f)


@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=1, max_size=5))
def test_roundtrip_number_field(rows):
    K = NumberField((-1, -1, 0, 1))
    from splitlaw.nf import MonicPoly

    f = MonicPoly(K, tuple(K(r) for r in rows) + (K(1),))
    assert parse_poly(format_poly(f), "x", K) == f
