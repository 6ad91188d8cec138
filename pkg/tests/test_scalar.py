from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import ScalarDivisionByZero, ScalarError, ScalarSyntaxError
from core.models.scalar import ONE, ZERO, Scalar, cyclotomic_polynomial, jth_root_of_sign, root_of_unity
from utils.lsa_format import parse_scalar

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
orders = st.sampled_from([3, 4, 5, 8, 12])


@st.composite
def cyclotomic(draw):
    """a + b·ζ_N + c·ζ_N² с рациональными a, b, c."""
    order = draw(orders)
    zeta = root_of_unity(order, 1)
    a, b, c = draw(fractions), draw(fractions), draw(fractions)
    return Scalar.coerce(a) + zeta * b + zeta * zeta * c


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(12)) == 5


def test_rational_values_are_normalized():
    half = Scalar.rational(Fraction(1, 2))
    assert half.is_rational
    assert half + half == ONE
    assert (half * 2).to_fraction() == 1
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(4, 2).is_rational


def test_roots_of_unity():
    i = root_of_unity(4, 1)
    assert not i.is_rational
    assert i * i == -1
    assert root_of_unity(7, 7) == ONE
    assert root_of_unity(5, 1) ** 5 == ONE
    assert root_of_unity(8, 1) ** 2 == i
    assert root_of_unity(6, 3) == -1
    with pytest.raises(ScalarError):
        root_of_unity(0, 1)


def test_mixed_orders_lift_to_common_field():
    zeta3 = root_of_unity(3, 1)
    i = root_of_unity(4, 1)
    product = zeta3 * i
    assert product ** 12 == ONE
    assert product != ONE
    assert zeta3 ** 2 == -1 - zeta3


def test_direct_rational_construction_is_exact():
    two = Scalar(1, (2,))
    assert isinstance(two.coeffs[0], Fraction)
    assert two.inverse().to_fraction() == Fraction(1, 2)
    assert isinstance(two.inverse().to_fraction(), Fraction)


@pytest.mark.parametrize("stored, smaller", [
    (root_of_unity(12, 4), root_of_unity(3, 1)),
    (root_of_unity(12, 3), root_of_unity(4, 1)),
    (root_of_unity(6, 1), root_of_unity(3, 1) + 1),
    (root_of_unity(24, 9), root_of_unity(8, 3)),
])
def test_equal_scalars_hash_alike_across_orders(stored, smaller):
    assert stored.order > smaller.order
    assert stored == smaller
    assert hash(stored) == hash(smaller)
    assert stored.canonical == smaller.canonical
    assert {smaller: "found"}[stored] == "found"


def test_cyclotomic_hashes_are_not_constant():
    assert root_of_unity(7, 1).canonical == (7, (0, 1, 0, 0, 0, 0))
    assert len({hash(root_of_unity(7, k)) for k in range(1, 7)}) > 1
    assert len({root_of_unity(12, k) for k in range(12)}) == 12


def test_jth_root_of_sign():
    assert jth_root_of_sign(1, 3) == ONE
    assert jth_root_of_sign(-1, 1) == -1
    r = jth_root_of_sign(-1, 2)
    assert r ** 2 == -1
    with pytest.raises(ScalarError):
        jth_root_of_sign(2, 1)


def test_division_by_zero():
    with pytest.raises(ScalarDivisionByZero):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_to_fraction_of_irrational():
    with pytest.raises(ScalarError):
        root_of_unity(3, 1).to_fraction()


def test_str():
    assert str(Scalar.rational(Fraction(-3, 4))) == "-3/4"
    assert str(root_of_unity(4, 1)) == "z(4)^1"
    assert str(root_of_unity(3, 2)) == "-1 - z(3)^1"
    assert str(Scalar.rational(Fraction(1, 2)) + root_of_unity(4, 1)) == "1/2 + z(4)^1"


@given(fractions, fractions, fractions)
def test_rational_field_laws(a, b, c):
    a, b, c = Scalar.coerce(a), Scalar.coerce(b), Scalar.coerce(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if a:
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(cyclotomic(), cyclotomic(), cyclotomic())
def test_cyclotomic_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(cyclotomic())
def test_literal_of_str_parses_back(value):
    assert parse_scalar(str(value)) == value


@pytest.mark.parametrize("text, expected", [
    ("0", ZERO),
    ("7", Scalar.rational(7)),
    ("-1", Scalar.rational(-1)),
    ("1/2", Scalar.rational(Fraction(1, 2))),
    (" 3/6 ", Scalar.rational(Fraction(1, 2))),
    ("z(4)^2", Scalar.rational(-1)),
    ("z(4)", root_of_unity(4, 1)),
    ("2*z(3)^1", root_of_unity(3, 1) * 2),
    ("1 + z(4)^1 - 1", root_of_unity(4, 1)),
    ("z(5)^0", ONE),
    ("z(3)*z(4)", root_of_unity(12, 7)),
    ("2 * z(4) * z(4)", Scalar.rational(-2)),
    ("1/2*z(8)^2*z(8)^2", Scalar.rational(Fraction(-1, 2))),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/0", "z(0)^1", "1//2", "x1"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ScalarSyntaxError):
        parse_scalar(text)
