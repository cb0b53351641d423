import cmath

import pytest
from hypothesis import given, strategies as st

from gerbe_vertex.exactnum import (
    Rational,
    cyclotomic_poly,
    field_new,
    parse_rational,
    root,
    sqrt_minus_one_power,
)

ms = st.sampled_from([1, 2, 3, 4])
small_q = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def elements(m):
    f = field_new(m)
    return st.lists(small_q, min_size=f.degree, max_size=f.degree).map(
        lambda cs: f.from_coords([Rational(c.numerator, c.denominator) for c in cs]))


@st.composite
def field_and_elems(draw, n=3):
    m = draw(ms)
    return m, [draw(elements(m)) for _ in range(n)]


def test_cyclotomic_polys():
    # Phi_1..Phi_12, from the standard table
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)


def test_degrees():
    assert [field_new(m).degree for m in (1, 2, 3, 4, 5)] == [2, 4, 4, 8, 8]


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_root_of_unity_order(m):
    f = field_new(m)
    z = root(f, 1)
    assert z ** (4 * m) == f.one()
    assert all(z ** k != f.one() for k in range(1, 4 * m))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sqrt_minus_one(m):
    f = field_new(m)
    i = sqrt_minus_one_power(f, 1)
    assert i * i == f(-1)
    # (sqrt(-1))^(1/m) to the m-th power
    assert sqrt_minus_one_power(f, 1, m) ** m == i
    assert sqrt_minus_one_power(f, -3, 1) == i.inverse() ** 3


def test_principal_branch_numeric():
    f = field_new(3)
    v = sqrt_minus_one_power(f, 1, 3)
    assert abs(v.to_complex() - cmath.exp(1j * cmath.pi / 6)) < 1e-12


@given(field_and_elems())
def test_ring_axioms(data):
    m, (a, b, c) = data
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(field_and_elems(2))
def test_inverse(data):
    m, (a, b) = data
    if not a.is_zero():
        assert a * a.inverse() == a.field.one()
        assert (b / a) * a == b


@given(field_and_elems(2))
def test_numeric_embedding(data):
    m, (a, b) = data
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-9


@given(field_and_elems(1))
def test_text_round_trip(data):
    m, (a,) = data
    assert a.field.parse(str(a)) == a


def test_rational_detection():
    f = field_new(2)
    i = root(f, 2)
    assert not i.is_rational()
    assert (i * i).is_rational() and (i * i).rational() == -1
    with pytest.raises(ValueError):
        i.rational()


def test_parse_rational():
    assert parse_rational("3/6") == Rational(1, 2)
    assert parse_rational(" -4 ") == -4
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        field_new(2).zero().inverse()
