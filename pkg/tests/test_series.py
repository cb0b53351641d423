import pytest
from hypothesis import given, strategies as st

from gerbe_vertex.exactnum import Rational, field_new, root
from gerbe_vertex.series import SeriesRing, TruncSeries, WindowError, csc_monomial, maclaurin, trig_oracle

Q = Rational

# independent expansions (sympy), frozen
FROZEN = {
    "tan": [0, 1, 0, Q(1, 3), 0, Q(2, 15), 0, Q(17, 315), 0, Q(62, 2835)],
    "sec": [1, 0, Q(1, 2), 0, Q(5, 24), 0, Q(61, 720), 0, Q(277, 8064)],
    "t_over_sin": [1, 0, Q(1, 6), 0, Q(7, 360), 0, Q(31, 15120), 0, Q(127, 604800)],
    "t_over_sinh": [1, 0, Q(-1, 6), 0, Q(7, 360), 0, Q(-31, 15120), 0, Q(127, 604800)],
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_maclaurin_frozen(name):
    want = FROZEN[name]
    assert list(maclaurin(name, len(want))) == want


R2 = SeriesRing(2, -2, 8, 6)


def rand_series(ring, nonneg=True):
    f = ring.field
    key = st.tuples(st.integers(0 if nonneg else ring.lo, 4), st.integers(0, 3))
    coeff = st.fractions(-4, 4, max_denominator=5).map(lambda c: f(Rational(c.numerator, c.denominator)))
    return st.dictionaries(key, coeff, max_size=5).map(
        lambda d: TruncSeries(ring, {(e, k): c for (e, k), c in d.items()}))


@given(rand_series(R2), rand_series(R2), rand_series(R2))
def test_ring_axioms(a, b, c):
    assert ((a + b) * c).agrees_with(a * c + b * c)
    assert (a * b).agrees_with(b * a)
    assert ((a * b) * c).agrees_with(a * (b * c))


@given(rand_series(R2))
def test_exp_log_inverse(a):
    nil = a - a.ring.const(a.coefficient(0, [0]))
    nil = TruncSeries(nil.ring, {k: v for k, v in nil.terms.items() if k[0] >= 1}, nil.lam_prec, nil.x_prec)
    assert nil.exp().log().agrees_with(nil)
    one_plus = nil + 1
    assert (one_plus * one_plus.inverse()).agrees_with(R2.one())


def test_sin_squared_plus_cos_squared():
    ring = SeriesRing(2, 0, 10, 10)
    arg = ring.lam() * ring.x(1) + ring.lam().scale(Q(1, 3))
    s, c = trig_oracle("sin", arg), trig_oracle("cos", arg)
    assert (s * s + c * c).agrees_with(ring.one())
    assert (trig_oracle("tan", arg) * c).agrees_with(s)


def test_csc_laurent():
    ring = SeriesRing(1, -2, 8, 0)
    csc = csc_monomial(ring, Q(1, 2))
    assert csc.coefficient(-1) .coefficient(0, ()) == 2
    assert csc.coefficient(1, ()) == Q(1, 12)
    s = trig_oracle("sin", ring.lam().scale(Q(1, 2)))
    assert (csc * s).agrees_with(ring.one(), 7, 0)


def test_precision_box_propagates():
    ring = SeriesRing(1, -2, 8, 0)
    csc = csc_monomial(ring, 1)
    assert csc.lam_prec == 8
    sq = csc * csc
    assert sq.lam_prec == 7  # valuation -1 on each factor costs one order
    with pytest.raises(WindowError):
        sq.agrees_with(sq, 8, 0)


def test_window_errors():
    ring = SeriesRing(2, -1, 4, 2)
    with pytest.raises(WindowError):
        ring.monomial(1, -2)
    with pytest.raises(WindowError):
        ring.lam().coefficient(5)
    with pytest.raises(ValueError):
        SeriesRing(2, 1, 4, 2)


def test_scale_vars_and_regrade():
    ring = SeriesRing(2, -2, 6, 4)
    f = ring.field
    i = root(f, 2)
    s = trig_oracle("cosh", ring.lam() * ring.x(1))
    # cosh(i t) = cos(t)
    assert s.scale_vars(i).agrees_with(trig_oracle("cos", ring.lam() * ring.x(1)))
    r = (ring.lam() * ring.x(1)).regrade_x_by_lambda()
    assert r.coefficient(0, [1]) == 1


def test_derivative():
    ring = SeriesRing(2, 0, 6, 6)
    s = trig_oracle("sin", ring.x(1))
    assert s.d_dx(1).agrees_with(trig_oracle("cos", ring.x(1)).with_prec(None, 5))


@given(rand_series(R2, nonneg=False))
def test_json_round_trip(a):
    b = TruncSeries.from_json(a.ring, a.to_json(), a.lam_prec, a.x_prec)
    assert b == a


def test_text_format():
    ring = SeriesRing(2, -2, 4, 2)
    i = root(field_new(2), 2)
    s = ring.monomial(i.scale(Q(-1, 2)), -1, [2]) + ring.const(3)
    assert str(s) == "(-1/2*z^2) * L^-1 * x1^2 + (3)"


def test_rationality():
    ring = SeriesRing(2, 0, 3, 1)
    assert (ring.lam() + 1).is_rational()
    assert not ring.const(root(ring.field, 1)).is_rational()
