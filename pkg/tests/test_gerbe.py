import pytest

from gerbe_vertex.closedforms import gerbe_c1
from gerbe_vertex.combinat import enumerate_weighted, negate, z_factor
from gerbe_vertex.exactnum import Rational
from gerbe_vertex.gerbe import gerbe_invariants, gerbe_terms
from gerbe_vertex.series import SeriesRing
from gerbe_vertex.vertex import frame, solve_initial


@pytest.fixture(scope="module")
def t2():
    return solve_initial(2, 2, SeriesRing(2, -4, 10, 8))


def test_c1_m1():
    t = solve_initial(1, 1, SeriesRing(1, -2, 9, 0))
    assert gerbe_invariants(t, 1).series.agrees_with(gerbe_c1(t.ring), 8, 0)


def test_c1_m2(t2):
    c1 = gerbe_invariants(t2, 1).series
    assert c1.agrees_with(gerbe_c1(t2.ring), 8, 8)
    # x = 0 slice: 1/(8 sin^2(lambda/2))
    assert c1.coefficient(-2, [0]) == Rational(1, 2)


def test_c2_rational(t2):
    c2 = gerbe_invariants(t2, 2).series
    assert c2.lam_prec >= 8 and c2.x_prec >= 8
    assert c2.is_rational()
    # frozen leading terms
    assert c2.coefficient(-4, [0]) == Rational(1, 8)
    assert c2.coefficient(-2, [2]) == Rational(1, 16)


def test_only_even_lambda(t2):
    for d in (1, 2):
        s = gerbe_invariants(t2, d).series
        assert all((k[0] - k[1]) % 2 == 0 for k in s.terms), "lambda^(-chi) with chi even, after removing x*lambda"


def test_terms_pair_up(t2):
    terms = gerbe_terms(t2, 2)
    for mu, s in terms.items():
        assert s.agrees_with(terms[negate(mu)], 8, 8)


def test_coefficient_level_sum(t2):
    # recompute selected coefficients straight from the table entries
    d = 2
    total = gerbe_invariants(t2, d).series
    f = t2.ring.field
    for e, k in [(-4, 0), (-2, 2), (0, 2), (2, 4)]:
        acc = f.zero()
        for mu in enumerate_weighted(d, 2):
            a, b = t2[mu], t2[negate(mu)]
            sign = -1 if (d - mu.n_trivial) % 2 else 1
            for (e1, k1), c1 in a.terms.items():
                c2 = b.terms.get((e - e1, k - k1))
                if c2 is not None:
                    acc = acc + c1 * c2 * (sign * z_factor(mu))
        assert total.coefficient(e, [k]) == acc


def test_needs_framing_zero(t2):
    with pytest.raises(ValueError):
        gerbe_invariants(frame(t2, 1), 1)
    with pytest.raises(ValueError):
        gerbe_invariants(t2, 3)
