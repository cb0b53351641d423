import pytest

from gerbe_vertex.closedforms import deg1_vertices
from gerbe_vertex.combinat import WeightedPartition, concat, enumerate_weighted, negate, split_trivial, z_factor
from gerbe_vertex.exactnum import Rational, field_new, root
from gerbe_vertex.hurwitz import phi_series
from gerbe_vertex.series import SeriesRing, WindowError, csc_monomial
from gerbe_vertex.vertex import (
    SolverError,
    build_key_equation,
    connected,
    frame,
    s_of_eta,
    solve_initial,
    key_equation_rows,
    trivial_vertex,
    x_tilde,
)

Q = Rational


def wp(text, m=2):
    return WeightedPartition.parse(text, m)


@pytest.mark.parametrize("eta,m,s", [("[(1,1)]", 2, 1), ("[(1,1)]", 3, 1), ("[(1,2)]", 3, 2),
                                     ("[(3,1)]", 3, 1), ("[(3,2)]", 3, 2), ("[(2,1)]", 2, 1)])
def test_framing_index(eta, m, s):
    assert s_of_eta(wp(eta, m)) == s


def test_framing_index_rejects_trivial():
    with pytest.raises(ValueError):
        s_of_eta(wp("[(1,0)]"))


@pytest.mark.parametrize("d,m", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_rows_have_one_trivial_part(d, m):
    rows = key_equation_rows(d, m)
    assert len(rows) == sum(1 for e in enumerate_weighted(d, m) if e.n_trivial == 0)
    for eta, mu, s in rows:
        assert mu.n_trivial >= 1
        assert 1 <= s <= m - 1


def test_x_tilde_m2():
    assert x_tilde(2) == [field_new(2).one()]


def test_trivial_closed_forms_m1():
    ring = SeriesRing(1, -2, 6, 0)
    i = root(field_new(1), 1)
    g1 = trivial_vertex(1, wp("[(1,0)]", 1), ring)
    assert g1.agrees_with(csc_monomial(ring, Q(1, 2)).scale(Q(1, 2)), 6, 0)
    g2 = trivial_vertex(1, wp("[(2,0)]", 1), ring)
    assert g2.agrees_with(csc_monomial(ring, 1).scale(i * Q(1, 4)), 6, 0)
    g11 = trivial_vertex(1, wp("[(1,0),(1,0)]", 1), ring)
    h = csc_monomial(ring.widen(lam=2), Q(1, 2))
    assert g11.agrees_with((h * h).scale(Q(1, 8)).to_ring(ring), 6, 0)


def test_m1_degeneration():
    ring = SeriesRing(1, -3, 6, 0)
    table = solve_initial(1, 3, ring)
    for mu in table.keys():
        assert table[mu].agrees_with(trivial_vertex(1, mu, ring), 6, 0)


@pytest.fixture(scope="module")
def table22():
    return solve_initial(2, 2, SeriesRing(2, -4, 10, 8))


def test_degree_one_entries(table22):
    for key, want in deg1_vertices(table22.ring).items():
        assert table22[wp(key)].agrees_with(want, 8, 8)


def test_degree_two_frozen(table22):
    # independent expansion of the closed form for G_(2,1), frozen
    g = table22[wp("[(2,1)]")]
    want = {(0, 1): Q(-3, 32), (2, 1): Q(-3, 128), (2, 3): Q(-1, 64),
            (4, 1): Q(-17, 3840), (4, 3): Q(-11, 1536), (4, 5): Q(-7, 2560)}
    for (e, k), c in want.items():
        assert g.coefficient(e, [k]) == c
    assert g.coefficient(1, [1]) == 0


def test_product_rule(table22):
    for mu in table22.keys():
        triv, nontriv = split_trivial(mu)
        if triv.is_empty() or nontriv.is_empty():
            continue
        assert table22[mu].agrees_with(table22[triv] * table22[nontriv], 8, 8)
        assert concat(triv, nontriv) == mu


def test_empty_key_is_one(table22):
    assert table22[WeightedPartition((), 2)] == table22.ring.one()


def test_connected_single_part(table22):
    assert connected(table22, wp("[(2,1)]")) == table22[wp("[(2,1)]")]


@pytest.mark.parametrize("m,d", [(2, 3), (3, 2)])
def test_all_key_equations_vanish(m, d):
    w = 5
    table = solve_initial(m, d, SeriesRing(m, -d - 2, w + d, w))
    for k in range(1, d + 1):
        for mu in enumerate_weighted(k, m):
            if mu.n_trivial:
                for s in range(1, m):
                    r = build_key_equation(m, mu, s, table)
                    assert r.agrees_with(table.ring.zero(), w, w)


def test_window_must_reach_poles():
    with pytest.raises(WindowError):
        solve_initial(2, 2, SeriesRing(2, -1, 6, 4))


def test_headroom_cap():
    with pytest.raises(SolverError):
        solve_initial(2, 3, SeriesRing(2, -5, 9, 6), max_headroom=1)


def test_frame_at_zero_is_identity(table22):
    f0 = frame(table22, 0)
    for mu in table22.keys():
        assert f0[mu].agrees_with(table22[mu], 8, 8)


def test_frame_rejects_bad_tau(table22):
    with pytest.raises(ValueError):
        frame(table22, Q(1, 3))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_constant_term_identity(m):
    ring = SeriesRing(m, 0, 2, 2)
    f = field_new(m)
    c = root(f, m) * Q(1, m)
    for d in (1, 2):
        cl = enumerate_weighted(d, m)
        for mu in cl:
            for nu in cl:
                s = phi_series(m, negate(nu), mu, ring).scale_vars(c, x_tilde(m)).scale(z_factor(nu))
                assert s.coefficient(0, [0] * (m - 1)) == (1 if mu == nu else 0)
