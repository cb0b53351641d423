from math import factorial

import pytest
from hypothesis import given, strategies as st

from gerbe_vertex.chars import (
    WreathIrrep,
    char_table,
    class_size,
    enumerate_irreps,
    f_central,
    f_rho,
    f_tau0,
    identity_class,
    rho_class,
    sym_char,
    sym_char_frobenius,
    tau0_class,
    wreath_char,
    wreath_dim,
)
from gerbe_vertex.combinat import WeightedPartition, enumerate_weighted, negate, partitions, z_factor
from gerbe_vertex.exactnum import field_new

S4 = {
    # rows: shapes, columns: classes (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [-1, 0, -1, 1, 3],
    (2, 2): [0, -1, 2, 0, 2],
    (2, 1, 1): [1, 0, -1, -1, 3],
    (1, 1, 1, 1): [-1, 1, 1, -1, 1],
}


def test_s4_table():
    classes = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for shape, row in S4.items():
        assert [sym_char(shape, c) for c in classes] == row


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_border_strips_match_frobenius(n):
    for shape in partitions(n):
        for cls in partitions(n):
            assert sym_char(shape, cls) == sym_char_frobenius(shape, cls)


def test_b2_table():
    irreps = {str(x): x for x in enumerate_irreps(2, 2)}
    assert sorted(wreath_dim(x) for x in irreps.values()) == [1, 1, 1, 1, 2]
    two = irreps["((1), (1))"]
    vals = {str(c): wreath_char(two, c) for c in enumerate_weighted(2, 2)}
    assert vals == {"[(1,0),(1,0)]@2": 2, "[(1,0),(1,1)]@2": 0, "[(1,1),(1,1)]@2": -2,
                    "[(2,0)]@2": 0, "[(2,1)]@2": 0}
    triv = irreps["((2), ())"]
    assert all(wreath_char(triv, c) == 1 for c in enumerate_weighted(2, 2))


@pytest.mark.parametrize("d,m", [(d, m) for d in (1, 2, 3, 4) for m in (1, 2, 3)])
def test_group_order(d, m):
    irreps = enumerate_irreps(d, m)
    assert sum(wreath_dim(x) ** 2 for x in irreps) == m**d * factorial(d)
    assert len(irreps) == len(enumerate_weighted(d, m))


@pytest.mark.parametrize("d,m", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_row_orthogonality(d, m):
    irreps, classes, rows = char_table(d, m)
    order = m**d * factorial(d)
    f = field_new(m)
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            s = f.zero()
            for cls, x, y in zip(classes, a, b):
                s = s + x * y.conjugate() * class_size(cls)
            assert s == (order if i == j else 0)


@pytest.mark.parametrize("d,m", [(2, 2), (3, 3)])
def test_conjugate_is_negated_class(d, m):
    irreps, classes, rows = char_table(d, m)
    for row in rows:
        for j, cls in enumerate(classes):
            assert row[j].conjugate() == row[classes.index(negate(cls))]


@given(st.sampled_from([(d, m) for d in (2, 3) for m in (1, 2, 3)]), st.data())
def test_central_closed_forms(dm, data):
    d, m = dm
    xi = data.draw(st.sampled_from(enumerate_irreps(d, m)))
    assert f_central(xi, tau0_class(d, m)) == f_tau0(xi)
    for g in range(1, m):
        assert f_central(xi, rho_class(d, m, g)) == f_rho(xi, g)
    assert wreath_char(xi, identity_class(d, m)) == wreath_dim(xi)


def test_sign_mismatch_errors():
    with pytest.raises(ValueError):
        wreath_char(WreathIrrep(((1,), ())), WeightedPartition.parse("[(1,0)]@3"))
    with pytest.raises(ValueError):
        tau0_class(1, 2)
