from math import factorial

import pytest
from hypothesis import given, strategies as st

from gerbe_vertex.chars import class_size
from gerbe_vertex.combinat import (
    WeightedPartition,
    aut_order,
    canonicalize,
    concat,
    enumerate_weighted,
    kappa,
    negate,
    partition_dim,
    partitions,
    split_trivial,
    sub_multisets,
    twist,
    z_factor,
)

pairs = st.lists(st.tuples(st.integers(1, 4), st.integers(-6, 6)), min_size=0, max_size=5)
ms = st.integers(1, 4)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 10)] == [1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))


def test_class_counts():
    # number of m-tuples of partitions of d
    assert [len(enumerate_weighted(d, 2)) for d in (1, 2, 3, 4)] == [2, 5, 10, 20]
    assert [len(enumerate_weighted(d, 3)) for d in (1, 2, 3)] == [3, 9, 22]


@pytest.mark.parametrize("d,m", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 1)])
def test_class_sizes_sum_to_order(d, m):
    assert sum(class_size(c) for c in enumerate_weighted(d, m)) == m**d * factorial(d)


def test_z_factor_examples():
    wp = WeightedPartition.parse("[(1,1),(1,1)]@2")
    assert aut_order(wp) == 2 and z_factor(wp) == 8
    assert z_factor(WeightedPartition.parse("[(2,0)]@2")) == 4


def test_hook_dims():
    assert [partition_dim(p) for p in partitions(4)] == [1, 3, 2, 3, 1]
    assert partition_dim((3, 2)) == 5
    assert kappa((2,)) == 2 and kappa((1, 1)) == -2


@given(pairs, ms)
def test_canonical_idempotent(ps, m):
    a = canonicalize(ps, m)
    assert canonicalize(a.pairs, m) == a
    assert canonicalize(list(reversed(ps)), m) == a


@given(pairs, ms)
def test_negate_involution(ps, m):
    a = canonicalize(ps, m)
    assert negate(negate(a)) == a
    assert z_factor(negate(a)) == z_factor(a)


@given(pairs, ms, st.integers(0, 5))
def test_twist_is_involution(ps, m, s):
    a = canonicalize(ps, m)
    assert twist(twist(a, s), s) == a
    assert z_factor(twist(a, s)) == z_factor(a)


@given(pairs, ms)
def test_parse_round_trip(ps, m):
    a = canonicalize(ps, m)
    assert WeightedPartition.parse(str(a)) == a


@given(pairs, ms)
def test_split_and_concat(ps, m):
    a = canonicalize(ps, m)
    triv, nontriv = split_trivial(a)
    assert all(k == 0 for k in triv.monodromies)
    assert all(k != 0 for k in nontriv.monodromies)
    assert concat(triv, nontriv) == a


def test_sub_multisets():
    a = WeightedPartition.parse("[(1,0),(1,0),(2,1)]@2")
    subs = sub_multisets(a)
    # nonempty choices of 0..2 copies of (1,0) and 0..1 of (2,1)
    assert len(subs) == 5 and all(not s.is_empty() for s in subs)


def test_parse_errors():
    with pytest.raises(ValueError):
        WeightedPartition.parse("[(1,0)]")
    with pytest.raises(ValueError):
        WeightedPartition.parse("[(1,0)]@2", 3)
    with pytest.raises(ValueError):
        canonicalize([(0, 1)], 2)
