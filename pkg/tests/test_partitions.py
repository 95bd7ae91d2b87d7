from math import factorial

import pytest
from hypothesis import given, strategies as st

from jm_expand.errors import InvalidInput, InvalidPart, NoSuchPart
from jm_expand.partitions import (
    Partition, WeakComposition, add_part, class_size, enumerate_partitions,
    format_partition, grouped_parts, parse_partition, partition_count,
    remove_part, strip_ones, z_index,
)

parts_lists = st.lists(st.integers(min_value=1, max_value=9), max_size=8)


def pentagonal_counts(limit):
    # Euler's recurrence p(n) = sum_k (-1)^(k+1) (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        k = 1
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            p[n] += sign * p[n - g1]
            if g2 <= n:
                p[n] += sign * p[n - g2]
            k += 1
    return p


@given(parts_lists)
def test_partition_sorted_and_hashable_as_tuple(parts):
    lam = Partition(parts)
    assert list(lam) == sorted(parts, reverse=True)
    assert hash(lam) == hash(tuple(lam))
    assert lam.size == sum(parts) and lam.length == len(parts)


@given(parts_lists, st.integers(min_value=1, max_value=9))
def test_add_then_remove_roundtrip(parts, v):
    lam = Partition(parts)
    assert remove_part(add_part(lam, v), v) == lam


@given(parts_lists)
def test_strip_ones_and_format_roundtrip(parts):
    lam = Partition(parts)
    bar, m1 = strip_ones(lam)
    assert 1 not in bar and m1 == parts.count(1)
    assert Partition((*bar, *[1] * m1)) == lam
    assert parse_partition(format_partition(lam)) == lam


def test_partition_counts_match_pentagonal_recurrence():
    expected = pentagonal_counts(20)
    assert [partition_count(n) for n in range(21)] == expected
    assert [len(enumerate_partitions(n)) for n in range(12)] == expected[:12]


def test_enumeration_is_decreasing_lex_and_distinct():
    for n in range(1, 10):
        ps = enumerate_partitions(n)
        assert ps == sorted(ps, reverse=True)
        assert len(set(ps)) == len(ps)
        assert all(p.size == n for p in ps)


def test_class_sizes_sum_to_group_order():
    for n in range(9):
        assert sum(class_size(lam) for lam in enumerate_partitions(n)) == factorial(n)
    assert z_index((2, 2, 1)) == 8


def test_grouped_parts_largest_first():
    assert grouped_parts(Partition((3, 1, 1, 2, 3))) == [(3, 2), (2, 1), (1, 2)]


def test_errors():
    with pytest.raises(NoSuchPart):
        remove_part(Partition((3, 1)), 2)
    with pytest.raises(InvalidPart):
        Partition((2, 0))
    with pytest.raises(InvalidPart):
        add_part(Partition((1,)), 0)
    with pytest.raises(InvalidInput):
        parse_partition("3,a")
    with pytest.raises(InvalidInput):
        WeakComposition((1, -1))
    with pytest.raises(InvalidInput):
        enumerate_partitions(-1)


def test_empty_partition_spelling():
    assert parse_partition("-") == Partition()
    assert format_partition(Partition()) == "-"
