import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmeasure.partition import (
    Partition,
    PartitionError,
    format_partition,
    make_partition,
    parse_partition,
    replace_parts,
    subsequence_values,
)

from conftest import brute_partitions


def test_make_partition_sorts_paper_example():
    p = make_partition([1, 9, 4, 9, 8, 3, 7])
    assert p.parts == (9, 9, 8, 7, 4, 3, 1)
    assert p.weight == 41
    assert p.length == 7


def test_empty_and_single():
    assert make_partition([]) == Partition()
    assert make_partition([]).weight == 0 and make_partition([]).length == 0
    p = make_partition([5])
    assert (p.parts, p.weight, p.length) == ((5,), 5, 1)


@pytest.mark.parametrize("bad", [[0], [3, -1], [2, 0, 1]])
def test_rejects_nonpositive(bad):
    with pytest.raises(PartitionError):
        make_partition(bad)


def test_rejects_non_integers():
    with pytest.raises(PartitionError):
        make_partition([2.5])


@pytest.mark.parametrize(
    "parts, idx, expected",
    [
        ((9, 9, 8, 7, 4, 3, 1), (0, 4, 6), (9, 4, 1)),
        ((5,), (0,), (5,)),
        ((9, 7, 5, 3, 1), (0, 1, 2, 3, 4), (9, 7, 5, 3, 1)),
    ],
)
def test_subsequence_values(parts, idx, expected):
    assert subsequence_values(Partition(parts), idx) == expected


@pytest.mark.parametrize("idx", [(7,), (-1,), (2, 1), (1, 1)])
def test_subsequence_values_bad_indices(idx):
    with pytest.raises(PartitionError):
        subsequence_values(Partition((9, 9, 8)), idx)


@pytest.mark.parametrize(
    "parts, idx, new, expected",
    [
        ((9, 7, 5, 3, 1), (0, 1, 2, 3, 4), (5, 5, 5, 5, 5), (5, 5, 5, 5, 5)),
        ((5, 5, 1), (0, 2), (4, 2), (5, 4, 2)),
        ((3,), (), (), (3,)),
    ],
)
def test_replace_parts(parts, idx, new, expected):
    assert replace_parts(Partition(parts), idx, new).parts == expected


def test_replace_parts_rejects_zero_and_mismatch():
    with pytest.raises(PartitionError):
        replace_parts(Partition((3, 1)), (1,), (0,))
    with pytest.raises(PartitionError):
        replace_parts(Partition((3, 1)), (0, 1), (2,))


@given(st.lists(st.integers(1, 20), max_size=12), st.data())
def test_replace_parts_weight_and_length(values, data):
    p = make_partition(values)
    idx = sorted(data.draw(st.sets(st.integers(0, max(len(p) - 1, 0)), max_size=len(p))) if p.parts else [])
    new = data.draw(st.lists(st.integers(1, 20), min_size=len(idx), max_size=len(idx)))
    q = replace_parts(p, idx, new)
    assert q.length == p.length
    assert q.weight == p.weight - sum(p.parts[i] for i in idx) + sum(new)
    assert list(q.parts) == sorted(q.parts, reverse=True)


@given(st.lists(st.integers(1, 50), max_size=15))
def test_make_partition_idempotent(values):
    p = make_partition(values)
    assert make_partition(p.parts) == p


def test_round_trip_canonicalization_small_n():
    for n in range(0, 31):
        for parts in brute_partitions(n):
            assert make_partition(parts).parts == parts


@pytest.mark.parametrize(
    "text, parts",
    [
        ("9,9,8,7,4,3,1", (9, 9, 8, 7, 4, 3, 1)),
        ("9+9+8+7+4+3+1", (9, 9, 8, 7, 4, 3, 1)),
        ("1, 3 ,2", (3, 2, 1)),
        ("", ()),
        ("  ", ()),
    ],
)
def test_parse_partition(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text", ["a,b", "3,0", "2,-1", "1.5"])
def test_parse_partition_errors(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


def test_format_partition():
    assert format_partition(make_partition([1, 9, 4])) == "9,4,1"
    assert format_partition(Partition()) == ""
    assert str(Partition((3, 1))) == "3,1"
