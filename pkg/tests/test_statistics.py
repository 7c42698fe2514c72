import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmeasure.partition import Partition, make_partition
from kmeasure.statistics import (
    contains_km_polygon,
    distinct_values,
    durfee_polygon_order,
    durfee_side,
    fits_shape,
    k_measure,
    k_measure_oracle,
    km_polygon_shape,
    polygon_thresholds,
)

from conftest import brute_durfee, brute_k_measure, brute_partitions

partitions_st = st.lists(st.integers(1, 30), max_size=14).map(lambda v: tuple(sorted(v, reverse=True)))


@pytest.mark.parametrize(
    "parts, k, expected",
    [
        ((4, 1), 2, 2),
        ((3, 2), 2, 1),
        ((9, 9, 8, 7, 4, 3, 1), 3, 3),
        ((), 1, 0),
        ((), 4, 0),
    ],
)
def test_k_measure_examples(parts, k, expected):
    assert brute_k_measure(parts, k) == expected
    assert k_measure(Partition(parts), k) == expected


@pytest.mark.parametrize(
    "parts, k, expected",
    [((9, 7, 5, 3, 1), 2, 5), ((5, 5, 5), 2, 1), ((10, 7, 4, 1), 3, 4)],
)
def test_oracle_examples(parts, k, expected):
    assert k_measure_oracle(Partition(parts), k) == expected
    assert k_measure(parts, k) == expected


def test_k_zero_rejected():
    with pytest.raises(ValueError):
        k_measure((3, 1), 0)
    with pytest.raises(ValueError):
        k_measure_oracle((3, 1), 0)


def test_greedy_matches_subset_search_small_n():
    for n in range(13):
        for p in brute_partitions(n):
            for k in range(1, 6):
                assert k_measure(p, k) == brute_k_measure(p, k), (p, k)


def test_greedy_matches_dp_n20():
    for n in range(21):
        for p in brute_partitions(n):
            for k in range(1, 6):
                assert k_measure(p, k) == k_measure_oracle(p, k)


@given(partitions_st, st.integers(1, 8))
def test_greedy_matches_dp_random(parts, k):
    assert k_measure(parts, k) == k_measure_oracle(parts, k)


@given(partitions_st)
def test_measure_monotone_in_k_and_k1_counts_distinct(parts):
    values = [k_measure(parts, k) for k in range(1, 9)]
    assert values == sorted(values, reverse=True)
    assert k_measure(parts, 1) == distinct_values(parts) == len(set(parts))


@pytest.mark.parametrize("parts, side", [((9, 9, 8, 7, 4, 3, 1), 4), ((5,), 1), ((), 0), ((1, 1, 1), 1), ((3, 3, 3), 3)])
def test_durfee_side(parts, side):
    assert brute_durfee(parts) == side
    assert durfee_side(parts) == side


def test_durfee_matches_geometric_definition():
    for n in range(20):
        for p in brute_partitions(n):
            assert durfee_side(p) == brute_durfee(p)


@pytest.mark.parametrize(
    "k, m, rows",
    [
        (4, 3, (5, 5, 5)),
        (3, 4, (6, 6, 5, 5)),
        (2, 4, (4, 4, 4, 4)),
        (1, 2, (2, 1)),
        (1, 6, (4, 4, 4, 3, 3, 3)),
        (1, 7, (4,) * 7),
        (5, 1, (1,)),
        (3, 0, ()),
    ],
)
def test_polygon_shape(k, m, rows):
    shape = km_polygon_shape(k, m)
    assert shape.row_lengths == rows
    assert (shape.k, shape.m) == (k, m)


def test_polygon_shape_json():
    assert km_polygon_shape(3, 4).to_json() == "[6, 6, 5, 5]"
    assert km_polygon_shape(3, 0).to_json() == "[]"


@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("m", range(0, 15))
def test_polygon_shape_invariants(k, m):
    rows = km_polygon_shape(k, m).row_lengths
    assert len(rows) == m
    assert list(rows) == sorted(rows, reverse=True)
    # same node count as the minimal gap-k chain 1 + k(m-i), i = 1..m
    assert sum(rows) == sum(1 + k * (m - i) for i in range(1, m + 1)) == m + k * m * (m - 1) // 2
    if (k * (m - 1)) % 2 == 0:
        assert set(rows) <= {1 + k * (m - 1) // 2}
    else:
        assert rows[: m // 2] == ((k * (m - 1) + 3) // 2,) * (m // 2)
        assert rows[m // 2:] == ((k * (m - 1) + 1) // 2,) * (m // 2)


@pytest.mark.parametrize("m", range(0, 12))
def test_square_node_count(m):
    assert km_polygon_shape(2, m).nodes == m * m
    assert km_polygon_shape(2, m).is_rectangle


def test_polygon_thresholds():
    assert polygon_thresholds(3, 4) == (6, 5)
    assert polygon_thresholds(2, 5) == (5, 5)
    assert polygon_thresholds(1, 6) == (4, 3)


def test_contains_paper_examples(paper_partition):
    assert contains_km_polygon(paper_partition, 3, 4)
    assert not contains_km_polygon(paper_partition, 3, 5)
    assert contains_km_polygon(paper_partition, 4, 3)
    for k in range(1, 5):
        assert contains_km_polygon(paper_partition, k, 0)
    assert contains_km_polygon((), 1, 0)


def test_contains_huge_m_is_false():
    assert not contains_km_polygon((9, 9, 8), 1, 100)


def test_containment_monotone_and_threshold_equals_rowwise():
    for n in range(31):
        for p in brute_partitions(n):
            for k in range(1, 6):
                prev = True
                for m in range(0, min(n, len(p) + 1) + 1):
                    now = contains_km_polygon(p, k, m)
                    assert now == fits_shape(p, km_polygon_shape(k, m)), (p, k, m)
                    assert prev or not now, (p, k, m)
                    prev = now
                # beyond the number of parts both forms are false
                m = len(p) + 2
                assert not contains_km_polygon(p, k, m) and not fits_shape(p, km_polygon_shape(k, m))


@pytest.mark.parametrize(
    "parts, k, order",
    [((9, 9, 8, 7, 4, 3, 1), 2, 4), ((9, 9, 8, 7, 4, 3, 1), 3, 4), ((), 1, 0), ((5,), 2, 1), ((9, 9, 8, 7, 4, 3, 1), 4, 4)],
)
def test_durfee_polygon_order_examples(parts, k, order):
    assert durfee_polygon_order(parts, k) == order


def test_order_k2_equals_durfee_side():
    for n in range(26):
        for p in brute_partitions(n):
            assert durfee_polygon_order(p, 2) == durfee_side(p)


@given(partitions_st, st.integers(1, 6))
def test_order_is_largest_contained(parts, k):
    order = durfee_polygon_order(parts, k)
    assert contains_km_polygon(parts, k, order)
    assert not contains_km_polygon(parts, k, order + 1)


def test_accepts_partition_objects():
    p = make_partition([4, 1])
    assert k_measure(p, 2) == 2
    assert durfee_side(p) == 1
    assert durfee_polygon_order(p, 2) == 1
