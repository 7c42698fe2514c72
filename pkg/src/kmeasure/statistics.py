"""Partition statistics: k-measure, Durfee square, (k,m)-polygons.

Every function accepts a :class:`~kmeasure.partition.Partition` or any
non-increasing sequence of positive integers; the tuple form is what the
enumeration loops pass around.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from kmeasure.partition import Partition

PartsLike = Partition | Sequence[int]


def _parts(p: PartsLike) -> Sequence[int]:
    return p.parts if isinstance(p, Partition) else p


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"gap parameter k must be >= 1, got {k}")


def k_measure(p: PartsLike, k: int) -> int:
    """Longest run of parts whose consecutive members differ by at least ``k``.

    Greedy: take the largest part, then each next part that sits at least
    ``k`` below the last one taken.
    """
    _check_k(k)
    count = 0
    last = None
    for v in _parts(p):
        if last is None or v <= last - k:
            count += 1
            last = v
    return count


def k_measure_oracle(p: PartsLike, k: int) -> int:
    """Longest gap-``k`` chain by quadratic dynamic programming."""
    _check_k(k)
    parts = _parts(p)
    best_ending = []
    for i, v in enumerate(parts):
        best = 1
        for j in range(i):
            if parts[j] - v >= k and best_ending[j] + 1 > best:
                best = best_ending[j] + 1
        best_ending.append(best)
    return max(best_ending, default=0)


def durfee_side(p: PartsLike) -> int:
    """Largest ``m`` with ``parts[m-1] >= m``."""
    m = 0
    for v in _parts(p):
        if v < m + 1:
            break
        m += 1
    return m


def polygon_thresholds(k: int, m: int) -> tuple[int, int]:
    """Return ``(upper, lower)``: the first ``m // 2`` rows have ``upper``
    nodes and the remaining ``ceil(m/2)`` rows have ``lower`` nodes."""
    _check_k(k)
    if m < 0:
        raise ValueError(f"order m must be >= 0, got {m}")
    span = k * (m - 1)
    return 1 + -(-span // 2), 1 + span // 2


@dataclass(frozen=True)
class PolygonShape:
    k: int
    m: int
    row_lengths: tuple[int, ...]

    @property
    def nodes(self) -> int:
        return sum(self.row_lengths)

    @property
    def is_rectangle(self) -> bool:
        return len(set(self.row_lengths)) <= 1

    def to_json(self) -> str:
        return json.dumps(list(self.row_lengths))


def km_polygon_shape(k: int, m: int) -> PolygonShape:
    """Row profile of the (k,m)-polygon.

    >>> km_polygon_shape(3, 4).row_lengths
    (6, 6, 5, 5)
    """
    if m == 0:
        _check_k(k)
        return PolygonShape(k, 0, ())
    upper, lower = polygon_thresholds(k, m)
    half = m // 2
    return PolygonShape(k, m, (upper,) * half + (lower,) * (m - half))


def contains_km_polygon(p: PartsLike, k: int, m: int) -> bool:
    """True when ``p`` has ``m // 2`` parts >= the upper threshold and a
    further ``ceil(m/2)`` parts >= the lower threshold."""
    if m == 0:
        _check_k(k)
        return True
    parts = _parts(p)
    if len(parts) < m:
        return False
    upper, lower = polygon_thresholds(k, m)
    # upper >= lower, so the largest parts are the best witnesses
    half = m // 2
    n_upper = sum(1 for v in parts if v >= upper)
    n_lower = sum(1 for v in parts if v >= lower)
    return n_upper >= half and n_lower - half >= m - half


def fits_shape(p: PartsLike, shape: PolygonShape) -> bool:
    """Row-by-row containment of ``shape`` in the Ferrers diagram of ``p``."""
    parts = _parts(p)
    if len(parts) < len(shape.row_lengths):
        return False
    return all(v >= w for v, w in zip(parts, shape.row_lengths))


def durfee_polygon_order(p: PartsLike, k: int) -> int:
    _check_k(k)
    parts = _parts(p)
    m = 0
    while contains_km_polygon(parts, k, m + 1):
        m += 1
    return m


def distinct_values(p: PartsLike) -> int:
    return len(set(_parts(p)))
