"""Exhaustive partition enumeration and the counting tables built on it.

All counts are exact Python integers. Tables are computed one ``n`` at a
time, so they can be sharded across worker processes with ``workers > 1``.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Iterator

from kmeasure._parallel import map_by_n
from kmeasure.partition import Partition
from kmeasure.series import SeriesPoly, binomial, q_pochhammer
from kmeasure.statistics import (
    contains_km_polygon,
    durfee_polygon_order,
    durfee_side,
    k_measure,
)

KINDS = ("a", "b", "c", "d", "polygon-order", "by-length")
STATISTICS = ("k-measure", "polygon-order", "durfee")


def iter_parts(n: int) -> Iterator[tuple[int, ...]]:
    """Every partition of ``n`` as a tuple, in reverse-lexicographic order.

    Walks from ``(n,)`` to ``(1,)*n``: strip trailing ones, decrement the
    last part above one, and refill greedily with parts no larger than it.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        rem = ones + x + 1
        while rem >= x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    for parts in iter_parts(n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partition_numbers(n_max: int) -> tuple[int, ...]:
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return tuple(p)


def count_p(n: int) -> int:
    """p(n) from Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    return _partition_numbers(n)[n]


def max_order(k: int, n: int) -> int:
    """Largest m whose minimal gap-k chain (equivalently the (k,m)-polygon)
    fits in weight ``n``: ``m + k*m*(m-1)/2 <= n``."""
    m = 0
    while (m + 1) + k * (m + 1) * m // 2 <= n:
        m += 1
    return m


@dataclass
class CountTable:
    kind: str
    k: int | None
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)
    statistic: str | None = None

    @property
    def key_names(self) -> tuple[str, ...]:
        return ("n", "m", "l") if self.kind == "by-length" else ("n", "m")

    def get(self, *key: int) -> int:
        return self.entries.get(tuple(key), 0)

    def rows(self) -> list[tuple[int, ...]]:
        return [key + (self.entries[key],) for key in sorted(self.entries)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.key_names + ("count",))
        w.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> str:
        nested: dict = {}
        for key in sorted(self.entries):
            node = nested
            for part in key[:-1]:
                node = node.setdefault(str(part), {})
            node[str(key[-1])] = self.entries[key]
        doc = {"kind": self.kind, "k": self.k}
        if self.statistic is not None:
            doc["statistic"] = self.statistic
        doc["entries"] = nested
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_csv(cls, text: str, kind: str, k: int | None = None, statistic: str | None = None) -> CountTable:
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header[-1] != "count":
            raise ValueError(f"unexpected CSV header {header}")
        entries = {tuple(int(x) for x in row[:-1]): int(row[-1]) for row in reader if row}
        return cls(kind, k, entries, statistic)


# -- per-n workers (top level so they pickle) -----------------------------

def _statistic_fn(statistic: str, k: int):
    if statistic == "k-measure":
        return lambda parts: k_measure(parts, k)
    if statistic == "polygon-order":
        return lambda parts: durfee_polygon_order(parts, k)
    if statistic == "durfee":
        return durfee_side
    raise ValueError(f"unknown statistic {statistic!r}; expected one of {STATISTICS}")


def _histogram(statistic: str, k: int, n: int) -> dict[int, int]:
    fn = _statistic_fn(statistic, k)
    return dict(Counter(fn(parts) for parts in iter_parts(n)))


def _threshold_counts(kind: str, k: int, n: int) -> list[int]:
    top = max_order(k, n)
    counts = [0] * (top + 1)
    for parts in iter_parts(n):
        if kind == "c":
            mu = k_measure(parts, k)
            for m in range(min(mu, top) + 1):
                counts[m] += 1
        else:
            for m in range(top + 1):
                if contains_km_polygon(parts, k, m):
                    counts[m] += 1
    return counts


def _length_histogram(statistic: str, k: int, n: int) -> dict[tuple[int, int], int]:
    fn = _statistic_fn(statistic, k)
    return dict(Counter((fn(parts), len(parts)) for parts in iter_parts(n)))


def _exact_table(kind: str, statistic: str, k: int, n_max: int, workers: int) -> CountTable:
    ns = list(range(n_max + 1))
    hists = map_by_n(partial(_histogram, statistic, k), ns, workers)
    entries = {}
    for n, hist in zip(ns, hists):
        for m in range(max_order(k, n) + 1):
            entries[(n, m)] = hist.get(m, 0)
        stray = set(hist) - set(range(max_order(k, n) + 1))
        if stray:
            raise AssertionError(f"{statistic} exceeded its weight bound at n={n}: {sorted(stray)}")
    return CountTable(kind, k if kind != "b" else None, entries, statistic)


def table_a(k: int, n_max: int, workers: int = 1) -> CountTable:
    """(n, m) -> number of partitions of n with k-measure exactly m."""
    return _exact_table("a", "k-measure", k, n_max, workers)


def table_b_durfee(n_max: int, workers: int = 1) -> CountTable:
    """(n, m) -> number of partitions of n whose Durfee square has side m."""
    return _exact_table("b", "durfee", 2, n_max, workers)


def table_polygon_order(k: int, n_max: int, workers: int = 1) -> CountTable:
    """(n, m) -> number of partitions of n with a (k,m)-Durfee polygon."""
    return _exact_table("polygon-order", "polygon-order", k, n_max, workers)


def _threshold_table(kind: str, k: int, n_max: int, workers: int) -> CountTable:
    ns = list(range(n_max + 1))
    rows = map_by_n(partial(_threshold_counts, kind, k), ns, workers)
    entries = {(n, m): c for n, counts in zip(ns, rows) for m, c in enumerate(counts)}
    return CountTable(kind, k, entries)


def table_c(k: int, n_max: int, workers: int = 1) -> CountTable:
    """(n, m) -> number of partitions of n with some gap-k chain of length m."""
    return _threshold_table("c", k, n_max, workers)


def table_d(k: int, n_max: int, workers: int = 1) -> CountTable:
    """(n, m) -> number of partitions of n containing the (k,m)-polygon."""
    return _threshold_table("d", k, n_max, workers)


def table_by_length(k: int, n_max: int, statistic: str = "k-measure", workers: int = 1) -> CountTable:
    """(n, m, l) -> partitions of n with l parts and statistic value m.

    Only non-zero cells are stored.
    """
    ns = list(range(n_max + 1))
    hists = map_by_n(partial(_length_histogram, statistic, k), ns, workers)
    entries = {}
    for n, hist in zip(ns, hists):
        for (m, l), c in hist.items():
            entries[(n, m, l)] = c
    return CountTable("by-length", k, entries, statistic)


def _excess(n: int) -> int:
    total = 0
    for parts in iter_parts(n):
        if (len(parts) + k_measure(parts, 2)) % 2:
            total -= 1
        else:
            total += 1
    return total


def signed_excess(n_max: int, workers: int = 1) -> list[int]:
    """E(n) = sum over partitions of n of (-1)^(length + 2-measure)."""
    return map_by_n(_excess, list(range(n_max + 1)), workers)


def distinct_odd_count(n_max: int) -> list[int]:
    """Partitions into distinct odd parts, from prod_{i>=1} (1 + q^(2i-1))."""
    series = SeriesPoly.one(n_max)
    for part in range(1, n_max + 1, 2):
        series = series * binomial(part, +1, n_max)
    return list(series.coefficients)


def _distinct_odd_direct(n: int) -> int:
    count = 0
    for parts in iter_parts(n):
        if all(v % 2 for v in parts) and len(set(parts)) == len(parts):
            count += 1
    return count


def distinct_odd_enumerated(n_max: int, workers: int = 1) -> list[int]:
    """Same count as :func:`distinct_odd_count`, by filtering the enumerator."""
    return map_by_n(_distinct_odd_direct, list(range(n_max + 1)), workers)


def durfee_gf_oracle(m: int, n_max: int) -> list[int]:
    """Coefficients of q^(m^2) / (q;q)_m^2 up to q^n_max."""
    if m < 0:
        raise ValueError("m must be >= 0")
    denom = q_pochhammer(m, n_max) ** 2
    return list((SeriesPoly.monomial(m * m, n_max) * denom.reciprocal()).coefficients)
