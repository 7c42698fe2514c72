"""Brute-force oracles shared by the tests.

Nothing here imports the package's enumeration or statistics code, so the
oracles stay independent of the paths they check.
"""

from itertools import combinations

import pytest


def brute_partitions(n, largest=None):
    """Recursive enumeration (a different algorithm from the package's)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - first, first):
            yield (first,) + rest


def brute_k_measure(parts, k):
    """Longest gap-k subsequence by trying every subset, largest first."""
    for r in range(len(parts), 0, -1):
        for combo in combinations(parts, r):
            if all(combo[i] - combo[i + 1] >= k for i in range(r - 1)):
                return r
    return 0


def brute_durfee(parts):
    """Largest square of nodes in the Ferrers diagram, cell by cell."""
    side = 0
    while all(len(parts) > i and parts[i] > side for i in range(side + 1)):
        side += 1
    return side


def brute_c(n, k, m):
    return sum(1 for p in brute_partitions(n) if brute_k_measure(p, k) >= m)


def brute_d(n, k, m):
    """Thresholds written from the statement: floor(m/2) parts >= 1 + ceil(k(m-1)/2),
    plus ceil(m/2) further parts >= 1 + floor(k(m-1)/2)."""
    import math

    hi = 1 + math.ceil(k * (m - 1) / 2)
    lo = 1 + math.floor(k * (m - 1) / 2)
    count = 0
    for p in brute_partitions(n):
        best = None
        for top in combinations(range(len(p)), m // 2):
            if all(p[i] >= hi for i in top):
                rest = [v for i, v in enumerate(p) if i not in top]
                if sum(1 for v in rest if v >= lo) >= m - m // 2:
                    best = True
                    break
        count += bool(best)
    return count


@pytest.fixture(scope="session")
def paper_partition():
    return (9, 9, 8, 7, 4, 3, 1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
