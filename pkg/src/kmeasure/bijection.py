"""The balancing maps between gap-k chains and (k,m)-polygon fillings.

``phi`` picks ``m`` parts forming a gap-``k`` chain and shifts them by the
zero-sum :func:`offset_vector`, pulling the chain toward its average.
``psi`` picks ``m`` parts meeting the polygon thresholds and applies the
negated offsets. Which parts get picked is not determined by the maps
themselves, so every entry point takes an explicit :class:`Strategy`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

from kmeasure.partition import Partition, _replace
from kmeasure.statistics import (
    PartsLike,
    _parts,
    contains_km_polygon,
    k_measure,
    polygon_thresholds,
)


class Strategy(str, enum.Enum):
    GREEDY_TOP = "greedy-top"
    GREEDY_BOTTOM = "greedy-bottom"
    MIN_INDEX_LEX = "min-index-lex"
    MAX_INDEX_LEX = "max-index-lex"

    def __str__(self) -> str:
        return self.value


STRATEGIES: tuple[Strategy, ...] = tuple(Strategy)


class MembershipError(ValueError):
    """The partition is outside the domain of the requested map."""


@dataclass(frozen=True)
class OffsetVector:
    k: int
    m: int
    deltas: tuple[int, ...]

    def negated(self) -> tuple[int, ...]:
        return tuple(-d for d in self.deltas)


def offset_vector(k: int, m: int) -> OffsetVector:
    """Signed shifts applied by ``phi`` to the chosen chain, top to bottom.

    >>> offset_vector(3, 4).deltas
    (-4, -1, 1, 4)
    """
    if k < 1 or m < 0:
        raise ValueError(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    return OffsetVector(k, m, _deltas(k, m))


def _deltas(k: int, m: int) -> tuple[int, ...]:
    half = m // 2
    out = []
    for j in range(1, m + 1):
        if j <= half:
            out.append(-((k * (m + 1 - 2 * j)) // 2))
        else:
            out.append((k * (2 * j - m - 1)) // 2)
    return tuple(out)


# -- selection -----------------------------------------------------------

def _chain_suffix(parts: Sequence[int], k: int) -> list[int]:
    # longest gap-k chain starting at each index
    n = len(parts)
    best = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if parts[i] - parts[j] >= k and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return best


def _forward_greedy_top(parts: Sequence[int], k: int, m: int) -> list[int]:
    chosen: list[int] = []
    last = None
    for i, v in enumerate(parts):
        if len(chosen) == m:
            break
        if last is None or v <= last - k:
            chosen.append(i)
            last = v
    return chosen


def _forward_greedy_bottom(parts: Sequence[int], k: int, m: int) -> list[int]:
    chosen: list[int] = []
    last = None
    for i in range(len(parts) - 1, -1, -1):
        if len(chosen) == m:
            break
        v = parts[i]
        if last is None or v >= last + k:
            chosen.append(i)
            last = v
    chosen.reverse()
    return chosen


def _forward_lex(parts: Sequence[int], k: int, m: int, largest: bool) -> list[int]:
    suffix = _chain_suffix(parts, k)
    n = len(parts)
    chosen: list[int] = []
    start = 0
    for slot in range(m):
        need = m - slot
        order = range(n - 1, start - 1, -1) if largest else range(start, n)
        for i in order:
            if suffix[i] < need:
                continue
            if chosen and parts[chosen[-1]] - parts[i] < k:
                continue
            chosen.append(i)
            start = i + 1
            break
    return chosen


def _inverse_slots(k: int, m: int) -> tuple[int, int, int]:
    upper, lower = polygon_thresholds(k, m)
    return upper, lower, m // 2


def _inverse_greedy_top(parts: Sequence[int], k: int, m: int) -> list[int]:
    return list(range(m))


def _inverse_greedy_bottom(parts: Sequence[int], k: int, m: int) -> list[int]:
    upper, lower, half = _inverse_slots(k, m)
    n_lower = sum(1 for v in parts if v >= lower)
    n_upper = sum(1 for v in parts if v >= upper)
    low_start = n_lower - (m - half)
    top = min(n_upper, low_start)
    return list(range(top - half, top)) + list(range(low_start, n_lower))


def _inverse_lex(parts: Sequence[int], k: int, m: int, largest: bool) -> list[int]:
    upper, lower, half = _inverse_slots(k, m)
    need = [upper] * half + [lower] * (m - half)
    n = len(parts)

    def completable(start: int, slot: int) -> bool:
        i = start
        for t in need[slot:]:
            while i < n and parts[i] < t:
                i += 1
            if i == n:
                return False
            i += 1
        return True

    chosen: list[int] = []
    start = 0
    for slot in range(m):
        order = range(n - 1, start - 1, -1) if largest else range(start, n)
        for i in order:
            if parts[i] >= need[slot] and completable(i + 1, slot + 1):
                chosen.append(i)
                start = i + 1
                break
    return chosen


_Selector = Callable[[Sequence[int], int, int], list]

_FORWARD: dict[Strategy, _Selector] = {
    Strategy.GREEDY_TOP: _forward_greedy_top,
    Strategy.GREEDY_BOTTOM: _forward_greedy_bottom,
    Strategy.MIN_INDEX_LEX: lambda p, k, m: _forward_lex(p, k, m, largest=False),
    Strategy.MAX_INDEX_LEX: lambda p, k, m: _forward_lex(p, k, m, largest=True),
}

_INVERSE: dict[Strategy, _Selector] = {
    Strategy.GREEDY_TOP: _inverse_greedy_top,
    Strategy.GREEDY_BOTTOM: _inverse_greedy_bottom,
    Strategy.MIN_INDEX_LEX: lambda p, k, m: _inverse_lex(p, k, m, largest=False),
    Strategy.MAX_INDEX_LEX: lambda p, k, m: _inverse_lex(p, k, m, largest=True),
}


def _require_chain(parts: Sequence[int], k: int, m: int) -> None:
    mu = k_measure(parts, k)
    if mu < m:
        raise MembershipError(f"k-measure mu_{k} = {mu} < m = {m}: no gap-{k} chain of length {m}")


def _require_polygon(parts: Sequence[int], k: int, m: int) -> None:
    if not contains_km_polygon(parts, k, m):
        upper, lower = polygon_thresholds(k, m)
        half = m // 2
        if half and upper != lower:
            rule = f"{half} part(s) >= {upper} and a further {m - half} part(s) >= {lower}"
        else:
            rule = f"{m} part(s) >= {lower}"
        raise MembershipError(f"partition lacks the ({k},{m})-polygon: needs {rule}")


def select_forward(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> tuple[int, ...]:
    """Indices of ``m`` parts forming a gap-``k`` chain, chosen by ``strategy``."""
    parts = _parts(p)
    _require_chain(parts, k, m)
    return tuple(_FORWARD[Strategy(strategy)](parts, k, m))


def select_inverse(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> tuple[int, ...]:
    """Indices of ``m`` parts meeting the (k,m)-polygon thresholds, chosen by ``strategy``."""
    parts = _parts(p)
    _require_polygon(parts, k, m)
    return tuple(_INVERSE[Strategy(strategy)](parts, k, m))


# -- maps ----------------------------------------------------------------

@dataclass(frozen=True)
class MapTrace:
    source: Partition
    indices: tuple[int, ...]
    selected: tuple[int, ...]
    offsets: tuple[int, ...]
    image: Partition


def phi_trace(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> MapTrace:
    parts = tuple(_parts(p))
    if m == 0:
        _require_chain(parts, k, 0)
        return MapTrace(Partition(parts), (), (), (), Partition(parts))
    idx = select_forward(parts, k, m, strategy)
    deltas = _deltas(k, m)
    selected = tuple(parts[i] for i in idx)
    image = _replace(parts, idx, [v + d for v, d in zip(selected, deltas)])
    assert contains_km_polygon(image, k, m), f"phi left D_{k},{m}: {parts} -> {image}"
    return MapTrace(Partition(parts), idx, selected, deltas, Partition(image))


def psi_trace(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> MapTrace:
    parts = tuple(_parts(p))
    if m == 0:
        _require_polygon(parts, k, 0)
        return MapTrace(Partition(parts), (), (), (), Partition(parts))
    idx = select_inverse(parts, k, m, strategy)
    offsets = tuple(-d for d in _deltas(k, m))
    selected = tuple(parts[i] for i in idx)
    image = _replace(parts, idx, [v + d for v, d in zip(selected, offsets)])
    return MapTrace(Partition(parts), idx, selected, offsets, Partition(image))


def phi(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> Partition:
    """Send a partition with a gap-``k`` chain of length ``m`` into D_{k,m}.

    Weight and length are preserved; the result contains the (k,m)-polygon.
    """
    return phi_trace(p, k, m, strategy).image


def psi(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> Partition:
    """The inverse candidate: negated offsets on a polygon-threshold selection."""
    return psi_trace(p, k, m, strategy).image


def round_trip_check(p: PartsLike, k: int, m: int, strategy: Strategy | str) -> bool:
    parts = tuple(_parts(p))
    image = phi(parts, k, m, strategy)
    return psi(image, k, m, strategy).parts == parts
