"""Canonical integer partitions and part-level surgery.

A :class:`Partition` always stores its parts in non-increasing order.
Positions into ``parts`` are 0-based throughout the package; the
1-based ``i`` of the usual ``lambda_i`` notation is ``parts[i - 1]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    """Raised for values that cannot form (or index into) a partition."""


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple[int, ...] = ()

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return format_partition(self)


def make_partition(values: Iterable[int]) -> Partition:
    """Canonicalize ``values`` (any order) into a :class:`Partition`.

    >>> make_partition([1, 9, 4, 9, 8, 3, 7]).parts
    (9, 9, 8, 7, 4, 3, 1)
    """
    vals = list(values)
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int):
            raise PartitionError(f"part {v!r} is not an integer")
        if v < 1:
            raise PartitionError(f"part {v} is not a positive integer")
    return Partition(tuple(sorted(vals, reverse=True)))


def _check_indices(p: Partition, indices: Sequence[int]) -> None:
    prev = -1
    for i in indices:
        if not 0 <= i < len(p.parts):
            raise PartitionError(f"index {i} out of range for partition of length {len(p.parts)}")
        if i <= prev:
            raise PartitionError(f"indices must be strictly increasing, got {tuple(indices)}")
        prev = i


def subsequence_values(p: Partition, indices: Sequence[int]) -> tuple[int, ...]:
    _check_indices(p, indices)
    return tuple(p.parts[i] for i in indices)


def replace_parts(p: Partition, indices: Sequence[int], new_values: Sequence[int]) -> Partition:
    """Swap the parts at ``indices`` for ``new_values`` and re-sort.

    Parts outside ``indices`` are untouched. Length is preserved; the weight
    shifts by ``sum(new_values) - sum(old values)``.
    """
    _check_indices(p, indices)
    if len(new_values) != len(indices):
        raise PartitionError(f"{len(indices)} indices but {len(new_values)} replacement values")
    for v in new_values:
        if v < 1:
            raise PartitionError(f"replacement value {v} is not a positive integer")
    return Partition(_replace(p.parts, indices, new_values))


def _replace(parts: tuple[int, ...], indices: Sequence[int], new_values: Sequence[int]) -> tuple[int, ...]:
    # unchecked core, shared with the bijection hot loop
    chosen = set(indices)
    kept = [v for i, v in enumerate(parts) if i not in chosen]
    kept.extend(new_values)
    kept.sort(reverse=True)
    return tuple(kept)


_SEP = re.compile(r"[\s,+]+")


def parse_partition(text: str) -> Partition:
    """Parse ``"9,9,8,7,4,3,1"`` or ``"9+9+8+7+4+3+1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    tokens = [t for t in _SEP.split(text) if t]
    values = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise PartitionError(f"cannot parse part {t!r} in {text!r}") from None
    return make_partition(values)


def format_partition(p: Partition | Sequence[int]) -> str:
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    return ",".join(str(v) for v in parts)
