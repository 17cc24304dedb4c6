"""
Closed integer intervals and normalized unions of them.
"""

from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple


class Interval(NamedTuple):
    """[lo, hi] as a set of integers; empty when lo > hi."""
    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def size(self) -> int:
        return 0 if self.is_empty else self.hi - self.lo + 1

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def clamp(self, lo: int, hi: int) -> "Interval":
        return self.intersect(Interval(lo, hi))

    def issubset(self, other: "Interval") -> bool:
        return self.is_empty or (other.lo <= self.lo and self.hi <= other.hi)


EMPTY = Interval(1, 0)


def intersect_all(intervals: Iterable[Interval]) -> Interval:
    result: Optional[Interval] = None
    for interval in intervals:
        result = interval if result is None else result.intersect(interval)
    if result is None:
        raise ValueError("intersection of no intervals")
    return result


class IntervalSet:
    """
    A finite union of integer intervals kept as sorted, disjoint,
    non-adjacent pieces.
    """

    __slots__ = ("_pieces",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        self._pieces: Tuple[Interval, ...] = self._normalize(intervals)

    @staticmethod
    def _normalize(intervals: Iterable[Interval]) -> Tuple[Interval, ...]:
        pieces = sorted(Interval(lo, hi) for lo, hi in intervals if lo <= hi)
        merged: List[Interval] = []
        for piece in pieces:
            if merged and piece.lo <= merged[-1].hi + 1:
                last = merged[-1]
                merged[-1] = Interval(last.lo, max(last.hi, piece.hi))
            else:
                merged.append(piece)
        return tuple(merged)

    @classmethod
    def from_members(cls, members: Iterable[int]) -> "IntervalSet":
        return cls(Interval(x, x) for x in members)

    @property
    def pieces(self) -> Tuple[Interval, ...]:
        return self._pieces

    @property
    def is_empty(self) -> bool:
        return not self._pieces

    def min(self) -> int:
        if not self._pieces:
            raise ValueError("min of an empty interval set")
        return self._pieces[0].lo

    def max(self) -> int:
        if not self._pieces:
            raise ValueError("max of an empty interval set")
        return self._pieces[-1].hi

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._pieces)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def contains(self, x: int) -> bool:
        return any(piece.lo <= x <= piece.hi for piece in self._pieces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(self._pieces)

    def __repr__(self) -> str:
        inner = ", ".join(f"[{lo},{hi}]" for lo, hi in self._pieces)
        return f"IntervalSet({inner})"

    def size(self) -> int:
        return sum(piece.size() for piece in self._pieces)

    def members(self) -> List[int]:
        return [x for lo, hi in self._pieces for x in range(lo, hi + 1)]

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self._pieces + other._pieces)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        result: List[Interval] = []
        a, b = self._pieces, other._pieces
        i = j = 0
        while i < len(a) and j < len(b):
            overlap = a[i].intersect(b[j])
            if not overlap.is_empty:
                result.append(overlap)
            if a[i].hi < b[j].hi:
                i += 1
            else:
                j += 1
        return IntervalSet(result)

    def clamp(self, lo: int, hi: int) -> "IntervalSet":
        return self.intersection(IntervalSet([Interval(lo, hi)]))

    def issubset(self, other: "IntervalSet") -> bool:
        return self.intersection(other) == self

    def to_pairs(self) -> List[List[int]]:
        return [[lo, hi] for lo, hi in self._pieces]
