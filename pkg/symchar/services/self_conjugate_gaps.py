"""
Hook-length gap sets of self-conjugate partitions by interval arithmetic.

A self-conjugate alpha = (r_1^k_1, ..., r_m^k_m) cuts its Young diagram
into rectangular blocks A_{i,j}; the hook lengths of each block form one
integer interval. The integers between neighbouring blocks on a diagonal
are the intervals G_{i,j}, and intersecting the diagonal unions gives
the set of integers in [1, n] that are not hook lengths of alpha, without
ever building the hook grid. Any class with a part in that set
annihilates chi^alpha.

Notation: K_i = k_1 + ... + k_i (K_0 = 0), r_{m+1} = 0, and any bound
that mentions r_0 or K_i with i > m is replaced by n.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from symchar.exceptions import ConsistencyError, DomainError
from symchar.models.certificate import Certificate, Rule, Verdict
from symchar.models.reports import CoverageRecord, GapReport, LadderDirection, LadderRecord
from symchar.services.intervals import EMPTY, Interval, IntervalSet, intersect_all
from symchar.services.partition_core import (
    Parts,
    Partition,
    conjugate,
    format_partition,
    is_self_conjugate,
    multiplicity_form,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelfConjugateShape:
    """
    Multiplicity form of a self-conjugate partition with its prefix sums.

    Indices are 1-based as in the block description: r(1) is the largest
    part and K(0) = 0.
    """
    alpha: Partition
    values: Parts
    multiplicities: Parts

    @classmethod
    def of(cls, alpha: Partition) -> "SelfConjugateShape":
        if not is_self_conjugate(alpha):
            raise DomainError(
                f"({format_partition(alpha)}) is not self-conjugate; "
                f"its conjugate is ({format_partition(conjugate(alpha))})"
            )
        form = multiplicity_form(alpha)
        return cls(alpha, form.values, form.multiplicities)

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def s(self) -> int:
        return (self.m + 1) // 2

    @cached_property
    def prefix(self) -> Parts:
        return tuple(itertools.accumulate(self.multiplicities, initial=0))

    def r(self, i: int) -> int:
        """r_i for 1 <= i <= m + 1, with r_{m+1} = 0."""
        if i == self.m + 1:
            return 0
        return self.values[i - 1]

    def K(self, i: int) -> int:
        return self.prefix[i]

    def bound(self, r_indices: Tuple[int, int], k_indices: Tuple[int, int]) -> int:
        """r_a + r_b - K_c - K_d, with the r_0 / K_{>m} sentinel mapped to n."""
        if 0 in r_indices or any(i > self.m for i in k_indices):
            return self.n
        return sum(self.r(i) for i in r_indices) - sum(self.K(i) for i in k_indices)

    def diagonal_length(self, j: int) -> int:
        """M_j: how many G intervals sit on diagonal j."""
        return (self.m - j + 3) // 2


def as_shape(alpha) -> SelfConjugateShape:
    if isinstance(alpha, SelfConjugateShape):
        return alpha
    if isinstance(alpha, Partition):
        return SelfConjugateShape.of(alpha)
    return SelfConjugateShape.of(Partition(tuple(alpha)))


# ---------------------------------------------------------------------------
# Blocks and gap intervals
# ---------------------------------------------------------------------------

def block_entry_interval(shape: SelfConjugateShape, i: int, j: int) -> Interval:
    """Hook lengths found in block A_{i,j} (rows of part r_i, columns of height r_j)."""
    if not (1 <= i <= shape.s and i <= j <= shape.m and i + j <= shape.m + 1):
        raise DomainError(f"Block ({i},{j}) is outside the staircase of m = {shape.m}")
    total = shape.r(i) + shape.r(j)
    return Interval(
        total - shape.K(i) - shape.K(j) + 1,
        total - shape.K(i - 1) - shape.K(j - 1) - 1,
    )


def gap_interval(shape: SelfConjugateShape, i: int, j: int) -> Interval:
    """
    G_{i,j}: the integers strictly between block A_{i,j} and its
    north-west neighbour A_{i-1,j-1} (up to n when i = 1).
    """
    if i < 1 or j < i:
        raise DomainError(f"G_({i},{j}) needs 1 <= i <= j")
    # i + j <= m + 2 is the same as i <= M_{j-i+1}
    if i + j >= shape.m + 3:
        return EMPTY
    return Interval(
        shape.bound((i, j), (i - 1, j - 1)),
        shape.bound((i - 1, j - 1), (i - 1, j - 1)),
    )


def gap_diagonal_union(shape: SelfConjugateShape, j: int) -> IntervalSet:
    """G_j, the disjoint union of G_{i, i+j-1} over the diagonal."""
    if not 1 <= j <= shape.m:
        raise DomainError(f"Diagonal index {j} outside 1..{shape.m}")

    pieces = [gap_interval(shape, i, i + j - 1) for i in range(1, shape.diagonal_length(j) + 1)]
    nonempty = sorted(piece for piece in pieces if not piece.is_empty)
    for left, right in zip(nonempty, nonempty[1:]):
        if left.hi >= right.lo:
            raise ConsistencyError(f"G intervals {left} and {right} overlap on diagonal {j}")

    union = IntervalSet(pieces)
    last = pieces[-1]
    if not last.is_empty and union.min() != last.lo:
        raise ConsistencyError(f"min(G_{j}) = {union.min()} is not in the last block {last}")
    return union


def gap_set(shape) -> IntervalSet:
    """Integers in [1, n] that are not hook lengths of the self-conjugate shape."""
    shape = as_shape(shape)
    if shape.m == 0:
        return IntervalSet()
    result = IntervalSet([Interval(1, shape.n)])
    for j in range(1, shape.m + 1):
        result = result.intersection(gap_diagonal_union(shape, j))
    return result


# ---------------------------------------------------------------------------
# Expansion of the intersection into terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GapTerm:
    indices: Tuple[int, ...]
    interval: Interval


@dataclass(frozen=True)
class EmptinessReason:
    case: int
    l: int


def _term_index_set(shape: SelfConjugateShape) -> Iterator[Tuple[int, ...]]:
    ranges = [range(1, shape.diagonal_length(j) + 1) for j in range(1, shape.m + 1)]
    return itertools.product(*ranges)


def _term_interval(shape: SelfConjugateShape, indices: Sequence[int]) -> Interval:
    return intersect_all(
        gap_interval(shape, i, j + i - 1) for j, i in enumerate(indices, start=1)
    ).clamp(1, shape.n)


def gap_terms(shape: SelfConjugateShape) -> List[GapTerm]:
    """
    Distribute the intersection of the diagonal unions: one term per
    choice (i_1, ..., i_m) of a G interval on every diagonal.
    """
    if shape.m == 0:
        return []
    return [GapTerm(indices, _term_interval(shape, indices)) for indices in _term_index_set(shape)]


def term_is_empty(shape: SelfConjugateShape, indices: Sequence[int]) -> Optional[EmptinessReason]:
    """
    A sufficient reason for the term at `indices` to be empty, or None.

    Case 1: the index drops by two or more, or rises, between neighbouring
    diagonals. Case 2: three equal indices whose outer G's are strictly
    ordered the wrong way. Case 3: the same for a run dropping by one.
    """
    m = shape.m
    if len(indices) != m:
        raise DomainError(f"Expected {m} indices, got {len(indices)}")
    for j, i in enumerate(indices, start=1):
        if not 1 <= i <= shape.diagonal_length(j):
            raise DomainError(f"i_{j} = {i} outside 1..{shape.diagonal_length(j)}")

    def g(l: int) -> Interval:
        i = indices[l - 1]
        return gap_interval(shape, i, l + i - 1)

    for l in range(1, m):
        a, b = indices[l - 1], indices[l]
        if a - b >= 2 or b - a >= 1:
            return EmptinessReason(1, l)

    for l in range(1, m - 1):
        a, b, c = indices[l - 1], indices[l], indices[l + 1]
        first, third = g(l), g(l + 2)
        if first.is_empty or third.is_empty:
            continue
        if a == b == c and first.lo > third.hi:
            return EmptinessReason(2, l)
        if a == b + 1 == c + 2 and third.lo > first.hi:
            return EmptinessReason(3, l)
    return None


# ---------------------------------------------------------------------------
# Ladders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LadderSpec:
    v: int
    direction: LadderDirection
    a: int
    b: int
    c: int
    d: int

    @property
    def interval(self) -> Interval:
        return Interval(max(self.a, self.c), min(self.b, self.d))


def ladder_range(shape: SelfConjugateShape, direction: LadderDirection) -> range:
    """Legal v >= 2 for the direction."""
    if direction is LadderDirection.NORTH:
        return range(2, shape.m // 2 + 2)
    return range(2, (shape.m + 1) // 2 + 1)


def ladder(shape: SelfConjugateShape, v: int, direction: LadderDirection) -> LadderSpec:
    """The four bounds of the v-th one-step ladder (v >= 2)."""
    if v not in ladder_range(shape, direction):
        raise DomainError(f"Ladder {direction.value}_{v} is not defined for m = {shape.m}")

    bound = shape.bound
    if direction is LadderDirection.NORTH:
        steps = range(0, v - 1)
        c = max(bound((v - i - 1, v + i), (v - i - 2, v + i - 1)) for i in steps)
        d = min(bound((v - i - 2, v + i - 1), (v - i - 2, v + i - 1)) for i in steps)
    else:
        steps = range(0, v)
        c = max(bound((v - i, v + i + 1), (v - i - 1, v + i)) for i in steps)
        d = min(bound((v - i - 1, v + i), (v - i - 1, v + i)) for i in steps)
    a = max(bound((v - i, v + i), (v - i - 1, v + i - 1)) for i in steps)
    b = min(bound((v - i - 1, v + i - 1), (v - i - 1, v + i - 1)) for i in steps)
    return LadderSpec(v, direction, a, b, c, d)


def ladder_interval(shape: SelfConjugateShape, v: int, direction: LadderDirection) -> Interval:
    if v == 1:
        return Interval(2 * shape.r(1), shape.n) if shape.m else EMPTY
    return ladder(shape, v, direction).interval


def all_ladders(shape: SelfConjugateShape) -> List[Tuple[int, LadderDirection, Interval]]:
    found = []
    if shape.m:
        for direction in LadderDirection:
            found.append((1, direction, ladder_interval(shape, 1, direction)))
    for direction in LadderDirection:
        for v in ladder_range(shape, direction):
            found.append((v, direction, ladder_interval(shape, v, direction)))
    return found


def predicted_zero_parts(shape) -> IntervalSet:
    """Union of every ladder within [1, n]: parts that force chi^alpha to vanish."""
    shape = as_shape(shape)
    return IntervalSet(interval for _, _, interval in all_ladders(shape)).clamp(1, shape.n)


# ---------------------------------------------------------------------------
# Certificates and families
# ---------------------------------------------------------------------------

def self_conj_even_big_part(shape, beta: Partition) -> Optional[Certificate]:
    """Zero when beta has an even part larger than n/2."""
    shape = as_shape(shape)
    if beta.n != shape.n:
        raise DomainError(f"|beta| = {beta.n} but n = {shape.n}")
    for part in beta.parts:
        if part % 2 == 0 and 2 * part > shape.n:
            return Certificate(
                alpha=format_partition(shape.alpha),
                beta=format_partition(beta),
                verdict=Verdict.ZERO,
                rule=Rule.SELF_CONJ_EVEN_BIG_PART,
                witness={"part": part, "n": shape.n},
            )
    return None


def staircase_family(variant: str, s: int, x: int, y: int) -> Tuple[Partition, Tuple[int, int]]:
    """
    Self-conjugate staircase with blocks of width x and y.

    Variant A: (sx+ty)^x for t = s..1, then (tx)^y for t = s..1.
    Variant B: (sx+ty)^x for t = s-1..0, then (tx)^y for t = s-1..1.
    Both have x+y and 2(x+y) as non-hook lengths.
    """
    if s < 2 or x < 1 or y < 1 or x > y:
        raise DomainError(f"Staircase needs s >= 2 and 1 <= x <= y, got s={s}, x={x}, y={y}")

    variant = variant.upper()
    if variant == "A":
        top = range(s, 0, -1)
        bottom = range(s, 0, -1)
        expected_n = s * x * (s * (x + y) + y)
    elif variant == "B":
        top = range(s - 1, -1, -1)
        bottom = range(s - 1, 0, -1)
        expected_n = s * x * (s * (x + y) - y)
    else:
        raise DomainError(f"Unknown staircase variant {variant!r}")

    parts = [s * x + t * y for t in top for _ in range(x)]
    parts += [t * x for t in bottom for _ in range(y)]
    alpha = Partition(tuple(parts))

    if not is_self_conjugate(alpha) or alpha.n != expected_n:
        raise ConsistencyError(f"Staircase {variant}({s},{x},{y}) = ({format_partition(alpha)}) is malformed")
    predicted = (x + y, 2 * (x + y))
    gaps = gap_set(alpha)
    if not all(part in gaps for part in predicted):
        raise ConsistencyError(f"Staircase {variant}({s},{x},{y}): {predicted} not in the gap set")
    return alpha, predicted


def _distinct_odd_parts(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(largest, n)
    if top % 2 == 0:
        top -= 1
    for h in range(top, 0, -2):
        for rest in _distinct_odd_parts(n - h, h - 2):
            yield (h,) + rest


def _from_diagonal_hooks(hooks: Tuple[int, ...]) -> Partition:
    arms = [(h - 1) // 2 for h in hooks]
    d = len(arms)
    rows = [arm + i for i, arm in enumerate(arms, start=1)]
    height = arms[0] + 1 if arms else 0
    rows += [sum(1 for i, arm in enumerate(arms, start=1) if arm + i >= row) for row in range(d + 1, height + 1)]
    return Partition(tuple(rows))


def self_conjugate_partitions(n: int) -> List[Partition]:
    """Self-conjugate partitions of n, from their distinct odd diagonal hooks."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    found = [_from_diagonal_hooks(hooks) for hooks in _distinct_odd_parts(n, n)]
    return sorted(found, key=lambda alpha: alpha.parts, reverse=True)


def gap_report(alpha: Partition) -> GapReport:
    shape = SelfConjugateShape.of(alpha)
    gaps = gap_set(shape)
    ladders = all_ladders(shape)
    predicted = predicted_zero_parts(shape)
    if not predicted.issubset(gaps):
        raise ConsistencyError(f"Ladders of ({format_partition(alpha)}) leave the gap set")

    coverage = CoverageRecord(predicted=predicted.size(), gaps=gaps.size(), complete=predicted == gaps)
    logger.debug(f"Gap coverage for ({format_partition(alpha)}): {coverage.predicted}/{coverage.gaps}")
    return GapReport(
        alpha=format_partition(alpha),
        n=shape.n,
        G=gaps.to_pairs(),
        ladders=[
            LadderRecord(v=v, dir=direction, lo=interval.lo, hi=interval.hi)
            for v, direction, interval in ladders
        ],
        predicted_parts=predicted.members(),
        coverage=coverage,
    )
