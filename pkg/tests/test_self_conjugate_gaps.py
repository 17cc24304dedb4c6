"""
Gap-set interval calculus tests for self-conjugate partitions
"""

import pytest

from symchar.exceptions import DomainError
from symchar.models.certificate import Rule
from symchar.models.reports import LadderDirection
from symchar.services.character_engine import mn_value
from symchar.services.intervals import Interval, IntervalSet
from symchar.services.partition_core import (
    Parity,
    Partition,
    hook_grid,
    is_self_conjugate,
    parity,
    partitions_of,
)
from symchar.services.self_conjugate_gaps import (
    SelfConjugateShape,
    block_entry_interval,
    gap_diagonal_union,
    gap_interval,
    gap_report,
    gap_set,
    gap_terms,
    ladder,
    ladder_interval,
    predicted_zero_parts,
    self_conj_even_big_part,
    self_conjugate_partitions,
    staircase_family,
    term_is_empty,
)

N = LadderDirection.NORTH
E = LadderDirection.EAST

STAIRCASE = SelfConjugateShape.of(Partition((3, 2, 1)))
FLAGSHIP = Partition((13, 5, 2, 2, 2) + (1,) * 8)


def hook_complement(alpha: Partition) -> IntervalSet:
    hooks = hook_grid(alpha).hook_set
    return IntervalSet.from_members(x for x in range(1, alpha.n + 1) if x not in hooks)


def self_conjugate_up_to(max_n: int):
    for n in range(1, max_n + 1):
        yield from self_conjugate_partitions(n)


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------

def test_interval_set_normalizes():
    merged = IntervalSet([Interval(5, 6), Interval(1, 2), Interval(3, 3), Interval(9, 8)])
    assert merged.pieces == (Interval(1, 3), Interval(5, 6))
    assert merged.members() == [1, 2, 3, 5, 6]
    assert 4 not in merged and 5 in merged


def test_interval_set_intersection_and_union():
    left = IntervalSet([Interval(0, 4), Interval(6, 10)])
    right = IntervalSet([Interval(3, 7)])
    assert left.intersection(right) == IntervalSet([Interval(3, 4), Interval(6, 7)])
    assert left.union(right) == IntervalSet([Interval(0, 10)])
    assert left.clamp(1, 8).min() == 1


# ---------------------------------------------------------------------------
# Shapes and blocks
# ---------------------------------------------------------------------------

def test_shape_requires_self_conjugate():
    with pytest.raises(DomainError) as excinfo:
        SelfConjugateShape.of(Partition((2, 1, 1)))
    assert "3,1" in str(excinfo.value)


def test_shape_prefix_sums():
    shape = SelfConjugateShape.of(FLAGSHIP)
    assert shape.values == (13, 5, 2, 1)
    assert shape.multiplicities == (1, 1, 3, 8)
    assert shape.prefix == (0, 1, 2, 5, 13)
    assert (shape.m, shape.s, shape.n) == (4, 2, 32)
    # k_i = r_{m-i+1} - r_{m-i+2}
    for i in range(1, shape.m + 1):
        assert shape.multiplicities[i - 1] == shape.r(shape.m - i + 1) - shape.r(shape.m - i + 2)


@pytest.mark.parametrize("i, j, expected", [
    (1, 1, Interval(5, 5)),
    (1, 2, Interval(3, 3)),
    (1, 3, Interval(1, 1)),
    (2, 2, Interval(1, 1)),
])
def test_block_entry_interval_staircase(i, j, expected):
    assert block_entry_interval(STAIRCASE, i, j) == expected


def test_block_entry_interval_outside_staircase():
    with pytest.raises(DomainError):
        block_entry_interval(STAIRCASE, 2, 3)


def test_block_entries_match_hook_grid():
    for alpha in self_conjugate_up_to(20):
        shape = SelfConjugateShape.of(alpha)
        grid = hook_grid(alpha)
        K = shape.prefix
        for i in range(1, shape.s + 1):
            for j in range(i, shape.m - i + 2):
                hooks = {
                    grid.hook(x, y)
                    for x in range(K[i - 1] + 1, K[i] + 1)
                    for y in range(K[j - 1] + 1, K[j] + 1)
                }
                entry = block_entry_interval(shape, i, j)
                assert hooks == set(range(entry.lo, entry.hi + 1)), (alpha, i, j)


# ---------------------------------------------------------------------------
# Gap intervals
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("i, j, expected", [
    (1, 1, Interval(6, 6)),
    (2, 2, Interval(2, 4)),
    (1, 2, Interval(4, 6)),
    (2, 3, Interval(0, 2)),
    (1, 3, Interval(2, 6)),
])
def test_gap_interval_staircase(i, j, expected):
    assert gap_interval(STAIRCASE, i, j) == expected


def test_gap_interval_past_the_staircase_is_empty():
    assert gap_interval(STAIRCASE, 3, 3).is_empty


def test_gap_interval_agrees_with_neighbouring_blocks():
    # G_{i+1,j+1} sits strictly between e(A_{i+1,j+1}) and e(A_{i,j})
    for alpha in self_conjugate_up_to(20):
        shape = SelfConjugateShape.of(alpha)
        for i in range(1, shape.s + 1):
            for j in range(i, shape.m - i + 1):
                if (i + 1) + (j + 1) > shape.m + 1:
                    continue
                inner = block_entry_interval(shape, i + 1, j + 1)
                outer = block_entry_interval(shape, i, j)
                assert gap_interval(shape, i + 1, j + 1) == Interval(inner.hi + 1, outer.lo - 1)
        for j in range(1, shape.m + 1):
            top = gap_interval(shape, 1, j)
            assert top == Interval(shape.r(1) + shape.r(j) - shape.K(j - 1), shape.n)


@pytest.mark.parametrize("j, pieces", [
    (1, [(2, 4), (6, 6)]),
    (2, [(0, 2), (4, 6)]),
    (3, [(2, 6)]),
])
def test_gap_diagonal_union_staircase(j, pieces):
    assert gap_diagonal_union(STAIRCASE, j) == IntervalSet(Interval(*p) for p in pieces)


@pytest.mark.parametrize("parts, members", [
    ((3, 2, 1), [2, 4, 6]),
    ((1,), []),
    ((2, 1), [2]),
    ((), []),
])
def test_gap_set_examples(parts, members):
    assert gap_set(Partition(parts)).members() == members


def test_gap_set_rejects_non_self_conjugate():
    with pytest.raises(DomainError):
        gap_set(Partition((2, 1, 1)))


def test_gap_set_is_hook_complement_through_24():
    checked = 0
    for alpha in self_conjugate_up_to(24):
        assert gap_set(alpha) == hook_complement(alpha), alpha
        checked += 1
    assert checked == sum(1 for n in range(1, 25) for a in partitions_of(n) if is_self_conjugate(a))


def test_self_conjugate_partitions_match_filter():
    for n in range(0, 16):
        expected = [a for a in partitions_of(n) if is_self_conjugate(a)]
        assert self_conjugate_partitions(n) == expected


def test_diagonal_unions_are_disjoint_through_24():
    # gap_diagonal_union raises on overlap or a misplaced minimum
    for alpha in self_conjugate_up_to(24):
        shape = SelfConjugateShape.of(alpha)
        for j in range(1, shape.m + 1):
            gap_diagonal_union(shape, j)


# ---------------------------------------------------------------------------
# Terms of the expansion
# ---------------------------------------------------------------------------

def test_term_examples_on_staircase():
    assert term_is_empty(STAIRCASE, (1, 2, 1)).case == 1
    assert term_is_empty(STAIRCASE, (2, 1, 1)) is None
    assert term_is_empty(STAIRCASE, (2, 2, 1)) is None
    terms = {term.indices: term.interval for term in gap_terms(STAIRCASE)}
    assert terms[(2, 1, 1)] == Interval(4, 4)
    assert terms[(2, 2, 1)] == Interval(2, 2)


def test_term_outside_index_set():
    with pytest.raises(DomainError):
        term_is_empty(STAIRCASE, (3, 1, 1))
    with pytest.raises(DomainError):
        term_is_empty(STAIRCASE, (1, 1))


def test_emptiness_reasons_are_sound():
    for alpha in self_conjugate_up_to(18):
        shape = SelfConjugateShape.of(alpha)
        for term in gap_terms(shape):
            if term_is_empty(shape, term.indices) is not None:
                assert term.interval.is_empty, (alpha, term.indices)


def test_terms_cover_the_gap_set_with_few_nonempty_terms():
    for alpha in self_conjugate_up_to(18):
        shape = SelfConjugateShape.of(alpha)
        nonempty = [term.interval for term in gap_terms(shape) if not term.interval.is_empty]
        assert len(nonempty) <= 2 * shape.r(1) - 1
        assert IntervalSet(nonempty) == gap_set(shape)


# ---------------------------------------------------------------------------
# Ladders
# ---------------------------------------------------------------------------

def test_ladder_staircase():
    spec = ladder(STAIRCASE, 2, N)
    assert (spec.a, spec.b, spec.c, spec.d) == (2, 4, 4, 6)
    assert ladder_interval(STAIRCASE, 2, N) == Interval(4, 4)
    assert ladder_interval(STAIRCASE, 2, E) == Interval(2, 2)
    assert ladder_interval(STAIRCASE, 1, N) == Interval(6, 6)
    assert ladder_interval(STAIRCASE, 1, E) == Interval(6, 6)


def test_ladder_out_of_range():
    with pytest.raises(DomainError):
        ladder_interval(STAIRCASE, 3, N)
    with pytest.raises(DomainError):
        ladder_interval(STAIRCASE, 3, E)


def test_ladders_of_four_staircase():
    shape = SelfConjugateShape.of(Partition((4, 3, 2, 1)))
    assert ladder_interval(shape, 3, N) == Interval(2, 2)
    assert ladder_interval(shape, 2, E) == Interval(4, 4)
    assert {2, 4} <= set(predicted_zero_parts(shape).members())


def test_flagship_ladder_contains_twenty():
    shape = SelfConjugateShape.of(FLAGSHIP)
    assert ladder_interval(shape, 2, N) == Interval(17, 24)
    assert 20 in gap_set(shape)
    assert 20 in predicted_zero_parts(shape)


def test_predicted_parts_examples():
    assert predicted_zero_parts(STAIRCASE).members() == [2, 4, 6]
    assert predicted_zero_parts(Partition((1,))).is_empty


def test_ladders_stay_inside_gap_set_through_24():
    for alpha in self_conjugate_up_to(24):
        shape = SelfConjugateShape.of(alpha)
        assert predicted_zero_parts(shape).issubset(gap_set(shape)), alpha


def test_predicted_parts_force_zero_values_through_12():
    for n in range(1, 13):
        classes = list(partitions_of(n))
        for alpha in self_conjugate_partitions(n):
            predicted = set(predicted_zero_parts(alpha).members())
            for beta in classes:
                if predicted & set(beta.parts):
                    assert mn_value(alpha, beta) == 0, (alpha, beta)


def test_odd_classes_vanish_on_self_conjugate_characters():
    for n in range(1, 11):
        for alpha in self_conjugate_partitions(n):
            for beta in partitions_of(n):
                if parity(beta) is Parity.ODD:
                    assert mn_value(alpha, beta) == 0


# ---------------------------------------------------------------------------
# Even big part and staircase families
# ---------------------------------------------------------------------------

def test_even_big_part_flagship():
    certificate = self_conj_even_big_part(SelfConjugateShape.of(FLAGSHIP), Partition((20, 5, 2, 2, 2, 1)))
    assert certificate.rule is Rule.SELF_CONJ_EVEN_BIG_PART


def test_even_big_part_examples():
    assert self_conj_even_big_part(STAIRCASE, Partition((4, 2))) is not None
    assert self_conj_even_big_part(STAIRCASE, Partition((5, 1))) is None
    with pytest.raises(DomainError):
        self_conj_even_big_part(STAIRCASE, Partition((4,)))


def test_even_big_part_is_sound_through_12():
    for n in range(1, 13):
        for alpha in self_conjugate_partitions(n):
            for beta in partitions_of(n):
                if self_conj_even_big_part(alpha, beta) is not None:
                    assert mn_value(alpha, beta) == 0


@pytest.mark.parametrize("variant, s, x, y, parts", [
    ("A", 2, 1, 1, (4, 3, 2, 1)),
    ("A", 2, 1, 2, (6, 4, 2, 2, 1, 1)),
    ("A", 3, 1, 1, (6, 5, 4, 3, 2, 1)),
    ("B", 2, 1, 1, (3, 2, 1)),
    ("B", 3, 1, 1, (5, 4, 3, 2, 1)),
])
def test_staircase_families(variant, s, x, y, parts):
    alpha, predicted = staircase_family(variant, s, x, y)
    assert alpha.parts == parts
    assert predicted == (x + y, 2 * (x + y))


def test_staircase_family_preconditions():
    with pytest.raises(DomainError):
        staircase_family("A", 2, 2, 1)
    with pytest.raises(DomainError):
        staircase_family("B", 1, 1, 1)


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

def test_gap_report_staircase():
    report = gap_report(Partition((3, 2, 1)))
    assert report.G == [[2, 2], [4, 4], [6, 6]]
    assert report.predicted_parts == [2, 4, 6]
    assert report.coverage.complete
    assert {(r.v, r.dir, r.lo, r.hi) for r in report.ladders} >= {(2, N, 4, 4), (2, E, 2, 2)}


def test_gap_report_rejects_non_self_conjugate():
    with pytest.raises(DomainError):
        gap_report(Partition((2, 1, 1)))
