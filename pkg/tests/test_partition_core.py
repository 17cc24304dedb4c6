"""
Partition arithmetic and hook machinery tests
"""

import itertools
import math

import pytest
from hypothesis import given
from sympy import binomial, multiplicity
from sympy.functions.combinatorial.numbers import partition as partition_count

from symchar.exceptions import DomainError, PartitionParseError
from symchar.services.partition_core import (
    Node,
    Parity,
    Partition,
    centralizer_size,
    conjugate,
    format_partition,
    h_weight,
    h_weight_by_removal,
    hook_grid,
    hooks_of_length,
    is_p_adic_type,
    is_self_conjugate,
    kummer_valuation,
    lcm_of_parts,
    multiplicity_form,
    p_adic_digits,
    p_valuation,
    parity,
    parse_partition,
    partitions_of,
    remove_rim_hook,
)
from tests.strategies import partitions

FLAGSHIP = Partition((13, 5, 2, 2, 2) + (1,) * 8)


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

def test_parse_exponent_form():
    alpha = parse_partition("13,5,2^3,1^8")
    assert alpha == FLAGSHIP
    assert alpha.n == 32


@pytest.mark.parametrize("text, parts", [
    ("5", (5,)),
    ("1,3", (3, 1)),
    (" (2, 2,1) ", (2, 2, 1)),
    ("", ()),
    ("()", ()),
])
def test_parse_simple_forms(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text, token", [
    ("3,,1", ""),
    ("3,x", "x"),
    ("3,0", "0"),
    ("2^0", "2^0"),
    ("-1", "-1"),
])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(PartitionParseError) as excinfo:
        parse_partition(text)
    assert repr(token) in str(excinfo.value)


def test_format_compresses_runs():
    assert format_partition(FLAGSHIP) == "13,5,2^3,1^8"
    assert format_partition(Partition(())) == "()"


@given(partitions(max_part=8, max_length=10))
def test_format_reparses_to_the_same_partition(alpha):
    assert parse_partition(format_partition(alpha)) == alpha


def test_partition_rejects_nonpositive_parts():
    with pytest.raises(DomainError):
        Partition((2, 0))


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("parts, expected", [
    ((3, 2, 1), (3, 2, 1)),
    ((5,), (1, 1, 1, 1, 1)),
    ((4, 1), (2, 1, 1, 1)),
    ((), ()),
])
def test_conjugate(parts, expected):
    assert conjugate(Partition(parts)).parts == expected


def all_partitions(max_n: int):
    for n in range(0, max_n + 1):
        yield from partitions_of(n)


def test_conjugate_is_an_involution_through_30():
    for alpha in all_partitions(30):
        assert conjugate(conjugate(alpha)) == alpha


def test_is_self_conjugate():
    assert is_self_conjugate(FLAGSHIP)
    assert not is_self_conjugate(Partition((2, 1, 1)))
    assert is_self_conjugate(Partition(()))


def test_multiplicity_form_of_flagship():
    form = multiplicity_form(FLAGSHIP)
    assert form.pairs == ((13, 1), (5, 1), (2, 3), (1, 8))
    assert form.to_partition() == FLAGSHIP
    # r_i = k_1 + ... + k_{m-i+1} for a self-conjugate shape
    k = form.multiplicities
    for i, r in enumerate(form.values, start=1):
        assert r == sum(k[: form.m - i + 1])


def test_hook_grid_examples():
    assert hook_grid(Partition((2, 1))).rows == ((3, 1), (1,))
    assert hook_grid(Partition((1,))).rows == ((1,),)
    assert hook_grid(FLAGSHIP).hook(1, 1) == 25


def test_hook_grid_is_transposed_by_conjugation_through_20():
    for alpha in all_partitions(20):
        grid = hook_grid(alpha)
        transposed = hook_grid(conjugate(alpha))
        for i, row in enumerate(grid.rows, start=1):
            for j, h in enumerate(row, start=1):
                assert transposed.hook(j, i) == h
        assert sum(grid.hook_multiset.values()) == alpha.n


def test_hooks_of_length():
    assert hooks_of_length(Partition((2, 2)), 2) == {Node(1, 2), Node(2, 1)}
    assert hooks_of_length(Partition((2, 1)), 2) == frozenset()
    assert hooks_of_length(Partition((6,)), 6) == {Node(1, 1)}


@given(partitions())
def test_hooks_of_length_agrees_with_grid(alpha):
    grid = hook_grid(alpha)
    for k in range(1, alpha.n + 2):
        expected = {
            Node(i, j)
            for i, row in enumerate(grid.rows, start=1)
            for j, h in enumerate(row, start=1)
            if h == k
        }
        assert hooks_of_length(alpha, k) == expected


@pytest.mark.parametrize("parts, node, remaining, leg", [
    ((2, 1), (1, 1), (), 1),
    ((3, 1), (1, 2), (1, 1), 0),
    ((5,), (1, 1), (), 0),
    ((4, 4, 2, 2), (1, 1), (3, 1, 1), 3),
])
def test_remove_rim_hook(parts, node, remaining, leg):
    assert remove_rim_hook(Partition(parts), Node(*node)) == (Partition(remaining), leg)


def test_remove_rim_hook_outside_diagram():
    with pytest.raises(DomainError):
        remove_rim_hook(Partition((2, 1)), Node(2, 2))


def test_rim_removal_shrinks_by_the_hook_length_through_15():
    for alpha in all_partitions(15):
        grid = hook_grid(alpha)
        columns = conjugate(alpha)
        for i, row in enumerate(grid.rows, start=1):
            for j, h in enumerate(row, start=1):
                smaller, leg = remove_rim_hook(alpha, Node(i, j))
                assert smaller.n == alpha.n - h
                assert leg == columns[j - 1] - i


def test_h_weight_examples():
    assert h_weight(Partition((2, 2)), 2) == 2
    assert h_weight(FLAGSHIP, 1) == 32
    staircase = Partition((3, 2, 1))
    assert h_weight(staircase, hook_grid(staircase).hook(1, 2)) == 2


def test_h_weight_counts_removable_hooks_through_12():
    for alpha in all_partitions(12):
        for h in range(1, alpha.n + 1):
            assert h_weight(alpha, h) == h_weight_by_removal(alpha, h), (alpha, h)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def test_p_adic_digits():
    assert p_adic_digits(5, 2).digits == (1, 0, 1)
    assert p_adic_digits(0, 3).digits == ()
    assert p_adic_digits(12, 5).digits == (2, 2)
    assert p_adic_digits(12, 5).value == 12


def test_p_adic_digits_needs_a_prime():
    with pytest.raises(DomainError):
        p_adic_digits(6, 4)


@pytest.mark.parametrize("parts, p, expected", [
    ((4, 1), 2, True),
    ((2, 2, 1), 2, False),
    ((1, 1, 1), 5, True),
    ((3, 2), 3, True),
    ((5,), 3, False),
    ((4,), 2, True),
])
def test_is_p_adic_type(parts, p, expected):
    assert is_p_adic_type(Partition(parts), p) is expected


def build_p_adic_partitions(n: int, p: int):
    """Every choice of a partition of each digit a_i, scaled by p^i."""
    digits = p_adic_digits(n, p).digits
    choices = [[tuple(s * p ** i for s in sigma.parts) for sigma in partitions_of(a)] for i, a in enumerate(digits)]
    return {Partition(sum(pieces, ())) for pieces in itertools.product(*choices)}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_is_p_adic_type_matches_construction_through_12(p):
    for n in range(0, 13):
        filtered = {beta for beta in partitions_of(n) if is_p_adic_type(beta, p)}
        assert filtered == build_p_adic_partitions(n, p), n


def test_parity():
    assert parity(Partition((2, 1))) is Parity.ODD
    assert parity(Partition((1, 1, 1, 1))) is Parity.EVEN
    assert parity(Partition((3, 3))) is Parity.EVEN


def test_lcm_of_parts():
    assert lcm_of_parts(Partition((5, 3))) == (15, {3: 1, 5: 1})
    assert lcm_of_parts(Partition((4, 2, 1))) == (4, {2: 2})
    assert lcm_of_parts(Partition((6, 4))) == (12, {2: 2, 3: 1})
    with pytest.raises(DomainError):
        lcm_of_parts(Partition(()))


def test_centralizer_size():
    assert centralizer_size(Partition((1,) * 6)) == math.factorial(6)
    assert centralizer_size(Partition((7,))) == 7
    assert centralizer_size(Partition((2, 1))) == 2


def test_partitions_of_counts_and_order():
    assert [alpha.parts for alpha in partitions_of(0)] == [()]
    assert sum(1 for _ in partitions_of(5)) == 7
    for n in range(1, 16):
        listed = [alpha.parts for alpha in partitions_of(n)]
        assert len(listed) == partition_count(n)
        assert listed == sorted(set(listed), reverse=True)


def test_kummer_valuation():
    assert kummer_valuation(2, 2, 2) == 1
    assert kummer_valuation(0, 9, 3) == 0
    assert kummer_valuation(2, 2, 3) == 1


def test_kummer_matches_binomial_valuation():
    for p in (2, 3, 5):
        for a in range(0, 20):
            for b in range(0, 20):
                assert kummer_valuation(a, b, p) == multiplicity(p, binomial(a + b, b))


def factorial_valuation(n: int, p: int) -> int:
    total, power = 0, p
    while power <= n:
        total += n // power
        power *= p
    return total


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_kummer_matches_legendre_through_200(p):
    for a in range(0, 201):
        for b in range(0, 201):
            expected = factorial_valuation(a + b, p) - factorial_valuation(a, p) - factorial_valuation(b, p)
            assert kummer_valuation(a, b, p) == expected


def test_p_valuation():
    assert p_valuation(48, 2) == 4
    assert p_valuation(7, 3) == 0
    with pytest.raises(DomainError):
        p_valuation(0, 2)
