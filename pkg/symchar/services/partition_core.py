"""
Partition arithmetic, Young-diagram hook machinery and p-adic classification.

Partitions are stored weakly decreasing and node indices are 1-based,
so (i, j) is the box in row i and column j of the Young diagram.
"""

import math
import re
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import groupby
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Tuple

from sympy import factorint, isprime, multiplicity

from symchar.config import MAX_PARTITION_SIZE
from symchar.exceptions import DomainError, PartitionParseError

logger = logging.getLogger(__name__)

Parts = Tuple[int, ...]

TOKEN_PATTERN = re.compile(r"^(\d+)(?:\^(\d+))?$")
EMPTY_PARTITION_TEXT = "()"


class Node(NamedTuple):
    """The (i, j) node of a Young diagram, 1-based."""
    i: int
    j: int


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class FactoredInt(NamedTuple):
    value: int
    factors: Dict[int, int]


@dataclass(frozen=True)
class Partition:
    """
    A partition of n as a weakly decreasing tuple of positive integers.

    Any iterable of positive integers is accepted; it is sorted into
    canonical order, so Partition((1, 3)) == Partition((3, 1)).
    """
    parts: Parts = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise DomainError(f"Partition parts must be positive integers, got {parts!r}")
        if sum(parts) > MAX_PARTITION_SIZE:
            raise DomainError(f"Partition size exceeds the supported bound {MAX_PARTITION_SIZE}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class MultiplicityForm:
    """(r_1^k_1, ..., r_m^k_m) with r_1 > ... > r_m and every k_i > 0."""
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def values(self) -> Parts:
        return tuple(r for r, _ in self.pairs)

    @property
    def multiplicities(self) -> Parts:
        return tuple(k for _, k in self.pairs)

    def to_partition(self) -> Partition:
        return Partition(tuple(r for r, k in self.pairs for _ in range(k)))


@dataclass(frozen=True)
class HookGrid:
    """Hook lengths of every node, row by row."""
    rows: Tuple[Parts, ...]

    def hook(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @cached_property
    def hook_multiset(self) -> Counter:
        return Counter(h for row in self.rows for h in row)

    @property
    def hook_set(self) -> FrozenSet[int]:
        return frozenset(self.hook_multiset)


@dataclass(frozen=True)
class PAdicDigits:
    """n = sum(a_i * p**i), least significant digit first."""
    p: int
    digits: Parts

    @property
    def value(self) -> int:
        return sum(a * self.p ** i for i, a in enumerate(self.digits))


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """
    Parse comma-separated `v` / `v^k` tokens, e.g. "13,5,2^3,1^8".

    Whitespace is ignored and surrounding parentheses are optional; an
    empty string or "()" is the empty partition.
    """
    compact = re.sub(r"\s+", "", text)
    if compact.startswith("(") and compact.endswith(")"):
        compact = compact[1:-1]
    if not compact:
        return Partition(())

    parts: List[int] = []
    total = 0
    for token in compact.split(","):
        if not token:
            raise PartitionParseError(token, "empty token")
        match = TOKEN_PATTERN.match(token)
        if match is None:
            raise PartitionParseError(token, "expected 'v' or 'v^k' with positive integers")
        value = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if value == 0:
            raise PartitionParseError(token, "part values must be positive")
        if count == 0:
            raise PartitionParseError(token, "exponents must be positive")
        total += value * count
        if total > MAX_PARTITION_SIZE:
            raise DomainError(f"Partition size exceeds the supported bound {MAX_PARTITION_SIZE}")
        parts.extend([value] * count)

    return Partition(tuple(parts))


def format_parts(parts: Parts) -> str:
    if not parts:
        return EMPTY_PARTITION_TEXT
    tokens = []
    for value, run in groupby(parts):
        count = sum(1 for _ in run)
        tokens.append(f"{value}^{count}" if count > 1 else str(value))
    return ",".join(tokens)


def format_partition(alpha: Partition) -> str:
    """Exponent-compressed canonical text, e.g. "2^3,1^8"."""
    return format_parts(alpha.parts)


# ---------------------------------------------------------------------------
# Shape combinatorics
# ---------------------------------------------------------------------------

def conjugate_parts(parts: Parts) -> Parts:
    if not parts:
        return ()
    conj = []
    height = len(parts)
    for column in range(1, parts[0] + 1):
        while parts[height - 1] < column:
            height -= 1
        conj.append(height)
    return tuple(conj)


def conjugate(alpha: Partition) -> Partition:
    return Partition(conjugate_parts(alpha.parts))


def is_self_conjugate(alpha: Partition) -> bool:
    return conjugate_parts(alpha.parts) == alpha.parts


def multiplicity_form(alpha: Partition) -> MultiplicityForm:
    return MultiplicityForm(tuple((value, sum(1 for _ in run)) for value, run in groupby(alpha.parts)))


def hook_grid(alpha: Partition) -> HookGrid:
    parts = alpha.parts
    conj = conjugate_parts(parts)
    rows = tuple(
        tuple(row - j + conj[j - 1] - i + 1 for j in range(1, row + 1))
        for i, row in enumerate(parts, start=1)
    )
    return HookGrid(rows)


def nodes_with_hook_length(parts: Parts, conj: Parts, k: int) -> Iterator[Node]:
    """Nodes of hook length k; conj must be conjugate_parts(parts)."""
    if not parts:
        return
    for i, row in enumerate(parts, start=1):
        # hook lengths along a row strictly decrease with j
        if k > row + conj[0] - i or k < conj[row - 1] - i + 1:
            continue
        for j in range(1, row + 1):
            h = row - j + conj[j - 1] - i + 1
            if h == k:
                yield Node(i, j)
                break
            if h < k:
                break


def hooks_of_length(alpha: Partition, k: int) -> FrozenSet[Node]:
    if k < 1:
        raise DomainError(f"Hook length must be positive, got {k}")
    parts = alpha.parts
    return frozenset(nodes_with_hook_length(parts, conjugate_parts(parts), k))


def remove_rim_parts(parts: Parts, conj: Parts, i: int, j: int) -> Tuple[Parts, int]:
    """Strip the (i, j)-rim; returns the remaining parts and the leg length."""
    last = conj[j - 1]
    leg = last - i
    new = list(parts)
    for row in range(i, last):
        new[row - 1] = parts[row] - 1
    new[last - 1] = j - 1
    return tuple(x for x in new if x > 0), leg


def remove_rim_hook(alpha: Partition, node: Node) -> Tuple[Partition, int]:
    i, j = node
    parts = alpha.parts
    if not (1 <= i <= len(parts) and 1 <= j <= parts[i - 1]):
        raise DomainError(f"Node ({i},{j}) is not a node of [{format_partition(alpha)}]")
    remaining, leg = remove_rim_parts(parts, conjugate_parts(parts), i, j)
    return Partition(remaining), leg


def h_weight(alpha: Partition, h: int) -> int:
    """Number of hook lengths divisible by h."""
    if h < 1:
        raise DomainError(f"h must be positive, got {h}")
    return sum(count for length, count in hook_grid(alpha).hook_multiset.items() if length % h == 0)


@lru_cache(maxsize=None)
def _removable_hook_count(parts: Parts, h: int) -> int:
    conj = conjugate_parts(parts)
    best = 0
    for i, j in nodes_with_hook_length(parts, conj, h):
        remaining, _ = remove_rim_parts(parts, conj, i, j)
        best = max(best, 1 + _removable_hook_count(remaining, h))
    return best


def h_weight_by_removal(alpha: Partition, h: int) -> int:
    """Maximum number of h-hooks that can be removed one after another."""
    if h < 1:
        raise DomainError(f"h must be positive, got {h}")
    return _removable_hook_count(alpha.parts, h)


# ---------------------------------------------------------------------------
# Arithmetic of parts
# ---------------------------------------------------------------------------

def require_prime(p: int):
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f"{p} is not a prime")


def p_adic_digits(n: int, p: int) -> PAdicDigits:
    require_prime(p)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    digits = []
    while n:
        n, digit = divmod(n, p)
        digits.append(digit)
    return PAdicDigits(p, tuple(digits))


def p_valuation(x: int, p: int) -> int:
    if x <= 0:
        raise DomainError(f"p-valuation needs a positive integer, got {x}")
    return int(multiplicity(p, x))


def is_p_adic_type(beta: Partition, p: int) -> bool:
    """Parts exactly divisible by p^i must sum to a_i * p^i for every i."""
    digits = p_adic_digits(beta.n, p).digits
    sums: Counter = Counter()
    for part in beta.parts:
        sums[p_valuation(part, p)] += part
    for i in set(sums) | set(range(len(digits))):
        expected = digits[i] * p ** i if i < len(digits) else 0
        if sums.get(i, 0) != expected:
            return False
    return True


def parity(beta: Partition) -> Parity:
    return Parity.ODD if sum(part - 1 for part in beta.parts) % 2 else Parity.EVEN


def lcm_of_parts(beta: Partition) -> FactoredInt:
    if not beta.parts:
        raise DomainError("lcm of the empty partition is undefined")
    value = math.lcm(*beta.parts)
    return FactoredInt(value, {int(q): int(e) for q, e in sorted(factorint(value).items())})


def centralizer_size(beta: Partition) -> int:
    """z_beta = prod over part values i of i^t_i * t_i!."""
    size = 1
    for value, count in Counter(beta.parts).items():
        size *= value ** count * math.factorial(count)
    return size


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of n once, in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield Partition(())
        return

    parts = [n]
    while True:
        yield Partition(tuple(parts))
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        remainder = len(parts) - k
        largest = parts[k] - 1
        del parts[k:]
        parts.append(largest)
        while remainder > largest:
            parts.append(largest)
            remainder -= largest
        if remainder:
            parts.append(remainder)


def kummer_valuation(a: int, b: int, p: int) -> int:
    """nu_p(binomial(a+b, b)), counted as the carries of a + b in base p."""
    require_prime(p)
    if a < 0 or b < 0:
        raise DomainError(f"Kummer valuation needs nonnegative arguments, got {a}, {b}")
    carries = 0
    carry = 0
    while a or b or carry:
        total = a % p + b % p + carry
        carry = 1 if total >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries
