"""
Exact irreducible character values of symmetric groups.

Values come from the Murnaghan-Nakayama recursion: the largest remaining
cycle length is stripped from the class at every level and the value is
summed over the rim hooks of that length, each signed by its leg length.
Intermediate results are memoized on (sub-partition, remaining parts).
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from symchar.exceptions import ConsistencyError, DomainError
from symchar.models.reports import CharacterRow, TableExport
from symchar.services.cache import MemoCache, memo_cache
from symchar.services.partition_core import (
    Node,
    Parity,
    Partition,
    Parts,
    centralizer_size,
    conjugate_parts,
    format_partition,
    hook_grid,
    nodes_with_hook_length,
    parity,
    partitions_of,
    remove_rim_parts,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RemovalSequence:
    """One way of stripping hooks of lengths beta_1, ..., beta_s in turn."""
    nodes: Tuple[Node, ...]
    result: Partition
    sign: int


@dataclass
class CharacterTable:
    """
    Square table of chi^alpha(beta).

    Rows run over the characters in reverse lexicographic order; columns
    run over the classes in the opposite order, starting at (1^n), so the
    first column holds the degrees.
    """
    n: int
    characters: List[Partition]
    classes: List[Partition]
    values: List[List[int]]
    centralizers: List[int] = field(default_factory=list)

    def value(self, alpha: Partition, beta: Partition) -> int:
        return self.values[self.characters.index(alpha)][self.classes.index(beta)]

    @property
    def degrees(self) -> List[int]:
        return [row[0] for row in self.values]

    def to_dataframe(self) -> pd.DataFrame:
        """Decimal-string DataFrame; strings keep big integers exact."""
        return pd.DataFrame(
            [[str(v) for v in row] for row in self.values],
            index=pd.Index([format_partition(a) for a in self.characters], name="character"),
            columns=[format_partition(b) for b in self.classes],
        )

    def to_csv(self) -> str:
        return self.to_dataframe().to_csv(lineterminator="\n")

    def to_export(self) -> TableExport:
        return TableExport(
            n=self.n,
            classes=[format_partition(b) for b in self.classes],
            characters=[
                CharacterRow(partition=format_partition(a), values=[str(v) for v in row])
                for a, row in zip(self.characters, self.values)
            ],
        )

    def to_json(self) -> str:
        return self.to_export().model_dump_json(indent=2)


@lru_cache(maxsize=None)
def _degree_of(parts: Parts) -> int:
    product = 1
    for row in hook_grid(Partition(parts)).rows:
        for h in row:
            product *= h
    quotient, remainder = divmod(math.factorial(sum(parts)), product)
    if remainder:
        raise ConsistencyError(f"Hook product does not divide n! for ({','.join(map(str, parts))})")
    return quotient


def degree(alpha: Partition) -> int:
    """n! divided by the product of all hook lengths."""
    return _degree_of(alpha.parts)


def is_p_singular(alpha: Partition, p: int) -> bool:
    return degree(alpha) % p == 0


class CharacterEngine:
    """Memoized Murnaghan-Nakayama evaluator."""

    def __init__(self, cache: Optional[MemoCache] = None):
        self.cache = cache if cache is not None else memo_cache

    def value(self, alpha: Partition, beta: Partition) -> int:
        """chi^alpha(beta)."""
        if alpha.n != beta.n:
            raise DomainError(
                f"Character and class sizes differ: |{format_partition(alpha)}| = {alpha.n}, "
                f"|{format_partition(beta)}| = {beta.n}"
            )
        return self._evaluate(alpha.parts, beta.parts)

    def _evaluate(self, shape: Parts, rest: Parts) -> int:
        if not rest:
            return 1

        key = (shape, rest)
        cached = self.cache.get(key)
        if cached is not None:
            return cached

        k = rest[0]
        remaining = rest[1:]
        conj = conjugate_parts(shape)
        total = 0
        # no hook is longer than the (1,1)-hook
        if k <= shape[0] + conj[0] - 1:
            for i, j in nodes_with_hook_length(shape, conj, k):
                smaller, leg = remove_rim_parts(shape, conj, i, j)
                term = self._evaluate(smaller, remaining)
                total += -term if leg % 2 else term

        self.cache.set(key, total)
        return total

    def value_in_order(self, alpha: Partition, lengths: Sequence[int]) -> int:
        """
        chi^alpha at the class with the given cycle lengths, consuming them
        in exactly the given order and bypassing the memo cache.
        """
        if alpha.n != sum(lengths):
            raise DomainError(f"Cycle lengths {list(lengths)} do not sum to {alpha.n}")
        if any(k <= 0 for k in lengths):
            raise DomainError(f"Cycle lengths must be positive, got {list(lengths)}")
        return self._evaluate_in_order(alpha.parts, tuple(lengths))

    def _evaluate_in_order(self, shape: Parts, lengths: Tuple[int, ...]) -> int:
        if not lengths:
            return 1
        conj = conjugate_parts(shape)
        total = 0
        for i, j in nodes_with_hook_length(shape, conj, lengths[0]):
            smaller, leg = remove_rim_parts(shape, conj, i, j)
            total += (-1) ** leg * self._evaluate_in_order(smaller, lengths[1:])
        return total

    def conjugate_value(self, alpha: Partition, beta: Partition) -> int:
        """chi^(alpha transpose)(beta) from chi^alpha(beta) and the parity of beta."""
        value = self.value(alpha, beta)
        return -value if parity(beta) is Parity.ODD else value

    def removal_sequences(self, alpha: Partition, prefix: Sequence[int]) -> List[RemovalSequence]:
        """
        All ways to remove hooks of lengths prefix[0], prefix[1], ... in turn,
        each with the resulting partition and the product of leg signs.
        """
        if any(k <= 0 for k in prefix):
            raise DomainError(f"Hook lengths must be positive, got {list(prefix)}")
        if sum(prefix) > alpha.n:
            raise DomainError(f"Hook lengths {list(prefix)} exceed |alpha| = {alpha.n}")

        found: List[RemovalSequence] = []

        def walk(shape: Parts, step: int, nodes: Tuple[Node, ...], sign: int):
            if step == len(prefix):
                found.append(RemovalSequence(nodes, Partition(shape), sign))
                return
            conj = conjugate_parts(shape)
            for node in nodes_with_hook_length(shape, conj, prefix[step]):
                smaller, leg = remove_rim_parts(shape, conj, node.i, node.j)
                walk(smaller, step + 1, nodes + (node,), -sign if leg % 2 else sign)

        walk(alpha.parts, 0, (), 1)
        return found

    def column(self, beta: Partition, characters: Sequence[Partition]) -> List[int]:
        return [self._evaluate(alpha.parts, beta.parts) for alpha in characters]

    def table(self, n: int, jobs: int = 1, max_n: Optional[int] = None) -> CharacterTable:
        """The full character table of S_n, optionally evaluated column-parallel."""
        if n < 0:
            raise DomainError(f"n must be nonnegative, got {n}")
        if max_n is not None and n > max_n:
            raise DomainError(f"n = {n} exceeds the table bound {max_n}")

        characters = list(partitions_of(n))
        classes = characters[::-1]
        logger.info(f"Computing character table of S_{n}: {len(characters)} x {len(classes)}")

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                columns = list(pool.map(lambda beta: self.column(beta, characters), classes))
        else:
            columns = [self.column(beta, characters) for beta in classes]

        values = [[columns[c][r] for c in range(len(classes))] for r in range(len(characters))]
        logger.debug(f"Memo cache after S_{n}: {self.cache.get_stats()}")
        return CharacterTable(
            n=n,
            characters=characters,
            classes=classes,
            values=values,
            centralizers=[centralizer_size(beta) for beta in classes],
        )


# Singleton instance
character_engine = CharacterEngine()


def mn_value(alpha: Partition, beta: Partition) -> int:
    return character_engine.value(alpha, beta)


def character_table(n: int, jobs: int = 1, max_n: Optional[int] = None) -> CharacterTable:
    return character_engine.table(n, jobs=jobs, max_n=max_n)


def removal_sequences(alpha: Partition, prefix: Sequence[int]) -> List[RemovalSequence]:
    return character_engine.removal_sequences(alpha, prefix)
