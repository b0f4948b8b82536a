"""Set partitions of {1..n} and the partition poset.

Orientation: the coarsest partition (one block) is the least element and the
partition into singletons is the greatest, so ``p <= q`` means q refines p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from . import limits
from .errors import InvalidPartition, SizeMismatch
from .poset import FinitePoset


@dataclass(frozen=True, order=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        seen = [v for b in blocks for v in b]
        if any(len(b) == 0 for b in blocks):
            raise InvalidPartition("empty block")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise InvalidPartition(f"blocks {blocks} do not partition 1..{self.n}")

    @classmethod
    def of(cls, *blocks: Sequence[int]) -> "SetPartition":
        n = sum(len(b) for b in blocks)
        return cls(n, tuple(tuple(b) for b in blocks))

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_type(self) -> tuple[int, ...]:
        """``j`` with ``j[i-1]`` = number of blocks of size i (trailing zeros trimmed)."""
        counts = [0] * self.n
        for b in self.blocks:
            counts[len(b) - 1] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items``; blocks come out ordered by first item."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def bell(n: int) -> int:
    """Bell number from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def enumerate_partitions(n: int, max_n: int | None = None) -> list[SetPartition]:
    """All partitions of {1..n}, coarsest first (by block count, then blocks)."""
    limits.check("partition n", n, max_n, "partition_n")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[SetPartition, ...]:
    if n < 1:
        raise ValueError("n must be at least 1")
    parts = [SetPartition(n, tuple(map(tuple, p))) for p in set_partitions(range(1, n + 1))]
    return tuple(sorted(parts, key=lambda p: (len(p.blocks), p.blocks)))


def partition_leq(p: SetPartition, q: SetPartition) -> bool:
    """True iff every block of ``p`` is a union of blocks of ``q``."""
    if p.n != q.n:
        raise SizeMismatch(f"partitions of {p.n} and {q.n} elements")
    owner = {}
    for i, b in enumerate(p.blocks):
        for v in b:
            owner[v] = i
    return all(len({owner[v] for v in b}) == 1 for b in q.blocks)


def build_partition_poset(n: int, max_n: int | None = None) -> FinitePoset:
    parts = enumerate_partitions(n, max_n)
    return _partition_poset(n, tuple(parts))


@lru_cache(maxsize=16)
def _partition_poset(n: int, parts: tuple[SetPartition, ...]) -> FinitePoset:
    # label each element by its block-index vector; q refines p iff the map
    # block_q(v) -> block_p(v) is well defined
    vecs = np.empty((len(parts), n), dtype=np.int64)
    for r, p in enumerate(parts):
        for i, b in enumerate(p.blocks):
            for v in b:
                vecs[r, v - 1] = i
    m = np.ones((len(parts), len(parts)), dtype=bool)
    for a in range(n):
        for b in range(a + 1, n):
            same = vecs[:, a] == vecs[:, b]
            # if q joins a and b then so must p
            m &= ~(same[None, :] & ~same[:, None])
    return FinitePoset._trusted(parts, m)


def partition_moebius_closed(n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return (-1) ** (n - 1) * factorial(n - 1)
