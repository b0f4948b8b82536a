"""Hooked partitions and the word code for rooted hypertrees.

A rooted hypertree maps to a hooked partition by keeping, for every edge, the
vertices other than the one closest to the root; the removed vertex is the
"hook".  A rooted hypertree is then determined by its hooked partition and a
word of length (number of edges - 1) whose letters are the vertices the
hooked blocks attach to.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from . import limits
from .coproduct import hooked_partition_count
from .errors import (
    InconsistentLength,
    InfeasibleProfile,
    InvalidPartition,
    LengthMismatch,
    MalformedWord,
)
from .hypertree import Hypertree, RootedHypertree, root_distances, validate_hypertree
from .profile import Profile, is_feasible

Word = tuple[int, ...]


@dataclass(frozen=True)
class HookedPartition:
    n: int
    root: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        seen = sorted([self.root] + [v for b in blocks for v in b])
        if any(not b for b in blocks):
            raise InvalidPartition("hooked block without vertices")
        if seen != list(range(1, self.n + 1)):
            raise InvalidPartition(f"root {self.root} and blocks {blocks} do not partition 1..{self.n}")

    @property
    def type_pi(self) -> tuple[int, ...]:
        """``pi[j-2]`` = number of hooked blocks of size j-1."""
        sizes = Counter(len(b) + 1 for b in self.blocks)
        return tuple(sizes.get(j, 0) for j in range(2, max(sizes, default=1) + 1))

    @property
    def word_length(self) -> int:
        return max(len(self.blocks) - 1, 0)

    def to_json(self) -> dict:
        return {"n": self.n, "root": self.root, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "HookedPartition":
        return cls(int(data["n"]), int(data["root"]), tuple(tuple(b) for b in data["blocks"]))

    def __str__(self) -> str:
        return f"({self.root})" + "".join("(X|" + " ".join(map(str, b)) + ")" for b in self.blocks)


def parse_word(text: str | Iterable, n: int | None = None) -> Word:
    """Read a word from ``"1 6"``, ``"1,6"`` or a sequence of integers."""
    items = text.replace(",", " ").split() if isinstance(text, str) else list(text)
    try:
        word = tuple(int(x) for x in items)
    except (TypeError, ValueError) as exc:
        raise MalformedWord(f"cannot read word {text!r}") from exc
    if n is not None:
        bad = [v for v in word if not 1 <= v <= n]
        if bad:
            raise MalformedWord(f"letters {bad} not in 1..{n}")
    return word


def format_word(word: Word) -> str:
    return " ".join(map(str, word))


def phi(T: RootedHypertree) -> HookedPartition:
    _, parent = root_distances(T.tree, T.root)
    blocks = tuple(tuple(v for v in e if v != parent[i]) for i, e in enumerate(T.tree.edges))
    return HookedPartition(T.n, T.root, blocks)


def encode(T: RootedHypertree) -> Word:
    """Delete the minimal leaf edge and emit its petiole, until one edge is left.

    A leaf is an edge whose vertices other than the petiole (the vertex
    nearest the root) all have valency one; leaves are compared by the
    smallest of those vertices.
    """
    _, parent = root_distances(T.tree, T.root)
    alive = {i: (parent[i], frozenset(e) - {parent[i]}) for i, e in enumerate(T.tree.edges)}
    valency = Counter(v for e in T.tree.edges for v in e)
    word = []
    while len(alive) > 1:
        leaves = [
            (min(rest), i) for i, (_, rest) in alive.items() if all(valency[v] == 1 for v in rest)
        ]
        _, i = min(leaves)
        petiole, rest = alive.pop(i)
        word.append(petiole)
        valency[petiole] -= 1
        for v in rest:
            valency[v] -= 1
    return tuple(word)


def decode(P: HookedPartition, word: Sequence[int] | str) -> RootedHypertree:
    """Rebuild the rooted hypertree with hooked partition ``P`` and code ``word``."""
    word = parse_word(word, P.n)
    if len(word) != P.word_length:
        raise LengthMismatch(f"word of length {len(word)} for {len(P.blocks)} hooked blocks")
    unused = [frozenset(b) for b in P.blocks]
    if not unused:
        return RootedHypertree(validate_hypertree(P.n, []), P.root)
    edges = []
    for t, letter in enumerate(word):
        pending = set(word[t:])
        free = [b for b in unused if not (b & pending)]
        if not free:
            raise MalformedWord(f"no hooked block can attach to letter {letter} at position {t}")
        block = min(free, key=min)
        unused.remove(block)
        edges.append(block | {letter})
    (last,) = unused
    edges.append(last | {P.root})
    return RootedHypertree(validate_hypertree(P.n, edges), P.root)


def alpha_of_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    """Valency vector of any tree with code ``word``: vertex v has valency 1 + (#v in word)."""
    counts = Counter(word)
    valencies = Counter(1 + counts.get(v, 0) for v in range(1, n + 1))
    alpha = [valencies.get(i, 0) for i in range(1, max(valencies) + 1)]
    return tuple(alpha)


def _trim(alpha: Iterable[int]) -> tuple[int, ...]:
    out = list(alpha)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def words_with_alpha(n: int, alpha: Sequence[int], k: int) -> Iterator[Word]:
    """Every word of length k on 1..n whose letter multiplicities give ``alpha``, in lex order."""
    alpha = _trim(alpha)
    limits.check("words", n**k, None, "words")
    for word in product(range(1, n + 1), repeat=k):
        if alpha_of_word(word, n) == alpha:
            yield word


def fibre(P: HookedPartition, alpha: Sequence[int]) -> list[RootedHypertree]:
    return [decode(P, w) for w in words_with_alpha(P.n, alpha, P.word_length)]


def word_count(n: int, alpha: Sequence[int], k: int) -> int:
    """Number of words of length k on n letters with multiplicity vector alpha."""
    alpha = _trim(alpha)
    if sum(alpha) != n:
        raise InconsistentLength(f"alpha {alpha} has {sum(alpha)} vertices, expected {n}")
    if sum((i - 1) * a for i, a in enumerate(alpha, start=1)) != k:
        raise InconsistentLength(f"alpha {alpha} does not describe words of length {k}")
    denom = prod(factorial(i - 1) ** a * factorial(a) for i, a in enumerate(alpha, start=1))
    value = Fraction(factorial(k) * factorial(n), denom)
    assert value.denominator == 1
    return int(value)


def reconcile_c_and_d(p: Profile) -> int:
    """(1/n) x (#hooked partitions of type pi) x (#words); equals the coproduct coefficient."""
    if not is_feasible(p):
        raise InfeasibleProfile(str(p))
    value = Fraction(1, p.n) * hooked_partition_count(p) * word_count(p.n, p.alpha, p.k)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count for {p}")
    return int(value)


def hooked_partitions(n: int, pi: Sequence[int]) -> Iterator[HookedPartition]:
    """All hooked partitions of {1..n} of type ``pi``."""
    sizes = sorted((j - 1 for j, c in enumerate(pi, start=2) for _ in range(c)), reverse=True)
    if sum(sizes) != n - 1:
        raise InfeasibleProfile(f"type {tuple(pi)} needs {sum(sizes) + 1} vertices, not {n}")
    for root in range(1, n + 1):
        rest = tuple(v for v in range(1, n + 1) if v != root)
        for blocks in _split(rest, tuple(sizes)):
            yield HookedPartition(n, root, blocks)


def _split(items: tuple[int, ...], sizes: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    # the block holding the smallest item is chosen first; equal sizes are not double counted
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for pos, size in enumerate(sizes):
        if size in sizes[:pos]:
            continue
        remaining = sizes[:pos] + sizes[pos + 1:]
        for others in combinations(rest, size - 1):
            block = (first,) + others
            left = tuple(v for v in rest if v not in others)
            for tail in _split(left, remaining):
                yield (block,) + tail


def rooted(T: Hypertree, root: int) -> RootedHypertree:
    return RootedHypertree(T, root)
