"""Characters on the partition/hypertree bialgebra and their convolution.

A character is stored by its values on generators: ``value_p(i)`` on the
partition poset p_i, ``value_h(j)`` on the (non-augmented) hypertree poset
h_j, and a scalar ``epsilon`` with ``a(hat h) = epsilon * value_h(h)`` on an
augmented poset.  Values on monomials are products of generator values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Mapping, Union

from . import limits
from .coproduct import (
    CoproductTable,
    Monomial,
    PartitionCoproductTable,
    coproduct_h,
    coproduct_p,
)
from .errors import MissingTable
from .hypertree import build_hypertree_poset, enumerate_hypertrees
from .partition import partition_moebius_closed
from .poset import moebius_number
from .profile import Profile

Values = Union[Mapping[int, Fraction], Callable[[int], Fraction]]


def _lookup(values: Values, index: int, what: str) -> Fraction:
    if callable(values):
        return Fraction(values(index))
    try:
        return Fraction(values[index])
    except KeyError:
        raise MissingTable(f"no value for {what}{index}") from None


@dataclass(frozen=True)
class Character:
    value_p: Values = field(repr=False)
    value_h: Values = field(repr=False)
    epsilon: Fraction
    name: str = ""

    def p(self, i: int) -> Fraction:
        return _lookup(self.value_p, i, "p")

    def h(self, j: int) -> Fraction:
        return _lookup(self.value_h, j, "h")

    def hat_h(self, j: int) -> Fraction:
        """Value on the augmented generator."""
        return self.epsilon * self.h(j)

    def on_monomial(self, m: Monomial) -> Fraction:
        out = Fraction(1)
        for kind, i, e in m:
            out *= (self.p(i) if kind == "p" else self.h(i)) ** e
        return out


def zeta_character() -> Character:
    return Character(lambda i: 1, lambda j: 1, Fraction(1), "zeta")


def counit_character() -> Character:
    # only the trivial poset (p_1, h_2) survives
    return Character(lambda i: int(i == 1), lambda j: int(j == 2), Fraction(0), "counit")


def moebius_closed(n: int) -> int:
    """Moebius number of the augmented hypertree poset on n vertices."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return (-1) ** (n - 1) * (n - 1) ** (n - 2)


def mu_character(max_n: int, method: str = "recurrence") -> Character:
    """The Moebius character, with hypertree values up to ``max_n``.

    ``method`` picks how mu(hat HT_j) is obtained: ``poset`` (explicit
    poset), ``recurrence`` or ``closed``.
    """
    limits.check("hypertree n", max_n, None, "hypertree_n")
    if method == "poset":
        hat = {j: moebius_number(build_hypertree_poset(j, augmented=True)) for j in range(2, max_n + 1)}
    elif method == "recurrence":
        hat = {j: moebius_by_recurrence(j) for j in range(2, max_n + 1)}
    elif method == "closed":
        hat = {j: moebius_closed(j) for j in range(2, max_n + 1)}
    else:
        raise ValueError(f"unknown method {method!r}")
    # s(HT_j) = -mu(hat HT_j)
    value_h = {j: Fraction(-m) for j, m in hat.items()}
    return Character(lambda i: partition_moebius_closed(i), value_h, Fraction(-1), "mu")


@dataclass
class GeneratorFamily:
    """Coproduct tables of the diamond (p_i) and triangle (h_j) generators."""

    diamond: dict[int, PartitionCoproductTable]
    triangle: dict[int, CoproductTable]

    def p_table(self, i: int) -> PartitionCoproductTable:
        try:
            return self.diamond[i]
        except KeyError:
            raise MissingTable(f"no coproduct table for p{i}") from None

    def h_table(self, j: int) -> CoproductTable:
        try:
            return self.triangle[j]
        except KeyError:
            raise MissingTable(f"no coproduct table for h{j}") from None


@lru_cache(maxsize=None)
def hypertree_family(max_n: int) -> GeneratorFamily:
    return GeneratorFamily(
        {i: coproduct_p(i) for i in range(1, max_n + 1)},
        {j: coproduct_h(j) for j in range(2, max_n + 1)},
    )


def convolve_on_p(a: Character, b: Character, fam: GeneratorFamily, i: int) -> Fraction:
    return sum(
        (c * a.on_monomial(left) * b.on_monomial(right) for left, right, c in fam.p_table(i).tensor_terms()),
        Fraction(0),
    )


def convolve_on_h(a: Character, b: Character, fam: GeneratorFamily, j: int) -> Fraction:
    """(a * b) on the augmented generator hat h_j."""
    inner = sum(
        (c * a.on_monomial(left) * b.on_monomial(right) for left, right, c in fam.h_table(j).tensor_terms()),
        Fraction(0),
    )
    # the extra term is x = top, where [0, top] is the whole augmented poset
    return b.epsilon * inner + a.epsilon * a.h(j)


# Moebius numbers of the augmented hypertree posets


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral Moebius value {x}")
    return int(x)


@lru_cache(maxsize=None)
def moebius_by_recurrence(n: int) -> int:
    """mu(hat HT_n) = sum over h > 0 of prod_{edges} (-mu(hat HT_|e|)) - 1.

    The sum is grouped by profile, so only the coproduct table of h_n and
    the smaller Moebius numbers are needed.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    total = Fraction(0)
    for prof, c in coproduct_h(n).terms.items():
        if prof.edge_count == 1:
            continue
        total += c * prod(
            Fraction(-moebius_by_recurrence(j)) ** prof.p(j) for j in range(2, len(prof.pi) + 2)
        )
    return _as_int(total - 1)


def left_identity_terms(n: int) -> list[tuple[Profile, int]]:
    """Signed terms ``-c * prod mu(Pi_i)^alpha_i`` in profile order."""
    out = []
    for prof, c in coproduct_h(n).terms.items():
        weight = prod(partition_moebius_closed(i) ** prof.a(i) for i in range(1, len(prof.alpha) + 1))
        out.append((prof, -c * weight))
    return out


def left_identity_sum(n: int) -> int:
    return sum(t for _, t in left_identity_terms(n))


def weighted_series_coefficient(n: int, max_n: int | None = None) -> Fraction:
    """Sum over hypertrees on n vertices of prod over edges of -mu(hat HT_|e|)."""
    trees = enumerate_hypertrees(n, max_n)
    weight = {j: -moebius_closed(j) for j in range(2, n + 1)}
    return Fraction(sum(prod(weight[len(e)] for e in t.edges) for t in trees))

