"""Coproducts of the partition generators p_n and hypertree generators h_n.

Monomials in the generators are tuples of ``(kind, index, exponent)`` with
``kind`` in ``{"p", "h"}``; the unit generators p_1 and h_2 (both trivial
posets) are dropped.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Hashable, Iterable, Iterator

from .errors import FactorizationFailed, InfeasibleProfile
from .hypertree import Hypertree, enumerate_hypertrees, profile_of
from .partition import SetPartition, bell
from .poset import FinitePoset
from .profile import Profile, enumerate_profiles, integer_partitions, is_feasible

Monomial = tuple[tuple[str, int, int], ...]
UNITS = {("p", 1), ("h", 2)}


def monomial(kind: str, exponents: dict[int, int]) -> Monomial:
    return tuple(
        (kind, i, e) for i, e in sorted(exponents.items()) if e and (kind, i) not in UNITS
    )


def p_monomial(alpha: Iterable[int]) -> Monomial:
    return monomial("p", {i: a for i, a in enumerate(alpha, start=1)})


def h_monomial(pi: Iterable[int]) -> Monomial:
    return monomial("h", {j: c for j, c in enumerate(pi, start=2)})


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return " ".join(f"{k}{i}" + (f"^{e}" if e > 1 else "") for k, i, e in m)


@dataclass(frozen=True)
class BlockType:
    """Key of a partition-coproduct term: ``j[i-1]`` blocks of size i, ``k`` blocks in all."""

    j: tuple[int, ...]
    k: int

    def __post_init__(self):
        j = list(self.j)
        while j and j[-1] == 0:
            j.pop()
        object.__setattr__(self, "j", tuple(j))

    @property
    def n(self) -> int:
        return sum(i * c for i, c in enumerate(self.j, start=1))

    def sort_key(self):
        return (self.k, tuple(-c for c in self.j))


@dataclass(frozen=True)
class CoproductTable:
    """Delta(h_n) as a map from profiles to coefficients of p_alpha (x) h_pi."""

    n: int | None
    terms: dict = field(hash=False)

    def __post_init__(self):
        for key, c in self.terms.items():
            if not is_feasible(key):
                raise InfeasibleProfile(f"table key {key} is infeasible")
            if c <= 0:
                raise ValueError(f"non-positive coefficient {c} for {key}")

    def total(self) -> int:
        return sum(self.terms.values())

    def coefficients(self) -> list[int]:
        return list(self.terms.values())

    def tensor_terms(self) -> Iterator[tuple[Monomial, Monomial, int]]:
        for prof, c in self.terms.items():
            yield p_monomial(prof.alpha), h_monomial(prof.pi), c


@dataclass(frozen=True)
class PartitionCoproductTable:
    """Delta(p_n) keyed by block type.

    With the coarsest partition at the bottom, the lower interval below a
    partition with k blocks is a copy of Pi_k and the upper interval is the
    product of Pi_|B| over its blocks, so a key ``(j, k)`` stands for the
    tensor ``p_k (x) prod p_i^{j_i}``.
    """

    n: int | None
    terms: dict = field(hash=False)

    def __post_init__(self):
        for key in self.terms:
            if sum(key.j) != key.k or (self.n is not None and key.n != self.n):
                raise ValueError(f"inconsistent block type {key} for n={self.n}")

    def total(self) -> int:
        return sum(self.terms.values())

    def tensor_terms(self) -> Iterator[tuple[Monomial, Monomial, int]]:
        for key, c in self.terms.items():
            yield monomial("p", {key.k: 1}), p_monomial(key.j), c


# closed formulas


def _require_feasible(p: Profile) -> None:
    if not is_feasible(p):
        raise InfeasibleProfile(f"{p} violates the hypertree criterion")


def hooked_partition_count(p: Profile) -> Fraction:
    """n! / prod_j (j-1)!^pi_j pi_j!  (hooked partitions of type pi)."""
    denom = prod(factorial(j - 1) ** p.p(j) * factorial(p.p(j)) for j in range(2, len(p.pi) + 2))
    return Fraction(factorial(p.n), denom)


def coefficient_closed(p: Profile) -> int:
    """Number of hypertrees with profile ``p``, from the closed formula."""
    _require_feasible(p)
    n, k = p.n, p.k
    words = Fraction(
        factorial(k) * factorial(n),
        prod(factorial(i - 1) ** p.a(i) * factorial(p.a(i)) for i in range(1, len(p.alpha) + 1)),
    )
    value = Fraction(1, n) * hooked_partition_count(p) * words
    if value.denominator != 1:
        raise ArithmeticError(f"coefficient for {p} is not an integer: {value}")
    return int(value)


@lru_cache(maxsize=None)
def _profile_counts(n: int) -> Counter:
    return Counter(profile_of(t) for t in enumerate_hypertrees(n))


def coefficient_bruteforce(p: Profile, max_n: int | None = None) -> int:
    """Count the enumerated hypertrees whose profile is ``p``."""
    enumerate_hypertrees(p.n, max_n)  # cap check
    return _profile_counts(p.n)[p]


def coproduct_h(n: int) -> CoproductTable:
    if n < 2:
        raise ValueError("h_n is defined for n >= 2")
    return CoproductTable(n, {p: coefficient_closed(p) for p in enumerate_profiles(n)})


def hypertree_count(n: int) -> int:
    """|HT_n| from the closed formula."""
    if n == 1:
        return 1
    return coproduct_h(n).total()


def coproduct_p(n: int) -> PartitionCoproductTable:
    """Delta(p_n) from the divided-power formula, de-normalised to plain generators."""
    if n < 1:
        raise ValueError("p_n is defined for n >= 1")
    terms = {}
    for sizes in integer_partitions(n):
        j = [0] * n
        for s in sizes:
            j[s - 1] += 1
        k = len(sizes)
        multinomial = Fraction(factorial(k), prod(factorial(c) for c in j))
        # Delta(p_n / n!) carries multinomial * prod (p_i / i!)^j_i (x) p_k / k!
        value = multinomial * factorial(n) / (prod(factorial(i) ** c for i, c in enumerate(j, 1)) * factorial(k))
        if value.denominator != 1:
            raise ArithmeticError(f"partition coefficient for {sizes} is not an integer")
        terms[BlockType(tuple(j), k)] = int(value)
    ordered = dict(sorted(terms.items(), key=lambda kv: kv[0].sort_key()))
    return PartitionCoproductTable(n, ordered)


# brute force through the incidence coproduct


@dataclass(frozen=True)
class Factorization:
    key: Hashable
    lower: tuple[tuple[str, int], ...]
    upper: tuple[tuple[str, int], ...]


def generator_size(gen: tuple[str, int]) -> int:
    kind, i = gen
    return bell(i) if kind == "p" else hypertree_count(i)


def hypertree_factorizer(T: Hypertree) -> Factorization:
    """Lower interval: one partition poset per vertex; upper: one HT_j per edge."""
    return Factorization(
        profile_of(T),
        tuple(("p", v) for v in T.valencies().values()),
        tuple(("h", len(e)) for e in T.edges),
    )


def partition_factorizer(x: SetPartition) -> Factorization:
    sizes = x.block_sizes()
    j = [0] * x.n
    for s in sizes:
        j[s - 1] += 1
    return Factorization(
        BlockType(tuple(j), len(sizes)),
        (("p", len(sizes)),),
        tuple(("p", s) for s in sizes),
    )


def coproduct_bruteforce_poset(
    P: FinitePoset,
    factorizer: Callable[[Hashable], Factorization],
    n: int | None = None,
):
    """Tally ``sum_x [0, x] (x) [x, 1)`` over the elements of ``P``.

    ``P`` needs a least element; the right factor of x is its upper set in
    ``P``.  The factorizer classifies each element and the sizes of both
    intervals are checked against that classification.
    """
    lo = P.least_index
    if lo is None:
        raise FactorizationFailed("poset has no least element")
    below = P.leq.sum(axis=0)
    above = P.leq.sum(axis=1)
    tally: Counter = Counter()
    for idx, label in enumerate(P.elements):
        f = factorizer(label)
        lower_size = prod(generator_size(g) for g in f.lower)
        upper_size = prod(generator_size(g) for g in f.upper)
        if below[idx] != lower_size or above[idx] != upper_size:
            raise FactorizationFailed(
                f"{label}: intervals of sizes {below[idx]}, {above[idx]} "
                f"do not match predicted {lower_size}, {upper_size}"
            )
        tally[f.key] += 1
    keys = list(tally)
    if keys and all(isinstance(k, Profile) for k in keys):
        ordered = dict(sorted(tally.items(), key=lambda kv: kv[0].sort_key()))
        return CoproductTable(n, ordered)
    if keys and all(isinstance(k, BlockType) for k in keys):
        ordered = dict(sorted(tally.items(), key=lambda kv: kv[0].sort_key()))
        return PartitionCoproductTable(n, ordered)
    return dict(tally)


def check_rows(n: int, max_n: int | None = None) -> list[dict]:
    """Closed-formula vs brute-force rows for Delta(h_n)."""
    rows = []
    for p, closed in coproduct_h(n).terms.items():
        brute = coefficient_bruteforce(p, max_n)
        rows.append({"n": n, "alpha": p.alpha, "pi": p.pi, "closed": closed,
                     "bruteforce": brute, "match": closed == brute})
    return rows
