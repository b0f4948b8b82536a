"""Cross-checks between closed formulas and brute force, up to a given size.

Each check returns a :class:`CheckResult`; the CLI ``verify`` verb runs
:func:`run_all` and reports one line per check.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable

import numpy as np

from . import limits
from .character import (
    convolve_on_h,
    convolve_on_p,
    hypertree_family,
    left_identity_sum,
    moebius_by_recurrence,
    moebius_closed,
    mu_character,
    weighted_series_coefficient,
    zeta_character,
)
from .coproduct import (
    check_rows,
    coproduct_bruteforce_poset,
    coproduct_h,
    coproduct_p,
    partition_factorizer,
)
from .hooked import (
    alpha_of_word,
    decode,
    encode,
    hooked_partitions,
    phi,
    reconcile_c_and_d,
    word_count,
)
from .hypertree import (
    RootedHypertree,
    build_hypertree_poset,
    enumerate_hypertrees,
    profile_of,
)
from .partition import build_partition_poset, partition_moebius_closed
from .poset import (
    FinitePoset,
    are_isomorphic,
    direct_product,
    half_open_upper,
    interval,
    moebius_number,
    product_of,
    sum_function,
    validate,
)
from .profile import enumerate_profiles


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_hypertree_counts(N: int) -> CheckResult:
    got = [len(enumerate_hypertrees(n)) for n in range(2, N + 1)]
    want = [coproduct_h(n).total() for n in range(2, N + 1)]
    return CheckResult("hypertree counts", got == want, f"enumerated {got}, closed {want}")


def check_profiles(N: int) -> CheckResult:
    bad = [
        n for n in range(2, N + 1)
        if set(enumerate_profiles(n)) != {profile_of(t) for t in enumerate_hypertrees(n)}
    ]
    return CheckResult("profile criterion", not bad, f"mismatch at n={bad}" if bad else "")


def check_coproduct(N: int) -> CheckResult:
    bad = [(r["n"], r["alpha"], r["pi"]) for n in range(2, N + 1) for r in check_rows(n) if not r["match"]]
    return CheckResult("coproduct closed vs brute force", not bad, f"mismatches {bad}" if bad else "")


def check_moebius(N: int) -> CheckResult:
    rows = []
    ok = True
    for n in range(2, N + 1):
        closed, rec = moebius_closed(n), moebius_by_recurrence(n)
        poset = None
        if len(enumerate_hypertrees(n)) + 1 <= limits.current().poset_elements:
            poset = moebius_number(build_hypertree_poset(n, augmented=True))
        ok &= closed == rec and poset in (None, closed)
        rows.append(f"n={n}:{poset},{rec},{closed}")
    return CheckResult("Moebius three-way", ok, " ".join(rows))


def check_code(N: int) -> CheckResult:
    """Encode/decode in both directions, plus fibre sizes against the word count."""
    problems = []
    for n in range(1, N + 1):
        for T in enumerate_hypertrees(n):
            for r in range(1, n + 1):
                R = RootedHypertree(T, r)
                if decode(phi(R), encode(R)) != R:
                    problems.append(f"decode(encode) on {T} root {r}")
        for prof_pi in sorted({p.pi for p in enumerate_profiles(n)}) if n >= 2 else []:
            for P in hooked_partitions(n, prof_pi):
                sizes: Counter = Counter()
                for w in product(range(1, n + 1), repeat=P.word_length):
                    R = decode(P, w)
                    if phi(R) != P or encode(R) != w:
                        problems.append(f"encode(decode) on {P} word {w}")
                    alpha = alpha_of_word(w, n)
                    if profile_of(R.tree).alpha != alpha:
                        problems.append(f"valencies of decode({P}, {w})")
                    sizes[alpha] += 1
                for alpha, size in sizes.items():
                    if size != word_count(n, alpha, P.word_length):
                        problems.append(f"fibre of {P} at alpha={alpha}")
        for p in enumerate_profiles(n) if n >= 2 else []:
            if reconcile_c_and_d(p) != coproduct_h(n).terms[p]:
                problems.append(f"c vs d at {p}")
    return CheckResult("word code and fibres", not problems, "; ".join(problems[:5]))


def check_partitions(N: int) -> CheckResult:
    bad = []
    for n in range(1, N + 1):
        P = build_partition_poset(n)
        if moebius_number(P) != partition_moebius_closed(n):
            bad.append(f"mu(Pi_{n})")
        if coproduct_bruteforce_poset(P, partition_factorizer, n).terms != coproduct_p(n).terms:
            bad.append(f"Delta p_{n}")
    return CheckResult("partition layer", not bad, ", ".join(bad))


def check_characters(N: int) -> CheckResult:
    fam = hypertree_family(N)
    z, m = zeta_character(), mu_character(N, "recurrence")
    bad = []
    for i in range(1, N + 1):
        want = int(i == 1)
        if convolve_on_p(z, m, fam, i) != want or convolve_on_p(m, z, fam, i) != want:
            bad.append(f"p{i}")
    for j in range(2, N + 1):
        if convolve_on_h(z, m, fam, j) != 0 or convolve_on_h(m, z, fam, j) != 0:
            bad.append(f"hat h{j}")
    return CheckResult("zeta and mu are inverse", not bad, ", ".join(bad))


def check_left_identity(N: int) -> CheckResult:
    got = {n: left_identity_sum(n) for n in range(2, N + 1)}
    ok = all(v == moebius_closed(n) for n, v in got.items())
    return CheckResult("left-sided identity", ok, str(got))


def check_weighted_series(N: int) -> CheckResult:
    got = {n: int(weighted_series_coefficient(n)) for n in range(2, N + 1)}
    return CheckResult("weighted hypertree sum equals 1", all(v == 1 for v in got.values()), str(got))


def check_factorizations(N: int) -> CheckResult:
    bad = []
    for n in range(2, min(N, 5) + 1):
        hat = build_hypertree_poset(n, augmented=True)
        bottom = hat.least
        for T in enumerate_hypertrees(n):
            lower = product_of([build_partition_poset(v) for v in T.valencies().values()])
            upper = product_of([build_hypertree_poset(len(e)) for e in T.edges])
            if not are_isomorphic(interval(hat, bottom, T), lower):
                bad.append(f"[0,{T}]")
            if not are_isomorphic(half_open_upper(hat, T), upper):
                bad.append(f"[{T},1)")
    return CheckResult("interval factorizations", not bad, ", ".join(bad[:5]))


def random_poset(rng: random.Random, size: int, density: float = 0.4) -> FinitePoset:
    """Random poset with a least element: closure of a random DAG on 0 < 1 < ... ."""
    m = np.eye(size, dtype=bool)
    m[0, :] = True
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < density:
                m[i, j] = True
    for k in range(size):
        m[m[:, k]] |= m[k]
    return validate(m)


def check_sum_function(N: int, trials: int = 25, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        P = random_poset(rng, rng.randint(1, 6))
        Q = random_poset(rng, rng.randint(1, 6))
        if sum_function(direct_product(P, Q)) != sum_function(P) * sum_function(Q):
            bad += 1
    return CheckResult("sum function multiplicative", bad == 0, f"{bad} of {trials} pairs failed")


def moebius_row_sums_vanish(P: FinitePoset) -> bool:
    """sum_{x <= z <= y} mu(x, z) = 0 for every x < y."""
    for x in range(len(P)):
        mu = P._mu_from(x)
        for y in np.flatnonzero(P.leq[x]):
            if y == x:
                continue
            if sum(mu[int(z)] for z in np.flatnonzero(P.leq[x] & P.leq[:, y])) != 0:
                return False
    return True


def check_row_sums(N: int) -> CheckResult:
    n = min(N, 4)
    ok = moebius_row_sums_vanish(build_hypertree_poset(n, augmented=True)) and moebius_row_sums_vanish(
        build_partition_poset(n)
    )
    return CheckResult(f"Moebius row sums vanish (n={n})", ok)


CHECKS: list[Callable[[int], CheckResult]] = [
    check_hypertree_counts,
    check_moebius,
    check_coproduct,
    check_profiles,
    check_code,
    check_partitions,
    check_characters,
    check_left_identity,
    check_factorizations,
    check_weighted_series,
    check_sum_function,
    check_row_sums,
]


def run_all(N: int) -> list[CheckResult]:
    limits.check("hypertree n", N, None, "hypertree_n")
    return [check(N) for check in CHECKS]
