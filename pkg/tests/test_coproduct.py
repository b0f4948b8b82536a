from collections import Counter

import pytest

from hyperhopf.coproduct import (
    BlockType,
    CoproductTable,
    Factorization,
    coefficient_bruteforce,
    coefficient_closed,
    coproduct_bruteforce_poset,
    coproduct_h,
    coproduct_p,
    format_monomial,
    h_monomial,
    hypertree_count,
    hypertree_factorizer,
    p_monomial,
    partition_factorizer,
)
from hyperhopf.errors import FactorizationFailed, InfeasibleProfile
from hyperhopf.hypertree import build_hypertree_poset, profile_of
from hyperhopf.partition import build_partition_poset
from hyperhopf.poset import chain
from hyperhopf.profile import Profile, enumerate_profiles
from oracles import hypertrees_by_subsets


def test_printed_tables():
    assert coproduct_h(3).coefficients() == [1, 3]
    assert coproduct_h(4).coefficients() == [1, 12, 12, 4]


def test_frozen_tables_from_brute_force():
    # values confirmed by enumerating the posets
    assert coproduct_h(5).coefficients() == [1, 20, 15, 120, 30, 60, 60, 5]
    assert coproduct_h(6).coefficients() == [1, 30, 60, 300, 60, 450, 90, 1200, 900, 60, 360, 720, 90, 120, 6]


def test_closed_equals_bruteforce():
    for n in range(2, 7):
        for p in enumerate_profiles(n):
            assert coefficient_closed(p) == coefficient_bruteforce(p)


def test_closed_equals_subset_oracle():
    for n in range(2, 6):
        counts = Counter()
        for edges in hypertrees_by_subsets(n):
            val = Counter(v for e in edges for v in e)
            alpha = Counter(val.values())
            pi = Counter(len(e) for e in edges)
            counts[Profile(tuple(alpha[i] for i in range(1, max(alpha) + 1)),
                           tuple(pi[j] for j in range(2, max(pi) + 1)))] += 1
        assert counts == Counter(coproduct_h(n).terms)


def test_poset_coproduct_tally():
    for n in range(2, 6):
        table = coproduct_bruteforce_poset(build_hypertree_poset(n), hypertree_factorizer, n)
        assert isinstance(table, CoproductTable)
        assert table.terms == coproduct_h(n).terms
        assert list(table.terms) == list(coproduct_h(n).terms)


def test_partition_coproduct():
    for n in range(1, 7):
        brute = coproduct_bruteforce_poset(build_partition_poset(n), partition_factorizer, n)
        assert brute.terms == coproduct_p(n).terms
    # Stirling numbers of the second kind, grouped by the number of blocks
    by_k = Counter()
    for key, c in coproduct_p(5).terms.items():
        by_k[key.k] += c
    assert [by_k[k] for k in range(1, 6)] == [1, 15, 25, 10, 1]


def test_partition_coproduct_small():
    assert coproduct_p(4).terms == {
        BlockType((0, 0, 0, 1), 1): 1,
        BlockType((1, 0, 1), 2): 4,
        BlockType((0, 2), 2): 3,
        BlockType((2, 1), 3): 6,
        BlockType((4,), 4): 1,
    }


def test_factorization_mismatch_detected():
    # claims every element of a 3-chain sits above a copy of Pi_3 (5 elements)
    def wrong(x):
        return Factorization("key", (("p", 3),), ())

    with pytest.raises(FactorizationFailed):
        coproduct_bruteforce_poset(chain(3), wrong)


def test_units_are_dropped():
    assert p_monomial((3, 1)) == (("p", 2, 1),)
    assert h_monomial((3,)) == ()
    assert format_monomial(h_monomial((1, 2))) == "h3^2"
    terms = list(coproduct_h(4).tensor_terms())
    assert [(format_monomial(a), format_monomial(b), c) for a, b, c in terms] == [
        ("1", "h4", 1), ("p2", "h3", 12), ("p2^2", "1", 12), ("p3", "1", 4)
    ]


def test_infeasible_profile():
    with pytest.raises(InfeasibleProfile):
        coefficient_closed(Profile((3, 1), (3,)))


def test_hypertree_count_formula():
    # (n-1)-edge hypertrees are ordinary labelled trees
    for n in range(2, 8):
        trees = coproduct_h(n).terms
        binary = sum(c for p, c in trees.items() if p.pi == (n - 1,))
        assert binary == n ** (n - 2)
    assert [hypertree_count(n) for n in range(1, 8)] == [1, 1, 4, 29, 311, 4447, 79745]


def test_profile_of_matches_factorizer():
    T = build_hypertree_poset(4).elements[5]
    assert hypertree_factorizer(T).key == profile_of(T)
