from fractions import Fraction
from math import prod

import pytest

from hyperhopf.character import (
    Character,
    GeneratorFamily,
    convolve_on_h,
    convolve_on_p,
    counit_character,
    hypertree_family,
    left_identity_sum,
    left_identity_terms,
    moebius_by_recurrence,
    moebius_closed,
    mu_character,
    weighted_series_coefficient,
    zeta_character,
)
from hyperhopf.errors import MissingTable, SizeLimitExceeded
from hyperhopf.hypertree import build_hypertree_poset
from hyperhopf.poset import moebius_number
from oracles import hypertrees_by_subsets


def test_generator_values():
    z = zeta_character()
    assert z.p(5) == 1 and z.h(4) == 1 and z.epsilon == 1
    m = mu_character(5)
    assert m.p(4) == -6
    assert m.h(3) == -2
    assert m.h(4) == 9
    assert m.h(2) == 1
    assert m.hat_h(3) == 2


def test_mu_methods_agree():
    values = [mu_character(6, method) for method in ("poset", "recurrence", "closed")]
    for j in range(2, 7):
        assert len({m.h(j) for m in values}) == 1
    with pytest.raises(ValueError):
        mu_character(4, "guess")
    with pytest.raises(SizeLimitExceeded):
        mu_character(9)


def test_epsilon_consistency():
    # value on the augmented poset is epsilon times the sum function
    m = mu_character(5, "poset")
    for j in range(2, 6):
        assert m.hat_h(j) == moebius_number(build_hypertree_poset(j, augmented=True))


def test_inverse_law():
    fam = hypertree_family(6)
    z, m = zeta_character(), mu_character(6)
    for i in range(1, 7):
        assert convolve_on_p(z, m, fam, i) == (1 if i == 1 else 0)
        assert convolve_on_p(m, z, fam, i) == (1 if i == 1 else 0)
    for j in range(2, 7):
        assert convolve_on_h(z, m, fam, j) == 0
        assert convolve_on_h(m, z, fam, j) == 0


def test_counit_is_identity():
    fam = hypertree_family(5)
    e = counit_character()
    for a in (zeta_character(), mu_character(5)):
        for j in range(2, 6):
            assert convolve_on_h(e, a, fam, j) == a.hat_h(j)
            assert convolve_on_h(a, e, fam, j) == a.hat_h(j)
        for i in range(1, 6):
            assert convolve_on_p(e, a, fam, i) == a.p(i)
    assert convolve_on_p(e, zeta_character(), fam, 4) == 1
    assert convolve_on_p(mu_character(5), zeta_character(), fam, 3) == 0


def test_zeta_squared_counts_chains():
    # zeta * zeta sums 1 over the elements: Bell numbers on p_n
    fam = hypertree_family(5)
    z = zeta_character()
    assert [convolve_on_p(z, z, fam, i) for i in range(1, 6)] == [1, 2, 5, 15, 52]
    # and the size of the augmented poset on hat h_n
    assert [convolve_on_h(z, z, fam, j) for j in range(2, 6)] == [2, 5, 30, 312]


def test_missing_table():
    fam = GeneratorFamily({}, {})
    with pytest.raises(MissingTable):
        convolve_on_h(zeta_character(), zeta_character(), fam, 3)
    with pytest.raises(MissingTable):
        mu_character(3).h(4)
    c = Character({1: Fraction(1)}, {}, Fraction(1))
    with pytest.raises(MissingTable):
        c.p(2)


def test_recurrence_and_closed_form():
    assert [moebius_closed(n) for n in range(2, 8)] == [-1, 2, -9, 64, -625, 7776]
    assert [moebius_by_recurrence(n) for n in range(2, 8)] == [-1, 2, -9, 64, -625, 7776]
    for n in range(2, 6):
        assert moebius_number(build_hypertree_poset(n, augmented=True)) == moebius_closed(n)


def test_recurrence_by_raw_enumeration():
    # sum over h > bottom of prod(-mu) minus one, straight from the subset oracle
    for n in range(2, 7):
        total = 0
        for edges in hypertrees_by_subsets(n):
            if len(edges) > 1:
                total += prod(-moebius_closed(len(e)) for e in edges)
        assert total - 1 == moebius_closed(n)


def test_left_identity():
    assert [t for _, t in left_identity_terms(4)] == [-1, 12, -12, -8]
    # confirmed term by term from the poset coproduct tally
    assert [t for _, t in left_identity_terms(5)] == [-1, 20, 15, -120, -60, 60, 120, 30]
    assert [left_identity_sum(n) for n in range(2, 8)] == [-1, 2, -9, 64, -625, 7776]
    assert [t for _, t in left_identity_terms(3)] == [-1, 3]


def test_weighted_series_is_one():
    # hand-checked at n = 3: -mu(hat HT_3) = -2 for the single edge, 1 for each of the 3 others
    for n in range(2, 7):
        assert weighted_series_coefficient(n) == 1
    brute = sum(prod(-moebius_closed(len(e)) for e in edges) for edges in hypertrees_by_subsets(5))
    assert brute == 1
