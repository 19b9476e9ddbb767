import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hyperideals import (
    L2, N2, T2, Z2, FuzzySubset, characteristic, enumerate_rank_profiles,
    is_fuzzy_ideal, is_fuzzy_interior_ideal, is_fuzzy_interior_simple, is_fuzzy_left_ideal,
    is_fuzzy_right_ideal, is_fuzzy_simple, is_ideal, is_interior_ideal, is_left_ideal,
    is_right_ideal, is_simple, level_set, profile_grades,
)
from hyperideals.errors import (
    EmptyOperand, InternalInconsistency, LengthMismatch, NotAssociative, OutOfRange, ZeroOrder,
)
from hyperideals.fuzzy import fuzzy_ideal_violation, nonconstant_fuzzy_ideal
from hyperideals.ideals import proper_ideal
from hyperideals.search import all_hypersemigroups, enumerate_hypergroupoids

import oracles
from conftest import S, tables

F = [0.7, 0.2]


def test_characteristic_examples():
    assert characteristic(S(0), 2).grades == (1, 0)
    assert characteristic(S(0, 1), 2).grades == (1, 1)
    assert characteristic(S(1), 3).grades == (0, 1, 0)
    with pytest.raises(EmptyOperand):
        characteristic(0, 2)
    with pytest.raises(OutOfRange):
        characteristic(S(3), 2)


def test_fuzzy_subset_range():
    with pytest.raises(ValueError):
        FuzzySubset([0.5, 1.5])
    with pytest.raises(ValueError):
        FuzzySubset([-0.1])


def test_left_right_examples():
    assert is_fuzzy_left_ideal(Z2, F)
    assert not is_fuzzy_left_ideal(L2, F)
    assert is_fuzzy_right_ideal(L2, F)
    assert not is_fuzzy_right_ideal(Z2, [0.2, 0.7])
    for H in (T2, L2, Z2, N2):
        for pred in (is_fuzzy_left_ideal, is_fuzzy_right_ideal, is_fuzzy_ideal):
            assert pred(H, [0.4, 0.4])


def test_ideal_examples():
    assert is_fuzzy_ideal(Z2, F)
    assert not is_fuzzy_ideal(T2, F)


def test_interior_examples():
    assert is_fuzzy_interior_ideal(Z2, F)
    assert not is_fuzzy_interior_ideal(L2, F)
    assert not is_fuzzy_interior_ideal(T2, F)
    with pytest.raises(NotAssociative):
        is_fuzzy_interior_ideal(N2, F)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        is_fuzzy_left_ideal(T2, [0.1])


def test_level_set_examples():
    assert level_set(F, 0).members == S(0)
    assert level_set(F, 1).members == S(0, 1)
    assert level_set([0.3, 0.3, 0.3], 2).members == S(0, 1, 2)
    with pytest.raises(OutOfRange):
        level_set(F, 2)


def test_rank_profile_examples():
    assert enumerate_rank_profiles(1) == [(0,)]
    assert enumerate_rank_profiles(2) == [(0, 0), (0, 1), (1, 0)]
    assert len(enumerate_rank_profiles(3)) == 13
    with pytest.raises(ZeroOrder):
        enumerate_rank_profiles(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rank_profiles_match_bruteforce(n):
    got = enumerate_rank_profiles(n)
    assert got == sorted(got)
    assert len(set(got)) == len(got) == oracles.fubini(n)
    assert set(got) == oracles.all_weak_orders(n)


def test_profile_grades():
    assert profile_grades((0, 0)).grades == (0, 0)
    assert profile_grades((0, 2, 1)).grades == (0, 1, 0.5)


def test_simplicity_examples():
    assert is_fuzzy_simple(T2) and is_fuzzy_simple(L2) and not is_fuzzy_simple(Z2)
    assert is_fuzzy_interior_simple(T2) and is_fuzzy_interior_simple(L2)
    assert not is_fuzzy_interior_simple(Z2)
    assert is_fuzzy_ideal(Z2, profile_grades((1, 0)))
    assert is_fuzzy_interior_ideal(Z2, profile_grades((1, 0)))


def test_inconsistency_selfcheck(monkeypatch):
    import hyperideals.fuzzy as fz
    monkeypatch.setattr(fz, "_max_violation", lambda H, g: None)
    with pytest.raises(InternalInconsistency):
        fuzzy_ideal_violation(T2, F)


@given(tables(max_order=3), st.lists(st.sampled_from([0, 0.25, 0.5, 1]), min_size=3, max_size=3))
def test_predicates_match_oracle(H, grades):
    g = grades[:H.order]
    rows = oracles.rows_of(H)
    assert is_fuzzy_left_ideal(H, g) == oracles.fuzzy_left(rows, g)
    assert is_fuzzy_right_ideal(H, g) == oracles.fuzzy_right(rows, g)
    assert is_fuzzy_ideal(H, g) == (oracles.fuzzy_left(rows, g) and oracles.fuzzy_right(rows, g))
    if H.associative:
        assert is_fuzzy_interior_ideal(H, g) == oracles.fuzzy_interior(rows, g)


def test_fuzzy_simple_matches_grade_pool_oracle():
    # A pool of n distinct grades realizes every weak order on n points.
    for n in (1, 2):
        for H in enumerate_hypergroupoids(n):
            assert is_fuzzy_simple(H) == oracles.is_fuzzy_simple_bruteforce(oracles.rows_of(H))


@settings(max_examples=100)
@given(tables(min_order=3, max_order=3))
def test_fuzzy_simple_matches_grade_pool_oracle_order3(H):
    assert is_fuzzy_simple(H) == oracles.is_fuzzy_simple_bruteforce(oracles.rows_of(H))


def test_characteristic_interior_equivalence(order3_hypersemigroups):
    for n in (1, 2, 3):
        for H in all_hypersemigroups(n):
            for A in range(1, H.carrier + 1):
                assert is_interior_ideal(H, A) == is_fuzzy_interior_ideal(H, characteristic(A, n))


def test_fuzzy_ideal_is_interior(order3_hypersemigroups):
    for n in (1, 2, 3):
        for H in all_hypersemigroups(n):
            for r in enumerate_rank_profiles(n):
                f = profile_grades(r)
                if is_fuzzy_ideal(H, f):
                    assert is_fuzzy_interior_ideal(H, f)


def test_level_sets_exhaustive():
    for n in (1, 2):
        for H in enumerate_hypergroupoids(n):
            for r in enumerate_rank_profiles(n):
                f = profile_grades(r)
                right, left = is_fuzzy_right_ideal(H, f), is_fuzzy_left_ideal(H, f)
                for a in range(n):
                    I = level_set(f, a).members
                    assert I >> a & 1
                    if right:
                        assert is_right_ideal(H, I)
                    if left:
                        assert is_left_ideal(H, I)
                    if right and left:
                        assert is_ideal(H, I)


@settings(max_examples=300)
@given(tables(min_order=3, max_order=3))
def test_level_sets_random_order3(H):
    for r in enumerate_rank_profiles(3):
        f = profile_grades(r)
        if is_fuzzy_right_ideal(H, f):
            assert all(is_right_ideal(H, level_set(f, a).members) for a in range(3))
        if is_fuzzy_left_ideal(H, f):
            assert all(is_left_ideal(H, level_set(f, a).members) for a in range(3))


def test_simple_iff_fuzzy_simple_order2_all():
    for n in (1, 2):
        for H in enumerate_hypergroupoids(n):
            assert is_simple(H) == is_fuzzy_simple(H)


def test_simple_iff_fuzzy_simple_order3_hypersemigroups(order3_hypersemigroups):
    for H in order3_hypersemigroups:
        assert is_simple(H) == is_fuzzy_simple(H) == is_fuzzy_interior_simple(H)


def test_characteristic_of_proper_ideal_is_nonconstant_fuzzy_ideal():
    for H in enumerate_hypergroupoids(2):
        I = proper_ideal(H)
        if I is not None:
            f = characteristic(I, 2)
            assert is_fuzzy_ideal(H, f) and not f.is_constant()


def _increasing_map(rng):
    p = rng.uniform(0.2, 5.0)
    a = rng.uniform(0.0, 1.0)
    return lambda t: (a * t ** p + t) / (a + 1)


@settings(max_examples=200)
@given(tables(max_order=3), st.integers(0, 2**32 - 1))
def test_comparison_invariance(H, seed):
    rng = random.Random(seed)
    pool = [rng.random() for _ in range(3)]
    g = [rng.choice(pool) for _ in range(H.order)]
    phi = _increasing_map(rng)
    h = [phi(t) for t in g]
    assert all((x < y) == (u < v) and (x == y) == (u == v)
               for x, u in zip(g, h) for y, v in zip(g, h))
    for pred in (is_fuzzy_left_ideal, is_fuzzy_right_ideal, is_fuzzy_ideal):
        assert pred(H, g) == pred(H, h)
    if H.associative:
        assert is_fuzzy_interior_ideal(H, g) == is_fuzzy_interior_ideal(H, h)
    a = rng.randrange(H.order)
    assert level_set(g, a) == level_set(h, a)


def test_exact_fractions():
    assert is_fuzzy_ideal(Z2, [Fraction(7, 10), Fraction(2, 10)])
    assert nonconstant_fuzzy_ideal(T2) is None
