import pytest

from fockschur import Cutoffs, MultiIndex, TuplePair, count_pq, enumerate_pq

from oracles import sweep_pairs


def entries(pairs):
    return [(pair.p.entries, pair.q.entries) for pair in pairs]


def test_enumerate_examples():
    pairs = enumerate_pq(0, 0, 3)
    assert entries(pairs) == [((), ())]

    pairs = enumerate_pq(1, 1, 2)
    assert entries(pairs) == [(((1, 1),), ())]

    pairs = enumerate_pq(2, 0, 2)
    assert entries(pairs) == [(((1, 1),), ((1, 1),)), (((2, 1),), ((2, 1),))]

    pairs = enumerate_pq(2, 2, 2)
    assert entries(pairs) == [(((1, 2),), ())]


def test_enumerate_empty_when_weight_unreachable():
    assert enumerate_pq(1, 3, 2) == []
    assert enumerate_pq(2, 9, 2) == []
    assert enumerate_pq(0, 1, 4) == []


def test_count_examples():
    assert count_pq(0, 0, 1) == 1
    assert count_pq(0, 0, 4) == 1
    assert count_pq(2, 0, 2) == 2
    assert count_pq(1, 3, 2) == 0


def test_soundness():
    for m in range(5):
        for w in range(-6, 7):
            for pair in enumerate_pq(m, w, 3):
                assert pair.m == m
                assert pair.w == w
                assert pair.p.max_mode() <= 3
                assert pair.q.max_mode() <= 3


def test_completeness_against_sweep():
    for K in (1, 2, 3):
        buckets = sweep_pairs(4, K)
        for m in range(5):
            for w in range(-8, 9):
                expected = buckets.get((m, w), [])
                got = entries(enumerate_pq(m, w, K))
                assert got == expected, (K, m, w)


def test_counts_match_enumeration():
    for K in (1, 2, 3):
        for m in range(5):
            for w in range(-8, 9):
                assert count_pq(m, w, K) == len(enumerate_pq(m, w, K))


def test_swap_symmetry():
    for m in range(5):
        for w in range(-6, 7):
            direct = enumerate_pq(m, w, 3)
            mirrored = sorted(
                (TuplePair(pair.q, pair.p) for pair in enumerate_pq(m, -w, 3)),
                key=TuplePair.sort_key,
            )
            assert direct == mirrored
            assert count_pq(m, w, 3) == count_pq(m, -w, 3)


def test_monotone_in_mode_cutoff():
    for m in range(5):
        for w in range(-5, 6):
            smaller = set(entries(enumerate_pq(m, w, 2)))
            larger = set(entries(enumerate_pq(m, w, 3)))
            assert smaller <= larger


def test_validation():
    with pytest.raises(ValueError):
        enumerate_pq(-1, 0, 2)
    with pytest.raises(ValueError):
        enumerate_pq(2, 0, 0)
    with pytest.raises(ValueError):
        count_pq(2, 0, 0)


def test_cutoffs_validation():
    Cutoffs(K=1, M=0, D=0)
    with pytest.raises(ValueError):
        Cutoffs(K=0, M=1, D=1)
    with pytest.raises(ValueError):
        Cutoffs(K=1, M=-1, D=1)
    with pytest.raises(ValueError):
        Cutoffs(K=1, M=1, D=-1)


def test_tuplepair_properties():
    pair = TuplePair(MultiIndex({1: 2, 3: 1}), MultiIndex({2: 1}))
    assert pair.m == 4
    assert pair.w == 2 + 3 - 2
