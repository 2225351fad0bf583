from math import factorial

import pytest

from gclab.combinatorics import (
    CombinatoricsError,
    Multidegree,
    Partition,
    Tableau,
    big_r,
    catalan,
    d_of_n,
    dominates,
    hilbert_formula,
    kostka,
    m_lambda,
    partition_of_multidegree,
    partitions,
    permutation_module_dim,
    socle_partitions_family,
    specht_dim,
    ssyt_enumerate,
)
from oracles import brute_kostka, syt_count


def test_dominates():
    assert dominates((2, 1, 1), (2, 1, 1))
    assert dominates((2, 2), (2, 1, 1))
    assert not dominates((2, 1, 1), (2, 2))
    with pytest.raises(CombinatoricsError):
        dominates((2,), (1, 1, 1))


def test_partition_of_multidegree():
    assert partition_of_multidegree(Multidegree((1, 1, 0), 4)) == Partition((2, 1, 1))
    assert partition_of_multidegree(Multidegree((2, 0, 0), 4)) == Partition((2, 2))
    assert partition_of_multidegree(Multidegree((1, 1, 1, 0, 0), 6)) == Partition((3, 1, 1, 1))
    with pytest.raises(CombinatoricsError):
        partition_of_multidegree(Multidegree((3, 2, 0), 4))


def test_partition_rejects_bad_parts():
    with pytest.raises(CombinatoricsError):
        Partition((1, 2))
    assert Partition((2, 1, 0, 0)).padded(4) == (2, 1, 0, 0)


def test_kostka_examples():
    assert kostka((3, 1), (3, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((2, 1, 1), (1, 1, 1, 1)) == 3


def test_ssyt_are_semistandard():
    ts = ssyt_enumerate(Partition((3, 2)), (2, 2, 1))
    assert len(ts) == brute_kostka((3, 2), (2, 2, 1))
    assert all(isinstance(t, Tableau) and t.is_semistandard() for t in ts)
    assert all(t.content() == (2, 2, 1) for t in ts)


def test_specht_dim_examples():
    assert specht_dim((5,)) == 1
    assert specht_dim((2, 2)) == 2 == catalan(2)
    assert specht_dim((2, 1, 1)) == 3
    assert specht_dim((3, 3)) == catalan(3)


def test_m_lambda_examples():
    assert m_lambda((4,), 4) == 1
    assert m_lambda((3, 1), 4) == 3
    assert m_lambda((3, 1, 1, 1), 6) == 10


def test_d_of_n():
    assert d_of_n(4) == 32
    assert d_of_n(3) == 6
    assert d_of_n(5) == 220
    assert [d_of_n(n) for n in (1, 2, 3)] == [1, 2, 6]


def test_hilbert_formula():
    assert hilbert_formula(4, 0) == (1, 9, 21, 1)
    assert hilbert_formula(4, 12) == (1, 9, 9, 1)
    assert hilbert_formula(5, 0) == (1, 16, 86, 116, 1)
    assert hilbert_formula(6, 0) == (1, 25, 235, 915, 680, 1)
    assert hilbert_formula(6, 50) == (1, 25, 235, 865, 680, 1)


def test_big_r():
    assert big_r(4) == 12
    assert big_r(5) == 40
    assert big_r(6) == 50
    assert socle_partitions_family(6) == [Partition((3, 1, 1, 1))]
    with pytest.raises(CombinatoricsError):
        big_r(7)


def test_kostka_positive_iff_dominance():
    for n in range(1, 8):
        ps = list(partitions(n))
        for mu in ps:
            for la in ps:
                assert (kostka(mu, la) > 0) == dominates(mu, la)


def test_permutation_module_identity():
    for n in range(1, 7):
        ps = list(partitions(n))
        for la in ps:
            assert sum(kostka(mu, la) * specht_dim(mu) for mu in ps) == permutation_module_dim(la)


def test_specht_dim_matches_tableau_count():
    for n in range(1, 8):
        for mu in partitions(n):
            assert specht_dim(mu) == kostka(mu, (1,) * n)
    for mu in partitions(6):
        assert specht_dim(mu) == syt_count(mu.parts)


def test_kostka_matches_brute_force():
    for n in range(1, 6):
        for mu in partitions(n):
            for la in partitions(n):
                assert kostka(mu, la) == brute_kostka(mu.parts, la.parts)


def test_unique_tableau_for_socle_family():
    for n in (6, 8, 10):
        mu = (n // 2, n // 2)
        for la in socle_partitions_family(n):
            assert kostka(mu, la) == 1


def test_partition_count():
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert factorial(4) == sum(specht_dim(mu) ** 2 for mu in partitions(4))
