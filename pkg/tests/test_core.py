from __future__ import annotations

import random
from itertools import combinations

import pytest

from resolvekit.core import (
    Certificate, KSubset, enumerate_ksubsets, incidence_matrix, signature, weight_profile,
)
from resolvekit.errors import InvalidParameters

from conftest import oracle_signature


def test_enumerate_small():
    assert [s.members for s in enumerate_ksubsets(3, 1)] == [(1,), (2,), (3,)]
    subs = enumerate_ksubsets(4, 2)
    assert len(subs) == 6 and subs[0].members == (1, 2) and subs[-1].members == (3, 4)
    assert len(enumerate_ksubsets(13, 3)) == 286
    assert subs == sorted(subs)


@pytest.mark.parametrize("m,k", [(3, 4), (3, 0), (0, 0)])
def test_enumerate_rejects(m, k):
    with pytest.raises(InvalidParameters):
        enumerate_ksubsets(m, k)


def test_ksubset_invariants():
    with pytest.raises(InvalidParameters):
        KSubset(5, (2, 1))
    with pytest.raises(InvalidParameters):
        KSubset(5, (1, 6))
    with pytest.raises(InvalidParameters):
        KSubset(5, ())
    s = KSubset(5, (1, 3))
    assert 3 in s and 2 not in s and len(s) == 2 and str(s) == "{1,3}"


def test_certificate_rejects_duplicates_and_wrong_size():
    with pytest.raises(InvalidParameters):
        Certificate.from_lists(5, 2, [[1, 2], [2, 1]])
    with pytest.raises(InvalidParameters):
        Certificate.from_lists(5, 2, [[1, 2, 3]])


def test_incidence_example1(example1):
    mat = incidence_matrix(example1)
    assert (mat.rows, mat.cols) == (13, 8)
    assert set(mat.column_sums().tolist()) == {3}
    prof = weight_profile(mat)
    assert prof.classes[1] == (3, 4, 8, 9, 11)
    assert prof.classes[2] == (1, 2, 6, 7, 10)
    assert prof.classes[3] == (5, 12, 13)
    assert prof.d[:4] == (0, 5, 5, 3) and all(x == 0 for x in prof.d[4:])


def test_single_subset_profile():
    cert = Certificate.from_lists(5, 3, [[1, 2, 3]])
    mat = incidence_matrix(cert)
    assert mat.row_weights().tolist() == [1, 1, 1, 0, 0]
    prof = weight_profile(mat)
    assert prof[0] == 2 and prof[1] == 3


def test_block9_column_sums(block9):
    assert set(incidence_matrix(block9).column_sums().tolist()) == {3}


def test_signature_basics(example1):
    assert signature(example1, []) == (0,) * 8
    for i, s in enumerate(example1.sets):
        assert signature(example1, s.members)[i] == 3
    assert sum(signature(example1, [5, 12, 13])) == 9
    with pytest.raises(InvalidParameters):
        signature(example1, [14])


def test_signature_is_row_sum_bruteforce():
    rng = random.Random(1)
    for _ in range(20):
        m, k = rng.randint(3, 8), rng.randint(1, 3)
        if k > m:
            continue
        pool = list(combinations(range(1, m + 1), k))
        fam = rng.sample(pool, rng.randint(1, min(6, len(pool))))
        cert = Certificate.from_lists(m, k, fam)
        rows = incidence_matrix(cert).entries
        for size in range(4):
            for w in combinations(range(1, m + 1), size):
                expect = tuple(int(rows[[x - 1 for x in w]].sum(axis=0)[j]) if w else 0 for j in range(len(fam)))
                assert signature(cert, w) == expect == oracle_signature(fam, w)


def test_profile_identities_random():
    rng = random.Random(2)
    for _ in range(50):
        m, k = rng.randint(2, 12), rng.randint(1, 4)
        if k > m:
            continue
        pool = list(combinations(range(1, m + 1), k))
        fam = rng.sample(pool, rng.randint(0, min(10, len(pool))))
        cert = Certificate.from_lists(m, k, fam)
        prof = weight_profile(incidence_matrix(cert))
        assert prof.total_points() == m
        assert prof.total_incidences() == k * len(fam)


def test_relabel_roundtrip(example1):
    perm = list(range(13, 0, -1))
    twice = example1.relabel(perm).relabel(perm)
    assert twice == example1
    with pytest.raises(InvalidParameters):
        example1.relabel([1] * 13)
