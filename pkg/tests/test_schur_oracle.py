import itertools

import pytest

from fencekit.errors import FencekitError, ResourceBoundError
from fencekit.schur_oracle import (
    Tableau,
    branch_via_specialization,
    expand_in_schur,
    kostka,
    poly_add,
    poly_mul,
    predicted_ssyt_count,
    schur_polynomial,
    ssyt_enumerate,
)
from fencekit.young import Partition, partitions


@pytest.mark.parametrize("F, m, count", [((1,), 3, 3), ((2, 1), 3, 8), ((1, 1, 1), 2, 0)])
def test_ssyt_counts(F, m, count):
    tabs = ssyt_enumerate(F, m)
    assert len(tabs) == count
    assert len(set(tabs)) == count
    assert all(t.is_semistandard() for t in tabs)


def test_ssyt_order_is_deterministic():
    assert ssyt_enumerate((2, 1), 3) == ssyt_enumerate((2, 1), 3)
    assert ssyt_enumerate((2, 1), 2)[0] == Tableau(Partition([2, 1]), ((1, 1), (2,)))


def test_hook_content_matches_enumeration():
    for n in range(7):
        for F in partitions(n):
            for m in range(1, 5):
                assert predicted_ssyt_count(F, m) == len(ssyt_enumerate(F, m))


def test_resource_guard():
    with pytest.raises(ResourceBoundError):
        ssyt_enumerate((3, 2), 4, limit=10)
    with pytest.raises(FencekitError):
        ssyt_enumerate((1,), 0)


def test_schur_examples():
    assert schur_polynomial((1,), 2) == {(1, 0): 1, (0, 1): 1}
    assert schur_polynomial((1, 1), 2) == {(1, 1): 1}
    assert schur_polynomial((2, 1), 2) == {(2, 1): 1, (1, 2): 1}
    assert schur_polynomial((1, 1, 1), 2) == {}


def test_schur_symmetric():
    for n in range(9):
        for F in partitions(n, max_length=4):
            for m in range(max(1, len(F)), 5):
                p = schur_polynomial(F, m)
                for i in range(m - 1):
                    swapped = {mono[:i] + (mono[i + 1], mono[i]) + mono[i + 2:]: c for mono, c in p.items()}
                    assert swapped == p


@pytest.mark.parametrize("F, content, expected", [
    ((2, 1), (1, 1, 1), 2),
    ((2, 1), (2, 1), 1),
    ((4,), (4, 0, 0), 1),
    ((2, 1), (1, 1), 0),
])
def test_kostka_examples(F, content, expected):
    assert kostka(F, content) == expected


def test_kostka_permutation_invariant_and_sums_to_count():
    for n in range(6):
        for F in partitions(n, max_length=3):
            total = 0
            for content in itertools.product(range(n + 1), repeat=3):
                if sum(content) != n:
                    continue
                k = kostka(F, content)
                total += k
                for perm in itertools.permutations(content):
                    assert kostka(F, perm) == k
            assert total == len(ssyt_enumerate(F, 3))


def test_expand_examples():
    s1 = schur_polynomial((1,), 2)
    assert expand_in_schur(poly_mul(s1, s1), 2) == {Partition([2]): 1, Partition([1, 1]): 1}
    p = poly_mul(schur_polynomial((1, 1), 3), schur_polynomial((1,), 3))
    assert expand_in_schur(p, 3) == {Partition([2, 1]): 1, Partition([1, 1, 1]): 1}
    assert expand_in_schur({}, 3) == {}


def test_expand_recovers_single_schur():
    for n in range(9):
        for F in partitions(n, max_length=4):
            for m in range(max(1, len(F)), 5):
                assert expand_in_schur(schur_polynomial(F, m), m) == {F: 1}


def test_expand_rejects_asymmetric():
    with pytest.raises(FencekitError):
        expand_in_schur({(2, 0): 1}, 2)


def test_expand_reconstructs():
    p = poly_mul(schur_polynomial((2, 1), 3), schur_polynomial((1, 1), 3))
    rebuilt = {}
    for F, c in expand_in_schur(p, 3).items():
        rebuilt = poly_add(rebuilt, schur_polynomial(F, 3), c)
    assert rebuilt == p


@pytest.mark.parametrize("F, arms, D, expected", [
    ((1,), (1, 1), ((1,), ()), 1),
    ((2, 1), (1, 1, 1), ((1,), (1,), (1,)), 2),
    ((1, 1), (2,), ((2,),), 0),
    ((2, 1), (2, 1), ((1, 1), (1,)), 1),
])
def test_branch_examples(F, arms, D, expected):
    assert branch_via_specialization(F, arms, D) == expected
