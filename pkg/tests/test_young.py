import pytest
from hypothesis import given, strategies as st

from fencekit.errors import FencekitError
from fencekit.young import (
    EMPTY,
    Composition,
    Partition,
    block_compatible,
    compositions_of,
    conjugate,
    diagram_from_exponents,
    exponents_of_diagram,
    parse_composition,
    parse_partition,
    partitions,
    partitions_between,
    weight_of_diagram,
)


def _grid_conjugate(F):
    # column lengths, counted box by box
    width = F[0] if F else 0
    return tuple(sum(1 for row in F if row > j) for j in range(width))


def test_partition_canonical_form():
    assert Partition([4, 4, 3, 2, 2, 0, 0]) == Partition([4, 4, 3, 2, 2])
    assert repr(Partition([2, 1])) == "Partition(2, 1)"
    assert str(EMPTY) == "()"
    assert Partition([3, 1]).size == 4 and Partition([3, 1]).length == 2


@pytest.mark.parametrize("bad", [[1, 2], [2, -1]])
def test_partition_rejects(bad):
    with pytest.raises(FencekitError):
        Partition(bad)


def test_composition_rejects_empty_and_zero():
    with pytest.raises(FencekitError):
        Composition([])
    with pytest.raises(FencekitError):
        Composition([2, 0])


@pytest.mark.parametrize("F, expected", [((4, 4, 3, 2, 2), (5, 5, 3, 2)), ((), ()), ((3,), (1, 1, 1))])
def test_conjugate_examples(F, expected):
    assert conjugate(F) == Partition(expected)
    assert tuple(conjugate(F)) == _grid_conjugate(Partition(F))


def test_conjugate_is_involution():
    for n in range(13):
        for F in partitions(n):
            assert conjugate(conjugate(F)) == F


@pytest.mark.parametrize("F, comp, expected", [
    ((4, 4, 3, 2, 2), (2, 1, 2), True),
    ((2, 1), (2,), False),
    ((1,), (1, 1), True),
    ((2, 2), (1, 2), False),
    ((), (3,), True),
])
def test_block_compatible(F, comp, expected):
    assert block_compatible(F, comp) is expected


def test_block_compatible_rejects_long_diagram():
    with pytest.raises(FencekitError):
        block_compatible((1, 1, 1), (2,))


def test_borel_composition_accepts_everything():
    for k in range(1, 5):
        for n in range(7):
            for F in partitions(n, max_length=k):
                assert block_compatible(F, Composition.borel(k))


@pytest.mark.parametrize("e, comp, expected", [
    ((1, 2), (2, 1), (3, 3, 2)),
    ((0,), (3,), ()),
    ((1, 1), (1, 1), (2, 1)),
])
def test_diagram_from_exponents(e, comp, expected):
    assert diagram_from_exponents(e, comp) == Partition(expected)


@pytest.mark.parametrize("F, comp, expected", [
    ((3, 3, 2), (2, 1), (6, 2)),
    ((), (2, 2), (0, 0)),
    ((4, 4, 3, 2, 2), (2, 1, 2), (8, 3, 4)),
])
def test_weight_of_diagram(F, comp, expected):
    assert weight_of_diagram(F, comp) == expected


def test_weight_of_diagram_rejects_incompatible():
    with pytest.raises(FencekitError):
        weight_of_diagram((2, 1), (2,))


@given(st.integers(1, 5).flatmap(
    lambda k: st.tuples(st.sampled_from(list(compositions_of(k))), st.lists(st.integers(0, 4), min_size=k, max_size=k))))
def test_exponent_round_trip(data):
    comp, raw = data
    e = tuple(raw[: len(comp)])
    F = diagram_from_exponents(e, comp)
    assert block_compatible(F, comp)
    assert exponents_of_diagram(F, comp) == e
    assert diagram_from_exponents(exponents_of_diagram(F, comp), comp) == F


def test_partition_counts():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert list(partitions(4, max_length=2)) == [Partition([4]), Partition([3, 1]), Partition([2, 2])]


def test_partitions_between():
    got = set(partitions_between((1,), (2, 2), 3))
    assert got == {Partition([2, 1])}
    assert set(partitions_between((), (3, 3), 3)) == {Partition([3]), Partition([2, 1])}


def test_compositions_of():
    comps = list(compositions_of(4))
    assert len(comps) == 8 and len(set(comps)) == 8
    assert all(c.total == 4 for c in comps)


def test_parsing():
    assert parse_partition("4,4,3,2,2") == Partition([4, 4, 3, 2, 2])
    for empty in ("", "()", "0", "-"):
        assert parse_partition(empty) == EMPTY
    assert parse_composition("2,1") == Composition([2, 1])
    with pytest.raises(FencekitError):
        parse_partition("a,b")
