import pytest
from hypothesis import assume, given, strategies as st

from bipentropy.core import h_of_degrees
from bipentropy.majorization import Comparison, is_bigraphical, karamata_compare, majorizes
from bipentropy.search import partitions_in_box

from conftest import degree_lists


def test_majorizes_examples():
    assert majorizes((3, 1, 1, 1), (2, 2, 1, 1))
    assert majorizes((2, 2, 1), (2, 2, 1))
    assert not majorizes((2, 2, 2), (3, 2, 1))
    # padding is internal
    assert majorizes((3, 1), (1, 1, 1, 1))
    assert not majorizes((3, 1), (1, 1, 1))


def test_karamata_examples():
    assert karamata_compare((3, 1, 1, 1), (2, 2, 1, 1)) is Comparison.STRICT
    assert h_of_degrees((3, 1, 1, 1)) > h_of_degrees((2, 2, 1, 1))
    assert karamata_compare((2, 2, 1), (2, 2, 1)) is Comparison.EQUAL
    assert karamata_compare((4, 0, 4), (4, 4)) is Comparison.EQUAL
    assert karamata_compare((3, 3), (4, 1, 1)) is Comparison.INCOMPARABLE


@given(degree_lists())
def test_reflexive(a):
    assert majorizes(a, a)


@given(degree_lists(), degree_lists())
def test_antisymmetric(a, b):
    if majorizes(a, b) and majorizes(b, a):
        assert sorted(x for x in a if x) == sorted(x for x in b if x)


_parts = [p for m in (6, 7) for p in partitions_in_box(m)]


@given(st.sampled_from(_parts), st.sampled_from(_parts), st.sampled_from(_parts))
def test_transitive(a, b, c):
    if majorizes(a, b) and majorizes(b, c):
        assert majorizes(a, c)


@given(st.sampled_from(_parts), st.sampled_from(_parts))
def test_karamata_certificate_holds(a, b):
    result = karamata_compare(a, b)
    if result is Comparison.STRICT:
        assert h_of_degrees(a) > h_of_degrees(b)
    elif result is Comparison.EQUAL:
        assert h_of_degrees(a) == pytest.approx(h_of_degrees(b))


def test_bigraphical_examples():
    assert is_bigraphical((2, 2), (2, 2))
    assert not is_bigraphical((3, 1), (2, 2))
    assert is_bigraphical((2, 2, 1, 1), (3, 3))
    assert not is_bigraphical((2, 1), (2, 2))


def realizable(a, b):
    """Backtracking search for a 0/1 matrix with row sums a and column sums b."""
    a = sorted(a, reverse=True)
    if sum(a) != sum(b):
        return False
    cols = list(b)

    def place(i):
        if i == len(a):
            return all(c == 0 for c in cols)
        return choose(i, 0, a[i])

    def choose(i, j, need):
        if need == 0:
            return place(i + 1)
        if len(cols) - j < need:
            return False
        if cols[j] > 0:
            cols[j] -= 1
            if choose(i, j + 1, need - 1):
                cols[j] += 1
                return True
            cols[j] += 1
        return choose(i, j + 1, need)

    return place(0)


def test_bigraphical_agrees_with_matrix_search():
    for s in range(1, 10):
        parts = list(partitions_in_box(s))
        for a in parts:
            for b in parts:
                assert is_bigraphical(a, b) == realizable(a, b), (a, b)
