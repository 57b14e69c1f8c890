import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from bipentropy.core import (
    as_degrees, compare_h, delta, delta_ell, entropy, f, h_of_degrees,
)
from bipentropy.errors import DomainError, InconsistencyError

mpmath.mp.dps = 40


def mp_f(x):
    return mpmath.mpf(0) if x in (0, 1) else x * mpmath.log(x)


def test_f_values():
    assert f(0) == 0.0 and f(1) == 0.0
    assert f(6) == pytest.approx(float(mp_f(6)), rel=1e-15)
    assert f(6) == pytest.approx(10.750556815368, abs=1e-11)
    with pytest.raises(DomainError):
        f(-1)


def test_delta_values():
    assert delta(1) == 0.0
    assert delta(2) == pytest.approx(float(mp_f(2)), rel=1e-15)
    assert delta(6) == pytest.approx(float(mp_f(6) - mp_f(5)), rel=1e-14)
    assert delta(6) == pytest.approx(2.703367, abs=1e-6)
    for bad in (0, -3):
        with pytest.raises(DomainError):
            delta(bad)


def test_delta_ell_values():
    assert delta_ell(0, 1) == 0.0
    assert delta_ell(2, 3) == pytest.approx(float(mp_f(5) - mp_f(2)), rel=1e-14)
    assert delta_ell(2, 3) == pytest.approx(6.660896, abs=1e-6)
    with pytest.raises(DomainError):
        delta_ell(3, 0)


@given(st.integers(0, 10**6))
def test_delta_ell_one_is_delta(z):
    assert delta_ell(z, 1) == delta(z + 1)


@given(st.integers(1, 10**6))
def test_f_strictly_convex(a):
    assert f(a - 1) + f(a + 1) > 2 * f(a)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_delta_increasing(a, b):
    if a < b:
        assert delta(a) < delta(b)


# the second difference is about -1/a^2; beyond a ~ 10^4 it drowns in rounding
@given(st.integers(2, 10**3))
def test_delta_concave(a):
    assert delta(a - 1) + delta(a + 1) < 2 * delta(a)


def test_h_of_degrees():
    k23 = (3, 3, 2, 2, 2)
    assert h_of_degrees(k23) == pytest.approx(float(sum(mp_f(d) for d in k23)), rel=1e-14)
    assert h_of_degrees(k23) == pytest.approx(6 * math.log(6), rel=1e-14)
    assert h_of_degrees([1] * 17) == 0.0
    b10 = (6, 6, 5, 5, 4, 4, 4, 4, 4, 2)
    assert h_of_degrees(b10) == pytest.approx(float(sum(mp_f(d) for d in b10)), rel=1e-14)
    assert h_of_degrees(b10) == pytest.approx(66.707666, abs=1e-5)


@given(st.permutations([6, 6, 5, 5, 4, 4, 4, 4, 4, 2, 0, 0]))
def test_h_permutation_invariant(perm):
    assert h_of_degrees(perm) == pytest.approx(h_of_degrees(sorted(perm)), rel=1e-15)


def test_entropy_values():
    assert entropy([1] * 8, 4) == pytest.approx(math.log(8), rel=1e-15)
    expected = mpmath.log(6) - 3 * mpmath.log(3) / 6
    assert entropy((3, 1, 1, 1), 3) == pytest.approx(float(expected), rel=1e-14)
    assert entropy((3, 1, 1, 1), 3) == pytest.approx(1.242453, abs=1e-6)
    assert entropy((2, 2, 2, 2), 4) == pytest.approx(math.log(4), rel=1e-14)
    with pytest.raises(InconsistencyError):
        entropy((2, 2, 2), 4)


@given(st.lists(st.integers(1, 20), min_size=2, max_size=10).filter(lambda d: sum(d) % 2 == 0),
       st.integers(0, 5))
def test_entropy_ignores_zeros(d, zeros):
    m = sum(d) // 2
    assert entropy(d + [0] * zeros, m) == entropy(d, m)


def test_as_degrees_sorts_and_rejects_negative():
    assert as_degrees([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(DomainError):
        as_degrees([2, -1])


def test_compare_h_exact_ties():
    # two rectangles of equal area: different multisets, identical h
    r1 = [34] * 16 + [16] * 34
    r2 = [32] * 17 + [17] * 32
    assert compare_h(r1, r2) == 0
    assert compare_h([3, 1, 1, 1], [2, 2, 1, 1]) == 1
    assert compare_h([2, 2, 1, 1], [3, 1, 1, 1]) == -1
    # 4^4 = (2^2)^4: one vertex of degree 4 ties with four of degree 2
    assert compare_h([4], [2, 2, 2, 2]) == 0
    assert compare_h([4], [2, 2, 2]) == 1
