"""Numeric kernel: x log x, its increments, h and the degree-based entropy.

Degree sequences are plain integer sequences; :func:`as_degrees` normalizes
them to a non-increasing tuple. All logarithms are natural.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Mapping

from .errors import DomainError, InconsistencyError
from .numtheory import factorize

DegreeSequence = tuple[int, ...]


def as_degrees(degrees: Iterable[int]) -> DegreeSequence:
    """Sort non-increasingly and validate non-negativity."""
    d = tuple(sorted((int(v) for v in degrees), reverse=True))
    if d and d[-1] < 0:
        raise DomainError(f"negative degree {d[-1]}")
    return d


def f(x: int) -> float:
    """x * ln(x), with f(0) = f(1) = 0 exactly."""
    if x < 0:
        raise DomainError(f"f undefined for negative argument {x}")
    if x <= 1:
        return 0.0
    return x * math.log(x)


def delta(x: int) -> float:
    """Increment f(x) - f(x-1); strictly increasing and concave on x >= 1."""
    if x < 1:
        raise DomainError(f"delta requires x >= 1, got {x}")
    return f(x) - f(x - 1)


def delta_ell(z: int, ell: int) -> float:
    if ell < 1:
        raise DomainError(f"delta_ell requires ell >= 1, got {ell}")
    if z < 0:
        raise DomainError(f"delta_ell requires z >= 0, got {z}")
    return f(z + ell) - f(z)


def h_of_degrees(degrees: Iterable[int]) -> float:
    return math.fsum(f(d) for d in as_degrees(degrees))


def entropy(degrees: Iterable[int], m: int) -> float:
    """Degree-based entropy log(2m) - h/(2m) of a graph with m edges."""
    d = as_degrees(degrees)
    if m < 1:
        raise DomainError(f"entropy needs m >= 1, got {m}")
    if sum(d) != 2 * m:
        raise InconsistencyError(f"degree sum {sum(d)} != 2m = {2 * m}")
    return math.log(2 * m) - h_of_degrees(d) / (2 * m)


# Exact comparison of h values.
#
# h(d) = ln(prod d_i^d_i), so two h values are equal exactly when the integers
# prod d_i^d_i coincide, i.e. when their prime exponent vectors agree.  This
# catches ties between different multisets, such as two rectangles of equal
# area, which float proximity alone cannot certify.

def degree_counts(degrees: Iterable[int]) -> Counter:
    return Counter(d for d in degrees if d > 1)


def h_from_counts(counts: Mapping[int, int]) -> float:
    return math.fsum(mult * f(d) for d, mult in counts.items())


def log_exponents(counts: Mapping[int, int]) -> Counter:
    """Prime exponents of prod d**d over the degree multiset ``counts``."""
    exps: Counter = Counter()
    for d, mult in counts.items():
        if d > 1 and mult:
            for p, e in factorize(d):
                exps[p] += mult * d * e
    return +exps


def compare_h_counts(a: Mapping[int, int], b: Mapping[int, int],
                     rel_tol: float = 1e-9) -> int:
    """Sign of h(a) - h(b) for degree multisets given as {degree: count}.

    Floats decide when they are clearly apart; otherwise the comparison is
    settled exactly on the integers prod d**d.
    """
    ha, hb = h_from_counts(a), h_from_counts(b)
    if abs(ha - hb) > rel_tol * max(1.0, abs(ha), abs(hb)):
        return 1 if ha > hb else -1
    ea, eb = log_exponents(a), log_exponents(b)
    if ea == eb:
        return 0
    num = den = 1
    for p in set(ea) | set(eb):
        e = ea[p] - eb[p]
        if e > 0:
            num *= p ** e
        elif e < 0:
            den *= p ** -e
    return 1 if num > den else -1


def compare_h(a: Iterable[int], b: Iterable[int]) -> int:
    return compare_h_counts(degree_counts(a), degree_counts(b))
