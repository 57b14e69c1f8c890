"""Divisor counts, trial-division factorization and smoothness checks."""

from __future__ import annotations

import math

from .errors import DomainError, InfeasibleError


def factorize(k: int) -> list[tuple[int, int]]:
    """Prime factorization of ``k`` as ``[(p, e), ...]`` with increasing p."""
    if k < 1:
        raise DomainError(f"cannot factor {k}")
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if k > 1:
        out.append((k, 1))
    return out


def divisor_count(m: int) -> int:
    """Number of positive divisors of m."""
    return math.prod(e + 1 for _, e in factorize(m))


def largest_prime_factor(k: int) -> int:
    if k < 2:
        raise DomainError(f"largest prime factor undefined for {k}")
    return factorize(k)[-1][0]


def is_smooth(k: int, bound: int) -> bool:
    """True iff every prime factor of k is at most ``bound`` (1 is smooth)."""
    if k < 1:
        raise DomainError(f"smoothness undefined for {k}")
    if k == 1:
        return True
    return largest_prime_factor(k) <= bound


def min_r_factorable(m: int, n: int) -> tuple[int, int, int]:
    """Smallest r >= 0 such that m + r = x*y with x + y <= n.

    Returns ``(r, x, y)`` with y <= x; among factorizations of m + r the one
    with the smallest y (the most asymmetric) is chosen.
    """
    if m < 1 or n < 2:
        raise DomainError(f"need m >= 1 and n >= 2, got m={m}, n={n}")
    capacity = (n // 2) * ((n + 1) // 2)
    for total in range(m, capacity + 1):
        for y in range(1, math.isqrt(total) + 1):
            if total % y == 0 and y + total // y <= n:
                return total - m, total // y, y
    raise InfeasibleError(f"no product x*y >= {m} with x+y <= {n}")
