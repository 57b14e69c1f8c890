"""Majorization order, the Karamata comparison of h, and Gale-Ryser."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from itertools import accumulate

from .core import as_degrees


def _padded(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    sa, sb = list(as_degrees(a)), list(as_degrees(b))
    k = max(len(sa), len(sb))
    return sa + [0] * (k - len(sa)), sb + [0] * (k - len(sb))


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff sorted ``a`` majorizes sorted ``b`` (zero-padded)."""
    sa, sb = _padded(a, b)
    if sum(sa) != sum(sb):
        return False
    return all(pa >= pb for pa, pb in zip(accumulate(sa), accumulate(sb)))


class Comparison(enum.Enum):
    STRICT = "strict"  # h(a) > h(b)
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def karamata_compare(a: Sequence[int], b: Sequence[int]) -> Comparison:
    """Certify h(a) >= h(b) from ``a`` majorizing ``b``.

    Returns INCOMPARABLE when ``a`` does not majorize ``b``, which includes
    the case where only ``b`` majorizes ``a``.
    """
    if not majorizes(a, b):
        return Comparison.INCOMPARABLE
    sa, sb = _padded(a, b)
    return Comparison.EQUAL if sa == sb else Comparison.STRICT


def is_bigraphical(a: Sequence[int], b: Sequence[int]) -> bool:
    """Gale-Ryser: is there a simple bipartite graph with class degrees a, b?"""
    if any(d < 0 for d in a) or any(d < 0 for d in b):
        return False
    sa = as_degrees(a)
    if sum(sa) != sum(b):
        return False
    lhs = 0
    for k, d in enumerate(sa, start=1):
        lhs += d
        if lhs > sum(min(bj, k) for bj in b):
            return False
    return True
