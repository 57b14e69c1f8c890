"""Exhaustive and fast searches for the h-maximizing bipartite graphs.

The brute-force oracle walks every Young tableau with m cells and order at
most n; the fast path only evaluates the shapes B(n, m, y), which are known
to contain the maximizer. The sweep runs the fast path over a whole range
of (n, m).
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache, cmp_to_key

from .constructions import BnmyShape
from .core import compare_h_counts, degree_counts, f
from .errors import DomainError, InfeasibleError, SizeGuardError
from .report import Report
from .tableau import YoungTableau, h_tableau

DEFAULT_MAX_STATES = 10**6


@cache
def partition_count(m: int) -> int:
    """p(m), by the standard coin-change recurrence."""
    table = [1] + [0] * m
    for part in range(1, m + 1):
        for k in range(part, m + 1):
            table[k] += table[k - part]
    return table[m]


def partitions_in_box(m: int, max_rows: int | None = None,
                      max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of m with at most ``max_rows`` parts, each at most ``max_part``,
    in reverse lexicographic order."""
    rows_cap = m if max_rows is None else max_rows
    part_cap = m if max_part is None else max_part

    def rec(rem: int, cap: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        if rows_left == 0 or rem > cap * rows_left:
            return
        for p in range(min(cap, rem), 0, -1):
            for tail in rec(rem - p, p, rows_left - 1):
                yield (p,) + tail

    if m == 0:
        yield ()
        return
    yield from rec(m, part_cap, rows_cap)


def _order_bound(m: int, n: int | None) -> int:
    # any tableau with m cells has x + y <= m + 1
    return m + 1 if n is None else n


def enumerate_tableaux(m: int, n: int | None = None) -> Iterator[YoungTableau]:
    """Every tableau with m cells and x + y <= n, one per conjugate pair
    (the representative has y <= x)."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    bound = _order_bound(m, n)
    for x1 in range(m, 0, -1):
        max_rows = min(x1, bound - x1)
        if max_rows < 1:
            continue
        for tail in partitions_in_box(m - x1, max_rows - 1, x1):
            yield YoungTableau((x1,) + tail)


def _scan_extremal(m: int, bound: int, rel_tol: float = 1e-9) -> tuple[float, list[tuple[int, ...]]]:
    """Depth-first walk over canonical tableaux, tracking h incrementally.

    Appending a row of length p as row k+1 raises the p leftmost columns
    from height k to k+1, so h grows by f(p) + p*(f(k+1) - f(k)).
    """
    F = [f(k) for k in range(m + 2)]
    D = [0.0] + [F[k] - F[k - 1] for k in range(1, m + 2)]
    best = -1.0
    cands: list[tuple[int, ...]] = []
    rows: list[int] = []

    def rec(rem: int, cap: int, k: int, h: float, rows_left: int) -> None:
        nonlocal best, cands
        if rem == 0:
            if h > best + rel_tol * max(1.0, best):
                best = h
                cands = [tuple(rows)]
            elif h >= best - rel_tol * max(1.0, best):
                cands.append(tuple(rows))
            return
        if rows_left == 0 or rem > cap * rows_left:
            return
        dk = D[k + 1]
        for p in range(min(cap, rem), 0, -1):
            rows.append(p)
            rec(rem - p, p, k + 1, h + F[p] + p * dk, rows_left - 1)
            rows.pop()

    for x1 in range(m, 0, -1):
        max_rows = min(x1, bound - x1)
        if max_rows < 1:
            continue
        rows.append(x1)
        rec(m - x1, x1, 1, F[x1] + x1 * D[1], max_rows - 1)
        rows.pop()
    return best, cands


def exact_maximizers(tableaux: Iterable[YoungTableau]) -> list[YoungTableau]:
    """The tableaux of maximal h, ties decided exactly."""
    ts = list(tableaux)
    if not ts:
        return []
    keyed = [(t, degree_counts(t.rows + t.columns)) for t in ts]
    cmp = cmp_to_key(lambda a, b: compare_h_counts(a[1], b[1]))
    top = max(keyed, key=cmp)
    return [t for t, c in keyed if compare_h_counts(c, top[1]) == 0]


@dataclass(frozen=True)
class BruteForceResult:
    h: float
    witnesses: tuple[YoungTableau, ...]


def brute_force_extremal(m: int, n: int | None = None,
                         max_states: int = DEFAULT_MAX_STATES) -> BruteForceResult:
    """Exact set of h-maximizing tableaux with m cells and order at most n."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    if partition_count(m) > max_states:
        raise SizeGuardError(f"p({m}) = {partition_count(m)} exceeds the {max_states}-state guard")
    bound = _order_bound(m, n)
    _, cands = _scan_extremal(m, bound)
    if not cands:
        raise InfeasibleError(f"no bipartite graph with {m} edges on at most {n} vertices")
    winners = exact_maximizers(YoungTableau(c) for c in cands)
    winners.sort(key=lambda t: (t.y, t.rows))
    return BruteForceResult(max(map(h_tableau, winners)), tuple(winners))


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    m: int
    y: int
    q: int
    x: int
    r_low: int
    r_high: int
    h: float
    is_max_h: bool
    is_min_r_low: bool
    is_min_r_high: bool

    @property
    def shape(self) -> BnmyShape:
        return BnmyShape(self.n, self.m, self.y)

    @property
    def is_complete(self) -> bool:
        return self.r_low == 0


def capacity(n: int) -> int:
    return (n // 2) * ((n + 1) // 2)


def feasible_ys(n: int, m: int) -> list[int]:
    return [y for y in range(1, math.isqrt(m) + 1) if y + -(-m // y) <= n]


def bnmy_records(n: int, m: int) -> list[ExtremalRecord]:
    """One record per feasible y, flags set relative to this (n, m)."""
    shapes = [BnmyShape(n, m, y) for y in feasible_ys(n, m)]
    if not shapes:
        return []
    counts = [s.degree_counts() for s in shapes]
    cmp = cmp_to_key(compare_h_counts)
    top = max(counts, key=cmp)
    r_low = [s.r for s in shapes]
    r_high = [s.x * s.y - m for s in shapes]
    lo, hi = min(r_low), min(r_high)
    return [
        ExtremalRecord(n, m, s.y, s.q, s.x, rl, rh, s.h,
                       compare_h_counts(c, top) == 0, rl == lo, rh == hi)
        for s, c, rl, rh in zip(shapes, counts, r_low, r_high)
    ]


def fast_extremal(n: int, m: int) -> tuple[ExtremalRecord, list[ExtremalRecord]]:
    """Best B(n, m, y) and all feasible records; ties go to the smallest y."""
    if m < 1 or n < 2:
        raise DomainError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    if m > capacity(n):
        raise InfeasibleError(f"m={m} exceeds the bipartite capacity {capacity(n)} of order {n}")
    records = bnmy_records(n, m)
    if not records:
        raise InfeasibleError(f"no feasible y for (n, m) = ({n}, {m})")
    best = next(r for r in records if r.is_max_h)
    return best, records


def _records_for_n(n: int) -> list[ExtremalRecord]:
    out = []
    for m in range(1, capacity(n) + 1):
        out.extend(bnmy_records(n, m))
    return out


def sweep(max_n: int, workers: int = 1) -> Iterator[ExtremalRecord]:
    """Records for 2 <= n <= max_n, 1 <= m <= floor(n^2/4), ordered by (n, m, y)."""
    if max_n < 2:
        raise DomainError(f"max_n must be at least 2, got {max_n}")
    ns = range(2, max_n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_records_for_n, ns):
                yield from chunk
    else:
        for n in ns:
            yield from _records_for_n(n)


PATTERNS = {
    (True, True): "both_min",
    (True, False): "only_rlow",
    (False, True): "only_rhigh",
    (False, False): "neither",
}


@dataclass(frozen=True)
class SweepSummary:
    """Flag-pattern tallies over extremal records that are not complete bipartite.

    ``per_record`` counts every extremal record; ``per_pair`` counts each
    pattern once per (n, m).
    """

    per_record: dict[str, int]
    per_pair: dict[str, int]

    def line(self, which: str = "per_record") -> str:
        tally = getattr(self, which)
        return " ".join(f"{k}={tally[k]}" for k in PATTERNS.values())


def summarize(records: Iterable[ExtremalRecord]) -> SweepSummary:
    per_record: Counter = Counter()
    pair_patterns: dict[tuple[int, int], set[str]] = {}
    for rec in records:
        if not rec.is_max_h or rec.is_complete:
            continue
        label = PATTERNS[(rec.is_min_r_low, rec.is_min_r_high)]
        per_record[label] += 1
        pair_patterns.setdefault((rec.n, rec.m), set()).add(label)
    per_pair = Counter(label for labels in pair_patterns.values() for label in labels)
    return SweepSummary({k: per_record[k] for k in PATTERNS.values()},
                        {k: per_pair[k] for k in PATTERNS.values()})


def _pairs(n_max: int) -> Iterator[tuple[int, int]]:
    for n in range(2, n_max + 1):
        for m in range(1, capacity(n) + 1):
            yield n, m


def verify_theorem_43(n_max: int) -> Report:
    """Brute force vs. B(n, m, y) for every (n, m) with n <= n_max, plus the
    dimension inequality xy - min(x, y) < m <= xy for every witness."""
    report = Report("thm43")
    for n, m in _pairs(n_max):
        bf = brute_force_extremal(m, n)
        best, _ = fast_extremal(n, m)
        report.checked += 1
        w0 = bf.witnesses[0]
        if compare_h_counts(degree_counts(w0.rows + w0.columns), best.shape.degree_counts()) != 0:
            report.violations.append(f"(n={n}, m={m}): brute force h={bf.h!r} vs B(n,m,{best.y}) h={best.h!r}")
        for t in bf.witnesses:
            x, y = t.x, t.y
            if not x * y - min(x, y) < m <= x * y:
                report.violations.append(f"(n={n}, m={m}): witness {t} has x={x}, y={y}")
    return report


def verify_lemma_42(n_max: int) -> Report:
    """Every extremal tableau contains the square [y] x [y] (y = #rows <= x)."""
    report = Report("lemma42")
    for n, m in _pairs(n_max):
        for t in brute_force_extremal(m, n).witnesses:
            report.checked += 1
            if t.rows[-1] < t.y:
                report.violations.append(f"(n={n}, m={m}): {t} has shortest row {t.rows[-1]} < {t.y} rows")
    return report
