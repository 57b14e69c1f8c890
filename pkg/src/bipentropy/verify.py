"""Exhaustive checks of the extremality statements, one suite per result."""

from __future__ import annotations

import math
from collections.abc import Callable
from functools import cache
from itertools import combinations

import numpy as np

from .constructions import (
    balanced_bipartite_max, hook_shapes, nearly_regular, nearly_regular_degrees,
    prop31_maximizer, prop32_maximizer,
)
from .core import as_degrees, compare_h_counts, degree_counts
from .errors import SizeGuardError
from .majorization import is_bigraphical, majorizes
from .numtheory import divisor_count
from .report import Report
from .search import (
    brute_force_extremal, capacity, exact_maximizers, partitions_in_box,
    verify_lemma_42, verify_theorem_43,
)
from .tableau import YoungTableau, conjugate


def bigraphical_pairs(m: int):
    """All (a, b) partitions of m realizable as class degrees of a bipartite graph."""
    parts = list(partitions_in_box(m))
    for a in parts:
        for b in parts:
            if is_bigraphical(a, b):
                yield a, b


def verify_theorem_11(limit: int) -> Report:
    """h <= m log m over all bigraphical pairs with m <= limit, equality only for K_{q,y}."""
    report = Report("thm11")
    for m in range(1, limit + 1):
        bound = {m: 1}
        for a, b in bigraphical_pairs(m):
            report.checked += 1
            sign = compare_h_counts(degree_counts(a + b), bound)
            complete = all(d == len(b) for d in a) and all(d == len(a) for d in b)
            if sign > 0 or (sign == 0) != complete:
                report.violations.append(f"m={m}: pair {a} / {b}")
    return report


def verify_lemma_41(limit: int) -> Report:
    """h(T) < h(T') for every admissible (x, y, r, s) with x <= limit."""
    report = Report("lemma41")
    for x in range(3, limit + 1):
        for y in range(2, x):
            for r in range(1, x - y + 1):
                for s in range(1, y):
                    if r + s - 1 < y:
                        continue
                    hs = hook_shapes(x, y, r, s)
                    report.checked += 1
                    t, tp = hs.t, hs.t_prime
                    if compare_h_counts(degree_counts(t.rows + t.columns),
                                        degree_counts(tp.rows + tp.columns)) >= 0:
                        report.violations.append(f"(x,y,r,s)=({x},{y},{r},{s}): T={t}, T'={tp}")
    return report


def verify_prop_31(limit: int) -> Report:
    """Unique maximizer among tableaux with xy - r cells inside [x] x [y]."""
    report = Report("prop31")
    for x in range(3, limit + 1):
        for y in range(2, x):
            for r in range(1, y):
                box = (YoungTableau(p) for p in partitions_in_box(x * y - r, y, x))
                winners = exact_maximizers(box)
                report.checked += 1
                expected = prop31_maximizer(x, y, r)
                if winners != [expected]:
                    report.violations.append(f"(x,y,r)=({x},{y},{r}): maximizers {[str(w) for w in winners]}")
    return report


def _containing_rectangle(q: int, y: int, r: int):
    """Tableaux with qy + r cells containing [q] x [y]: r extra cells split
    between longer first rows and new rows of length <= q."""
    for a in range(r + 1):
        for mu in partitions_in_box(a, y):
            head = tuple(q + v for v in mu) + (q,) * (y - len(mu))
            for nu in partitions_in_box(r - a, None, q):
                yield YoungTableau(head + nu)


def verify_prop_32(limit: int) -> Report:
    """Maximizer among tableaux with qy + r cells containing [q] x [y].

    For q = y the conjugate of the maximizer also contains the square and has
    the same h, so uniqueness is up to conjugation there.
    """
    report = Report("prop32")
    for q in range(2, limit + 1):
        for y in range(2, q + 1):
            for r in range(1, y):
                winners = set(exact_maximizers(_containing_rectangle(q, y, r)))
                report.checked += 1
                expected = {prop32_maximizer(q, y, r)}
                if q == y:
                    expected.add(conjugate(prop32_maximizer(q, y, r)))
                if winners != expected:
                    report.violations.append(f"(q,y,r)=({q},{y},{r}): maximizers {sorted(map(str, winners))}")
    return report


@cache
def graphical_degree_sequences(n: int) -> dict[int, frozenset[tuple[int, ...]]]:
    """Degree sequences of all labelled simple graphs on n vertices, keyed by m."""
    if n > 8:
        raise SizeGuardError(f"enumerating all graphs on {n} vertices is too large")
    pairs = list(combinations(range(n), 2))
    e = len(pairs)
    incidence = np.zeros((e, n), dtype=np.int64)
    for k, (a, b) in enumerate(pairs):
        incidence[k, a] = incidence[k, b] = 1
    shifts = np.arange(e, dtype=np.int64)
    found: dict[int, set] = {}
    chunk = 1 << 16
    for start in range(0, 1 << e, chunk):
        masks = np.arange(start, min(start + chunk, 1 << e), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        degs = -np.sort(-(bits @ incidence), axis=1)
        ms = bits.sum(axis=1)
        rows = np.unique(np.column_stack([ms, degs]), axis=0)
        for row in rows:
            found.setdefault(int(row[0]), set()).add(tuple(int(v) for v in row[1:]))
    return {m: frozenset(s) for m, s in found.items()}


def verify_prop_51(limit: int) -> Report:
    """The nearly-regular witness is simple, has the spread-1 degrees, and is
    majorized by every graphical (n, m) degree sequence."""
    report = Report("prop51")
    for n in range(1, limit + 1):
        sequences = graphical_degree_sequences(n)
        for m in range(n * (n - 1) // 2 + 1):
            real = nearly_regular(n, m)
            report.checked += 1
            simple = len(set(real.edges)) == m and all(a != b for a, b in real.edges)
            if not simple or real.degrees != nearly_regular_degrees(n, m):
                report.violations.append(f"(n={n}, m={m}): bad witness, degrees {real.degrees}")
                continue
            if real.degrees not in sequences[m]:
                report.violations.append(f"(n={n}, m={m}): {real.degrees} not graphical?")
            for d in sequences[m]:
                if not majorizes(d, real.degrees):
                    report.violations.append(f"(n={n}, m={m}): {d} does not majorize {real.degrees}")
    return report


def bigraphical_sequences(n: int, m: int):
    """Combined, zero-padded degree sequences of bipartite (n, m)-graphs."""
    seen = set()
    for v in range(1, n // 2 + 1):
        u = n - v
        for a in partitions_in_box(m, u, v):
            for b in partitions_in_box(m, v, u):
                if is_bigraphical(a, b):
                    d = as_degrees(a + b)
                    d = d + (0,) * (n - len(d))
                    if d not in seen:
                        seen.add(d)
                        yield d


def verify_prop_52(limit: int) -> Report:
    """The balanced bipartite witness is majorized by every bipartite (n, m) sequence."""
    report = Report("prop52")
    for n in range(2, limit + 1):
        for m in range(1, capacity(n) + 1):
            real = balanced_bipartite_max(n, m)
            report.checked += 1
            a, b = (n + 1) // 2, n // 2
            pair = real.pair
            if (len(set(real.edges)) != m or pair.u_degrees[0] - pair.u_degrees[-1] > 1
                    or pair.v_degrees[0] - pair.v_degrees[-1] > 1
                    or len(pair.u_degrees) != a or len(pair.v_degrees) != b):
                report.violations.append(f"(n={n}, m={m}): bad witness {pair}")
                continue
            mine = pair.u_degrees + pair.v_degrees
            for d in bigraphical_sequences(n, m):
                if not majorizes(d, mine):
                    report.violations.append(f"(n={n}, m={m}): {d} does not majorize {as_degrees(mine)}")
    return report


def verify_rectangle_count(limit: int) -> Report:
    """For m <= limit the size-only maximizers are ceil(sigma(m)/2) rectangles."""
    report = Report("sigma")
    for m in range(1, limit + 1):
        bf = brute_force_extremal(m)
        report.checked += 1
        if len(bf.witnesses) != math.ceil(divisor_count(m) / 2) or not all(
                t.is_rectangle() for t in bf.witnesses):
            report.violations.append(f"m={m}: {[str(t) for t in bf.witnesses]}")
    return report


SUITES: dict[str, Callable[[int], Report]] = {
    "thm11": verify_theorem_11,
    "lemma41": verify_lemma_41,
    "lemma42": verify_lemma_42,
    "thm43": verify_theorem_43,
    "prop31": verify_prop_31,
    "prop32": verify_prop_32,
    "prop51": verify_prop_51,
    "prop52": verify_prop_52,
    "sigma": verify_rectangle_count,
}
