"""Closed-form extremal and comparison shapes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import DegreeSequence, as_degrees, f
from .errors import DomainError, InfeasibleError
from .tableau import BipartiteDegreePair, YoungTableau


def complete_bipartite(q: int, y: int) -> YoungTableau:
    """K_{q,y} as the rectangle with y rows of length q."""
    if q < 1 or y < 1:
        raise DomainError(f"K_{{q,y}} needs q, y >= 1, got q={q}, y={y}")
    return YoungTableau((q,) * y)


@dataclass(frozen=True)
class BnmyShape:
    """K_{q,y} plus one vertex joined to r = m - qy vertices of the y-side.

    ``n`` is the order budget, ``None`` for size-only problems.
    """

    n: int | None
    m: int
    y: int

    @property
    def q(self) -> int:
        return self.m // self.y

    @property
    def r(self) -> int:
        return self.m - self.q * self.y

    @property
    def x(self) -> int:
        return -(-self.m // self.y)

    @property
    def has_extra_vertex(self) -> bool:
        return self.r > 0

    @property
    def order(self) -> int:
        return self.y + self.x

    @property
    def tableau(self) -> YoungTableau:
        return YoungTableau((self.q + 1,) * self.r + (self.q,) * (self.y - self.r))

    def degree_counts(self) -> dict[int, int]:
        """Degree multiset {degree: count}, built without materialising the tableau."""
        q, r, y = self.q, self.r, self.y
        counts: dict[int, int] = {}
        for d, c in ((q + 1, r), (q, y - r), (y, q), (r, 1 if r else 0)):
            if c:
                counts[d] = counts.get(d, 0) + c
        return counts

    @property
    def h(self) -> float:
        q, r, y = self.q, self.r, self.y
        return math.fsum((r * f(q + 1), (y - r) * f(q), q * f(y), f(r)))


def b_nmy(n: int | None, m: int, y: int) -> BnmyShape:
    if m < 1 or not 1 <= y <= math.isqrt(m):
        raise DomainError(f"B(n,m,y) needs 1 <= y <= floor(sqrt(m)), got m={m}, y={y}")
    shape = BnmyShape(n, m, y)
    if n is not None and shape.order > n:
        raise InfeasibleError(f"B({n},{m},{y}) needs {shape.order} vertices")
    return shape


def prop31_maximizer(x: int, y: int, r: int) -> YoungTableau:
    """[x] x [y] with the last r cells of column x removed."""
    if not x > y > r > 0:
        raise DomainError(f"need x > y > r > 0, got ({x}, {y}, {r})")
    return YoungTableau((x,) * (y - r) + (x - 1,) * r)


def prop31_estimate(x: int, y: int, r: int) -> float:
    if not x > y > r > 0:
        raise DomainError(f"need x > y > r > 0, got ({x}, {y}, {r})")
    m = x * y - r
    return f(m) - r


def prop32_maximizer(q: int, y: int, r: int) -> YoungTableau:
    """[q] x [y] with r extra cells in column q+1."""
    if not (q >= y > r > 0):
        raise DomainError(f"need q >= y > r > 0, got ({q}, {y}, {r})")
    return YoungTableau((q + 1,) * r + (q,) * (y - r))


def prop32_estimate(q: int, y: int, r: int) -> float:
    if not (q >= y > r > 0):
        raise DomainError(f"need q >= y > r > 0, got ({q}, {y}, {r})")
    m = q * y + r
    return f(m) - r * math.log(y / r)


@dataclass(frozen=True)
class HookShapes:
    x: int
    y: int
    r: int
    s: int
    w: int
    r_prime: int
    t: YoungTableau
    t_prime: YoungTableau

    @property
    def m(self) -> int:
        return self.x * self.y - self.r - self.s + 1


def hook_shapes(x: int, y: int, r: int, s: int) -> HookShapes:
    """The pair T (rectangle minus a hook) and T' (narrower near-rectangle).

    T drops the last r cells of row y and the cells of column x in rows
    y-s+1..y-1; T' is [x-w] x [y] minus the bottom r' cells of its last
    column, where r + s - 1 = w*y + r'. Both have m = xy - r - s + 1 cells.
    Only w >= 1 is accepted.
    """
    if not (x > y >= 2 and 1 <= r <= x - y and 1 <= s < y):
        raise DomainError(f"invalid hook parameters (x,y,r,s)=({x},{y},{r},{s})")
    w, r_prime = divmod(r + s - 1, y)
    if w < 1:
        raise DomainError(f"r+s-1={r + s - 1} < y={y} gives w=0")
    rows = (x,) * (y - s) + (x - 1,) * (s - 1) + (x - r,)
    t = YoungTableau(rows)
    t_prime = YoungTableau((x - w,) * (y - r_prime) + (x - w - 1,) * r_prime)
    return HookShapes(x, y, r, s, w, r_prime, t, t_prime)


class Realization(NamedTuple):
    degrees: DegreeSequence
    edges: list[tuple[int, int]]


class BipartiteRealization(NamedTuple):
    pair: BipartiteDegreePair
    edges: list[tuple[int, int]]


def _perfect_matchings(n: int):
    """Round-robin 1-factorization of K_n for even n."""
    fixed = n - 1
    for k in range(n - 1):
        yield [(k, fixed)] + [((k + i) % fixed, (k - i) % fixed) for i in range(1, n // 2)]


def nearly_regular(n: int, m: int) -> Realization:
    """A graph with n vertices, m edges and max - min degree <= 1.

    Even n: add edges one perfect matching of K_n at a time. Odd n: take
    whole 2-factors v_i v_j with i - j = +-l (mod n), l >= 2, then the rest
    from the Hamiltonian cycle l = 1 as a matching or the complement of one.
    """
    if n < 1 or m < 0:
        raise DomainError(f"need n >= 1, m >= 0, got n={n}, m={m}")
    if m > n * (n - 1) // 2:
        raise InfeasibleError(f"K_{n} has fewer than {m} edges")
    edges: list[tuple[int, int]] = []
    if n % 2 == 0:
        for matching in _perfect_matchings(n):
            take = min(len(matching), m - len(edges))
            edges.extend(matching[:take])
            if len(edges) == m:
                break
    else:
        full, rest = divmod(m, n)
        # the Hamiltonian cycle l = 1 is kept back for a partial layer
        first = 2 if rest else 1
        for ell in range(first, first + full):
            edges.extend((i, (i + ell) % n) for i in range(n))
        cycle = [(i, (i + 1) % n) for i in range(n)]
        if rest == 0:
            pass
        elif rest <= n // 2:
            edges.extend(cycle[0:2 * rest:2])
        else:
            dropped = set(range(0, 2 * (n - rest), 2))
            edges.extend(e for k, e in enumerate(cycle) if k not in dropped)
    edges = [tuple(sorted(e)) for e in edges]
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return Realization(as_degrees(deg), edges)


def nearly_regular_degrees(n: int, m: int) -> DegreeSequence:
    hi, k = divmod(2 * m, n)
    return (hi + 1,) * k + (hi,) * (n - k)


def balanced_bipartite_max(n: int, m: int) -> BipartiteRealization:
    """Bipartite (n, m)-graph with classes of sizes ceil(n/2), floor(n/2)
    whose degrees differ by at most one inside each class.

    Edges are ``(i, j)`` with a_i in the larger class and b_j in the smaller.
    """
    a, b = (n + 1) // 2, n // 2
    if m < 1 or n < 2:
        raise DomainError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    if m > a * b:
        raise InfeasibleError(f"K_{{{a},{b}}} has fewer than {m} edges")
    if n % 2 == 0:
        edges = [(i, (i + t) % b) for t in range(b) for i in range(a)][:m]
    else:
        # a and b are coprime, so k -> (k mod a, k mod b) is injective on 1..ab
        edges = [(k % a, k % b) for k in range(1, m + 1)]
    du, dv = [0] * a, [0] * b
    for i, j in edges:
        du[i] += 1
        dv[j] += 1
    return BipartiteRealization(BipartiteDegreePair(tuple(du), tuple(dv)), edges)
