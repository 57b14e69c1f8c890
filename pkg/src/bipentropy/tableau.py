"""Young tableaux as difference graphs.

A tableau is stored by its row lengths x_1 >= ... >= x_y >= 1. Row j is
vertex v_j with degree x_j and column i is vertex u_i whose degree is the
column height y_i, so the conjugate tableau is the same graph with the two
sides swapped.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass
from functools import cached_property

from .core import DegreeSequence, as_degrees, degree_counts, h_from_counts
from .errors import DomainError, InconsistencyError, TableauParseError

Edge = tuple[Hashable, Hashable]


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(v) for v in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DomainError("a tableau needs at least one row")
        if rows[-1] < 1:
            raise DomainError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise DomainError(f"row lengths must be non-increasing: {rows}")

    @classmethod
    def parse(cls, literal: str) -> "YoungTableau":
        """Parse ``"6,6,5,5"``; errors report the character offset."""
        rows = []
        pos = 0
        for token in literal.split(","):
            stripped = token.strip()
            offset = pos + (len(token) - len(token.lstrip()))
            if not stripped.isdigit():
                raise TableauParseError(f"expected a positive integer, got {stripped!r}", offset)
            value = int(stripped)
            if value < 1:
                raise TableauParseError("row lengths must be positive", offset)
            if rows and value > rows[-1]:
                raise TableauParseError("row lengths must be non-increasing", offset)
            rows.append(value)
            pos += len(token) + 1
        return cls(tuple(rows))

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))

    @property
    def y(self) -> int:
        return len(self.rows)

    @property
    def x(self) -> int:
        return self.rows[0]

    @property
    def m(self) -> int:
        return sum(self.rows)

    @cached_property
    def columns(self) -> tuple[int, ...]:
        return tuple(sum(1 for r in self.rows if r >= i) for i in range(1, self.x + 1))

    @property
    def order(self) -> int:
        """Number of non-isolated vertices, x + y."""
        return self.x + self.y

    def degrees(self) -> DegreeSequence:
        return as_degrees(self.rows + self.columns)

    def is_rectangle(self) -> bool:
        return self.rows[0] == self.rows[-1]

    def cells(self) -> Iterable[tuple[int, int]]:
        """Cells (i, j), column i and row j, both 1-based."""
        for j, length in enumerate(self.rows, start=1):
            for i in range(1, length + 1):
                yield i, j

    def canonical(self) -> "YoungTableau":
        """The representative of {self, conjugate} with no more rows than columns."""
        return self if self.y <= self.x else conjugate(self)


def conjugate(t: YoungTableau) -> YoungTableau:
    return YoungTableau(t.columns)


def h_tableau(t: YoungTableau) -> float:
    """h of the associated graph, sum of f over row lengths and column heights."""
    return h_from_counts(degree_counts(t.rows + t.columns))


@dataclass(frozen=True)
class BipartiteDegreePair:
    u_degrees: DegreeSequence
    v_degrees: DegreeSequence

    def __post_init__(self):
        u = as_degrees(self.u_degrees)
        v = as_degrees(self.v_degrees)
        object.__setattr__(self, "u_degrees", u)
        object.__setattr__(self, "v_degrees", v)
        if sum(u) != sum(v):
            raise InconsistencyError(f"class degree sums differ: {sum(u)} != {sum(v)}")
        pu = sum(1 for d in u if d > 0)
        pv = sum(1 for d in v if d > 0)
        if (u and u[0] > pv) or (v and v[0] > pu):
            raise InconsistencyError("a degree exceeds the number of possible neighbours")

    @property
    def m(self) -> int:
        return sum(self.u_degrees)

    @property
    def h(self) -> float:
        return h_from_counts(degree_counts(self.u_degrees + self.v_degrees))

    @classmethod
    def of_tableau(cls, t: YoungTableau) -> "BipartiteDegreePair":
        return cls(t.columns, t.rows)


def _sides(edges: Iterable[Edge]) -> tuple[set, dict, dict]:
    es = set()
    nu: dict = {}
    nv: dict = {}
    for u, v in edges:
        if (u, v) in es:
            raise InconsistencyError(f"repeated edge {(u, v)}")
        es.add((u, v))
        nu.setdefault(u, set()).add(v)
        nv.setdefault(v, set()).add(u)
    return es, nu, nv


def is_young(pair: BipartiteDegreePair, edges: Iterable[Edge]) -> bool:
    """Whether the degree-sorted biadjacency of ``edges`` is a Young tableau.

    Edges are ``(u, v)`` pairs with u in U and v in V. The degrees read off
    the edges must match ``pair`` (zeros ignored).
    """
    es, nu, nv = _sides(edges)
    du = as_degrees(len(s) for s in nu.values())
    dv = as_degrees(len(s) for s in nv.values())
    if du != tuple(d for d in pair.u_degrees if d) or dv != tuple(d for d in pair.v_degrees if d):
        raise InconsistencyError("adjacency does not realise the given degree pair")
    us = sorted(nu, key=lambda u: len(nu[u]), reverse=True)
    vs = sorted(nv, key=lambda v: len(nv[v]), reverse=True)
    iu = {u: i for i, u in enumerate(us)}
    iv = {v: j for j, v in enumerate(vs)}
    cells = {(iu[u], iv[v]) for u, v in es}
    # downward closure follows from closure under single steps
    return all((i == 0 or (i - 1, j) in cells) and (j == 0 or (i, j - 1) in cells)
               for i, j in cells)


def is_difference_graph(edges: Iterable[Edge]) -> bool:
    """No u1v1, u2v2 in E with u1v2, u2v1 both missing."""
    es, _, _ = _sides(edges)
    el = list(es)
    for a, (u1, v1) in enumerate(el):
        for u2, v2 in el[a + 1:]:
            if u1 != u2 and v1 != v2 and (u1, v2) not in es and (u2, v1) not in es:
                return False
    return True


def tableau_edges(t: YoungTableau) -> list[tuple[str, str]]:
    """Biadjacency of ``t`` with U = columns ``u1..ux`` and V = rows ``v1..vy``."""
    return [(f"u{i}", f"v{j}") for i, j in t.cells()]
