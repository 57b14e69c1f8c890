"""Degree-based topological indices TI_g(G) = sum over edges of g(deg u, deg v)."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .constructions import complete_bipartite
from .errors import ContractError
from .numtheory import factorize
from .search import enumerate_tableaux
from .tableau import YoungTableau


@dataclass(frozen=True)
class IndexFunction:
    """Symmetric edge weight g(a, b) with declared shape properties.

    ``increasing_in_product`` and ``concave_in_product`` mean g(a, b) = G(ab)
    for an increasing (concave) G.
    """

    name: str
    g: Callable[[int, int], float]
    increasing_in_product: bool = False
    concave_in_product: bool = False

    def __call__(self, a: int, b: int) -> float:
        return self.g(a, b)


_GRID = range(1, 13)


def check_index(index: IndexFunction, rel_tol: float = 1e-12) -> None:
    """Spot-check symmetry and the declared flags on a small grid."""
    g = index.g
    for a in _GRID:
        for b in _GRID:
            if not math.isclose(g(a, b), g(b, a), rel_tol=rel_tol, abs_tol=1e-12):
                raise ContractError(f"{index.name}: g({a},{b}) != g({b},{a})")
    if not (index.increasing_in_product or index.concave_in_product):
        return
    by_product: dict[int, float] = {}
    for a in _GRID:
        for b in _GRID:
            v = g(a, b)
            p = a * b
            if p in by_product and not math.isclose(by_product[p], v, rel_tol=rel_tol, abs_tol=1e-12):
                raise ContractError(f"{index.name}: not a function of the product at {a}*{b}")
            by_product.setdefault(p, v)
    ps = sorted(by_product)
    vals = [by_product[p] for p in ps]
    if index.increasing_in_product and any(v1 <= v0 for v0, v1 in zip(vals, vals[1:])):
        raise ContractError(f"{index.name}: not increasing in the product")
    if index.concave_in_product:
        slopes = [(v1 - v0) / (p1 - p0) for p0, p1, v0, v1 in zip(ps, ps[1:], vals, vals[1:])]
        if any(s1 > s0 + 1e-12 for s0, s1 in zip(slopes, slopes[1:])):
            raise ContractError(f"{index.name}: not concave in the product")


def build_registry(indices: Iterable[IndexFunction]) -> Mapping[str, IndexFunction]:
    reg = {}
    for index in indices:
        check_index(index)
        reg[index.name] = index
    return MappingProxyType(reg)


_BUILTIN = build_registry([
    IndexFunction("entropy", lambda a, b: math.log(a * b), True, True),
    IndexFunction("zagreb2", lambda a, b: float(a * b), True, True),
    IndexFunction("rrandic", lambda a, b: math.sqrt(a * b), True, True),
    IndexFunction("zagreb1", lambda a, b: float(a + b)),
    IndexFunction("sqsum", lambda a, b: float((a + b) ** 2)),
])


def builtin_indices() -> Mapping[str, IndexFunction]:
    return _BUILTIN


def _resolve(g: IndexFunction | str) -> IndexFunction:
    if isinstance(g, IndexFunction):
        return g
    try:
        return _BUILTIN[g]
    except KeyError:
        raise KeyError(f"unknown index {g!r}; known: {', '.join(_BUILTIN)}") from None


def ti_g(t: YoungTableau, g: IndexFunction | str) -> float:
    """TI_g of the difference graph of ``t``: cell (i, j) is the edge between
    column i (degree y_i) and row j (degree x_j)."""
    index = _resolve(g)
    cols = t.columns
    return math.fsum(index(cols[i - 1], t.rows[j - 1]) for i, j in t.cells())


def maximize_ti_over_size(m: int, g: IndexFunction | str) -> frozenset[YoungTableau]:
    """Maximizers of TI_g over bipartite graphs of size m for g increasing and
    concave in the product: all K_{q,y} with qy = m, as y <= q rectangles."""
    index = _resolve(g)
    if not (index.increasing_in_product and index.concave_in_product):
        raise ContractError(f"{index.name} is not flagged increasing and concave in the product")
    divisors = [1]
    for p, e in factorize(m):
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    return frozenset(complete_bipartite(m // y, y) for y in divisors if y * y <= m)


def brute_force_ti_maximizers(m: int, g: IndexFunction | str, n: int | None = None,
                              rel_tol: float = 1e-9) -> frozenset[YoungTableau]:
    """Maximizers of TI_g over tableaux with m cells and order <= n, up to conjugation."""
    index = _resolve(g)
    scored = [(ti_g(t, index), t) for t in enumerate_tableaux(m, n)]
    top = max(v for v, _ in scored)
    return frozenset(t for v, t in scored if math.isclose(v, top, rel_tol=rel_tol))


def find_index_divergence(first: str = "zagreb1", second: str = "zagreb2",
                          max_n: int = 50):
    """First (n, m), in (n, m) order, whose maximizer sets for the two indices
    differ. Returns ``(n, m, first_set, second_set)`` or None."""
    for n in range(2, max_n + 1):
        for m in range(1, (n // 2) * ((n + 1) // 2) + 1):
            a = brute_force_ti_maximizers(m, first, n)
            b = brute_force_ti_maximizers(m, second, n)
            if a != b:
                return n, m, a, b
    return None
