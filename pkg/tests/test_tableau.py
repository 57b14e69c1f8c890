import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from bipentropy.core import f
from bipentropy.errors import DomainError, InconsistencyError, TableauParseError
from bipentropy.tableau import (
    BipartiteDegreePair, YoungTableau, conjugate, h_tableau, is_difference_graph, is_young,
    tableau_edges,
)

from conftest import tableaux


def cell_sum(t):
    cols = t.columns
    return math.fsum(math.log(t.rows[j - 1] * cols[i - 1]) for i, j in t.cells())


def test_conjugate_examples():
    assert conjugate(YoungTableau((1,))) == YoungTableau((1,))
    assert conjugate(YoungTableau((6, 6, 5, 5))).rows == (4, 4, 4, 4, 4, 2)
    assert conjugate(YoungTableau((3, 2))).rows == (2, 2, 1)


@given(tableaux())
def test_conjugate_involution_and_h_symmetry(t):
    assert conjugate(conjugate(t)) == t
    assert h_tableau(conjugate(t)) == pytest.approx(h_tableau(t), rel=1e-12)


def test_h_tableau_examples():
    assert h_tableau(YoungTableau((1,))) == 0.0
    t = YoungTableau((6, 6, 5, 5))
    assert cell_sum(t) == pytest.approx(66.707666, abs=1e-5)
    assert h_tableau(t) == pytest.approx(cell_sum(t), rel=1e-12)
    for q, y in [(3, 2), (5, 5), (12, 1), (7, 3)]:
        assert h_tableau(YoungTableau((q,) * y)) == pytest.approx(f(q * y), rel=1e-13)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 200), min_size=1, max_size=50))
def test_cell_sum_identity(rows):
    t = YoungTableau(tuple(sorted(rows, reverse=True)))
    assert t.m <= 10**4
    assert h_tableau(t) == pytest.approx(cell_sum(t), rel=1e-9)


@given(tableaux())
def test_h_at_most_m_log_m(t):
    bound = f(t.m)
    if t.is_rectangle():
        assert h_tableau(t) == pytest.approx(bound, rel=1e-12)
    else:
        assert h_tableau(t) < bound - 1e-9


def test_parse_and_format():
    t = YoungTableau.parse("6,6,5,5")
    assert t.rows == (6, 6, 5, 5) and str(t) == "6,6,5,5"
    assert (t.x, t.y, t.m) == (6, 4, 22)
    with pytest.raises(TableauParseError) as err:
        YoungTableau.parse("6,6,x")
    assert err.value.position == 4
    with pytest.raises(TableauParseError) as err:
        YoungTableau.parse("3,4")
    assert err.value.position == 2
    with pytest.raises(TableauParseError):
        YoungTableau.parse("3,0")


def test_invalid_rows_rejected():
    for rows in [(), (2, 3), (2, 0)]:
        with pytest.raises(DomainError):
            YoungTableau(rows)


def test_degree_pair_validation():
    pair = BipartiteDegreePair((2, 2), (2, 2))
    assert pair.m == 4
    with pytest.raises(InconsistencyError):
        BipartiteDegreePair((3, 1), (2, 1))
    with pytest.raises(InconsistencyError):
        BipartiteDegreePair((3, 1), (2, 2))


K22 = [("a", 1), ("a", 2), ("b", 1), ("b", 2)]
C6 = [("a", 1), ("a", 2), ("b", 2), ("b", 3), ("c", 3), ("c", 1)]
P4 = [("u1", "v1"), ("u2", "v1"), ("u2", "v2")]


def test_is_young_examples():
    assert is_young(BipartiteDegreePair((2, 2), (2, 2)), K22)
    assert not is_young(BipartiteDegreePair((2, 2, 2), (2, 2, 2)), C6)
    assert is_young(BipartiteDegreePair((1, 2), (2, 1)), P4)
    with pytest.raises(InconsistencyError):
        is_young(BipartiteDegreePair((2, 2), (2, 2)), K22[:3])


def test_is_difference_graph_examples():
    assert is_difference_graph([("c", k) for k in range(5)])
    assert not is_difference_graph(C6)
    t = YoungTableau((6, 6, 5, 5))
    assert is_difference_graph(tableau_edges(t))
    u_deg = sorted((sum(1 for e in tableau_edges(t) if e[0] == u) for u in {e[0] for e in tableau_edges(t)}), reverse=True)
    assert tuple(u_deg) == (4, 4, 4, 4, 4, 2)


def _pair_of(edges):
    du, dv = {}, {}
    for u, v in edges:
        du[u] = du.get(u, 0) + 1
        dv[v] = dv.get(v, 0) + 1
    return BipartiteDegreePair(tuple(du.values()), tuple(dv.values()))


def test_young_iff_difference_exhaustive_small():
    # every bipartite graph with classes of size 3 and 3
    cells = list(itertools.product(range(3), range(3)))
    for mask in range(1, 1 << 9):
        edges = [(f"u{i}", f"v{j}") for k, (i, j) in enumerate(cells) if mask >> k & 1]
        assert is_young(_pair_of(edges), edges) == is_difference_graph(edges)


def test_young_iff_difference_random_6_6():
    rng = random.Random(7)
    cells = list(itertools.product(range(6), range(6)))
    for _ in range(2000):
        p = rng.random()
        edges = [(f"u{i}", f"v{j}") for i, j in cells if rng.random() < p]
        if not edges:
            continue
        assert is_young(_pair_of(edges), edges) == is_difference_graph(edges)


@given(tableaux(max_rows=6, max_part=6))
def test_tableau_graphs_are_difference_graphs(t):
    edges = tableau_edges(t)
    assert is_difference_graph(edges)
    assert is_young(BipartiteDegreePair.of_tableau(t), edges)


def test_single_switch_breaks_young():
    # the forbidden 2x2 pattern plus padding
    edges = [("a", 1), ("b", 2), ("a", 3), ("b", 3)]
    assert not is_difference_graph(edges)
    assert not is_young(_pair_of(edges), edges)
