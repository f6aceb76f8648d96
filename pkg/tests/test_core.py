from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchseq.assemble import window_join
from matchseq.core import (
    EdgeOrdering,
    Graph,
    complete_graph,
    eval_cms_r,
    eval_ms_r,
    junction_ms_r,
    window_max_degree,
)


def naive_value(perm, n, r, cyclic):
    # every window checked from scratch, largest s first
    total = len(perm)
    for s in range(total, 0, -1):
        starts = range(total) if cyclic else range(total - s + 1)
        ok = True
        for start in starts:
            deg = [0] * n
            for k in range(s):
                for v in perm[(start + k) % total]:
                    deg[v] += 1
            if max(deg) > r:
                ok = False
                break
        if ok:
            return s
    return 0


@st.composite
def orderings(draw, n_min=3, n_max=7):
    n = draw(st.integers(n_min, n_max))
    edges = list(complete_graph(n).edges)
    perm = draw(st.permutations(edges))
    return EdgeOrdering.from_edges(n, perm)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, ((0, 3),))
    with pytest.raises(ValueError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Graph(3, ((1, 1),))


def test_ordering_must_be_permutation():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        EdgeOrdering(g, g.edges[:-1])
    o = EdgeOrdering(g, tuple(reversed(g.edges)))
    assert o.label(2, 3) == 0
    assert o.label(3, 2) == 0


def test_k4_one_factorization_order():
    # consecutive perfect matchings of K_4 always meet at the seam
    o = EdgeOrdering.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)])
    assert eval_ms_r(o, 1).value == 1
    assert eval_ms_r(o, 2).value == 3
    assert eval_cms_r(o, 1).value == 1


def test_star_path_has_value_one():
    o = EdgeOrdering.from_edges(3, [(0, 1), (1, 2)])
    rep = eval_ms_r(o, 1)
    assert rep.value == 1
    assert rep.violating_window == (0, 2, 1)


def test_cyclic_value_never_exceeds_linear():
    o = EdgeOrdering.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)])
    assert eval_cms_r(o, 1).value <= eval_ms_r(o, 1).value


def test_whole_ordering_when_r_reaches_max_degree():
    o = EdgeOrdering(complete_graph(5), complete_graph(5).edges)
    assert eval_ms_r(o, 4).value == 10
    assert eval_cms_r(o, 4).violating_window is None


def test_window_max_degree():
    o = EdgeOrdering.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)])
    assert window_max_degree(o, 0, 2) == 1
    assert window_max_degree(o, 0, 3) == 2
    assert window_max_degree(o, 5, 2, cyclic=True) == 2
    with pytest.raises(ValueError):
        window_max_degree(o, 5, 2)


def test_empty_window_join_is_empty():
    a = EdgeOrdering.from_edges(4, [(0, 1), (2, 3)])
    b = EdgeOrdering.from_edges(4, [(0, 2), (1, 3)])
    assert len(window_join(a, b, 1)) == 0
    assert junction_ms_r(a, b, 1) >= 1


def test_junction_rejects_shared_edges():
    a = EdgeOrdering.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        junction_ms_r(a, a, 1)


@settings(max_examples=150, deadline=None)
@given(orderings(), st.integers(1, 4))
def test_evaluators_match_brute_force(o, r):
    for cyclic, ev in ((False, eval_ms_r), (True, eval_cms_r)):
        rep = ev(o, r)
        assert rep.value == naive_value(o.perm, o.n, r, cyclic)
        if rep.violating_window is not None:
            start, length, vertex = rep.violating_window
            assert length == rep.value + 1
            window = [o.perm[(start + k) % len(o)] for k in range(length)]
            assert sum(vertex in e for e in window) > r


@settings(max_examples=100, deadline=None)
@given(orderings(n_min=4, n_max=6), st.integers(1, 3), st.data())
def test_junction_agrees_with_window_join(o, r, data):
    cut = data.draw(st.integers(1, len(o) - 1))
    first = EdgeOrdering.from_edges(o.n, o.perm[:cut])
    second = EdgeOrdering.from_edges(o.n, o.perm[cut:])
    j = junction_ms_r(first, second, r)
    limit = min(len(first), len(second)) + 1
    # wherever window_join is defined the two notions coincide
    best = max(s for s in range(1, limit + 1)
               if len(window_join(first, second, s)) == 0 or eval_ms_r(window_join(first, second, s), r).value >= s)
    assert min(j, limit) == best


def test_evaluator_exhaustive_small():
    edges = list(complete_graph(4).edges)
    seen = set()
    for perm in permutations(edges):
        o = EdgeOrdering.from_edges(4, perm)
        v = eval_cms_r(o, 1).value
        assert v == naive_value(perm, 4, 1, True)
        seen.add(v)
    # cms(K_4) = floor((4-2)/2)
    assert max(seen) == 1


def test_relabel_and_rotate_preserve_values():
    o = EdgeOrdering.from_edges(5, list(complete_graph(5).edges))
    moved = o.relabel([4, 3, 2, 1, 0])
    assert eval_ms_r(moved, 2).value == eval_ms_r(o, 2).value
    assert eval_cms_r(o.rotate(3), 2).value == eval_cms_r(o, 2).value
