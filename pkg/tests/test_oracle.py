from __future__ import annotations

import random
from itertools import permutations

import pytest

from matchseq.assemble import construct_cms, construct_ms
from matchseq.core import EdgeOrdering, Graph, complete_graph, eval_cms_r, eval_ms_r
from matchseq.corpus import entry
from matchseq.oracle import (
    FAIL,
    PASS,
    SKIP,
    SearchConfig,
    check_product_bound,
    check_theorem7_transfer,
    check_window_duality,
    exact_cms,
    exact_ms,
    upper_bound,
)


def brute_force(g: Graph, r: int, cyclic: bool) -> int:
    ev = eval_cms_r if cyclic else eval_ms_r
    return max(ev(EdgeOrdering(g, p), r).value for p in permutations(g.edges))


def test_upper_bound_values():
    assert upper_bound(7, 2) == 6
    assert upper_bound(4, 1) == 1
    assert upper_bound(11, 5) == 27
    with pytest.raises(ValueError):
        upper_bound(5, 0)


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        SearchConfig(target_s=0)


def test_exact_ms_small_complete():
    cert = exact_ms(complete_graph(5), 1)
    assert (cert.optimum, cert.exhausted) == (2, True)
    assert exact_ms(complete_graph(4), 2).optimum == 3


def test_exact_path_and_cycle():
    path = Graph(3, ((0, 1), (1, 2)))
    assert exact_ms(path, 1).optimum == 1
    c4 = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    cert = exact_cms(c4, 1)
    assert cert.optimum == brute_force(c4, 1, True) == 1
    assert cert.exhausted


def test_exact_cms_k5_needs_refutation():
    cert = exact_cms(complete_graph(5), 1)
    assert cert.optimum == 1
    assert cert.exhausted
    assert cert.proven_upper == 1


@pytest.mark.parametrize("edges", [
    ((0, 1), (1, 2), (2, 3), (3, 4), (0, 2)),
    ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)),
    ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (0, 5)),
])
@pytest.mark.parametrize("r", [1, 2])
def test_exact_matches_brute_force_on_small_graphs(edges, r):
    g = Graph(max(max(e) for e in edges) + 1, edges)
    for cyclic, fn in ((False, exact_ms), (True, exact_cms)):
        for sym in (True, False):
            cert = fn(g, r, SearchConfig(symmetry_break=sym))
            assert cert.exhausted
            assert cert.optimum == brute_force(g, r, cyclic)


def test_certificates_reevaluate():
    for n in range(4, 7):
        for r in (1, 2):
            cert = exact_cms(complete_graph(n), r)
            assert eval_cms_r(cert.ordering, r).value == cert.optimum
            assert cert.optimum <= upper_bound(n, r)


def test_budget_exhaustion_reports_lower_bound():
    cert = exact_cms(complete_graph(7), 1, SearchConfig(node_budget=5))
    assert not cert.exhausted
    assert cert.optimum == eval_cms_r(cert.ordering, 1).value
    assert cert.proven_upper == upper_bound(7, 1)


def test_target_decision():
    cert = exact_ms(complete_graph(6), 2, SearchConfig(target_s=4))
    assert cert.optimum >= 4
    refuted = exact_cms(complete_graph(5), 1, SearchConfig(target_s=2))
    assert refuted.proven_upper == 1
    assert refuted.exhausted


def test_symmetry_breaking_does_not_change_optimum():
    for r in (1, 2):
        a = exact_cms(complete_graph(6), r, SearchConfig(symmetry_break=True))
        b = exact_cms(complete_graph(6), r, SearchConfig(symmetry_break=False))
        assert a.optimum == b.optimum


def test_search_is_deterministic():
    a = exact_cms(complete_graph(6), 2)
    b = exact_cms(complete_graph(6), 2)
    assert a.ordering.perm == b.ordering.perm


def test_duality_on_corpus_ordering():
    o = entry("k7_r2").ordering
    assert check_window_duality(o, 2, 6)


def test_duality_random_and_mutation():
    rng = random.Random(7)
    edges = list(complete_graph(5).edges)
    for _ in range(20):
        rng.shuffle(edges)
        o = EdgeOrdering.from_edges(5, edges)
        for r in range(1, 5):
            for s in range(1, 11):
                assert check_window_duality(o, r, s).status == PASS
    _, o = construct_ms(8, 1)
    assert check_window_duality(o, 1, 4, complement_threshold=0).status == FAIL


def test_duality_needs_complete_host():
    o = EdgeOrdering.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        check_window_duality(o, 1, 1)


def test_transfer_on_centre_orderings():
    for n, r in [(7, 3), (11, 5)]:
        _, o = construct_cms(n, r)
        assert check_theorem7_transfer(o, r).status == PASS


def test_transfer_skip_and_mutation():
    _, o = construct_cms(7, 3)
    assert check_theorem7_transfer(o, 2).status == SKIP
    perm = list(o.perm)
    perm[0], perm[1] = perm[1], perm[0]
    broken = EdgeOrdering.from_edges(7, perm)
    assert check_theorem7_transfer(broken, 3).status == SKIP
    assert check_theorem7_transfer(broken, 3, require_bound=False).status == FAIL


def test_product_bound_examples():
    _, o = construct_ms(8, 1)
    assert check_product_bound(o, 1, 3)
    assert eval_ms_r(o, 3).value >= 9
    rng = random.Random(3)
    edges = list(complete_graph(6).edges)
    for _ in range(100):
        rng.shuffle(edges)
        o = EdgeOrdering.from_edges(6, edges)
        for r1, r2 in ((1, 1), (1, 2), (2, 2)):
            assert check_product_bound(o, r1, r2)
