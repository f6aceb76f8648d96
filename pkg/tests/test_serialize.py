from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchseq.assemble import construct_ms
from matchseq.core import EdgeOrdering, complete_graph
from matchseq.decomp import walecki_cycles
from matchseq.hyper import baranyai, greedy_hyper_ordering
from matchseq.serialize import (
    FormatError,
    decomposition_to_json,
    hyper_ordering_from_json,
    hyper_ordering_from_text,
    hyper_ordering_to_json,
    hyper_ordering_to_text,
    load_ordering,
    ordering_from_json,
    ordering_from_text,
    ordering_to_json,
    ordering_to_text,
)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 7).flatmap(lambda n: st.permutations(list(complete_graph(n).edges)).map(lambda p: (n, p))))
def test_text_and_json_round_trip(case):
    n, perm = case
    o = EdgeOrdering.from_edges(n, perm)
    assert ordering_from_text(ordering_to_text(o)).perm == o.perm
    assert ordering_from_json(json.loads(json.dumps(ordering_to_json(o)))).perm == o.perm
    assert load_ordering(json.dumps(ordering_to_json(o))).perm == o.perm


def test_text_tolerates_comments_and_n_prefix():
    text = "# a comment\nn 3 2\n0 1\n\n1 2  # trailing\n"
    o = ordering_from_text(text)
    assert o.perm == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "3 1\n0 5\n", "x y\n", "3 2\n0 1\n1 0\n"])
def test_text_rejects_malformed(text):
    with pytest.raises(FormatError):
        ordering_from_text(text)


def test_decomposition_json():
    data = decomposition_to_json(walecki_cycles(3))
    assert data["n"] == 7 and data["kind"] == "hamiltonian_cycle" and len(data["parts"]) == 3


def test_hyper_round_trip():
    o = greedy_hyper_ordering(baranyai(6, 3), 2)
    assert hyper_ordering_from_text(hyper_ordering_to_text(o)).perm == o.perm
    assert hyper_ordering_from_json(hyper_ordering_to_json(o)).perm == o.perm
    with pytest.raises(FormatError):
        hyper_ordering_from_text("6 3 1\n0 1\n")


def test_construction_text_is_stable():
    _, o = construct_ms(6, 2)
    assert ordering_to_text(o).splitlines()[0] == "6 15"
