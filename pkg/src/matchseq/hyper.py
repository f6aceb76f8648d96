"""k-graphs: complete matching decompositions of ``K^k_n`` and orderings
built from them greedily.

``baranyai`` grows the decomposition one vertex at a time; each step is an
integral max-flow that decides which partial block of which matching
receives the new vertex.  ``greedy_hyper_ordering`` orders every matching so
that consecutive matchings in a chain join without a shared vertex inside a
short window, then spreads the chains with the stride-``r`` index ordering.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Optional, Sequence, Tuple

import networkx as nx

from .core import SequencibilityReport, _sweep
from .decomp import DecompositionCheck
from .labels import cyclic_block_index, index_order_cyclic, index_order_noncyclic

HyperEdge = Tuple[int, ...]


@dataclass(frozen=True)
class KGraph:
    n: int
    k: int
    edges: Tuple[HyperEdge, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        canon = []
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != self.k or len(set(t)) != self.k:
                raise ValueError(f"edge {e} is not a {self.k}-subset")
            if not all(0 <= v < self.n for v in t):
                raise ValueError(f"edge {e} has a vertex outside [0, {self.n})")
            canon.append(t)
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def max_degree(self) -> int:
        deg = Counter(v for e in self.edges for v in e)
        return max(deg.values(), default=0)


def complete_kgraph(n: int, k: int) -> KGraph:
    return KGraph(n, k, tuple(combinations(range(n), k)))


@dataclass(frozen=True)
class HyperOrdering:
    """``perm[x]`` is the edge labelled ``x``."""

    graph: KGraph
    perm: Tuple[HyperEdge, ...]

    def __post_init__(self):
        perm = tuple(tuple(sorted(e)) for e in self.perm)
        if len(perm) != self.graph.num_edges or set(perm) != set(self.graph.edges):
            raise ValueError("perm is not a permutation of the k-graph's edges")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Sequence[Sequence[int]]) -> "HyperOrdering":
        perm = tuple(tuple(sorted(e)) for e in edges)
        return cls(KGraph(n, k, tuple(sorted(perm))), perm)

    def __len__(self) -> int:
        return len(self.perm)


@dataclass(frozen=True)
class HyperDecomposition:
    host: KGraph
    parts: Tuple[Tuple[HyperEdge, ...], ...]


def eval_hyper_ms_r(ordering: HyperOrdering, r: int, cyclic: bool = False) -> SequencibilityReport:
    """Largest ``s`` such that in every ``s`` consecutive edges each vertex lies in at most ``r``."""
    return _sweep(ordering.perm, ordering.graph.n, r, cyclic)


def hyper_upper_bound(n: int, k: int, r: int) -> int:
    """``floor((r*n - 1) / k)``, for k-graphs that are not (<= r)-regular."""
    return (r * n - 1) // k


# -- Baranyai ---------------------------------------------------------------------------


def baranyai(n: int, k: int) -> HyperDecomposition:
    """Partition the k-subsets of ``[n]`` into perfect matchings (``k`` must divide ``n``)."""
    if k < 1 or n < 1 or n % k:
        raise ValueError(f"k={k} must divide n={n}")
    q = n // k
    count = comb(n - 1, k - 1)
    # each matching is a list of q partial blocks; blocks grow one vertex per stage
    matchings: list[list[tuple]] = [[() for _ in range(q)] for _ in range(count)]
    for i in range(n):
        flow_net = nx.DiGraph()
        for j, blocks in enumerate(matchings):
            flow_net.add_edge("src", ("m", j), capacity=1)
            for block in sorted(set(blocks)):
                if len(block) < k:
                    flow_net.add_edge(("m", j), ("b", block), capacity=1)
        for node in list(flow_net.nodes):
            if isinstance(node, tuple) and node[0] == "b":
                size = len(node[1])
                flow_net.add_edge(node, "sink", capacity=comb(n - i - 1, k - size - 1))
        value, flow = nx.maximum_flow(flow_net, "src", "sink")
        if value != count:
            raise RuntimeError(f"flow stage {i} saturated only {value} of {count} matchings")
        for j, blocks in enumerate(matchings):
            target = next(node[1] for node, f in flow[("m", j)].items() if f > 0)
            slot = blocks.index(target)
            blocks[slot] = target + (i,)
    parts = tuple(tuple(sorted(blocks)) for blocks in matchings)
    return HyperDecomposition(complete_kgraph(n, k), parts)


def verify_hyper_decomposition(d: HyperDecomposition) -> DecompositionCheck:
    host = d.host
    if host.k < 1 or host.n % host.k:
        return DecompositionCheck(False, "k does not divide n")
    expected = comb(host.n, host.k) * host.k // host.n
    if len(d.parts) != expected:
        return DecompositionCheck(False, f"{len(d.parts)} parts, expected {expected}")
    seen = set()
    full = set(range(host.n))
    for p, part in enumerate(d.parts):
        covered = [v for e in part for v in e]
        if len(covered) != len(set(covered)) or set(covered) != full:
            return DecompositionCheck(False, f"part {p} is not a perfect matching")
        for e in part:
            if e in seen:
                return DecompositionCheck(False, f"edge {e} is repeated")
            seen.add(e)
    if seen != set(host.edges):
        return DecompositionCheck(False, "parts do not cover the host")
    return DecompositionCheck(True)


# -- greedy ordering ----------------------------------------------------------------------


def katona_bounds(n: int, k: int, r: int) -> tuple[int, int, int, int]:
    """``(a, b, ms_bound, cms_bound)``.

    ``a`` is the largest integer with ``n/k - (a-1)k > 0`` and ``b`` the
    largest with ``n/k - (b-1)(k+1) > 0``.
    """
    if n % k:
        raise ValueError(f"k={k} must divide n={n}")
    q = n // k
    a = (q - 1) // k + 1
    b = (q - 1) // (k + 1) + 1
    return a, b, (r - 1) * q + a, (r - 1) * q + b


class GreedyDeadEnd(RuntimeError):
    """No admissible edge was left; ``state`` records where the greedy stopped."""

    def __init__(self, message: str, state: dict):
        super().__init__(message)
        self.state = state


def _disjoint(e: HyperEdge, others) -> bool:
    return all(not set(e) & set(o) for o in others)


def _greedy_part(part: Sequence[HyperEdge], before: Sequence[HyperEdge], w: int,
                 fixed_tail: Sequence[HyperEdge] = (), where: Optional[dict] = None) -> list:
    """Order ``part`` so that ``before`` (the previous part's last ``w-1``
    edges) followed by the result has every ``w``-window a matching.

    Edges in ``fixed_tail`` stay at the end in their given order.
    """
    pool = sorted(set(part) - set(fixed_tail))
    chosen: list = []
    for l in range(min(w - 1, len(pool))):
        blockers = before[l:]
        pick = next((e for e in pool if _disjoint(e, blockers)), None)
        if pick is None:
            raise GreedyDeadEnd("no admissible edge", {**(where or {}), "position": l, "prefix": list(chosen)})
        chosen.append(pick)
        pool.remove(pick)
    return chosen + pool + list(fixed_tail)


def greedy_hyper_ordering(d: HyperDecomposition, r: int, cyclic: bool = False,
                          reindex: Optional[Sequence[int]] = None) -> HyperOrdering:
    """Order the matchings of ``d`` so the ``r``-window bound of the Katona-type theorem holds.

    ``reindex`` optionally permutes the parts before they are arranged.
    """
    host = d.host
    parts = list(d.parts)
    if reindex is not None:
        if sorted(reindex) != list(range(len(parts))):
            raise ValueError("reindex is not a permutation of the parts")
        parts = [parts[x] for x in reindex]
    t = len(parts)
    if not 1 <= r < t:
        raise ValueError(f"need 1 <= r < {t} (the vertex degree)")
    a, b, _, _ = katona_bounds(host.n, host.k, r)
    w = b if cyclic else a
    tail = w - 1
    orders: list = [None] * t

    if cyclic:
        dd = gcd(r, t)
        c = t // dd
        alpha = index_order_cyclic(t, r)
        for j in range(dd):
            chain = [cyclic_block_index(i, j, t, r) for i in range(c)]
            orders[chain[0]] = sorted(parts[chain[0]])
            for i in range(1, c):
                prev = orders[chain[i - 1]]
                orders[chain[i]] = _greedy_part(parts[chain[i]], prev[len(prev) - tail:] if tail else [], w,
                                                where={"chain": j, "step": i})
            # close the chain: redo the head of the first part against the last one
            if tail:
                first = orders[chain[0]]
                last = orders[chain[-1]]
                orders[chain[0]] = _greedy_part(first, last[len(last) - tail:], w, fixed_tail=first[len(first) - tail:],
                                                where={"chain": j, "step": "closure"})
    else:
        # one chain through every part in index order; stride-r neighbours are consecutive
        alpha = index_order_noncyclic(t, r)
        orders[0] = sorted(parts[0])
        for x in range(1, t):
            prev = orders[x - 1]
            orders[x] = _greedy_part(parts[x], prev[len(prev) - tail:] if tail else [], w, where={"step": x})

    slots: list = [None] * t
    for x in range(t):
        slots[alpha(x)] = orders[x]
    perm = [e for part in slots for e in part]
    return HyperOrdering(host, tuple(perm))
