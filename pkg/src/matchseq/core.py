"""Graphs, edge orderings and the sliding-window sequencibility evaluators.

An ordering lists every edge of a graph once; the label of an edge is its
position.  ``eval_ms_r`` returns the largest ``s`` such that every ``s``
consecutive edges form a subgraph of maximum degree at most ``r``;
``eval_cms_r`` does the same with windows that wrap around.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

Edge = Tuple[int, int]

__all__ = [
    "Edge",
    "Graph",
    "EdgeOrdering",
    "SequencibilityReport",
    "complete_graph",
    "canonical_edge",
    "window_max_degree",
    "eval_ms_r",
    "eval_cms_r",
    "junction_ms_r",
    "max_degree",
]


def canonical_edge(u: int, v: int) -> Edge:
    """Return ``(min(u, v), max(u, v))``; loops are rejected."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``."""

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside [0, {self.n})")
            canon.append(canonical_edge(u, v))
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        return Graph(self.n, tuple(canonical_edge(mapping[u], mapping[v]) for u, v in self.edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def max_degree(edges: Iterable[Sequence[int]], n: int) -> int:
    deg = [0] * n
    for e in edges:
        for v in e:
            deg[v] += 1
    return max(deg, default=0)


@dataclass(frozen=True)
class EdgeOrdering:
    """A bijection from the edges of ``graph`` to ``[|E|]``.

    ``perm[k]`` is the edge with label ``k``.
    """

    graph: Graph
    perm: Tuple[Edge, ...]
    _labels: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        perm = tuple(canonical_edge(*e) for e in self.perm)
        if len(perm) != self.graph.num_edges or set(perm) != set(self.graph.edges):
            raise ValueError("perm is not a permutation of the graph's edges")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "_labels", {e: k for k, e in enumerate(perm)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "EdgeOrdering":
        """Build the graph spanned by ``edges`` and order it as listed."""
        perm = tuple(canonical_edge(*e) for e in edges)
        return cls(Graph(n, tuple(sorted(perm))), perm)

    @classmethod
    def from_labels(cls, graph: Graph, labels: dict) -> "EdgeOrdering":
        """Build from an edge -> label mapping covering the whole graph."""
        perm: list = [None] * graph.num_edges
        for e, k in labels.items():
            if not 0 <= k < len(perm) or perm[k] is not None:
                raise ValueError(f"label {k} out of range or used twice")
            perm[k] = canonical_edge(*e)
        return cls(graph, tuple(perm))

    @property
    def n(self) -> int:
        return self.graph.n

    def __len__(self) -> int:
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def label(self, u: int, v: int) -> int:
        return self._labels[canonical_edge(u, v)]

    def relabel(self, mapping: Sequence[int]) -> "EdgeOrdering":
        """Apply a vertex bijection to every edge, keeping label positions."""
        perm = tuple(canonical_edge(mapping[u], mapping[v]) for u, v in self.perm)
        return EdgeOrdering(Graph(self.n, tuple(sorted(perm))), perm)

    def rotate(self, k: int) -> "EdgeOrdering":
        k %= max(len(self.perm), 1)
        return EdgeOrdering(self.graph, self.perm[k:] + self.perm[:k])


@dataclass(frozen=True)
class SequencibilityReport:
    """Evaluated (cyclic) matching sequencibility of one ordering.

    ``violating_window`` is ``(start, length, vertex)``: the window of
    ``length == value + 1`` edges starting at ``start`` in which ``vertex``
    has degree above ``r``.  It is ``None`` when ``value`` is the edge count.
    """

    value: int
    violating_window: Optional[Tuple[int, int, int]] = None


def window_max_degree(ordering: EdgeOrdering, start: int, length: int, cyclic: bool = False) -> int:
    total = len(ordering.perm)
    if not 0 <= start < total:
        raise ValueError(f"start {start} outside [0, {total})")
    if not 1 <= length <= total:
        raise ValueError(f"window length {length} outside [1, {total}]")
    if not cyclic and start + length > total:
        raise ValueError("non-cyclic window runs past the last edge")
    window = [ordering.perm[(start + k) % total] for k in range(length)]
    return max_degree(window, ordering.n)


def _sweep(edges: Sequence[Sequence[int]], n: int, r: int, cyclic: bool) -> SequencibilityReport:
    # Two-pointer scan: for each start, the longest (<= r)-regular run.
    # Runs shrink monotonically from the left, so the right pointer never
    # moves backwards.
    total = len(edges)
    if total == 0:
        raise ValueError("ordering has no edges")
    if r < 1:
        raise ValueError("r must be at least 1")
    deg = [0] * n
    best = total
    witness = None
    right = 0  # exclusive end of the current run, absolute index
    for left in range(total):
        while right - left < total and (cyclic or right < total):
            e = edges[right % total]
            if any(deg[v] >= r for v in e):
                break
            for v in e:
                deg[v] += 1
            right += 1
        run = right - left
        if run == total:
            return SequencibilityReport(total, None)
        if not cyclic and right == total:
            # the run hit the end of the list, not a conflict; later ones too
            break
        if run < best:
            best = run
            blocker = edges[right % total]
            witness = (left, run + 1, next(v for v in blocker if deg[v] >= r))
        for v in edges[left]:
            deg[v] -= 1
    if witness is None:
        return SequencibilityReport(total, None)
    return SequencibilityReport(best, witness)


def eval_ms_r(ordering: EdgeOrdering, r: int) -> SequencibilityReport:
    """Largest ``s`` such that every ``s`` consecutive edges have max degree <= r."""
    return _sweep(ordering.perm, ordering.n, r, cyclic=False)


def eval_cms_r(ordering: EdgeOrdering, r: int) -> SequencibilityReport:
    """Cyclic analogue of :func:`eval_ms_r`: windows wrap modulo ``|E|``."""
    return _sweep(ordering.perm, ordering.n, r, cyclic=True)


def _junction_list(first: Sequence, second: Sequence, s: int) -> list:
    k = s - 1
    head = list(first[len(first) - min(k, len(first)):]) if k > 0 else []
    tail = list(second[:min(k, len(second))]) if k > 0 else []
    return head + tail


def junction_ok(first: Sequence, second: Sequence, n: int, r: int, s: int) -> bool:
    """Whether every ``s``-window of the join of ``first`` and ``second`` is (<= r)-regular."""
    seq = _junction_list(first, second, s)
    if len(seq) < s:
        return True
    deg = [0] * n
    for k, e in enumerate(seq):
        if k >= s:
            for v in seq[k - s]:
                deg[v] -= 1
        for v in e:
            deg[v] += 1
        # a new violation always involves an endpoint of the incoming edge
        if any(deg[v] > r for v in e):
            return False
    return True


def junction_ms_r(l1: EdgeOrdering, l2: EdgeOrdering, r: int) -> int:
    """Largest ``s`` such that the last ``s-1`` edges of ``l1`` followed by the
    first ``s-1`` edges of ``l2`` have every ``s``-window (<= r)-regular.

    Once ``s-1`` exceeds a part's size the whole part is used, so ``s`` can
    reach ``|E1| + |E2|``.
    """
    if l1.n != l2.n:
        raise ValueError("orderings live on different vertex sets")
    if set(l1.perm) & set(l2.perm):
        raise ValueError("orderings share an edge")
    return junction_value(l1.perm, l2.perm, l1.n, r)


def junction_value(first: Sequence, second: Sequence, n: int, r: int) -> int:
    cap = len(first) + len(second)
    s = 1
    while s < cap and junction_ok(first, second, n, r, s + 1):
        s += 1
    return s
