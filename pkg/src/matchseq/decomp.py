"""Decompositions of complete graphs into matchings and 2-regular parts.

Vertex encodings (fixed so that every construction prints the same way):

* matching decomposition of ``K_{2m}`` with ``c * d = 2m - 1``:
  ``v_inf -> 0`` and ``v_{a,b} -> 1 + a*d + b``.  With this encoding the
  relabelling onto the ``c = 2m - 1`` indexing is the identity map.
* Walecki cycles of ``K_{2m+1}``: residue ``x -> x mod 2m`` and ``inf -> 2m``.
* the parts ``R_i`` of ``K_{2m+1}`` (``m`` odd): ``v_inf -> 0`` and
  ``v_{i,j} -> 1 + j*m + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import Edge, Graph, canonical_edge, complete_graph

MATCHING = "matching"
TWO_REGULAR = "two_regular"
HAMILTONIAN_CYCLE = "hamiltonian_cycle"
GENERIC = "generic"
KINDS = (MATCHING, TWO_REGULAR, HAMILTONIAN_CYCLE, GENERIC)


@dataclass(frozen=True)
class PairPartition:
    """``{x+l, x-l}`` for ``0 < l <= (y-1)/2`` (mod ``y``) plus the singleton ``x``."""

    y: int
    x: int
    pairs: Tuple[Tuple[int, int], ...]
    singleton: int


def pair_partition(x: int, y: int) -> PairPartition:
    if y < 1 or y % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {y}")
    pairs = tuple(((x + l) % y, (x - l) % y) for l in range(1, (y + 1) // 2))
    return PairPartition(y=y, x=x % y, pairs=pairs, singleton=x % y)


@dataclass(frozen=True)
class Decomposition:
    host: Graph
    parts: Tuple[Graph, ...]
    kind: str = GENERIC
    # optional index labels of the parts, e.g. (i, j) for M_{i,j}
    keys: Optional[Tuple] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown decomposition kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, key) -> Graph:
        if self.keys is None:
            return self.parts[key]
        return self.parts[self.keys.index(key)]


@dataclass(frozen=True)
class DecompositionCheck:
    ok: bool
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


# -- matchings of K_{2m} ------------------------------------------------------


def matching_vertex(a: int, b: int, c: int, d: int) -> int:
    return 1 + (a % c) * d + (b % d)


def matching_part(i: int, j: int, c: int, d: int) -> Graph:
    """The perfect matching ``M_{i,j}`` of ``K_{c*d+1}``."""
    v = lambda a, b: matching_vertex(a, b, c, d)  # noqa: E731
    edges = [canonical_edge(0, v(i, j))]
    a_pairs = [(i % c, i % c)] + list(pair_partition(i, c).pairs)
    b_pairs = [(j % d, j % d)] + list(pair_partition(j, d).pairs)
    seen = set(edges)
    for a1, a2 in a_pairs:
        for b1, b2 in b_pairs:
            for p, q in (((a1, b1), (a2, b2)), ((a1, b2), (a2, b1))):
                if p == q:
                    continue  # the singleton (i, j) itself
                e = canonical_edge(v(*p), v(*q))
                if e not in seen:
                    seen.add(e)
                    edges.append(e)
    return Graph(c * d + 1, tuple(edges))


def matching_decomposition_even(m: int, c: int) -> Decomposition:
    """Decompose ``K_{2m}`` into the ``2m-1`` perfect matchings ``M_{i,j}``.

    Parts are listed with ``(i, j)`` in lexicographic order.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if c < 1 or (2 * m - 1) % c:
        raise ValueError(f"c={c} does not divide 2m-1={2 * m - 1}")
    d = (2 * m - 1) // c
    keys = tuple((i, j) for i in range(c) for j in range(d))
    parts = tuple(matching_part(i, j, c, d) for i, j in keys)
    return Decomposition(complete_graph(2 * m), parts, MATCHING, keys)


# -- Walecki Hamiltonian cycles of K_{2m+1} -----------------------------------


def walecki_vertex(x, m: int) -> int:
    """Encode a residue mod ``2m`` (or ``"inf"``) as an integer vertex."""
    if x == "inf":
        return 2 * m
    return x % (2 * m)


def walecki_base_path(m: int) -> list:
    """The vertex sequence inf, 0, 1, -1, 2, -2, ..., m-1, -(m-1), m (as residues)."""
    seq = ["inf", 0]
    for x in range(1, m):
        seq += [x, -x]
    seq.append(m)
    return seq


def walecki_cycle(i: int, m: int) -> Graph:
    seq = [walecki_vertex(x if x == "inf" else x + i, m) for x in walecki_base_path(m)]
    edges = [canonical_edge(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))]
    return Graph(2 * m + 1, tuple(edges))


def walecki_cycles(m: int) -> Decomposition:
    if m < 2:
        raise ValueError("Walecki decomposition needs m >= 2")
    parts = tuple(walecki_cycle(i, m) for i in range(m))
    return Decomposition(complete_graph(2 * m + 1), parts, HAMILTONIAN_CYCLE, tuple(range(m)))


# -- the 2-regular parts R_i of K_{2m+1}, m odd --------------------------------


def r_vertex(i: int, j: int, m: int) -> int:
    return 1 + (j % 2) * m + (i % m)


def r_part(i: int, m: int) -> Graph:
    v = lambda a, b: r_vertex(a, b, m)  # noqa: E731
    edges = [canonical_edge(0, v(i, 0)), canonical_edge(0, v(i, 1)), canonical_edge(v(i, 0), v(i, 1))]
    for a1, a2 in pair_partition(i, m).pairs:
        for b1 in (0, 1):
            for b2 in (0, 1):
                edges.append(canonical_edge(v(a1, b1), v(a2, b2)))
    return Graph(2 * m + 1, tuple(edges))


def two_regular_R(m: int) -> Decomposition:
    """Decompose ``K_{2m+1}`` (``m`` odd) into the 2-regular graphs ``R_i``."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    parts = tuple(r_part(i, m) for i in range(m))
    return Decomposition(complete_graph(2 * m + 1), parts, TWO_REGULAR, tuple(range(m)))


# -- checking -------------------------------------------------------------------


def _connected(n: int, edges) -> bool:
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def verify_decomposition(d: Decomposition) -> DecompositionCheck:
    """Check disjointness, exact coverage of the host, and the kind's degree rule."""
    owner: dict[Edge, int] = {}
    host = set(d.host.edges)
    for k, part in enumerate(d.parts):
        if part.n != d.host.n:
            return DecompositionCheck(False, f"part {k} lives on {part.n} vertices, host has {d.host.n}")
        for e in part.edges:
            if e in owner:
                return DecompositionCheck(False, f"edge {e} appears in parts {owner[e]} and {k}")
            if e not in host:
                return DecompositionCheck(False, f"edge {e} of part {k} is not a host edge")
            owner[e] = k
    missing = host - owner.keys()
    if missing:
        return DecompositionCheck(False, f"host edge {min(missing)} is not covered")
    want = {MATCHING: 1, TWO_REGULAR: 2, HAMILTONIAN_CYCLE: 2}.get(d.kind)
    if want is not None:
        for k, part in enumerate(d.parts):
            degs = part.degrees()
            bad = [v for v, x in enumerate(degs) if x != want]
            if bad:
                return DecompositionCheck(False, f"part {k}: vertex {bad[0]} has degree {degs[bad[0]]}, expected {want}")
            if d.kind == HAMILTONIAN_CYCLE and not _connected(part.n, part.edges):
                return DecompositionCheck(False, f"part {k} is not a single cycle")
    return DecompositionCheck(True)
