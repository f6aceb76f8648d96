"""Three explicit cyclic orderings found by computer search.

Vertices are written as residues modulo ``n-1`` plus ``inf``; they are
encoded as ``inf -> n-1`` and ``x -> x mod (n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .core import EdgeOrdering, canonical_edge

_K7_R2 = (
    "inf,0 1,2 3,-2 3,-1 1,-1 inf,-2 0,2 0,1 2,3 inf,-1 -2,-1 1,3 inf,2 0,-2 "
    "0,3 inf,1 2,-1 1,-2 inf,3 0,-1 2,-2"
)
_K7_R4 = (
    "inf,0 inf,1 0,2 1,3 2,-2 0,-1 -1,-2 inf,3 1,2 inf,-2 0,3 1,-1 2,3 0,-2 "
    "inf,-1 0,1 inf,2 3,-2 2,-1 1,-2 3,-1"
)
_K9_R2 = (
    "inf,0 inf,1 0,2 1,3 2,4 3,-3 4,-2 -1,-3 inf,-2 0,1 inf,2 1,-1 2,3 0,-3 "
    "3,4 -3,-2 inf,4 0,-1 1,-2 2,-1 inf,3 2,-3 0,4 1,-3 3,-2 4,-1 0,-2 "
    "inf,-1 1,2 inf,-3 0,3 1,4 2,-2 3,-1 4,-3 -1,-2"
)


def decode_vertex(token: str, n: int) -> int:
    if token == "inf":
        return n - 1
    return int(token) % (n - 1)


def decode_edges(text: str, n: int) -> list:
    edges = []
    for pair in text.split():
        x, y = pair.split(",")
        edges.append(canonical_edge(decode_vertex(x, n), decode_vertex(y, n)))
    return edges


@dataclass(frozen=True)
class PaperCorpusEntry:
    id: str
    n: int
    r: int
    claimed_cms_r: int
    source: str

    @property
    def ordering(self) -> EdgeOrdering:
        return EdgeOrdering.from_edges(self.n, decode_edges(self.source, self.n))


CORPUS: Tuple[PaperCorpusEntry, ...] = (
    PaperCorpusEntry("k7_r2", 7, 2, 6, _K7_R2),
    PaperCorpusEntry("k7_r4", 7, 4, 13, _K7_R4),
    PaperCorpusEntry("k9_r2", 9, 2, 8, _K9_R2),
)


def entry(entry_id: str) -> PaperCorpusEntry:
    for e in CORPUS:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)
