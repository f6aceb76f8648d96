"""Text and JSON formats for orderings, decompositions and k-graph orderings.

Edge-list text::

    <n> <edge count>
    u v
    ...

one edge per line in label order.  The k-graph variant has the header
``<n> <k> <edge count>`` followed by one sorted k-tuple per line.  Lines
starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

from .core import EdgeOrdering

if TYPE_CHECKING:
    from .decomp import Decomposition
    from .hyper import HyperOrdering


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def ordering_to_text(ordering: EdgeOrdering) -> str:
    lines = [f"{ordering.n} {len(ordering)}"]
    lines += [f"{u} {v}" for u, v in ordering.perm]
    return "\n".join(lines) + "\n"


def ordering_from_text(text: str) -> EdgeOrdering:
    rows = _content_lines(text)
    if not rows:
        raise FormatError("empty edge list")
    header = rows[0]
    if header and header[0] == "n":
        header = header[1:]
    try:
        n = int(header[0])
        count = int(header[1]) if len(header) > 1 else None
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed edge list: {exc}") from exc
    if count is not None and count != len(edges):
        raise FormatError(f"header announces {count} edges, found {len(edges)}")
    try:
        return EdgeOrdering.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def ordering_to_json(ordering: EdgeOrdering) -> dict:
    return {"n": ordering.n, "edges": [list(e) for e in ordering.perm]}


def ordering_from_json(data: dict) -> EdgeOrdering:
    try:
        return EdgeOrdering.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed ordering JSON: {exc}") from exc


def load_ordering(text: str) -> EdgeOrdering:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return ordering_from_json(json.loads(text))
    return ordering_from_text(text)


def decomposition_to_json(decomp: "Decomposition") -> dict:
    return {
        "n": decomp.host.n,
        "kind": decomp.kind,
        "parts": [[list(e) for e in part.edges] for part in decomp.parts],
    }


def hyper_ordering_to_text(ordering: "HyperOrdering") -> str:
    g = ordering.graph
    lines = [f"{g.n} {g.k} {len(ordering.perm)}"]
    lines += [" ".join(map(str, e)) for e in ordering.perm]
    return "\n".join(lines) + "\n"


def hyper_ordering_from_text(text: str) -> "HyperOrdering":
    from .hyper import HyperOrdering

    rows = _content_lines(text)
    if not rows or len(rows[0]) < 2:
        raise FormatError("missing '<n> <k> <count>' header")
    try:
        n, k = int(rows[0][0]), int(rows[0][1])
        count = int(rows[0][2]) if len(rows[0]) > 2 else None
        edges = [tuple(sorted(int(x) for x in row)) for row in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed k-graph edge list: {exc}") from exc
    if count is not None and count != len(edges):
        raise FormatError(f"header announces {count} edges, found {len(edges)}")
    if any(len(e) != k for e in edges):
        raise FormatError(f"every edge must have exactly {k} vertices")
    return HyperOrdering.from_edges(n, k, edges)


def hyper_ordering_to_json(ordering: "HyperOrdering") -> dict:
    g = ordering.graph
    return {"n": g.n, "k": g.k, "edges": [list(e) for e in ordering.perm]}


def hyper_ordering_from_json(data: dict) -> "HyperOrdering":
    from .hyper import HyperOrdering

    try:
        return HyperOrdering.from_edges(int(data["n"]), int(data["k"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed k-graph JSON: {exc}") from exc
