"""Exact ``ms_r`` / ``cms_r`` of small graphs by depth-first search, plus
per-ordering checks of the complement duality and the product bound.

The search answers the decision question "is there an ordering whose every
``s``-window is (<= r)-regular?" for descending ``s``.  Appending an edge only
has to respect the trailing window, so partial lists are pruned early.  For
cyclic windows the wrap-around windows are checked as soon as the tail of
the list starts to overlap them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import EdgeOrdering, Graph, eval_cms_r, eval_ms_r, max_degree

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class SearchConfig:
    target_s: Optional[int] = None
    node_budget: int = 2_000_000
    symmetry_break: bool = True

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.target_s is not None and self.target_s < 1:
            raise ValueError("target_s must be at least 1")


@dataclass(frozen=True)
class Certificate:
    """A witness ordering and what the search proved about the optimum.

    ``proven_upper`` is the best upper bound established (closed-form bound
    or exhaustive refutation); ``exhausted`` means it meets ``optimum``.
    """

    ordering: EdgeOrdering
    optimum: int
    exhausted: bool
    proven_upper: int
    cyclic: bool = False
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.ordering.n,
            "edges": [list(e) for e in self.ordering.perm],
            "optimum": self.optimum,
            "exhausted": self.exhausted,
            "proven_upper": self.proven_upper,
            "cyclic": self.cyclic,
            "nodes": self.nodes,
        }


def upper_bound(n: int, r: int) -> int:
    """``floor((r*n - 1) / 2)``, valid for any ``n``-vertex graph with ``r < Delta``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return (r * n - 1) // 2


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, r: int, s: int, cyclic: bool, symmetry: bool, budget: int):
        self.n = g.n
        self.edges = list(g.edges)
        self.total = len(self.edges)
        self.r = r
        self.s = s
        self.cyclic = cyclic
        self.complete = symmetry and g.is_complete()
        self.fix_first = symmetry and cyclic and not self.complete
        self.budget = budget
        self.nodes = 0
        self.seq: list = []
        self.used = [False] * self.total
        self.deg = [0] * self.n
        # prefix degree tables for the first s-1 positions, used by wrap windows
        self.prefix = [[0] * self.n]
        self.touched = 0

    def run(self) -> Optional[list]:
        if self.s > self.total:
            return None
        if self.fix_first:
            first = [0]
        else:
            first = None
        return self._extend(first)

    def _candidates(self) -> list:
        if not self.complete:
            return [k for k in range(self.total) if not self.used[k]]
        # vertices appear in first-use order: touched ones are 0..T-1
        t = self.touched
        out = []
        for k, (u, v) in enumerate(self.edges):
            if self.used[k]:
                continue
            if v < t or (v == t and u < t) or (u == t and v == t + 1):
                out.append(k)
        return out

    def _wrap_ok(self, p: int, e) -> bool:
        total, s, r = self.total, self.s, self.r
        lo = total - s + 1
        if p < lo:
            return True
        a, b = e
        ca = cb = 0
        for q in range(p, lo - 1, -1):
            x = self.seq[q] if q < p else e
            if a in x:
                ca += 1
            if b in x:
                cb += 1
            pre = self.prefix[q + s - total]
            if ca + pre[a] > r or cb + pre[b] > r:
                return False
        return True

    def _extend(self, forced: Optional[list]) -> Optional[list]:
        p = len(self.seq)
        if p == self.total:
            return list(self.seq)
        dropped = None
        if p >= self.s:
            dropped = self.seq[p - self.s]
            for v in dropped:
                self.deg[v] -= 1
        cands = forced if forced is not None else self._candidates()
        r = self.r
        for k in cands:
            e = self.edges[k]
            a, b = e
            if self.deg[a] >= r or self.deg[b] >= r:
                continue
            if self.cyclic and not self._wrap_ok(p, e):
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExceeded
            self.used[k] = True
            self.seq.append(e)
            self.deg[a] += 1
            self.deg[b] += 1
            touched = self.touched
            self.touched = max(touched, b + 1)
            grew = p < self.s - 1
            if grew:
                row = list(self.prefix[-1])
                row[a] += 1
                row[b] += 1
                self.prefix.append(row)
            found = self._extend(None)
            if grew:
                self.prefix.pop()
            self.touched = touched
            self.deg[a] -= 1
            self.deg[b] -= 1
            self.seq.pop()
            self.used[k] = False
            if found is not None:
                if dropped is not None:
                    for v in dropped:
                        self.deg[v] += 1
                return found
        if dropped is not None:
            for v in dropped:
                self.deg[v] += 1
        return None


def _decide(g: Graph, r: int, s: int, cyclic: bool, symmetry: bool, budget: int):
    """Return ``(witness or None, nodes, finished)``."""
    search = _Search(g, r, s, cyclic, symmetry, budget)
    try:
        found = search.run()
    except _BudgetExceeded:
        return None, search.nodes, False
    return found, search.nodes, True


def _closed_bound(g: Graph, r: int) -> int:
    if r >= g.max_degree():
        return g.num_edges
    return min(g.num_edges, upper_bound(g.n, r))


def _exact(g: Graph, r: int, cfg: SearchConfig, cyclic: bool) -> Certificate:
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    if r < 1:
        raise ValueError("r must be at least 1")
    evaluate = eval_cms_r if cyclic else eval_ms_r
    best = EdgeOrdering(g, g.edges)
    best_value = evaluate(best, r).value
    upper = _closed_bound(g, r)
    remaining = cfg.node_budget
    nodes = 0
    targets = [cfg.target_s] if cfg.target_s is not None else range(upper, best_value, -1)
    for s in targets:
        if s <= best_value or remaining <= 0:
            break
        if s > upper:
            continue
        found, used, finished = _decide(g, r, s, cyclic, cfg.symmetry_break, remaining)
        nodes += used
        remaining -= used
        if found is not None:
            best = EdgeOrdering(g, tuple(found))
            best_value = evaluate(best, r).value
            break
        if not finished:
            break
        # feasibility at s implies feasibility at s-1, so a refutation caps the optimum
        upper = min(upper, s - 1)
    return Certificate(best, best_value, best_value >= upper, max(upper, best_value), cyclic, nodes)


def exact_ms(g: Graph, r: int, cfg: SearchConfig = SearchConfig()) -> Certificate:
    """Largest ``s`` with an ordering of ``g`` whose ``s``-windows are all (<= r)-regular."""
    return _exact(g, r, cfg, cyclic=False)


def exact_cms(g: Graph, r: int, cfg: SearchConfig = SearchConfig()) -> Certificate:
    """Cyclic analogue of :func:`exact_ms`."""
    return _exact(g, r, cfg, cyclic=True)


# -- per-ordering checks ------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    status: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == PASS


def _cyclic_window(perm: Sequence, start: int, size: int) -> list:
    total = len(perm)
    return [perm[(start + k) % total] for k in range(size)]


def _min_degree(edges, n: int) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg, default=0)


def check_window_duality(ordering: EdgeOrdering, r: int, s: int, complement_threshold: Optional[int] = None) -> CheckResult:
    """For each cyclic ``s``-window W: W is (<= r)-regular iff the remaining
    edges have minimum degree >= ``n-1-r``.

    ``complement_threshold`` overrides ``n-1-r``; it exists so the checker
    itself can be mutation-tested.
    """
    g = ordering.graph
    if not g.is_complete():
        raise ValueError("duality is stated for complete hosts only")
    total = len(ordering)
    if not 1 <= s <= total:
        raise ValueError(f"s must lie in [1, {total}]")
    n = ordering.n
    threshold = n - 1 - r if complement_threshold is None else complement_threshold
    perm = ordering.perm
    for start in range(total):
        window = _cyclic_window(perm, start, s)
        rest = _cyclic_window(perm, start + s, total - s)
        left = max_degree(window, n) <= r
        right = _min_degree(rest, n) >= threshold
        if left != right:
            return CheckResult(FAIL, f"window at {start}: regular={left}, complement ok={right}")
    return CheckResult(PASS)


def check_theorem7_transfer(ordering: EdgeOrdering, r: int, require_bound: bool = True) -> CheckResult:
    """For odd ``n`` and odd ``r`` with ``cms_r`` at the bound, the same
    ordering has every cyclic window of ``floor(((n-1-r)n - 1)/2)`` edges
    (<= n-1-r)-regular.

    ``require_bound=False`` skips the ``cms_r`` precondition so that the
    window check can be exercised on arbitrary orderings.
    """
    n = ordering.n
    if not ordering.graph.is_complete():
        return CheckResult(SKIP, "host is not complete")
    if n % 2 == 0 or r % 2 == 0 or not 1 <= r <= n - 2:
        return CheckResult(SKIP, "needs odd n and odd r <= n-2")
    if require_bound and eval_cms_r(ordering, r).value != upper_bound(n, r):
        return CheckResult(SKIP, "ordering does not attain the bound for r")
    r2 = n - 1 - r
    size = upper_bound(n, r2)
    perm = ordering.perm
    for start in range(len(perm)):
        window = _cyclic_window(perm, start, size)
        if max_degree(window, n) > r2:
            return CheckResult(FAIL, f"window of {size} edges at {start} is not (<= {r2})-regular")
    return CheckResult(PASS)


def check_product_bound(ordering: EdgeOrdering, r1: int, r2: int) -> CheckResult:
    """``ms_{r1*r2} >= r2 * ms_{r1}`` on this ordering, and the cyclic analogue.

    The right side is capped at the edge count, since no window is longer.
    """
    if r1 < 1 or r2 < 1:
        raise ValueError("r1 and r2 must be positive")
    total = len(ordering)
    for name, evaluate in (("ms", eval_ms_r), ("cms", eval_cms_r)):
        base = evaluate(ordering, r1).value
        prod = evaluate(ordering, r1 * r2).value
        if prod < min(total, r2 * base):
            return CheckResult(FAIL, f"{name}_{r1 * r2} = {prod} < {r2} * {name}_{r1} = {r2 * base}")
    return CheckResult(PASS)
