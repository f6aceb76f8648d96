"""Concatenating part orderings into orderings of ``K_n``.

The three ``assemble_prop_*`` functions check the junction hypotheses
between parts a fixed stride apart and, if they all hold, concatenate the
parts.  The window bound they promise then holds for the result.
``construct_ms`` / ``construct_cms`` choose the decomposition, labelling and
part arrangement for a given ``(n, r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .core import EdgeOrdering, Graph, junction_ok
from .decomp import matching_decomposition_even
from .labels import (
    cyclic_block_index,
    index_order_alpha_u,
    index_order_beta,
    index_order_cyclic,
    index_order_noncyclic,
    index_order_zigzag,
    label_matching_even,
    label_R_center,
    label_walecki_alternating,
    label_walecki_gcd1,
)

EVEN_N = "even_n"
ODD_N_GCD1 = "odd_n_gcd1"
ODD_N_EVEN_R = "odd_n_even_r"
ODD_N_ODD_R_LARGE = "odd_n_odd_r_large"
CENTER_EVEN = "center_even"
CENTER_ODD = "center_odd"
CYCLIC_EVEN_N = "cyclic_even_n"
CYCLIC_ODD_N_EVEN_R = "cyclic_odd_n_even_r"
UNCOVERED = "uncovered"


class HypothesisError(ValueError):
    """A junction hypothesis failed.

    ``index`` is the position of the first part of the failing pair and
    ``window`` is ``(start, length, vertex)`` inside the joined list.
    """

    def __init__(self, message: str, index: int, window: Optional[tuple]):
        super().__init__(message)
        self.index = index
        self.window = window


class NotCoveredError(ValueError):
    """No construction is known for this ``(n, r)``."""


def upper_bound(n: int, r: int) -> int:
    """``floor((r*n - 1) / 2)``: no ordering of an ``n``-vertex graph with ``r < Delta`` beats it."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return (r * n - 1) // 2


@dataclass(frozen=True)
class ConstructionPlan:
    n: int
    r: int
    cyclic: bool
    case_tag: str
    claimed_value: Optional[int]


def concat(parts: Sequence[EdgeOrdering]) -> EdgeOrdering:
    """Join part orderings end to end; part ``k``'s labels shift by the sizes before it."""
    if not parts:
        raise ValueError("nothing to concatenate")
    n = parts[0].n
    perm = []
    seen = set()
    for k, part in enumerate(parts):
        if part.n != n:
            raise ValueError(f"part {k} lives on {part.n} vertices, expected {n}")
        overlap = seen.intersection(part.perm)
        if overlap:
            raise ValueError(f"part {k} repeats edge {min(overlap)}")
        seen.update(part.perm)
        perm.extend(part.perm)
    return EdgeOrdering(Graph(n, tuple(sorted(perm))), tuple(perm))


def window_join(l1: EdgeOrdering, l2: EdgeOrdering, s: int) -> EdgeOrdering:
    """Last ``s-1`` edges of ``l1`` followed by the first ``s-1`` edges of ``l2``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    if len(l1) < s - 1 or len(l2) < s - 1:
        raise ValueError(f"both parts need at least {s - 1} edges")
    if set(l1.perm) & set(l2.perm):
        raise ValueError("parts share an edge")
    k = s - 1
    perm = (l1.perm[len(l1) - k:] if k else ()) + l2.perm[:k]
    return EdgeOrdering(Graph(l1.n, tuple(sorted(perm))), perm)


def _first_violation(seq, n: int, r: int, s: int):
    for start in range(len(seq) - s + 1):
        deg = [0] * n
        for e in seq[start:start + s]:
            for v in e:
                deg[v] += 1
        worst = max(range(n), key=deg.__getitem__)
        if deg[worst] > r:
            return (start, s, worst)
    return None


def _require(first: EdgeOrdering, second: EdgeOrdering, r: int, s: int, index: int, what: str):
    if s <= 1 or junction_ok(first.perm, second.perm, first.n, r, s):
        return
    k = s - 1
    seq = list(first.perm[max(len(first) - k, 0):]) + list(second.perm[:k])
    raise HypothesisError(
        f"{what}: junction of parts {index} and next fails at window size {s}",
        index,
        _first_violation(seq, first.n, r, s),
    )


def _check_parts(orderings: Sequence[EdgeOrdering], max_deg: int) -> int:
    if not orderings:
        raise ValueError("no parts")
    size = len(orderings[0])
    for k, o in enumerate(orderings):
        if len(o) != size:
            raise ValueError(f"part {k} has {len(o)} edges, expected {size}")
        if o.graph.max_degree() > max_deg:
            raise ValueError(f"part {k} has a vertex of degree above {max_deg}")
    return size


def _indices(t: int, stride: int, cyclic: bool) -> range:
    return range(t) if cyclic else range(max(t - stride, 0))


def assemble_prop_matching(orderings: Sequence[EdgeOrdering], r: int, eps: int, cyclic: bool = False) -> EdgeOrdering:
    """Concatenate equal-size matchings; windows of ``r*size - eps`` are then (<= r)-regular."""
    size = _check_parts(orderings, 1)
    t = len(orderings)
    if not 0 <= eps < size:
        raise ValueError(f"eps must lie in [0, {size})")
    if not 1 <= r < t:
        raise ValueError(f"stride r={r} must lie in [1, {t})")
    for i in _indices(t, r, cyclic):
        _require(orderings[i], orderings[(i + r) % t], 1, size - eps, i, "matching junction")
    return concat(orderings)


def assemble_prop_2regular(orderings: Sequence[EdgeOrdering], r: int, eps: int, cyclic: bool = False) -> EdgeOrdering:
    """Even ``r``: parts of max degree 2; windows of ``r*size/2 - eps`` are then (<= r)-regular."""
    if r < 2 or r % 2:
        raise ValueError("r must be even and positive")
    size = _check_parts(orderings, 2)
    t = len(orderings)
    if not 0 < eps < (size + 1) // 2:
        raise ValueError(f"eps must be nonzero and below ceil(size/2) = {(size + 1) // 2}")
    u = r // 2
    if u >= t:
        raise ValueError(f"stride {u} must be below the part count {t}")
    for i in _indices(t, u, cyclic):
        _require(orderings[i], orderings[(i + u) % t], 2, size - eps, i, "2-regular junction")
    return concat(orderings)


def assemble_prop_2regular_odd_r(orderings: Sequence[EdgeOrdering], r: int, eps: int, cyclic: bool = False) -> EdgeOrdering:
    """Odd ``r``: windows of ``floor((r*size + 1)/2) - eps`` are then (<= r)-regular.

    Two junction families are checked: matchings at stride ``u+1`` and
    (<= 3)-regular joins at stride ``u``, ``u = (r-1)/2``.  For ``r = 1`` the
    second family is replaced by each part's own window bound.
    """
    if r < 1 or r % 2 == 0:
        raise ValueError("r must be odd and positive")
    size = _check_parts(orderings, 2)
    t = len(orderings)
    half = (size + 1) // 2
    if not 0 < eps < half:
        raise ValueError(f"eps must be nonzero and below ceil(size/2) = {half}")
    u = (r - 1) // 2
    if u + 1 > t:
        raise ValueError(f"stride {u + 1} exceeds the part count {t}")
    for i in _indices(t, u + 1, cyclic):
        _require(orderings[i], orderings[(i + u + 1) % t], 1, half - eps, i, "matching junction")
    if r == 1:
        from .core import eval_ms_r

        for i, o in enumerate(orderings):
            rep = eval_ms_r(o, 1)
            if rep.value < half - eps:
                raise HypothesisError(f"part {i} has window bound {rep.value} < {half - eps}", i, rep.violating_window)
    else:
        for i in _indices(t, u, cyclic):
            _require(orderings[i], orderings[(i + u) % t], 3, (3 * size + 1) // 2 - eps, i, "(<=3)-regular junction")
    return concat(orderings)


# -- pipelines ---------------------------------------------------------------------


def _check_params(n: int, r: int):
    if n < 3:
        raise ValueError("need n >= 3")
    if not 1 <= r <= n - 2:
        raise ValueError(f"need 1 <= r <= n-2, got r={r}")


def plan_ms(n: int, r: int) -> ConstructionPlan:
    _check_params(n, r)
    m = (n - 1) // 2
    if n % 2 == 0:
        tag = EVEN_N
    elif r % 2 == 0:
        tag = ODD_N_EVEN_R
    elif r == m:
        tag = CENTER_ODD
    elif r > m:
        tag = ODD_N_ODD_R_LARGE
    elif gcd(r, n - 1) == 1:
        tag = ODD_N_GCD1
    else:
        tag = UNCOVERED
    claim = None if tag == UNCOVERED else upper_bound(n, r)
    return ConstructionPlan(n, r, False, tag, claim)


def plan_cms(n: int, r: int) -> ConstructionPlan:
    _check_params(n, r)
    m = (n - 1) // 2
    if n % 2 == 0:
        tag = CYCLIC_EVEN_N
    elif r == m:
        tag = CENTER_EVEN if r % 2 == 0 else CENTER_ODD
    elif r % 2 == 0:
        tag = CYCLIC_ODD_N_EVEN_R
    else:
        tag = UNCOVERED
    if tag == UNCOVERED:
        claim = None
    elif tag == CYCLIC_ODD_N_EVEN_R:
        claim = upper_bound(n, r) - 1
    else:
        claim = upper_bound(n, r)
    return ConstructionPlan(n, r, True, tag, claim)


def _even(n: int, r: int, cyclic: bool) -> EdgeOrdering:
    m = n // 2
    t = 2 * m - 1
    d = gcd(r, t)
    c = t // d
    alpha = index_order_cyclic(t, r)
    slots: list = [None] * t
    for i in range(c):
        for j in range(d):
            slots[alpha(cyclic_block_index(i, j, t, r))] = label_matching_even(i, j, m, c, d)
    return assemble_prop_matching(slots, r, 1, cyclic)


def _odd_gcd1(n: int, r: int) -> EdgeOrdering:
    m = (n - 1) // 2
    parts = [label_walecki_gcd1(i, r, m) for i in range(m)]
    return assemble_prop_2regular_odd_r(parts, r, 1, cyclic=False)


def _odd_even_r(n: int, r: int) -> EdgeOrdering:
    m = (n - 1) // 2
    alpha = index_order_noncyclic(m, r // 2)
    slots: list = [None] * m
    for i in range(m):
        slots[alpha(i)] = label_walecki_alternating(i, m)
    return assemble_prop_2regular(slots, r, 1, cyclic=False)


def _odd_odd_large(n: int, r: int) -> EdgeOrdering:
    m = (n - 1) // 2
    alpha = index_order_alpha_u(m, (r - 1) // 2)
    slots = [label_walecki_alternating(alpha(i), m) for i in range(m)]
    return assemble_prop_2regular_odd_r(slots, r, 1, cyclic=False)


def _center_odd(n: int) -> EdgeOrdering:
    m = (n - 1) // 2
    beta = index_order_beta(m)
    slots = [label_R_center(beta(x), m) for x in range(m)]
    return assemble_prop_2regular_odd_r(slots, m, 1, cyclic=True)


def _center_even(n: int) -> EdgeOrdering:
    m = (n - 1) // 2
    alpha = index_order_cyclic(m, m // 2)
    slots: list = [None] * m
    for a in range(m):
        slots[alpha(a)] = label_walecki_alternating(a, m)
    return assemble_prop_2regular(slots, m, 1, cyclic=True)


def _cyclic_odd_even_r(n: int, r: int) -> EdgeOrdering:
    m = (n - 1) // 2
    u = r // 2
    d = gcd(u, m)
    c = m // d
    alpha = index_order_cyclic(m, u)
    slots: list = [None] * m
    for j in range(d):
        zig = index_order_zigzag(j * c, c, m)
        for i in range(c):
            slots[alpha(cyclic_block_index(i, j, m, u))] = label_walecki_alternating(zig.inverse(i), m)
    return assemble_prop_2regular(slots, r, 2, cyclic=True)


def _build(plan: ConstructionPlan) -> EdgeOrdering:
    n, r, tag = plan.n, plan.r, plan.case_tag
    if tag in (EVEN_N, CYCLIC_EVEN_N):
        return _even(n, r, plan.cyclic)
    if tag == ODD_N_GCD1:
        return _odd_gcd1(n, r)
    if tag == ODD_N_EVEN_R:
        return _odd_even_r(n, r)
    if tag == ODD_N_ODD_R_LARGE:
        return _odd_odd_large(n, r)
    if tag == CENTER_ODD:
        return _center_odd(n)
    if tag == CENTER_EVEN:
        return _center_even(n)
    if tag == CYCLIC_ODD_N_EVEN_R:
        return _cyclic_odd_even_r(n, r)
    kind = "cyclic" if plan.cyclic else "non-cyclic"
    raise NotCoveredError(
        f"no construction for {kind} (n={n}, r={r}): odd n and odd r"
        + ("" if plan.cyclic else " with r < (n-1)/2 and gcd(r, n-1) > 1")
        + (" other than r = (n-1)/2" if plan.cyclic else "")
    )


def construct_ms(n: int, r: int) -> tuple[ConstructionPlan, EdgeOrdering]:
    """An ordering of ``K_n`` whose windows of ``floor((rn-1)/2)`` edges are (<= r)-regular."""
    plan = plan_ms(n, r)
    return plan, _build(plan)


def construct_cms(n: int, r: int) -> tuple[ConstructionPlan, EdgeOrdering]:
    """Cyclic counterpart of :func:`construct_ms`; see ``plan.claimed_value``."""
    plan = plan_cms(n, r)
    return plan, _build(plan)
