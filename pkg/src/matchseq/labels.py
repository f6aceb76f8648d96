"""Per-part edge labellings and the index orderings used to arrange parts.

Every labelling is written forward (edge -> label) and turned into an
:class:`~matchseq.core.EdgeOrdering`, which rejects anything that is not a
bijection onto ``[|E|]``.  Index arithmetic is reduced into ``[modulus)``
before any lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple

from .core import EdgeOrdering, canonical_edge
from .decomp import matching_part, matching_vertex, r_part, r_vertex, walecki_cycle, walecki_vertex


@dataclass(frozen=True)
class IndexOrdering:
    """A bijection ``alpha`` from ``{start, ..., start+t-1}`` onto ``[t]``.

    ``images[k]`` is ``alpha(start + k)``.
    """

    t: int
    images: Tuple[int, ...]
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(self.t)):
            raise ValueError("index ordering is not a bijection onto [t]")

    def __call__(self, x: int) -> int:
        return self.images[x - self.start]

    def inverse(self, k: int) -> int:
        return self.sequence[k]

    @property
    def sequence(self) -> Tuple[int, ...]:
        """The domain listed in label order: ``alpha^{-1}(0), alpha^{-1}(1), ...``."""
        seq = [0] * self.t
        for k, img in enumerate(self.images):
            seq[img] = self.start + k
        return tuple(seq)


# -- edge labellings ----------------------------------------------------------


def label_matching_even(i: int, j: int, m: int, c: int, d: int) -> EdgeOrdering:
    """Ordering of the perfect matching ``M_{i,j}`` of ``K_{2m}``.

    Label 0 is the edge at ``v_inf``; labels ``1..(c-1)/2`` run across the
    ring ``j``; the rest pair ring ``j+y`` with ring ``j-y``.
    """
    if c * d != 2 * m - 1:
        raise ValueError(f"c*d must equal 2m-1, got c={c}, d={d}, m={m}")
    if not (0 <= i < c and 0 <= j < d):
        raise ValueError(f"(i, j)=({i}, {j}) outside [{c}] x [{d}]")
    v = lambda a, b: matching_vertex(a, b, c, d)  # noqa: E731
    labels = {canonical_edge(0, v(i, j)): 0}
    for x in range(1, (c + 1) // 2):
        labels[canonical_edge(v(i + x, j), v(i - x, j))] = x
    half = (c - 1) // 2
    for y in range(1, (d + 1) // 2):
        for x in range(c):
            e = canonical_edge(v(i + 2 * x, j + y), v(i - 2 * x, j - y))
            labels[e] = (y - 1) * c + (c + 1) // 2 + (x + i * half) % c
    return EdgeOrdering.from_labels(matching_part(i, j, c, d), labels)


def label_walecki_gcd1(i: int, r: int, m: int) -> EdgeOrdering:
    """Ordering of the Walecki cycle ``H_i`` stepping through chords by ``r``.

    Requires ``gcd(r, 2m) == 1``.  The first ``m`` and the last ``m`` edges
    each form a matching.
    """
    if gcd(r, 2 * m) != 1:
        raise ValueError(f"gcd(r, 2m) must be 1, got r={r}, m={m}")
    if not 0 <= i < m:
        raise ValueError(f"cycle index {i} outside [{m}]")
    w = lambda x: walecki_vertex(x, m)  # noqa: E731
    inf = walecki_vertex("inf", m)
    labels = {canonical_edge(inf, w(i)): 0, canonical_edge(inf, w(i + m)): m}
    for x in range(1, m):
        labels[canonical_edge(w(i + r * x), w(i - r * x))] = x
    for x in range(m):
        labels[canonical_edge(w(i + r * x + (r + 1) // 2), w(i - r * x - (r - 1) // 2))] = m + x + 1
    return EdgeOrdering.from_labels(walecki_cycle(i, m), labels)


def label_walecki_alternating(i: int, m: int) -> EdgeOrdering:
    """Ordering of ``H_i`` taking alternate cycle edges, starting from ``{inf, i}``."""
    if not 0 <= i < m:
        raise ValueError(f"cycle index {i} outside [{m}]")
    w = lambda x: walecki_vertex(x, m)  # noqa: E731
    inf = walecki_vertex("inf", m)
    labels = {canonical_edge(inf, w(i)): 0, canonical_edge(inf, w(i + m)): m}
    for x in range(1, m):
        labels[canonical_edge(w(i + x), w(i - x))] = x
    for x in range(1, m + 1):
        labels[canonical_edge(w(i + x), w(i - x + 1))] = m + x
    return EdgeOrdering.from_labels(walecki_cycle(i, m), labels)


def label_R_center(i: int, m: int) -> EdgeOrdering:
    """Ordering of ``R_i`` (``m`` odd) whose first and last ``m`` edges are matchings."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd, got {m}")
    i %= m
    v = lambda a, b: r_vertex(a, b, m)  # noqa: E731
    labels = {canonical_edge(0, v(i, 0)): 0, canonical_edge(0, v(i, 1)): m}
    for x in range(1, m):
        labels[canonical_edge(v(i + 2 * x, x), v(i - 2 * x, x))] = x
    for x in range(1, m + 1):
        labels[canonical_edge(v(i + 2 * x - 1, x), v(i - (2 * x - 1), x + 1))] = m + x
    return EdgeOrdering.from_labels(r_part(i, m), labels)


# -- index orderings --------------------------------------------------------------


def _cyclic_images(t: int, u: int) -> list[int]:
    d = gcd(u, t)
    q = t // d
    images = [0] * t
    for j in range(d):
        for i in range(q):
            images[(i % q + j * q) % t] = (i * u + j) % t
    return images


def cyclic_block_index(i: int, j: int, t: int, u: int) -> int:
    """``a_{i,j} = (i mod t/d) + j*t/d (mod t)`` with ``d = gcd(u, t)``."""
    q = t // gcd(u, t)
    return (i % q + j * q) % t


def index_order_cyclic(t: int, u: int) -> IndexOrdering:
    """``alpha`` with ``alpha(a_{i+1,j}) = alpha(a_{i,j}) + u (mod t)``."""
    if not t > u >= 1:
        raise ValueError(f"need t > u >= 1, got t={t}, u={u}")
    return IndexOrdering(t, _cyclic_images(t, u))


def index_order_noncyclic(t: int, u: int) -> IndexOrdering:
    """``alpha`` with ``alpha(a+1) = alpha(a) + u`` whenever ``alpha(a) <= t-u-1``.

    Same map as :func:`index_order_cyclic`; only the promised property differs.
    """
    alpha = index_order_cyclic(t, u)
    for a in range(t - 1):
        if alpha(a) <= t - u - 1 and alpha(a + 1) != alpha(a) + u:
            raise AssertionError(f"non-cyclic displacement fails at a={a}")
    if alpha(t - 1) <= t - u - 1:
        raise AssertionError("last index is constrained but has no successor")
    return alpha


def index_order_alpha_u(t: int, u: int) -> IndexOrdering:
    """Piecewise ordering with ``alpha(i+u) = alpha(i) - 1`` and ``alpha(i+u+1) = alpha(i) + 1``."""
    if not (2 * u >= t and u <= t - 1):
        raise ValueError(f"need t/2 <= u <= t-1, got t={t}, u={u}")
    images = []
    for i in range(t):
        if i <= t - u - 1:
            images.append(2 * i + 1)
        elif i <= u - 1:
            images.append(i + (t - u))
        else:
            images.append(2 * (i - u))
    return IndexOrdering(t, images)


def zigzag_sequence(l: int, t: int) -> list[int]:
    up = list(range(l, l + t, 2))
    down = [x for x in range(l + t - 1, l, -1) if (x - l) % 2 == 1]
    return up + down


def index_order_zigzag(l: int, t: int, m: int) -> IndexOrdering:
    """Ordering of ``{l, ..., l+t-1}`` listing it as ``l, l+2, ...`` up then odd offsets down.

    Consecutive entries of the list (including last back to first) differ by
    at most 2.
    """
    if not 1 <= t <= m:
        raise ValueError(f"need 1 <= t <= m, got t={t}, m={m}")
    if not 0 <= l <= m - t:
        raise ValueError(f"need 0 <= l <= m-t, got l={l}")
    seq = zigzag_sequence(l, t)
    images = [0] * t
    for k, x in enumerate(seq):
        images[x - l] = k
    return IndexOrdering(t, images, start=l)


def index_order_beta(m: int) -> IndexOrdering:
    """``beta(i) = i * u^{-1} (mod m)`` with ``u = (m-1)/2``; equals ``-2i mod m``."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd, got {m}")
    if m == 1:
        return IndexOrdering(1, [0])
    u_inv = pow((m - 1) // 2, -1, m)
    return IndexOrdering(m, [(i * u_inv) % m for i in range(m)])
