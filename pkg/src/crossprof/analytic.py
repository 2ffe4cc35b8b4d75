"""Closed-form predictions used to cross-check the oracle and to screen
candidate drawings before certifying them.

The two- and three-arc predictions give the exact crossing count of every
edge of the facing-arcs drawings; a realized drawing is accepted only when
the oracle agrees edge by edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import Drawing, EdgeId
from .profile import CrossingProfile, crossing_counts

ARC_UPPER = "upper"
ARC_LOWER = "lower"
ARC_THIRD = "third"


@dataclass(frozen=True)
class BlockParams:
    """k = (m-2)^2 + r with r in [1, 2m-3]; equivalently m = ceil(sqrt(k)) + 1."""

    k: int
    m: int
    r: int


def block_params(k: int) -> BlockParams:
    if k < 1:
        raise ValueError("k must be >= 1")
    m = math.isqrt(k - 1) + 2  # = ceil(sqrt(k)) + 1
    r = k - (m - 2) ** 2
    assert 1 <= r <= 2 * m - 3
    return BlockParams(k, m, r)


def convex_crossing_set(m: int) -> set[int]:
    """Possible nonzero per-edge crossing counts among m points in convex
    position: {a((m-2)-a) : 1 <= a <= (m-2)//2}."""
    if m < 2:
        raise ValueError("need at least two points")
    return {a * ((m - 2) - a) for a in range(1, (m - 2) // 2 + 1)}


def max_edge_crossings(n: int) -> int:
    """No edge of a rectilinear K_n drawing can exceed ((n-2)/2)^2 crossings."""
    if n < 2:
        raise ValueError("need n >= 2")
    return ((n - 2) ** 2) // 4


def convex_profile(n: int) -> CrossingProfile:
    """The exact profile of n points in convex position: an edge cutting off
    a vertices has a(n-2-a) crossings, and there are n such edges (n/2 on the
    diameter split of even n)."""
    if n < 3:
        raise ValueError("need n >= 3")
    hist: dict[int, int] = {}
    for a in range((n - 2) // 2 + 1):
        c = a * (n - 2 - a)
        mult = n if 2 * a != n - 2 else n // 2
        hist[c] = hist.get(c, 0) + mult
    e = [0] * (max(hist) + 1)
    for c, m in hist.items():
        e[c] += m
    return CrossingProfile(n, tuple(e))


def divisor_count(k: int) -> int:
    """tau(k) by trial division."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0
    i = 1
    while i * i <= k:
        if k % i == 0:
            total += 1 if i * i == k else 2
        i += 1
    return total


def min_sk_bound(n: int, k: int) -> tuple[float, str]:
    """Value of the minimum-S_k regime expression (natural log); the constant
    factor is deliberately unfixed, only ratios across a sweep are meaningful."""
    if k <= n:
        return 1.0, "k <= n"
    ratio = k / n
    if k <= n ** 1.5:
        return ratio * ratio * math.log(ratio), "n < k <= n^3/2"
    return ratio * ratio * math.log(n * n / k), "n^3/2 < k"


def two_arc_crossing_bound(a: int, b: int) -> int:
    """Every edge between the two facing arcs of sizes a, b is crossed at most
    (a-1)(b-1) times."""
    return (a - 1) * (b - 1)


ArcEdge = tuple[str, int, str, int]  # (arc, 1-based pos, arc, 1-based pos)


def predict_arc_edge(a: int, b: int, c: int, edge: ArcEdge) -> int:
    """Exact crossing count of one edge of the three-facing-arcs drawing with
    upper/lower/third sizes (a, b, c). Arc positions are 1-based: upper and
    lower run left to right, the third arc top to bottom. Within one arc the
    count is gap*(size-2-gap) for gap interior points skipped."""
    arc1, p1, arc2, p2 = edge
    sizes = {ARC_UPPER: a, ARC_LOWER: b, ARC_THIRD: c}
    for arc, p in ((arc1, p1), (arc2, p2)):
        if arc not in sizes:
            raise ValueError(f"unknown arc {arc!r}")
        if not 1 <= p <= sizes[arc]:
            raise ValueError(f"position {p} out of range for {arc} arc of size {sizes[arc]}")
    if arc1 == arc2:
        gap = abs(p1 - p2) - 1
        if gap < 0:
            raise ValueError("an edge needs two distinct endpoints")
        return gap * (sizes[arc1] - 2 - gap)
    pair = {arc1: p1, arc2: p2}
    if ARC_UPPER in pair and ARC_LOWER in pair:
        m, l = pair[ARC_UPPER], pair[ARC_LOWER]
        return (m - 1) * (b - l) + (l - 1) * (a - m) + c * (m + l - 2)
    if ARC_UPPER in pair and ARC_THIRD in pair:
        m, l = pair[ARC_UPPER], pair[ARC_THIRD]
        return (a - m) * (b + c - l) + (l - 1) * (b + m - 1)
    m, l = pair[ARC_LOWER], pair[ARC_THIRD]
    return (b - m) * (a + l - 1) + (c - l) * (a + m - 1)


def split_arc_sizes(n: int, i: int, j: int) -> tuple[int, int, int]:
    """Arc sizes of the near-balanced three-arc drawing indexed by (i, j)."""
    return n // 2 - i, (n + 1) // 2 - j, i + j


def predict_dij_edge(n: int, i: int, j: int, edge: ArcEdge) -> int:
    a, b, c = split_arc_sizes(n, i, j)
    return predict_arc_edge(a, b, c, edge)


def arc_vertex_order(a: int, b: int, c: int) -> list[tuple[str, int]]:
    """Vertex labels of the realized three-arc drawing, in vertex-id order."""
    return ([(ARC_UPPER, p) for p in range(1, a + 1)]
            + [(ARC_LOWER, p) for p in range(1, b + 1)]
            + [(ARC_THIRD, p) for p in range(1, c + 1)])


def arc_crossing_value_set(a: int, b: int, c: int = 0) -> set[int]:
    """All per-edge crossing counts attained by the (a, b, c) facing-arcs
    drawing; used to screen for e_k = 0 without building anything."""
    values: set[int] = set()
    for size in (a, b, c):
        for gap in range(0, max(0, size - 1)):
            values.add(gap * (size - 2 - gap))
    for m in range(1, a + 1):
        for l in range(1, b + 1):
            values.add((m - 1) * (b - l) + (l - 1) * (a - m) + c * (m + l - 2))
    for m in range(1, a + 1):
        for l in range(1, c + 1):
            values.add((a - m) * (b + c - l) + (l - 1) * (b + m - 1))
    for m in range(1, b + 1):
        for l in range(1, c + 1):
            values.add((b - m) * (a + l - 1) + (c - l) * (a + m - 1))
    return values


@dataclass
class PredictionReport:
    """Edge-by-edge comparison of the closed forms against the oracle."""

    a: int
    b: int
    c: int
    mismatches: list[tuple[EdgeId, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_arc_drawing(d: Drawing, a: int, b: int, c: int = 0) -> PredictionReport:
    """Compare every oracle count of a realized facing-arcs drawing with its
    prediction. Boundary-case mismatches are reported, never patched."""
    labels = arc_vertex_order(a, b, c)
    if len(labels) != d.n:
        raise ValueError("arc sizes do not match the drawing")
    counts = crossing_counts(d)
    report = PredictionReport(a, b, c)
    for u in range(d.n):
        for v in range(u + 1, d.n):
            arc1, p1 = labels[u]
            arc2, p2 = labels[v]
            want = predict_arc_edge(a, b, c, (arc1, p1, arc2, p2))
            got = counts.of(u, v)
            if want != got:
                report.mismatches.append(((u, v), want, got))
    return report
