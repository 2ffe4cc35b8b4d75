"""A second, structurally independent crossing counter used to check the
production oracle. Pure Fraction arithmetic, direct four-orientation test per
edge pair, no helpers shared with the package."""

from fractions import Fraction


def _det(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _sgn(v: Fraction) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def naive_crossing_counts(points) -> list[int]:
    """Per-edge proper crossing counts, edges in lexicographic (u, v) order."""
    n = len(points)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    counts = [0] * len(edges)
    for i, (u, v) in enumerate(edges):
        ux, uy = points[u]
        vx, vy = points[v]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if c == u or c == v or d == u or d == v:
                continue
            cx, cy = points[c]
            dx, dy = points[d]
            o1 = _sgn(_det(ux, uy, vx, vy, cx, cy))
            o2 = _sgn(_det(ux, uy, vx, vy, dx, dy))
            o3 = _sgn(_det(cx, cy, dx, dy, ux, uy))
            o4 = _sgn(_det(cx, cy, dx, dy, vx, vy))
            if o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0 \
                    and o1 != o2 and o3 != o4:
                counts[i] += 1
                counts[j] += 1
    return counts


def naive_total_crossings(points) -> int:
    return sum(naive_crossing_counts(points)) // 2
