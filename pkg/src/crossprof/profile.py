"""The brute-force oracle: per-edge crossing counts, crossing profiles,
e_k / S_k, the primed (line-extension) variants, and k-edge statistics.

Everything is computed by exhaustive pair enumeration over exact signs, so
these numbers are the ground truth every construction is certified against.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _engine
from .geom import Drawing


class SanityBoundError(RuntimeError):
    """S_k exceeded the k-planarity ceiling n*sqrt(16.875 k); impossible for a
    correct oracle, so this always indicates a bug."""


def _check_sanity_ceiling(e: tuple[int, ...], n: int) -> None:
    # 16.875 = 135/8, so the check is exact integer arithmetic.
    s = e[0] if e else 0
    for k in range(1, len(e)):
        s += e[k]
        if 8 * s * s > 135 * n * n * k:
            raise SanityBoundError(f"S_{k}={s} > n*sqrt(16.875k) for n={n}")


@dataclass(frozen=True)
class EdgeCrossCounts:
    """counts[i] = crossings of the i-th edge in lexicographic (u<v) order."""

    n: int
    counts: tuple[int, ...]
    primed: bool = False

    def __post_init__(self):
        m = self.n * (self.n - 1) // 2
        if len(self.counts) != m:
            raise ValueError(f"expected {m} edge counts, got {len(self.counts)}")
        if not self.primed and sum(self.counts) % 2 != 0:
            raise ValueError("unprimed crossing counts must sum to an even number")

    def of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.counts[u * (2 * self.n - u - 1) // 2 + (v - u - 1)]


@dataclass(frozen=True)
class CrossingProfile:
    """e[k] = number of edges with exactly k crossings, trimmed at the last
    nonzero entry."""

    n: int
    e: tuple[int, ...]
    primed: bool = False

    def __post_init__(self):
        if self.e and self.e[-1] == 0:
            raise ValueError("profile must be trimmed at the last nonzero entry")
        if sum(self.e) != self.n * (self.n - 1) // 2:
            raise ValueError("profile entries must sum to C(n,2)")
        if not self.primed:
            bound = ((self.n - 2) ** 2) // 4
            if len(self.e) - 1 > bound:
                raise ValueError(
                    f"an edge with {len(self.e) - 1} crossings is impossible for n={self.n}")
            _check_sanity_ceiling(self.e, self.n)

    def e_k(self, k: int) -> int:
        if 0 <= k < len(self.e):
            return self.e[k]
        return 0

    def s_k(self, k: int) -> int:
        if k < 0:
            return 0
        return sum(self.e[: k + 1])


def _counts(d: Drawing, primed: bool) -> EdgeCrossCounts:
    key = "primed" if primed else "counts"
    if key not in d._cache:
        fn = _engine.line_crossing_counts if primed else _engine.proper_crossing_counts
        vec = fn(d._engine)
        d._cache[key] = EdgeCrossCounts(d.n, tuple(int(c) for c in vec), primed)
    return d._cache[key]


def _profile_of(counts: EdgeCrossCounts) -> CrossingProfile:
    hist = [0] * (max(counts.counts, default=0) + 1)
    for c in counts.counts:
        hist[c] += 1
    while hist and hist[-1] == 0:
        hist.pop()
    return CrossingProfile(counts.n, tuple(hist), counts.primed)


def crossing_counts(d: Drawing) -> EdgeCrossCounts:
    """Proper segment-segment crossings of every edge against every other."""
    return _counts(d, primed=False)


def crossing_profile(d: Drawing) -> CrossingProfile:
    return _profile_of(crossing_counts(d))


def e_k(d: Drawing, k: int) -> int:
    return crossing_profile(d).e_k(k)


def s_k(d: Drawing, k: int) -> int:
    return crossing_profile(d).s_k(k)


def total_crossings(d: Drawing) -> int:
    return sum(crossing_counts(d).counts) // 2


def primed_counts(d: Drawing) -> EdgeCrossCounts:
    """For each edge, the number of other edges whose supporting line meets
    the edge's open interior. Lines through an endpoint never count, which
    silently excludes adjacent edges."""
    return _counts(d, primed=True)


def primed_profile(d: Drawing) -> CrossingProfile:
    return _profile_of(primed_counts(d))


def e_k_primed(d: Drawing, k: int) -> int:
    return primed_profile(d).e_k(k)


def s_k_primed(d: Drawing, k: int) -> int:
    return primed_profile(d).s_k(k)


def _side_splits(d: Drawing) -> list[tuple[int, int]]:
    """Per edge (lexicographic order), the point counts of its two open
    half-planes."""
    if "splits" not in d._cache:
        pos = _engine.halfplane_counts(d._engine)
        splits = []
        for u in range(d.n):
            for v in range(u + 1, d.n):
                left = int(pos[u, v])
                splits.append((left, d.n - 2 - left))
        d._cache["splits"] = splits
    return d._cache["splits"]


def k_edge_count(d: Drawing, k: int) -> int:
    """Number of vertex pairs with exactly k points in at least one open
    half-plane of their line. A pair with split (a, n-2-a), a != n-2-a, is
    both an a-edge and an (n-2-a)-edge."""
    return sum(1 for a, b in _side_splits(d) if k in (a, b))


def leq_k_edge_count(d: Drawing, k: int) -> int:
    """Pairs whose smaller open half-plane holds at most k points."""
    return sum(1 for a, b in _side_splits(d) if min(a, b) <= k)
