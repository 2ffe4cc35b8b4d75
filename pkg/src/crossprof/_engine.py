"""Vectorized exact-sign machinery shared by validation and the oracle.

Orientation determinants are evaluated with a float64 filter plus a
big-integer fallback for the undecided ones, so every sign equals what pure
rational arithmetic would produce. Coordinates enter as plain Python ints
(rationals are cleared by a common positive scale, which preserves all
orientation signs).
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

_EPS = float(np.finfo(np.float64).eps)
# Forward-error multiplier for det = t1 - t2 built from correctly rounded
# inputs: true bound is < 6*eps*(|t1|+|t2|); 8 leaves slack for the bound's
# own rounding. The additive term covers subnormal products.
_FILTER_K = 8.0
_FILTER_ABS = 1e-290


def scaled_int_coords(xs_frac, ys_frac) -> tuple[list[int], list[int]]:
    """Clear denominators by the lcm; a common positive scale keeps signs."""
    dens = set()
    for v in xs_frac:
        dens.add(v.denominator)
    for v in ys_frac:
        dens.add(v.denominator)
    scale = math.lcm(*dens)
    xs = [int(v * scale) for v in xs_frac]
    ys = [int(v * scale) for v in ys_frac]
    return xs, ys


def _as_floats(vals: list[int]) -> np.ndarray:
    """Correctly rounded float images, rescaled by 2**-shift to avoid overflow."""
    mb = max((abs(v).bit_length() for v in vals), default=1)
    if mb <= 500:
        return np.array([float(v) for v in vals], dtype=np.float64)
    den = 1 << (mb - 500)
    return np.array([float(Fraction(v, den)) for v in vals], dtype=np.float64)


def _int_sign(v: int) -> int:
    return (v > 0) - (v < 0)


class SignEngine:
    """Orientation signs of one fixed integer point set.

    sign(p, q, r) = sign of det(q - p, r - p): +1 counterclockwise,
    -1 clockwise, 0 collinear.
    """

    def __init__(self, xs: list[int], ys: list[int]):
        self.n = len(xs)
        self.xs = xs
        self.ys = ys
        self._tensor: np.ndarray | None = None

    def exact_sign(self, p: int, q: int, r: int) -> int:
        xs, ys = self.xs, self.ys
        det = (xs[q] - xs[p]) * (ys[r] - ys[p]) - (ys[q] - ys[p]) * (xs[r] - xs[p])
        return _int_sign(det)

    def row(self, p: int) -> np.ndarray:
        """int8 matrix S[q, r] = sign(p, q, r)."""
        # Differences are taken exactly in integers before any rounding, so
        # the float images carry only relative error and the forward bound
        # below is sound even for huge, nearly equal coordinates.
        xp, yp = self.xs[p], self.ys[p]
        u = _as_floats([x - xp for x in self.xs])
        v = _as_floats([y - yp for y in self.ys])
        t1 = np.multiply.outer(u, v)
        t2 = np.multiply.outer(v, u)
        det = t1 - t2
        err = _FILTER_K * _EPS * (np.abs(t1) + np.abs(t2)) + _FILTER_ABS
        sgn = np.sign(det).astype(np.int8)
        unsure = np.abs(det) <= err
        unsure[p, :] = False
        unsure[:, p] = False
        np.fill_diagonal(unsure, False)
        if unsure.any():
            qs, rs = np.nonzero(unsure)
            for q, r in zip(qs.tolist(), rs.tolist()):
                sgn[q, r] = self.exact_sign(p, q, r)
        sgn[p, :] = 0
        sgn[:, p] = 0
        np.fill_diagonal(sgn, 0)
        return sgn

    def tensor(self) -> np.ndarray:
        """Full int8 sign tensor T[p, q, r], cached."""
        if self._tensor is None:
            n = self.n
            t = np.empty((n, n, n), dtype=np.int8)
            for p in range(n):
                t[p] = self.row(p)
            self._tensor = t
        return self._tensor


def edge_endpoints(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays of the n(n-1)/2 edges in lexicographic (u, v) order."""
    eu, ev = [], []
    for u in range(n):
        for v in range(u + 1, n):
            eu.append(u)
            ev.append(v)
    return np.array(eu, dtype=np.int32), np.array(ev, dtype=np.int32)


def _pair_counts(engine: SignEngine, primed: bool) -> np.ndarray:
    """Per-edge counts: proper segment crossings, or line-vs-interior hits."""
    t = engine.tensor()
    eu, ev = edge_endpoints(engine.n)
    m = len(eu)
    # sides[j, p] = side of point p w.r.t. the supporting line of edge j
    sides = np.ascontiguousarray(t[eu, ev])
    counts = np.zeros(m, dtype=np.int64)
    chunk = max(1, 8_000_000 // max(m, 1))
    for lo in range(0, m, chunk):
        a = eu[lo:lo + chunk]
        b = ev[lo:lo + chunk]
        # does edge j's line separate the endpoints of edge i (rows = i)
        s3 = sides[:, a].T
        s4 = sides[:, b].T
        hit = (s3 == -s4) & (s3 != 0)
        if not primed:
            rows = sides[lo:lo + chunk]
            s1 = rows[:, eu]
            s2 = rows[:, ev]
            hit &= (s1 == -s2) & (s1 != 0)
        counts[lo:lo + chunk] = hit.sum(axis=1)
    return counts


def proper_crossing_counts(engine: SignEngine) -> np.ndarray:
    return _pair_counts(engine, primed=False)


def line_crossing_counts(engine: SignEngine) -> np.ndarray:
    return _pair_counts(engine, primed=True)


def halfplane_counts(engine: SignEngine) -> np.ndarray:
    """pos[a, b] = number of points strictly to the left of the line a -> b."""
    return (engine.tensor() > 0).sum(axis=2)


def first_degeneracy(engine: SignEngine):
    """First duplicate pair or collinear triple in lexicographic order.

    Returns None, ("duplicate", i, j), or ("collinear", p, q, r).
    """
    seen: dict[tuple[int, int], int] = {}
    for i, key in enumerate(zip(engine.xs, engine.ys)):
        if key in seen:
            return ("duplicate", seen[key], i)
        seen[key] = i
    n = engine.n
    for p in range(n - 2):
        row = engine.row(p) if engine._tensor is None else engine._tensor[p]
        sub = row[p + 1:, p + 1:] == 0
        tri = np.triu(sub, k=1)
        if tri.any():
            qs, rs = np.nonzero(tri)
            best = min(zip(qs.tolist(), rs.tolist()))
            return ("collinear", p, best[0] + p + 1, best[1] + p + 1)
    return None
