"""Generators realizing the extremal point-set constructions as exact
rational drawings, plus the refinement loop that certifies every claim
against the oracle before a drawing is released.

Geometry conventions used throughout:

* Flat convex arcs are realized as parabola segments y = -eps * x**2 at
  integer abscissas; flatness eps and all offsets are dyadic rationals, so
  coordinates stay cheap to clear to integers.
* "Sufficiently small / flat / far" clauses become a single parameter that
  the refine loop halves until the oracle certifies the claim.
* Paired blocks place a satellite point Q next to each arc point P inside a
  prescribed wedge of directions; wedges are resolved exactly, either as a
  fixed slope strictly inside a unit-wide gap of the ray fan around the
  anchor, or as an exact pseudo-bisector of the two bounding rays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .analytic import (
    arc_crossing_value_set,
    block_params,
    max_edge_crossings,
    verify_arc_drawing,
)
from .geom import Drawing, EdgeId, GeneralPositionError, Point
from .profile import crossing_counts, crossing_profile

F = Fraction


# ---------------------------------------------------------------------------
# specs, claims, refinement


@dataclass(frozen=True)
class Claim:
    """What the generator asserts about each designated edge."""

    kind: str                 # "exactly" | "at_most" | "uncrossed" | "none"
    k: int | None = None


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int
    k: int | None = None
    arcs: tuple[int, ...] | None = None
    flatness: Fraction = F(1, 16)
    max_refinements: int = 40
    seed: int = 0


@dataclass
class GeneratedDrawing:
    drawing: Drawing
    designated: tuple[EdgeId, ...]
    claim: Claim
    meta: dict


@dataclass
class FailureDiag:
    note: str
    edge: EdgeId | None = None
    expected: object = None
    observed: object = None


class RefinementError(RuntimeError):
    def __init__(self, spec: ConstructionSpec, diag: FailureDiag | None):
        self.spec = spec
        self.diag = diag
        super().__init__(f"refinement budget exhausted for {spec.kind}: {diag}")


def check_claim(gd: GeneratedDrawing) -> FailureDiag | None:
    """Oracle check of the designated-edge claim; None means certified."""
    claim = gd.claim
    if claim.kind == "none":
        return None
    counts = crossing_counts(gd.drawing)
    for (u, v) in gd.designated:
        c = counts.of(u, v)
        if claim.kind == "exactly" and c != claim.k:
            return FailureDiag("crossing count off", (u, v), claim.k, c)
        if claim.kind == "at_most" and c > claim.k:
            return FailureDiag("crossing count too high", (u, v), claim.k, c)
        if claim.kind == "uncrossed" and c != 0:
            return FailureDiag("designated edge crossed", (u, v), 0, c)
    return None


def refine(spec: ConstructionSpec,
           certify: Callable[[GeneratedDrawing], FailureDiag | bool | None] | None = None,
           ) -> GeneratedDrawing:
    """Build spec.kind at flatness eps, halving eps until certified.

    The default certificate is the drawing's own claim, checked by the
    oracle; a custom certify may return None/True (pass) or a FailureDiag.
    """
    if spec.max_refinements < 1:
        raise ValueError("max_refinements must be >= 1")
    builder = _BUILDERS.get(spec.kind)
    if builder is None:
        raise ValueError(f"unknown construction kind {spec.kind!r}")
    eps = spec.flatness
    last: FailureDiag | None = None
    for iteration in range(1, spec.max_refinements + 1):
        try:
            cand = builder(spec, eps)
        except GeneralPositionError as exc:
            last = FailureDiag(f"degenerate at eps={eps}: {exc}")
            eps = eps / 2
            continue
        cand.meta["flatness"] = eps
        if certify is None:
            fail = check_claim(cand)
        else:
            res = certify(cand)
            fail = None if res is None or res is True else (
                res if isinstance(res, FailureDiag) else FailureDiag("certify returned false"))
        if fail is None:
            cand.meta["refinements"] = iteration
            return cand
        last = fail
        eps = eps / 2
    raise RefinementError(spec, last)


# ---------------------------------------------------------------------------
# dyadic direction helpers


def _l1(v: tuple[Fraction, Fraction]) -> Fraction:
    return abs(v[0]) + abs(v[1])


def _dyadic_unit(v: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Scale v by a power of two so its L1 norm lands in [1/2, 1)."""
    norm = _l1(v)
    if norm == 0:
        raise ValueError("zero direction")
    e = norm.numerator.bit_length() - norm.denominator.bit_length()
    s = F(1, 1 << e) if e >= 0 else F(1 << -e)
    while norm * s >= 1:
        s /= 2
    while norm * s < F(1, 2):
        s *= 2
    return (v[0] * s, v[1] * s)


def _wedge_dir(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]):
    """A direction strictly inside the counterclockwise wedge from ray u to
    ray v (any wedge width below a full turn)."""
    w = (u[0] * _l1(v) + v[0] * _l1(u), u[1] * _l1(v) + v[1] * _l1(u))
    cx = u[0] * v[1] - u[1] * v[0]
    if cx > 0:
        return w
    if cx < 0:
        return (-w[0], -w[1])
    return (-u[1], u[0])


# ---------------------------------------------------------------------------
# paired blocks (the k-crossing building blocks)
#
# P_1..P_m sit on the flat arc (u, -eps*u^2), left to right; Q_u is placed
# delta away from P_u inside a wedge chosen from the counterclockwise ray fan
# around an anchor point. Designated "interior diameters" are Q_i Q_{i+j}.


def _fan_items(m: int, apex: int, other: int, inner: bool):
    """The ordered ray fan around P_apex for the diameter (apex, other).

    Entry 0 is the ray toward P_other, then alternating rays toward Q_b, P_b
    for b descending (cyclically) over the inner span or its complement, and
    finally the continuation of the arc edge arriving at the apex.
    """
    if inner:
        size = ((other - apex) % m) - 1
    else:
        size = m - ((apex - other) % m) - 1
    items: list[tuple[str, int]] = [("P", other)]
    x = other - 1 if other > 1 else m
    for _ in range(size):
        items.append(("Q", x))
        items.append(("P", x))
        x = m if x == 1 else x - 1
    items.append(("cont", apex))
    return items


class _BlockBuilder:
    def __init__(self, m: int, eps: Fraction):
        self.m = m
        self.eps = eps
        self.delta = eps / (1 << max(8, (64 * m ** 3).bit_length()))
        self.P: dict[int, Point] = {
            u: Point(F(u), -eps * u * u) for u in range(1, m + 1)}
        self.Q: dict[int, Point] = {}

    def _item_dir(self, item: tuple[str, int], apex: int):
        kind, b = item
        pa = self.P[apex]
        if kind == "P":
            t = self.P[b]
            return (t.x - pa.x, t.y - pa.y)
        if kind == "Q":
            t = self.Q[b]
            return (t.x - pa.x, t.y - pa.y)
        prev = apex - 1 if apex > 1 else self.m
        pp = self.P[prev]
        return (pa.x - pp.x, pa.y - pp.y)

    def place_fixed(self, u: int, slope_coeff: Fraction) -> None:
        """Q_u along the direction (1, -eps*slope_coeff); coefficient 2u is
        the arc tangent at P_u."""
        self.place_dir(u, (F(1), -self.eps * slope_coeff))

    def place_gap(self, u: int, apex: int, other: int, inner: bool,
                  lo: int, hi: int) -> None:
        """Q_u strictly between fan rays lo and hi (hi = lo + 1)."""
        items = _fan_items(self.m, apex, other, inner)
        d = _wedge_dir(self._item_dir(items[lo], apex),
                       self._item_dir(items[hi], apex))
        self.place_dir(u, d)

    def place_dir(self, u: int, d) -> None:
        dx, dy = _dyadic_unit(d)
        p = self.P[u]
        self.Q[u] = Point(p.x + self.delta * dx, p.y + self.delta * dy)

    def points(self) -> list[Point]:
        assert len(self.Q) == self.m
        return ([self.P[u] for u in range(1, self.m + 1)]
                + [self.Q[u] for u in range(1, self.m + 1)])

    def q_id(self, u: int) -> int:
        return self.m + u - 1


def _paired_block(m: int, r: int, eps: Fraction):
    """Block of 2m points whose j interior diameters each cross exactly
    (m-2)^2 + r edges of the block; m even and m odd follow different ray
    budgets. Returns (points, designated local edge ids, j)."""
    blk = _BlockBuilder(m, eps)
    if m % 2 == 0:
        j = m // 2
        if 1 <= r <= m - 1:
            for i in range(1, j + 1):
                blk.place_fixed(i, F(4 * i + 2 * j - 1, 2))   # 2i + j - 1/2
            for s in range(2 * j, j, -1):
                i = s - j
                blk.place_gap(s, apex=s, other=i, inner=False, lo=r - 1, hi=r)
        elif m <= r <= 2 * m - 3:
            for s in range(j + 1, 2 * j + 1):
                blk.place_fixed(s, F(2 * s))
            for i in range(j, 0, -1):
                blk.place_gap(i, apex=i, other=i + j, inner=True,
                              lo=r - m + 1, hi=r - m + 2)
        else:
            raise ValueError(f"r={r} out of range for even m={m}")
    else:
        j = (m - 1) // 2
        if 2 <= r <= m - 1:
            for i in range(1, j + 1):
                blk.place_fixed(i, F(4 * i + 2 * j - 1, 2))
            blk.place_fixed(m, F(2 * m))
            for s in range(2 * j, j, -1):
                i = s - j
                blk.place_gap(s, apex=s, other=i, inner=False, lo=r, hi=r + 1)
        elif m <= r <= 2 * m - 4:
            for s in range(j + 1, 2 * j + 1):
                blk.place_fixed(s, F(2 * s))
            blk.place_fixed(m, F(2 * m))
            for i in range(j, 0, -1):
                blk.place_gap(i, apex=i, other=i + j, inner=True,
                              lo=r - m + 1, hi=r - m + 2)
        else:
            raise ValueError(f"r={r} out of range for odd m={m}")
    designated = [(blk.q_id(i), blk.q_id(i + j)) for i in range(1, j + 1)]
    return blk.points(), designated, j


def _convex_block(size: int, eps: Fraction) -> list[Point]:
    return [Point(F(u), -eps * u * u) for u in range(1, size + 1)]


def _case3_block(m: int, eps: Fraction):
    """2m-1 points: the even block on m-1 arc points for r1 = m-2 crossings
    plus one extra arc vertex between P_1 and P_2; the middle j-2 diameters
    gain exactly m-2 crossings each."""
    m1 = m - 1
    pts, designated, j = _paired_block(m1, m1 - 1, eps)
    extra = Point(F(3, 2), -eps * F(9, 4))
    pts = pts + [extra]
    return pts, designated[1:j - 1], j


def _center_point(m: int) -> Point:
    return Point(F(m + 1, 2), F(-4 * m ** 3))


def _case4_block(m: int, eps: Fraction):
    pts = _convex_block(2 * m, eps)
    designated = [(u - 1, u + m - 1) for u in range(1, m + 1)]
    return pts, designated


def _convex_split_block(size: int, step: int, eps: Fraction):
    """Convex block whose designated edges cut off step-1 points cyclically;
    each has (step-1)*(size-1-step) crossings."""
    pts = _convex_block(size, eps)
    designated = []
    for x in range(size):
        y = (x + step) % size
        designated.append((min(x, y), max(x, y)))
    return pts, sorted(set(designated))


def _case7_block(mm: int, d: int, eps: Fraction):
    """2mm points, mm odd: shifted diameters Q_l Q_{l+j+1} for l in [1, j-1],
    each crossing (mm-2)^2 + (mm-1) + d block edges; the circle center added
    by the caller contributes mm more."""
    blk = _BlockBuilder(mm, eps)
    j = (mm - 1) // 2
    for u in (j, j + 1, mm):
        blk.place_fixed(u, F(2 * u))
    for i in range(j + 2, 2 * j + 1):
        blk.place_fixed(i, F(2 * i))
    for l in range(j - 1, 0, -1):
        blk.place_gap(l, apex=l, other=l + j + 1, inner=False,
                      lo=d + 2, hi=d + 3)
    designated = [(blk.q_id(l), blk.q_id(l + j + 1)) for l in range(1, j)]
    return blk.points(), designated, j


# ---------------------------------------------------------------------------
# tiling: copies of a block along a big parabola, leftovers clustered high up


def _tile_blocks(block_pts: Sequence[Point], designated_local, n: int,
                 eps: Fraction):
    """Place n // len(block) shear-copies of the block tangent to y = x**2 and
    any leftover vertices on a tiny arc far inside; the convexity of the big
    parabola keeps every foreign edge strictly above each block's chords, and
    the cluster radius shrinks with the refined flatness."""
    bs = len(block_pts)
    t = n // bs
    leftover = n - t * bs
    gap = 4 * (bs + 2)
    pts: list[Point] = []
    designated: list[EdgeId] = []
    for b in range(t):
        big_x = F(gap * (b + 1))
        for p in block_pts:
            pts.append(Point(big_x + p.x, big_x * big_x + 2 * big_x * p.x + p.y))
        off = b * bs
        designated.extend((u + off, v + off) for (u, v) in designated_local)
    if leftover:
        top = F(4 * (gap * (t + 1)) ** 2)
        lam = eps / 16
        for s in range(leftover):
            pts.append(Point(F(-1) - s * lam, top + s * s * lam))
    return pts, designated, t


# ---------------------------------------------------------------------------
# gen_ek_linear


def _tiled_case(k: int):
    """(case name, block size) of the building block for crossing count k."""
    bp = block_params(k)
    m, r = bp.m, bp.r
    if m % 2 == 0:
        return "case1", 2 * m, bp
    if r == 2 * m - 3:
        return "case4", 2 * m, bp
    if r == 1:
        if (m - 1) // 2 >= 3:
            return "case3", 2 * m - 1, bp
        return "case3_convex", 2 * m - 1, bp
    return "case2", 2 * m, bp


def _build_ek_linear(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    n, k = spec.n, spec.k
    case, bs, bp = _tiled_case(k)
    m, r = bp.m, bp.r
    meta: dict = {"m": m, "r": r, "case": case}
    if bs <= n:
        if case == "case1" or case == "case2":
            pts, des, j = _paired_block(m, r, eps)
            per_block = j
        elif case == "case4":
            pts, des = _case4_block(m, eps)
            per_block = m
        elif case == "case3":
            pts, des, j = _case3_block(m, eps)
            per_block = j - 2
        else:  # case3_convex: k is (m-2)^2 + 1 with m in {3, 5}
            size = 2 * m - 1
            step = {3: 2, 5: 3}[m]
            pts, des = _convex_split_block(size, step, eps)
            per_block = size
        all_pts, designated, t = _tile_blocks(pts, des, n, eps)
        meta.update(block_size=bs, t=t, per_block=per_block,
                    designated_count=len(designated))
        return GeneratedDrawing(Drawing(all_pts), tuple(designated),
                                Claim("exactly", k), meta)

    # single-block track: n odd, k > ((n-3)/2)^2
    if n % 2 == 0:
        raise ValueError(f"no block of size <= {n} exists for k={k}")
    mm = (n - 1) // 2
    meta["mm"] = mm
    if mm % 2 == 0:
        d = k - (mm - 2) ** 2 - 2 * (mm - 1)
        if not 0 <= d <= mm - 2:
            raise ValueError(f"k={k} outside the center-block range for n={n}")
        if mm >= 4:
            r1 = mm - 1 + d
            pts, des, j = _paired_block(mm, r1, eps)
            pts = pts + [_center_point(mm)]
            designated = des[: j - 1]
            meta.update(case="case6", d=d, per_block=j - 1, t=1,
                        designated_count=len(designated))
            return GeneratedDrawing(Drawing(pts), tuple(designated),
                                    Claim("exactly", k), meta)
    else:
        if k == (mm - 1) ** 2 + 1 and mm >= 5:
            pts, des, j = _paired_block(mm, mm, eps)
            pts = pts + [_center_point(mm)]
            meta.update(case="case8", per_block=j, t=1,
                        designated_count=len(des))
            return GeneratedDrawing(Drawing(pts), tuple(des),
                                    Claim("exactly", k), meta)
        if k != (mm - 1) ** 2 + 1:
            d = k - (mm - 2) ** 2 - (mm - 1) - mm
            if not 0 <= d <= mm - 3:
                raise ValueError(f"k={k} outside the center-block range for n={n}")
            if (mm - 1) // 2 >= 2:
                pts, des, j = _case7_block(mm, d, eps)
                pts = pts + [_center_point(mm)]
                meta.update(case="case7", d=d, per_block=j - 1, t=1,
                            designated_count=len(des))
                return GeneratedDrawing(Drawing(pts), tuple(des),
                                        Claim("exactly", k), meta)
    return _fallback_small(spec, eps, meta)


def _fallback_small(spec: ConstructionSpec, eps: Fraction, meta: dict) -> GeneratedDrawing:
    """Last resort for the handful of (n, k) pairs whose block recipe
    degenerates to zero diameters: scan the facing-arc families for any
    drawing with an edge crossed exactly k times."""
    n, k = spec.n, spec.k
    if n > 16:
        raise ValueError(f"fallback search is only for small n, got {n}")
    shapes = [(n, 0, 0)]
    shapes += [(a, n - a, 0) for a in range(1, n // 2 + 1)]
    shapes += [(a, b, n - a - b)
               for a in range(1, n - 1)
               for b in range(1, n - a)
               if n - a - b >= 1]
    for (a, b, c) in shapes:
        if k not in arc_crossing_value_set(a, b, c):
            continue
        try:
            d = Drawing(_arc_points(a, b, c, eps))
        except GeneralPositionError:
            continue
        counts = crossing_counts(d)
        designated = [(u, v) for u in range(n) for v in range(u + 1, n)
                      if counts.of(u, v) == k]
        if designated:
            meta.update(case="fallback", arcs=(a, b, c), t=1,
                        per_block=len(designated),
                        designated_count=len(designated))
            return GeneratedDrawing(d, tuple(designated), Claim("exactly", k), meta)
    raise ValueError(f"no fallback drawing found for n={n}, k={k}")


def gen_ek_linear(n: int, k: int, *, flatness: Fraction = F(1, 16),
                  max_refinements: int = 40) -> GeneratedDrawing:
    """A drawing of K_n with a linear (in n) number of designated edges each
    crossed exactly k times, oracle-certified."""
    if n < 4:
        raise ValueError("need n >= 4")
    if not 1 <= k <= max_edge_crossings(n):
        raise ValueError(f"k={k} outside [1, {max_edge_crossings(n)}] for n={n}")
    spec = ConstructionSpec("ek-linear", n, k=k, flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec)


# ---------------------------------------------------------------------------
# facing-arc drawings


def _arc_points(a: int, b: int, c: int, eps: Fraction) -> list[Point]:
    """Upper arc (a points) bulging down, lower arc (b points) bulging up,
    optional third arc (c points) on the right bulging left, numbered top to
    bottom; matches the ordering assumed by the closed-form predictions."""
    pts: list[Point] = []
    for x in range(1, a + 1):
        off = 2 * x - (a + 1)
        pts.append(Point(F(off), F(2) + eps * off * off))
    for x in range(1, b + 1):
        off = 2 * x - (b + 1)
        pts.append(Point(F(off), F(-2) - eps * off * off))
    if c:
        w = max(a, b) + 2
        hscale = F(1, 1 << (c + 1).bit_length())
        for z in range(1, c + 1):
            off = 2 * z - (c + 1)
            pts.append(Point(F(w) + eps * off * off, off * -hscale))
    return pts


def _build_arcs(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    arcs = spec.arcs + (0,) * (3 - len(spec.arcs))
    a, b, c = arcs
    d = Drawing(_arc_points(a, b, c, eps))
    return GeneratedDrawing(d, (), Claim("none"), {"arcs": (a, b, c)})


def _arc_certify(gd: GeneratedDrawing) -> FailureDiag | None:
    a, b, c = gd.meta["arcs"]
    report = verify_arc_drawing(gd.drawing, a, b, c)
    if report.ok:
        return None
    edge, want, got = report.mismatches[0]
    return FailureDiag("prediction mismatch", edge, want, got)


def gen_two_arc(a: int, b: int, *, flatness: Fraction = F(1, 16),
                max_refinements: int = 40) -> Drawing:
    """Two flattened convex arcs facing each other, flattened until the
    oracle matches the closed-form count of every edge."""
    if a < 0 or b < 0 or a + b < 2:
        raise ValueError("need a + b >= 2 nonnegative arc sizes")
    spec = ConstructionSpec("arcs", a + b, arcs=(a, b), flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec, _arc_certify).drawing


def gen_three_arc(a: int, b: int, c: int, *, flatness: Fraction = F(1, 16),
                  max_refinements: int = 40) -> Drawing:
    if min(a, b, c) < 0 or a + b + c < 3:
        raise ValueError("need a + b + c >= 3 nonnegative arc sizes")
    spec = ConstructionSpec("arcs", a + b + c, arcs=(a, b, c), flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec, _arc_certify).drawing


def gen_convex(n: int) -> Drawing:
    """n points in strictly convex position on the parabola (i, i^2)."""
    if n < 3:
        raise ValueError("need n >= 3")
    return Drawing(Point(F(i), F(i * i)) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# maximum number of uncrossed edges


def _build_max_e0(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    n = spec.n
    d = Drawing(_arc_points(1, n - 1, 0, eps))
    designated = ([(0, v) for v in range(1, n)]
                  + [(v, v + 1) for v in range(1, n - 1)]
                  + [(1, n - 1)])
    return GeneratedDrawing(d, tuple(designated), Claim("uncrossed"),
                            {"target_e0": 2 * n - 2})


def _max_e0_certify(gd: GeneratedDrawing) -> FailureDiag | None:
    fail = check_claim(gd)
    if fail is not None:
        return fail
    e0 = crossing_profile(gd.drawing).e_k(0)
    want = gd.meta["target_e0"]
    if e0 != want:
        return FailureDiag("uncrossed-edge total off", None, want, e0)
    return None


def gen_max_e0(n: int, *, flatness: Fraction = F(1, 16),
               max_refinements: int = 40) -> GeneratedDrawing:
    """A drawing with the maximum possible 2n-2 uncrossed edges: one point
    facing a flat arc of the other n-1."""
    if n < 4:
        raise ValueError("need n >= 4")
    spec = ConstructionSpec("max-e0", n, flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec, _max_e0_certify)


# ---------------------------------------------------------------------------
# many edges with exactly one crossing


def _build_e1_linear(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    n = spec.n
    m = (n + 3) // 4
    drop = 4 * m - n                      # 0..3 vertices deleted, paper order
    gap = eps * eps / 4                   # mirror-line clearance below the arc
    eta = gap * eps / 16                  # midpoint push, well inside the gap
    far = F(4) / eps

    upper_p = {i: Point(F(i), -eps * i * i) for i in range(1, m + 1)}
    apex = Point(F(1) - far, far)
    upper_q = {}
    for i in range(1, m):
        mid = Point((upper_p[i].x + upper_p[i + 1].x) / 2,
                    (upper_p[i].y + upper_p[i + 1].y) / 2)
        dx, dy = _dyadic_unit((mid.x - apex.x, mid.y - apex.y))
        upper_q[i] = Point(mid.x + eta * dx, mid.y + eta * dy)

    axis = -eps * m * m - gap             # mirror line, just below the arc
    def mirror(p: Point) -> Point:
        return Point(p.x, 2 * axis - p.y)

    names: list[tuple[str, int]] = []
    pts: list[Point] = []

    def add(tag: str, idx: int, p: Point):
        names.append((tag, idx))
        pts.append(p)

    deleted = set()
    if drop >= 1:
        deleted.add(("P", 1))
    if drop >= 2:
        deleted.add(("p", 1))             # the mirror image of P_1
    if drop >= 3:
        deleted.add(("Q", 1))

    for i in range(1, m + 1):
        if ("P", i) not in deleted:
            add("P", i, upper_p[i])
    for i in range(1, m):
        if ("Q", i) not in deleted:
            add("Q", i, upper_q[i])
    add("A", 0, apex)
    for i in range(1, m + 1):
        if ("p", i) not in deleted:
            add("p", i, mirror(upper_p[i]))
    for i in range(1, m):
        if ("q", i) not in deleted:
            add("q", i, mirror(upper_q[i]))
    add("B", 0, mirror(apex))

    index = {nm: i for i, nm in enumerate(names)}

    def alive(*keys) -> bool:
        return all(key not in deleted for key in keys)

    designated: list[EdgeId] = []

    def claim_edge(x, y, crosser_keys):
        if alive(x, y, *crosser_keys):
            designated.append((min(index[x], index[y]), max(index[x], index[y])))

    for i in range(1, m):
        claim_edge(("P", i), ("Q", i), [("A", 0), ("q", i)])
        claim_edge(("p", i), ("q", i), [("B", 0), ("Q", i)])
    for i in range(2, m + 1):
        claim_edge(("Q", i - 1), ("P", i), [("A", 0), ("p", i)])
        claim_edge(("q", i - 1), ("p", i), [("B", 0), ("P", i)])
    for i in range(1, m):
        claim_edge(("A", 0), ("Q", i), [("P", i), ("P", i + 1)])
        claim_edge(("B", 0), ("q", i), [("p", i), ("p", i + 1)])

    meta = {"m": m, "dropped": drop, "designated_count": len(designated)}
    return GeneratedDrawing(Drawing(pts), tuple(designated), Claim("exactly", 1), meta)


def gen_e1_linear(n: int, *, flatness: Fraction = F(1, 16),
                  max_refinements: int = 40) -> GeneratedDrawing:
    """A drawing of K_n with about 3n/2 designated edges, each involved in
    exactly one crossing (two mirrored combs sharing a far apex each)."""
    if n < 8:
        raise ValueError("need n >= 8")
    spec = ConstructionSpec("e1-linear", n, flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec)


# ---------------------------------------------------------------------------
# many edges with at most k crossings


def _build_max_sk(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    n, k = spec.n, spec.k
    root = math.isqrt(k)
    m = 2 * root + 2
    block = _convex_block(m, eps)
    des_local = [(u, v) for u in range(m) for v in range(u + 1, m)]
    pts, designated, t = _tile_blocks(block, des_local, n, eps)
    meta = {"m": m, "l": t, "target": t * m * (m - 1) // 2,
            "intra_cap": root * root, "designated_count": len(designated)}
    return GeneratedDrawing(Drawing(pts), tuple(designated),
                            Claim("at_most", k), meta)


def _max_sk_certify(gd: GeneratedDrawing) -> FailureDiag | None:
    """Intra-block counts must equal their isolated convex values, which both
    caps them at floor(sqrt(k))^2 <= k and proves no foreign edge interferes."""
    counts = crossing_counts(gd.drawing)
    m = gd.meta["m"]
    for (u, v) in gd.designated:
        gap = abs(v % m - u % m) - 1
        want = gap * (m - 2 - gap)
        got = counts.of(u, v)
        if got != want:
            return FailureDiag("intra-arc count off", (u, v), want, got)
    return None


def gen_max_sk(n: int, k: int, *, flatness: Fraction = F(1, 16),
               max_refinements: int = 40) -> GeneratedDrawing:
    """floor(n/m) flat convex arcs of m = 2*floor(sqrt(k))+2 points each; all
    intra-arc edges (the designated set) have at most k crossings, giving
    S_k >= floor(n/m) * C(m, 2)."""
    if k < 1 or k > ((n - 2) ** 2) / 4:
        raise ValueError(f"k={k} outside [1, ((n-2)/2)^2] for n={n}")
    m = 2 * math.isqrt(k) + 2
    if m > n:
        raise ValueError("arc size exceeds n")
    spec = ConstructionSpec("max-sk", n, k=k, flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec, _max_sk_certify)


# ---------------------------------------------------------------------------
# nested triangles (small S_k)


def _build_nested_triangles(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    n, k = spec.n, spec.k
    m = n // 3
    extras = n - 3 * m
    corners = [(F(0), F(8)), (F(-7), F(-4)), (F(7), F(-4))]
    laterals = [(F(1), F(0)), (F(4, 8), F(-7, 8)), (F(4, 8), F(7, 8))]

    c3 = spec.seed if spec.seed > 0 else 1   # tuning constant, fixed default
    q = max(3, -(-4 * c3 * k // n))
    per_family = -(-m // 2)
    lines = max(-(-(n * n) // (c3 * k)), -(-per_family // q))
    span = F(1, 8)
    decay = F(1, 2)
    cluster_w = span / (1 << q.bit_length())
    line_w = cluster_w / (1 << (4 * lines).bit_length())
    micro = line_w / 1024

    pts: list[Point] = []
    for fam in range(3):
        cx, cy = corners[fam]
        ux, uy = laterals[fam]
        for parity in (0, 1):
            depth = 0
            for i in range(1 + parity, m + 1, 2):
                rho = (-1) ** (i - 1) * eps ** (i - 1)
                p, l = depth % q, depth // q
                off = (F(2 * p - (q - 1)) / 2) * cluster_w + l * line_w \
                    + (depth + 1) * micro * (fam + 1)
                # spacings shrink geometrically with depth so the lateral
                # structure stays small next to each ring's own scale
                off = off * decay ** (i - 1)
                pts.append(Point(rho * cx + off * ux, rho * cy + off * uy))
                depth += 1
    lam = eps ** (m + 2)
    for s in range(extras):
        pts.append(Point(F(s + 1) * lam, F(s + 1) ** 2 * lam * lam))

    meta = {"m": m, "q": q, "lines": lines, "c3": c3}
    return GeneratedDrawing(Drawing(pts), (), Claim("none"), meta)


def _nested_certify(gd: GeneratedDrawing) -> FailureDiag | None:
    """Sampled column-shadow witnesses: an edge of one perturbed family must
    be crossed by every edge from a vertex below and between its columns to a
    vertex above it."""
    from .geom import segments_cross_properly
    d = gd.drawing
    m = gd.meta["m"]
    fam0 = [v for v in range(0, -(-m // 2))]    # family (corner 0, odd rings)
    fam0 = [v for v in fam0 if v < d.n]
    checked = 0
    for ai in range(len(fam0) - 2):
        for bi in range(ai + 1, min(ai + 3, len(fam0))):
            pa, pb = d.points[fam0[ai]], d.points[fam0[bi]]
            lo_x, hi_x = min(pa.x, pb.x), max(pa.x, pb.x)
            below = [w for w in fam0
                     if d.points[w].y < min(pa.y, pb.y)
                     and lo_x < d.points[w].x < hi_x]
            above = [w for w in fam0 if d.points[w].y > max(pa.y, pb.y)]
            for w in below[:2]:
                for z in above[:2]:
                    checked += 1
                    if not segments_cross_properly(pa, pb, d.points[w], d.points[z]):
                        return FailureDiag("shadow witness failed",
                                           (fam0[ai], fam0[bi]), True, False)
            if checked >= 40:
                return None
    return None


def gen_nested_triangles(n: int, k: int, *, flatness: Fraction = F(1, 2),
                         max_refinements: int = 40, seed: int = 0) -> Drawing:
    """Concentric alternating triangles with the columns-and-layers
    horizontal perturbation applied to all six vertex families; used to make
    S_k small."""
    if n < 9:
        raise ValueError("need n >= 9")
    if not n < k < n * n:
        raise ValueError("need n < k < n^2")
    spec = ConstructionSpec("nested-triangles", n, k=k, flatness=flatness,
                            max_refinements=max_refinements, seed=seed)
    return refine(spec, _nested_certify).drawing


# ---------------------------------------------------------------------------
# perturbed grid (primed counts)


def _build_grid(spec: ConstructionSpec, eps: Fraction) -> GeneratedDrawing:
    n, seed = spec.n, spec.seed
    side = math.isqrt(n - 1) + 1
    lam = eps / (1 << 8)
    state = (seed * 2654435761 + 97531) % (1 << 32)
    pts: list[Point] = []
    for t in range(n):
        i, j = divmod(t, side)
        jiggles = []
        for _ in range(2):
            state = (1103515245 * state + 12345) % (1 << 31)
            jiggles.append(F(state % 65537 - 32768, 65536))
        pts.append(Point(F(i) + lam * jiggles[0], F(j) + lam * jiggles[1]))
    return GeneratedDrawing(Drawing(pts), (), Claim("none"),
                            {"side": side, "seed": seed})


def gen_grid(n: int, *, seed: int = 0, flatness: Fraction = F(1, 16),
             max_refinements: int = 40) -> Drawing:
    """ceil(sqrt(n)) x ceil(sqrt(n)) grid trimmed to n points, pushed into
    general position by seeded deterministic rational offsets."""
    if n < 4:
        raise ValueError("need n >= 4")
    spec = ConstructionSpec("grid", n, seed=seed, flatness=flatness,
                            max_refinements=max_refinements)
    return refine(spec).drawing


_BUILDERS: dict[str, Callable[[ConstructionSpec, Fraction], GeneratedDrawing]] = {
    "ek-linear": _build_ek_linear,
    "arcs": _build_arcs,
    "max-e0": _build_max_e0,
    "e1-linear": _build_e1_linear,
    "max-sk": _build_max_sk,
    "nested-triangles": _build_nested_triangles,
    "grid": _build_grid,
}
