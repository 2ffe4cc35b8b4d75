"""Exact planar primitives: rational points, orientation, proper segment
crossings, line-vs-open-segment tests, and general-position validation.

All arithmetic is exact; there is no tolerance anywhere. An edge id is an
ordered vertex pair (u, v) with u < v.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import _engine

Rational = Fraction

EdgeId = tuple[int, int]


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def point(x, y) -> Point:
    """Build a Point from anything Fraction accepts (ints, '1/3', Fractions)."""
    return Point(Fraction(x), Fraction(y))


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of the determinant of (q - p, r - p)."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if det > 0:
        return Orientation.COUNTERCLOCKWISE
    if det < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd share a point.

    Contact at an endpoint or collinear contact does not count.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o3 != 0 and o4 != 0 and o3 != o4


def line_crosses_open_segment(p: Point, q: Point, a: Point, b: Point) -> bool:
    """True iff the infinite line pq meets the open segment ab.

    A line through an endpoint of ab returns False (the interior must be hit).
    """
    oa = orientation(p, q, a)
    ob = orientation(p, q, b)
    return oa != 0 and ob != 0 and oa != ob


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    kind: str | None = None          # "duplicate" | "collinear" | "empty"
    indices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class GeneralPositionError(ValueError):
    def __init__(self, report: GeneralPositionReport):
        self.report = report
        super().__init__(f"general position violated: {report.kind} at {report.indices}")


def validate_general_position(points: Sequence[Point]) -> GeneralPositionReport:
    """Check pairwise-distinct and no-three-collinear; report first offender."""
    pts = list(points)
    if not pts:
        return GeneralPositionReport(False, "empty", ())
    xs, ys = _engine.scaled_int_coords([p.x for p in pts], [p.y for p in pts])
    hit = _engine.first_degeneracy(_engine.SignEngine(xs, ys))
    if hit is None:
        return GeneralPositionReport(True)
    return GeneralPositionReport(False, hit[0], tuple(hit[1:]))


class Drawing:
    """A rectilinear drawing of K_n: an ordered point set in general position.

    Vertex i is points[i]; the edge set is implicitly all unordered pairs.
    Degenerate input (duplicate points, collinear triples) is a hard error;
    any repair by perturbation belongs to the construction layer.
    """

    __slots__ = ("points", "_engine", "_cache")

    def __init__(self, points: Iterable[Point]):
        pts = tuple(Point(Fraction(p[0]), Fraction(p[1])) for p in points)
        if len(pts) < 1:
            raise GeneralPositionError(GeneralPositionReport(False, "empty", ()))
        xs, ys = _engine.scaled_int_coords([p.x for p in pts], [p.y for p in pts])
        eng = _engine.SignEngine(xs, ys)
        hit = _engine.first_degeneracy(eng)
        if hit is not None:
            raise GeneralPositionError(
                GeneralPositionReport(False, hit[0], tuple(hit[1:])))
        self.points = pts
        self._engine = eng
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return len(self.points)

    def edges(self) -> list[EdgeId]:
        n = self.n
        return [(u, v) for u in range(n) for v in range(u + 1, n)]

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        if u == v or v >= self.n or u < 0:
            raise ValueError(f"not an edge of K_{self.n}: ({u}, {v})")
        return u * (2 * self.n - u - 1) // 2 + (v - u - 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Drawing) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Drawing(n={self.n})"


def affine_image(d: Drawing, a, b, c, e, tx=0, ty=0) -> Drawing:
    """Apply the exact affine map (x, y) -> (a x + b y + tx, c x + e y + ty)."""
    a, b, c, e = Fraction(a), Fraction(b), Fraction(c), Fraction(e)
    tx, ty = Fraction(tx), Fraction(ty)
    if a * e - b * c == 0:
        raise ValueError("affine map must be invertible")
    return Drawing(
        Point(a * p.x + b * p.y + tx, c * p.x + e * p.y + ty) for p in d.points)
