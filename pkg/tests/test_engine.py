"""The float-filtered sign engine must agree bit for bit with exact
arithmetic, including adversarial huge-coordinate near-collinear inputs."""

import random
from fractions import Fraction

from crossprof import _engine
from crossprof.geom import Drawing, point
from crossprof.profile import crossing_counts

from naive_oracle import naive_crossing_counts


def _exact_sign(xs, ys, p, q, r):
    det = (xs[q] - xs[p]) * (ys[r] - ys[p]) - (ys[q] - ys[p]) * (xs[r] - xs[p])
    return (det > 0) - (det < 0)


def test_filter_on_huge_nearly_collinear():
    rng = random.Random(5)
    big = 10 ** 60
    xs, ys = [], []
    for t in range(12):
        # points close to the line y = x + big, off by tiny amounts
        x = big + rng.randint(-100, 100)
        xs.append(x)
        ys.append(x + big + rng.randint(-1, 1))
    eng = _engine.SignEngine(xs, ys)
    t = eng.tensor()
    n = len(xs)
    for p in range(n):
        for q in range(n):
            for r in range(n):
                want = 0 if len({p, q, r}) < 3 else _exact_sign(xs, ys, p, q, r)
                assert t[p, q, r] == want


def test_filter_on_shifted_copies():
    # two identical tiny clusters far apart: the regime that kills naive
    # float differencing
    rng = random.Random(9)
    base = [(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(6)]
    shift = 10 ** 25
    xs = [x for x, _ in base] + [x + shift for x, _ in base]
    ys = [y for _, y in base] + [y + shift ** 2 for _, y in base]
    eng = _engine.SignEngine(xs, ys)
    t = eng.tensor()
    for p in range(len(xs)):
        for q in range(len(xs)):
            for r in range(len(xs)):
                want = 0 if len({p, q, r}) < 3 else _exact_sign(xs, ys, p, q, r)
                assert t[p, q, r] == want


def test_counts_match_naive_on_random(rng):
    from conftest import random_drawing
    for _ in range(12):
        d = random_drawing(rng, rng.randint(4, 9))
        got = list(crossing_counts(d).counts)
        want = naive_crossing_counts([(p.x, p.y) for p in d.points])
        assert got == want


def test_counts_match_naive_on_tight_grids(rng):
    # small coordinate boxes put many determinants near the filter threshold
    from crossprof.geom import Point, validate_general_position
    trials = 0
    while trials < 40:
        n = rng.randint(4, 10)
        pts = [Point(Fraction(rng.randint(-6, 6)), Fraction(rng.randint(-6, 6)))
               for _ in range(n)]
        if not validate_general_position(pts):
            continue
        d = Drawing(pts)
        assert list(crossing_counts(d).counts) == naive_crossing_counts(
            [(p.x, p.y) for p in pts])
        trials += 1


def test_scaled_int_coords_preserves_order_type():
    pts = [point("1/3", "2/7"), point(0, 1), point("5/2", "-3/14")]
    xs, ys = _engine.scaled_int_coords([p.x for p in pts], [p.y for p in pts])
    assert all(isinstance(v, int) for v in xs + ys)
    d1 = Drawing(pts)
    d2 = Drawing([point(x, y) for x, y in zip(xs, ys)])
    assert crossing_counts(d1).counts == crossing_counts(d2).counts
