"""Finding drawings with no edge crossed exactly k times, plus the sweep
driver behind the empirical acceptance experiments.

The search walks the facing-arc families in a fixed tier order, rejects
candidates by exact closed-form screening, and certifies the first survivor
with the brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .analytic import (
    arc_crossing_value_set,
    min_sk_bound,
    split_arc_sizes,
)
from .constructions import (
    gen_convex,
    gen_e1_linear,
    gen_ek_linear,
    gen_grid,
    gen_max_e0,
    gen_max_sk,
    gen_nested_triangles,
    gen_three_arc,
    gen_two_arc,
)
from .geom import Drawing
from .profile import (
    crossing_counts,
    e_k,
    k_edge_count,
    primed_profile,
    s_k,
)


@dataclass(frozen=True)
class Candidate:
    tier: str
    arcs: tuple[int, int, int]

    def describe(self) -> str:
        a, b, c = self.arcs
        if c == 0:
            return f"{self.tier}: two arcs ({a}, {b})"
        return f"{self.tier}: three arcs ({a}, {b}, {c})"


@dataclass
class ZeroSearchResult:
    n: int
    k: int
    witness: Drawing
    family: Candidate
    screened_out: list[Candidate] = field(default_factory=list)
    oracle_rejected: list[Candidate] = field(default_factory=list)


class ZeroSearchError(RuntimeError):
    def __init__(self, n, k, attempts):
        self.n, self.k, self.attempts = n, k, attempts
        lines = ", ".join(c.describe() for c in attempts)
        super().__init__(f"no e_{k}=0 witness among candidates for n={n}: {lines}")


def zero_candidates(n: int, k: int) -> list[Candidate]:
    """The candidate families in the tier order used by the search."""
    out = [Candidate("convex", (0, n, 0)), Candidate("near-convex", (1, n - 1, 0))]
    ladder_top = math.ceil(n ** 0.2)
    for s in range(2, ladder_top + 1):
        out.append(Candidate("two-arc-ladder", (s, n - s, 0)))
    lo = max(1, math.ceil(n / 100))
    hi = max(lo + 1, math.ceil(n / 50))
    for i in range(lo, hi + 1):
        for j in range(i, hi + 1):
            out.append(Candidate("balanced-grid", split_arc_sizes(n, i, j)))
    return out


def _realize(cand: Candidate) -> Drawing:
    a, b, c = cand.arcs
    if c == 0:
        if a == 0:
            return gen_convex(b)
        return gen_two_arc(a, b)
    return gen_three_arc(a, b, c)


def find_zero_ek(n: int, k: int, *, audit: bool = False) -> ZeroSearchResult:
    """A drawing of K_n with e_k = 0, found by screening the facing-arc
    families analytically and certifying the first survivor with the oracle.

    With audit=True, every analytically rejected family is realized anyway
    and must indeed contain an edge with exactly k crossings.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    screened: list[Candidate] = []
    rejected: list[Candidate] = []
    result: ZeroSearchResult | None = None
    for cand in zero_candidates(n, k):
        values = arc_crossing_value_set(*cand.arcs)
        if k in values:
            screened.append(cand)
            if audit:
                if e_k(_realize(cand), k) == 0:
                    raise AssertionError(
                        f"screen claimed e_{k}>0 but oracle found none: {cand}")
            continue
        witness = _realize(cand)
        if e_k(witness, k) != 0:
            rejected.append(cand)        # screening bug; keep searching
            continue
        result = ZeroSearchResult(n, k, witness, cand, screened, rejected)
        if not audit:
            return result
    if result is not None:
        return result
    raise ZeroSearchError(n, k, screened + rejected)


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepReport:
    cells: dict = field(default_factory=dict)
    fitted: dict = field(default_factory=dict)
    incomplete: list = field(default_factory=list)

    def value(self, family: str, n: int, k: int | None, metric: str):
        return self.cells[(family, n, k, metric)]


def _family_drawing(family: str, n: int, k: int | None):
    if family == "convex":
        return gen_convex(n), ()
    if family == "grid":
        return gen_grid(n), ()
    if family == "nested-triangles":
        return gen_nested_triangles(n, k), ()
    if family == "ek-linear":
        gd = gen_ek_linear(n, k)
        return gd.drawing, gd.designated
    if family == "e1-linear":
        gd = gen_e1_linear(n)
        return gd.drawing, gd.designated
    if family == "max-e0":
        gd = gen_max_e0(n)
        return gd.drawing, gd.designated
    if family == "max-sk":
        gd = gen_max_sk(n, k)
        return gd.drawing, gd.designated
    raise ValueError(f"unknown family {family!r}")


def _measure(d: Drawing, designated, metric: str, k: int | None):
    if metric == "e_k":
        return e_k(d, k)
    if metric == "s_k":
        return s_k(d, k)
    if metric == "e_0":
        return e_k(d, 0)
    if metric == "designated":
        return len(designated)
    if metric == "s_k_primed":
        return primed_profile(d).s_k(k)
    if metric == "k_edges":
        return k_edge_count(d, k)
    if metric == "total":
        return sum(crossing_counts(d).counts) // 2
    raise ValueError(f"unknown metric {metric!r}")


def extremal_sweep(families, ns, ks, metrics) -> SweepReport:
    """Deterministic grid of measurements, one oracle-certified drawing per
    (family, n, k) cell; failed cells are recorded and flagged."""
    report = SweepReport()
    for family in families:
        for n in ns:
            for k in ks or [None]:
                try:
                    d, designated = _family_drawing(family, n, k)
                except Exception as exc:
                    report.incomplete.append(((family, n, k), repr(exc)))
                    continue
                for metric in metrics:
                    try:
                        report.cells[(family, n, k, metric)] = _measure(
                            d, designated, metric, k)
                    except Exception as exc:
                        report.incomplete.append(((family, n, k, metric), repr(exc)))
    _fit_min_sk(report, families, ns, ks)
    return report


def _fit_min_sk(report: SweepReport, families, ns, ks) -> None:
    if "nested-triangles" not in families:
        return
    for n in ns:
        ratios = []
        for k in ks or []:
            cell = report.cells.get(("nested-triangles", n, k, "s_k"))
            if cell is None:
                continue
            value, regime = min_sk_bound(n, k)
            if value > 0:
                ratios.append(cell / value)
        if ratios:
            report.fitted[("nested-triangles", n)] = max(ratios)
