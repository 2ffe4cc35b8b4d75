import pytest

from crossprof.analytic import max_edge_crossings
from crossprof.profile import e_k
from crossprof.search import (
    extremal_sweep,
    find_zero_ek,
    zero_candidates,
)


def test_find_zero_ek_convex_case():
    r = find_zero_ek(10, 2)
    assert r.family.tier == "convex"
    assert e_k(r.witness, 2) == 0


def test_find_zero_ek_near_convex_case():
    # 7 is a convex-position count for ten points, so the convex drawing is
    # screened out and the one-point-off family wins
    r = find_zero_ek(10, 7)
    assert r.family.tier == "near-convex"
    assert e_k(r.witness, 7) == 0
    assert any(c.tier == "convex" for c in r.screened_out)


def test_find_zero_ek_ladder_case():
    # 12 is attainable both for 10 and for 9 points in convex position
    r = find_zero_ek(10, 12)
    assert r.family.tier == "two-arc-ladder"
    assert e_k(r.witness, 12) == 0


def test_find_zero_ek_trivial_when_k_too_large():
    k = max_edge_crossings(9) + 3
    r = find_zero_ek(9, k)
    assert r.family.tier == "convex"


def test_find_zero_ek_rejects_bad_k():
    with pytest.raises(ValueError):
        find_zero_ek(10, 0)


def test_witness_recertifies():
    for (n, k) in [(11, 3), (12, 9), (14, 12), (16, 24)]:
        r = find_zero_ek(n, k)
        assert e_k(r.witness, k) == 0
        assert r.witness.n == n


def test_audit_mode_screening_sound():
    # every analytically rejected family must really contain a k-crossing
    # edge; audit mode realizes them all and checks
    for (n, k) in [(9, 4), (10, 7), (11, 6)]:
        r = find_zero_ek(n, k, audit=True)
        assert e_k(r.witness, k) == 0


def test_candidate_tiers_ordered():
    cands = zero_candidates(40, 5)
    tiers = [c.tier for c in cands]
    assert tiers[0] == "convex" and tiers[1] == "near-convex"
    assert "two-arc-ladder" in tiers and "balanced-grid" in tiers
    assert tiers.index("two-arc-ladder") < tiers.index("balanced-grid")


def test_extremal_sweep_cells():
    rep = extremal_sweep(["ek-linear"], [12], [19], ["designated", "e_k"])
    assert rep.value("ek-linear", 12, 19, "designated") == 3
    assert rep.value("ek-linear", 12, 19, "e_k") >= 3
    rep = extremal_sweep(["max-sk"], [33], [4], ["s_k"])
    assert rep.value("max-sk", 33, 4, "s_k") >= 75
    rep = extremal_sweep([], [], [], [])
    assert rep.cells == {} and not rep.incomplete


def test_extremal_sweep_flags_bad_cells():
    rep = extremal_sweep(["max-sk"], [10], [300], ["s_k"])
    assert rep.incomplete
