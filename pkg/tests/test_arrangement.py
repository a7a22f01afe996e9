import pytest
from hypothesis import given, strategies as st

from geow.arrangement import (BUILTIN_COVERS, ArrangementError, CoverData, CoverError,
                              arrangement_text, canonical_and_chern, complete_cover, cover_manifold, cover_text,
                              divisor_model, hesse, lift_curve, parse_arrangement, parse_cover, search_covers,
                              sigma9_package, sweep, validate_cover)
from geow.invariants import BMY

D = divisor_model(hesse())
PHI_PAPER = BUILTIN_COVERS["phi_paper"]
PHI_VALID = BUILTIN_COVERS["phi_valid"]


def test_hesse_combinatorics():
    a = hesse()
    assert len(a.points) == 9 and len(a.lines) == 12
    assert all(len(a.points_on(l)) == 3 for l in a.lines)
    assert all(a.multiplicity(p) == 4 for p in a.points)
    assert len(a.residual_pairs()) == 12
    assert ("l1", "l2") in a.residual_pairs() and ("l10", "l11") in a.residual_pairs()


def test_arrangement_rejects_two_common_points():
    with pytest.raises(ArrangementError):
        parse_arrangement("point p q\nline a b\non p a b\non q a b\n")


def test_arrangement_text_round_trip():
    a = hesse()
    b = parse_arrangement(arrangement_text(a), "hesse")
    assert (b.points, b.lines, b.incidence) == (a.points, a.lines, a.incidence)


def test_divisor_model_counts():
    assert D.h1().factors == (0,) * 11
    assert len(D.nodes) == 48
    assert (D.euler_T(), D.euler_complement(), D.euler_D_minus_nodes()) == (12, 18, -54)


def test_exceptional_values_follow_from_lines():
    full, _ = complete_cover(D, PHI_VALID)
    c = PHI_VALID
    for p in hesse().points:
        total = (0, 0)
        for l in hesse().lines_through(p):
            total = c.add(total, c.phi[l])
        assert full.phi["E" + p[1:]] == total


def test_builtin_assignment_fails_two_checks():
    report = validate_cover(D, PHI_PAPER)
    assert [c.name for c in report.failed()] == ["relation", "nodes"]
    assert set(report.check("nodes").failures) == {
        "l1 x l2: (1, 0), (1, 0) dependent", "l1 x l3: (1, 0), (1, 0) dependent",
        "l2 x l3: (1, 0), (1, 0) dependent", "l10 x l11: (1, 1), (1, 1) dependent"}
    with pytest.raises(CoverError):
        canonical_and_chern(D, PHI_PAPER)


def test_valid_assignment_and_search_agree():
    assert validate_cover(D, PHI_VALID).ok
    found = search_covers(D, limit=1)
    assert found and found[0].phi == PHI_VALID.phi


def test_sweep_is_deterministic():
    assert sweep(D, samples=200, seed=3) == sweep(D, samples=200, seed=3)


@pytest.mark.parametrize("name", sorted(BUILTIN_COVERS))
def test_chern_numbers(name):
    inv = canonical_and_chern(D, BUILTIN_COVERS[name], require_valid=False)
    assert (inv.K2, inv.e, inv.chi_h, inv.sigma, inv.bmy) == (144, 48, 16, 16, BMY.ON_LINE)
    assert inv.audit["strata sum"].endswith("= 48")
    assert inv.audit["grouped sum"] == "9*12 - 6*42 + 4*48 = 48"


def test_trivial_group_gives_the_base():
    trivial = CoverData(3, 0, {})
    inv = canonical_and_chern(D, trivial)
    assert (inv.K2, inv.e, inv.chi_h) == (0, 12, 1)


@pytest.mark.parametrize("curve,genus,kc,sq", [("l1", 3, 6, -2), ("l12", 3, 6, -2), ("E1", 2, 3, -1),
                                               ("E9", 2, 3, -1), ("generic:p1", 7, 12, 0)])
def test_lifts(curve, genus, kc, sq):
    lift = lift_curve(D, PHI_VALID, curve)
    assert (lift.genus, lift.KC, lift.square) == (genus, kc, sq)


def test_generic_line_audit_reports_connected_preimage():
    lift = lift_curve(D, PHI_VALID, "generic:p1")
    assert lift.audit["component degree"] == 9
    assert lift.audit["genus at component degree"] == 19


def test_lifts_carry_connectedness_assumption():
    for curve in ("l1", "E1", "generic:p1"):
        assert lift_curve(D, PHI_VALID, curve).audit["assumption"] == "connected lift of degree 3"


@given(st.sampled_from(list(D.components) + ["generic:p%d" % i for i in range(1, 10)]))
def test_adjunction_closes_for_every_lift(curve):
    lift = lift_curve(D, PHI_VALID, curve)
    assert 2 * lift.genus - 2 == lift.KC + lift.square


def test_cover_manifold_and_sigma9():
    W = cover_manifold(D, PHI_VALID)
    assert (W.e, W.sigma, W.c1sq, W.chi_h) == (48, 16, 144, 16)
    pkg = sigma9_package(D, PHI_VALID)
    assert pkg.resolved.surface("Sigma9").square == 1
    s = pkg.blown_up.surface("Sigma9")
    assert (s.genus, s.square, s.pi1_cokernel) == (9, 0, "1")
    assert pkg.steps[:3] == ("resolve E1: genus 5, square -1", "resolve E4: genus 7, square 0",
                             "resolve E7: genus 9, square 1")


def test_cover_text_round_trip():
    for c in BUILTIN_COVERS.values():
        back = parse_cover(cover_text(c), c.name)
        assert (back.n, back.k, back.phi) == (c.n, c.k, c.phi)
    assert parse_cover("group Z3^2\nphi l1 = (4, -1)\n").phi == {"l1": (1, 2)}
    with pytest.raises(CoverError):
        parse_cover("group Z3^2\nphi l1 = (1, 2, 0)\n")
