from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from geow import blocks
from geow.invariants import (BMY, ClassificationRefused, InvariantError, Kind, ManifoldClass, Minimal, Pi1, Spin,
                             Surface, blow_up, blow_up_node, bmy_check, cite, classify_homeo,
                             complement_simply_connected, connected_sum, knot_surgery, luttinger, resolve,
                             standard_form, symplectic_sum, torus_surgery)

TORI = (
    Surface("L", 1, 0, Kind.LAGRANGIAN),
    Surface("P", 1, 0, Kind.LAGRANGIAN, tags=frozenset({"perturbable"})),
    Surface("T", 1, 0),
)


@st.composite
def manifolds(draw, pi1=None):
    e = draw(st.integers(-40, 200))
    sigma = draw(st.integers(-60, 60))
    return ManifoldClass("A", e, sigma, draw(st.sampled_from([0, None])),
                         pi1 or draw(st.sampled_from([Pi1.TRIVIAL, Pi1.UNKNOWN])),
                         symplectic=draw(st.booleans()), surfaces=TORI)


@st.composite
def classifiable(draw):
    e = draw(st.integers(2, 300))
    sigma = draw(st.integers(-(e - 2), e - 2).filter(lambda s: (e - s) % 2 == 0))
    return ManifoldClass("A", e, sigma, 0, Pi1.TRIVIAL, spin=Spin.NONSPIN, symplectic=True)


@settings(max_examples=1000)
@given(manifolds(), st.integers(1, 20), st.sampled_from([1, -1]), st.integers(-9, 9).filter(bool))
def test_torus_surgeries_preserve_e_and_sigma(a, n, sign, m):
    for out in (luttinger(a, "L", Fraction(sign, n)), torus_surgery(a, "L", m), torus_surgery(a, "T", m),
                knot_surgery(a, "P", "K"), knot_surgery(a, "T", "K", fibered=True)):
        assert (out.e, out.sigma) == (a.e, a.sigma)


@settings(max_examples=1000)
@given(st.integers(-50, 200), st.integers(-40, 40), st.integers(-50, 200), st.integers(-40, 40),
       st.integers(0, 12), st.integers(-10, 10))
def test_symplectic_sum_chi_formula_matches_e_formula(ea, sa, eb, sb, g, s):
    a = ManifoldClass("a", ea, sa, symplectic=True, surfaces=(Surface("F", g, s),))
    b = ManifoldClass("b", eb, sb, symplectic=True, surfaces=(Surface("G", g, -s),))
    out = symplectic_sum(a, "F", b, "G")
    assert out.e == ea + eb + 4 * g - 4
    assert out.sigma == sa + sb
    if a.chi_integral and b.chi_integral:
        assert out.chi_integral
        assert out.chi_h == a.chi_h + b.chi_h + (g - 1)


@given(classifiable(), st.integers(1, 5))
def test_blow_up_raises_q_only(a, k):
    before = classify_homeo(a)
    after = classify_homeo(blow_up(a, k))
    assert (after.p, after.q) == (before.p, before.q + k)


@given(classifiable(), st.text("abcxyz", min_size=1, max_size=5))
def test_standard_form_ignores_provenance(a, tag):
    other = ManifoldClass("B", a.e, a.sigma, 0, Pi1.TRIVIAL, spin=Spin.NONSPIN, provenance=(tag,))
    assert classify_homeo(a) == classify_homeo(other) == standard_form(a.e, a.sigma)


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9),
       st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_resolve_associative_on_invariants(g1, g2, g3, q1, q2, q3):
    surfaces = (Surface("A", g1, q1, intersections=(("B", 1), ("C", 1))),
                Surface("B", g2, q2, intersections=(("A", 1), ("C", 1))),
                Surface("C", g3, q3, intersections=(("A", 1), ("B", 1))))
    X = ManifoldClass("X", 10, 0, surfaces=surfaces)
    left, r = resolve(X, "A", "B")
    left, r = resolve(left, r.name, "C", r.meets("C"))
    right, s = resolve(X, "B", "C")
    right, s = resolve(right, s.name, "A", s.meets("A"))
    assert (r.genus, r.square) == (s.genus, s.square) == (g1 + g2 + g3 + 1, q1 + q2 + q3 + 6)


def test_partial_resolution_leaves_nodes():
    X = blocks.block("X_gg1", 1)
    Y, s = resolve(X, "S", "R", 1)
    assert (s.genus, s.square, s.nodes) == (4, 1, 1)


def test_node_route_gives_genus_five_square_minus_two():
    M, transform, sphere = blow_up_node(blocks.block("Mtilde"), "E", sphere="e1")
    assert (transform.genus, transform.square, transform.nodes) == (4, -5, 0)
    assert transform.meets("e1") == 2
    M, s = resolve(M, "E", "e1", 2, name="Sigma5")
    assert (s.genus, s.square) == (5, -2)
    assert s.pi1_cokernel == "1"
    assert (M.e, M.sigma) == (13, 3)


def test_node_route_keeps_z2_image():
    M, _, _ = blow_up_node(blocks.block("M2"), "E", sphere="e1")
    _, s = resolve(M, "E", "e1", 2)
    assert s.pi1_cokernel == "Z2"


def test_blow_up_node_needs_a_node():
    with pytest.raises(InvariantError):
        blow_up_node(blocks.block("X_gg2", 1), "S")


def test_connected_sum_formula_and_names():
    a, b = blocks.block("CP2"), blocks.block("CP2")
    c = connected_sum(a, b)
    assert (c.e, c.sigma, c.pi1) == (4, 2, Pi1.TRIVIAL)
    assert sorted(c.surface_names()) == ["H", "H_2"]
    assert not c.symplectic


def test_blow_up_on_surface():
    X = blow_up(blocks.block("X_gg2", 2), 2, on=[("T", 1)])
    assert X.surface("T").square == -1
    assert X.surface("e1").meets("T") == 1
    assert not X.surface("e2").intersections
    assert X.spin is Spin.NONSPIN and X.minimal is Minimal.UNKNOWN
    with pytest.raises(InvariantError):
        blow_up(X, 1, on=[("T", 2)])


def test_sum_rejects_mismatch():
    X = blocks.block("X_gg2", 2)
    with pytest.raises(InvariantError):
        symplectic_sum(X, "S", X, "T")
    with pytest.raises(InvariantError):
        symplectic_sum(X, "S1", X, "S2")


def test_pi1_rule_needs_both_halves():
    A = blocks.block("E_n_K", 9, 10)
    B = blocks.block("FPP_H", 3)
    out = symplectic_sum(A, "S", B, "H")
    assert out.pi1 is Pi1.TRIVIAL
    weak = ManifoldClass("C", 3, 1, symplectic=True, surfaces=(Surface("H", 10, 9),))
    assert symplectic_sum(A, "S", weak, "H").pi1 is Pi1.UNKNOWN


def test_sphere_meeting_once_gives_simply_connected_complement():
    X = blow_up(resolve(blocks.block("X_gg2", 1), "S", "T")[0], 1, on=[("S", 1)])
    assert complement_simply_connected(X, "S") == "sphere e1 meets it once"
    assert complement_simply_connected(blocks.block("X_gg2", 1), "S") is None
    # the rule needs a simply connected ambient
    T = blow_up(blocks.block("T4"), 1, on=[("A", 1)])
    assert complement_simply_connected(T, "A") is None


def test_matching_constraint_for_knot_surgered_elliptic_surfaces():
    for p in range(3, 11):
        H = blocks.block("FPP_H", p)
        g = H.surface("H").genus
        out = symplectic_sum(H, "H", blocks.block("E_n_K", p * p, g), "S")
        assert out.e == 3 + 12 * p * p + 4 * g - 4
        with pytest.raises(InvariantError):
            symplectic_sum(H, "H", blocks.block("E_n_K", p * p + 1, g), "S")


def test_spin_rules():
    with pytest.raises(InvariantError):
        ManifoldClass("bad", 4, 2, spin=Spin.SPIN)
    assert ManifoldClass("odd", 4, 3).spin is Spin.NONSPIN
    assert blow_up(blocks.block("S2xS2"), 1).spin is Spin.NONSPIN


def test_classification_refusals():
    with pytest.raises(ClassificationRefused):
        classify_homeo(blocks.block("S2xS2"))
    with pytest.raises(ClassificationRefused):
        classify_homeo(ManifoldClass("x", 10, 0, pi1=Pi1.Z2, spin=Spin.NONSPIN))
    with pytest.raises(ClassificationRefused):
        standard_form(5, 0)


def test_cite_cannot_contradict():
    X = blocks.block("CP2")
    with pytest.raises(InvariantError):
        cite(X, "tag", pi1=Pi1.Z2)
    Y = cite(ManifoldClass("y", 10, 2), "vk", pi1=Pi1.TRIVIAL)
    assert Y.pi1 is Pi1.TRIVIAL and Y.b1 == 0 and Y.provenance[-1].startswith("cite[vk]")


def test_chi_non_integral_is_reported():
    X = blocks.block("mCP2")
    assert not X.chi_integral and X.chi_h is None
    assert "non-integral" in X.summary()
    with pytest.raises(InvariantError):
        bmy_check(X)


def test_bmy_statuses():
    assert bmy_check(blocks.block("M_n", 3)) is BMY.ON_LINE
    assert bmy_check(blocks.block("X_gg2", 3)) is BMY.BELOW
    assert bmy_check(ManifoldClass("v", 3, 5)) is BMY.VIOLATED
