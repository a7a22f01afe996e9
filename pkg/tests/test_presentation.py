import pytest

from geow.groups import (AbelianInvariants, GroupPresentation, abelianization, commutator_pattern_check,
                         curve_relation, luttinger_relations_yn, luttinger_relations_yn1, parse_presentation,
                         parse_word, surface_group)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_yn_relations_kill_h1(n):
    assert abelianization(luttinger_relations_yn(n)).is_trivial


@pytest.mark.parametrize("m", [1, 2, 5])
def test_yn_relations_any_multiplicity(m):
    assert abelianization(luttinger_relations_yn(3, m)).is_trivial


def test_yn1_relations_leave_last_handle():
    # a_n, b_n are not hit by any surgery relation
    h1 = abelianization(luttinger_relations_yn1(3, 2))
    assert (h1.rank, h1.torsion) == (2, ())


@pytest.mark.parametrize("g", [1, 2, 4, 7])
def test_surface_group_h1(g):
    h1 = abelianization(surface_group(g))
    assert h1.factors == (0,) * (2 * g)
    assert str(abelianization(surface_group(4))) == "Z^8"


def test_abelian_invariants_display():
    assert str(AbelianInvariants((2, 6, 0))) == "Z/2 + Z/6 + Z"
    assert str(AbelianInvariants(())) == "0"
    with pytest.raises(ValueError):
        AbelianInvariants((4, 6))


def test_torsion_from_presentation():
    p = parse_presentation("gens: a b\nrel: a^2\nrel: b^3\nrel: [a, b]\n")
    assert abelianization(p).factors == (6,)


def test_curve_relation_has_zero_exponent_sums():
    w = curve_relation()
    assert commutator_pattern_check(w)
    assert all(v == 0 for v in w.exponent_sums().values())


def test_commutator_pattern_literal():
    assert commutator_pattern_check(parse_word("[a, b] [c, d]"), genus=2, literal=True)
    assert not commutator_pattern_check(parse_word("a b a^-1"))
    assert not commutator_pattern_check(parse_word("[a, b] [a, c]"), literal=True)


def test_presentation_params_and_comments():
    text = "# comment\nparam: m = 3\ngens: x\nrel: x^m  # cube\n"
    assert abelianization(parse_presentation(text)).factors == (3,)
    assert abelianization(parse_presentation(text, {"m": 4})).factors == (4,)


def test_presentation_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        GroupPresentation(("a",), (parse_word("b"),))
