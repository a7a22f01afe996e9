import pytest
from hypothesis import given, strategies as st

from geow.groups import (CATALOG, CosetError, coset_enumeration, is_normal, parse_presentation, parse_word,
                         quotient_identify)


@pytest.mark.parametrize("name,index,tag", [("Z3", 3, "Z3"), ("Klein4", 4, "Z2xZ2"), ("S3", 6, "S3"), ("Q8", 8, "Q8")])
def test_catalog_orders(name, index, tag):
    pres, order = CATALOG[name]
    t = coset_enumeration(pres)
    assert t.index == order == index
    assert is_normal(t)
    assert quotient_identify(t) == tag


def test_z4_distinguished_from_klein_four():
    z4 = parse_presentation("gens: a\nrel: a^4\n")
    assert quotient_identify(coset_enumeration(z4)) == "Z4"


def test_non_normal_subgroup():
    pres, _ = CATALOG["S3"]
    t = coset_enumeration(pres, [parse_word("b")])
    assert t.index == 3
    assert not is_normal(t)
    with pytest.raises(CosetError):
        quotient_identify(t)


def test_normal_subgroup_quotient():
    pres, _ = CATALOG["S3"]
    t = coset_enumeration(pres, [parse_word("a")])
    assert (t.index, is_normal(t), quotient_identify(t)) == (2, True, "Z2")


def test_overflow_is_reported():
    free = parse_presentation("gens: a b\n")
    t = coset_enumeration(free, [], max_cosets=50)
    assert not t.complete
    with pytest.raises(CosetError):
        t.index


def test_env_override(monkeypatch):
    monkeypatch.setenv("GEOW_MAX_COSETS", "7")
    t = coset_enumeration(CATALOG["Q8"][0])
    assert t.status == "Overflowed" and t.bound == 7


def _conjugation_closed(t, gens, subgroup):
    # every conjugate of a subgroup generator fixes the base coset
    for h in subgroup:
        for g in gens:
            for conj in (g.inverse() * h * g, g * h * g.inverse()):
                if t.act(0, conj) != 0:
                    return False
    return True


@given(st.sampled_from(sorted(CATALOG)), st.lists(st.sampled_from(["a", "b", "a^2", "a b", "b a^-1"]), max_size=2))
def test_normality_matches_conjugation_closure(name, words):
    pres, order = CATALOG[name]
    words = [w for w in words if parse_word(w).symbols() <= set(pres.generators)]
    subgroup = [parse_word(w) for w in words]
    t = coset_enumeration(pres, subgroup)
    assert order % t.index == 0
    gens = [parse_word(g) for g in pres.generators]
    assert is_normal(t) == _conjugation_closed(t, gens, subgroup)


@given(st.sampled_from(sorted(CATALOG)))
def test_table_is_a_permutation_action(name):
    pres, _ = CATALOG[name]
    t = coset_enumeration(pres, [parse_word(pres.generators[0])])
    for perm in t.permutations():
        assert sorted(perm) == list(range(t.index))
    for r in pres.relators:
        assert all(t.act(c, r) == c for c in range(t.index))
