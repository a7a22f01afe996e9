from geow.blocks import block
from geow.geography import decorations, geography_scan

INVENTORY = ["Mtilde", ("X_gg2", 1), ("X_gg2", 2), ("X_gg1", 1), ("X_gg1", 2)]


def _forms(results):
    return {(r.e, r.sigma, str(r.form)) for r in results}


def test_scan_finds_the_chi_nine_examples():
    zero = geography_scan(INVENTORY, 0, (9, 9))
    assert (36, 0, "17 CP2 # 17 mCP2") in _forms(zero)
    assert any("Mtilde[node(E)]" in r.recipe and "X_gg2(1)[resolve(S,S1,T)]" in r.recipe for r in zero)
    one = geography_scan(INVENTORY, 1, (9, 10))
    assert {(35, 1, "17 CP2 # 16 mCP2"), (39, 1, "19 CP2 # 18 mCP2")} <= _forms(one)


def test_scan_is_sorted_and_repeatable():
    a = geography_scan(INVENTORY, 1, (8, 11))
    b = geography_scan(list(reversed(INVENTORY)), 1, (8, 11))
    assert [r.recipe for r in a] == sorted(r.recipe for r in a)
    assert [r.line() for r in a] == [r.line() for r in b]


def test_every_hit_has_the_requested_numbers():
    for r in geography_scan(INVENTORY, 2, (8, 12)):
        assert r.sigma == 2 and 8 <= r.chi_h <= 12
        assert r.e + r.sigma == 4 * r.chi_h


def test_node_decoration():
    decs = decorations("Mtilde", block("Mtilde"), max_blowups=0)
    node = [d for d in decs if d.steps == "node(E)"]
    assert len(node) == 1 and (node[0].genus, node[0].square) == (5, -2)
    assert (node[0].e, node[0].sigma) == (13, 3)
