import pytest
from hypothesis import given, strategies as st

from geow.corpus import recipes
from geow.dsl import ParseError, format_recipe, parse, parse_file
from geow.dsl.syntax import Arg, Assert, Attr, Call, Form, Frac, Int, Let, Name, Recipe, Str

ids = st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,6}", fullmatch=True).filter(
    lambda s: s not in ("let", "assert", "by"))


def exprs():
    leaf = st.one_of(
        ids.map(Name), st.integers(-50, 50).map(Int),
        st.tuples(st.integers(-9, 9), st.integers(1, 9)).map(lambda t: Frac(*t)),
        st.from_regex(r"[a-z .]{0,8}", fullmatch=True).map(Str),
        st.tuples(st.integers(0, 99), st.integers(0, 99)).map(lambda t: Form(*t)),
    )

    def extend(inner):
        args = st.lists(st.tuples(st.one_of(st.none(), ids), inner).map(lambda t: Arg(*t)), max_size=3)
        return st.one_of(
            st.tuples(ids, args).map(lambda t: Call(t[0], tuple(t[1]))),
            st.tuples(inner.filter(lambda e: isinstance(e, (Name, Call, Attr))), ids).map(lambda t: Attr(*t)),
        )
    return st.recursive(leaf, extend, max_leaves=8)


statements = st.one_of(
    st.tuples(ids, exprs()).map(lambda t: Let(*t)),
    st.tuples(ids, st.lists(exprs().map(lambda e: Arg(None, e)), max_size=3),
              st.one_of(st.none(), ids, st.just("two words"))).map(
        lambda t: Assert(Call(t[0], tuple(t[1])), t[2])),
)


@given(st.lists(statements, max_size=6))
def test_print_then_parse_is_identity(stmts):
    r = Recipe(tuple(stmts))
    text = format_recipe(r)
    assert parse(text) == r
    assert format_recipe(parse(text)) == text


@pytest.mark.parametrize("path", recipes(), ids=lambda p: p.name)
def test_corpus_round_trip(path):
    r = parse_file(path)
    assert parse(format_recipe(r)) == r


def test_recipe_shapes():
    r = parse("let W = cover(hesse, phi_paper)")
    assert r.statements == (Let("W", Call("cover", (Arg(None, Name("hesse")), Arg(None, Name("phi_paper"))))),)
    assert len(parse_file([p for p in recipes() if p.name == "M_0_9.gw"][0])) == 7


def test_projection_chains_and_literals():
    r = parse("let x = f(a.b.c, k=-2, c=1/3)\nassert homeo(Y, 61 CP2 # 49 mCP2) by van_kampen\n")
    let, check = r.statements
    assert let.expr.args[0].value == Attr(Attr(Name("a"), "b"), "c")
    assert let.expr.args[1] == Arg("k", Int(-2))
    assert let.expr.args[2] == Arg("c", Frac(1, 3))
    assert check.check.args[1].value == Form(61, 49)
    assert check.tag == "van_kampen"


def test_comments_and_positions():
    r = parse("// header\n\nlet A = X_gg2(1) // trailing\n  assert symplectic(A)\n")
    assert (r.statements[0].line, r.statements[1].line, r.statements[1].col) == (3, 4, 3)


@pytest.mark.parametrize("src,line,col,expected", [
    ("let W = cover(hesse, phi_paper", 1, 31, {"')'", "','"}),
    ("let W = cover(hesse phi)", 1, 21, {"')'", "','"}),
    ("let = 3", 1, 5, {"ID"}),
    ("assert homeo(Y, 3 CP2 # 4 CP2)", 1, 27, {"'mCP2'"}),
    ("frobnicate", 1, 1, {"'assert'", "'let'"}),
    ("let x = f(1/0)", 1, 11, {"nonzero denominator"}),
])
def test_positioned_errors(src, line, col, expected):
    with pytest.raises(ParseError) as err:
        parse(src)
    assert (err.value.line, err.value.col) == (line, col)
    assert set(err.value.expected) == expected


def test_bad_character():
    with pytest.raises(ParseError) as err:
        parse("let x = a\nlet y = $")
    assert (err.value.line, err.value.col) == (2, 9)
