"""Canonical text for recipes; ``parse(format_recipe(r)) == r``."""
from __future__ import annotations

import re

from .syntax import Arg, Assert, Attr, Call, Expr, Form, Frac, Int, Let, Name, Recipe, Str

_BARE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def format_expr(e: Expr) -> str:
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Int):
        return str(e.value)
    if isinstance(e, Frac):
        return f"{e.num}/{e.den}"
    if isinstance(e, Str):
        return f'"{e.value}"'
    if isinstance(e, Form):
        return f"{e.p} CP2 # {e.q} mCP2"
    if isinstance(e, Attr):
        return f"{format_expr(e.base)}.{e.attr}"
    if isinstance(e, Call):
        return f"{e.func}({', '.join(_arg(a) for a in e.args)})"
    raise TypeError(f"not an expression: {e!r}")


def _arg(a: Arg) -> str:
    return format_expr(a.value) if a.key is None else f"{a.key}={format_expr(a.value)}"


def format_statement(s) -> str:
    if isinstance(s, Let):
        return f"let {s.name} = {format_expr(s.expr)}"
    if isinstance(s, Assert):
        text = f"assert {format_expr(s.check)}"
        if s.tag is not None:
            text += f" by {s.tag}" if _BARE.match(s.tag) and s.tag not in ("let", "assert", "by") \
                else f' by "{s.tag}"'
        return text
    raise TypeError(f"not a statement: {s!r}")


def format_recipe(r: Recipe) -> str:
    return "".join(format_statement(s) + "\n" for s in r.statements)
