"""Tokens and syntax tree for recipe files."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union


class ParseError(ValueError):
    """Syntax error at a 1-based ``line:col`` with the set of expected tokens."""

    def __init__(self, line: int, col: int, expected: tuple[str, ...], found: str):
        self.line, self.col, self.expected, self.found = line, col, tuple(sorted(set(expected))), found
        super().__init__(f"{line}:{col}: expected {' or '.join(self.expected)}, found {found}")


@dataclass(frozen=True)
class Token:
    kind: str  # ID, INT, STRING, EOF or the punctuation itself
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>//[^\n]*)
  | (?P<ID>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<INT>[0-9]+)
  | (?P<STRING>"[^"\n]*")
  | (?P<punct>[()=,.\#/\-])
""", re.VERBOSE)


def tokenize(source: str) -> list[Token]:
    out: list[Token] = []
    line, start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        col = pos - start + 1
        if m is None:
            raise ParseError(line, col, ("token",), repr(source[pos]))
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind == "punct":
            out.append(Token(m.group(), m.group(), line, col))
        elif kind in ("ID", "INT", "STRING"):
            out.append(Token(kind, m.group(), line, col))
        pos = m.end()
    if out:
        # report running out of input just past the last token
        last = out[-1]
        out.append(Token("EOF", "", last.line, last.col + len(last.text)))
    else:
        out.append(Token("EOF", "", line, pos - start + 1))
    return out


# -- syntax tree ----------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    id: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Int:
    value: int
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Frac:
    num: int
    den: int
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Str:
    value: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Form:
    """``p CP2 # q mCP2`` literal."""
    p: int
    q: int
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Attr:
    base: "Expr"
    attr: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Arg:
    key: str | None
    value: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Arg, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def positional(self) -> list["Expr"]:
        return [a.value for a in self.args if a.key is None]

    def keywords(self) -> dict[str, "Expr"]:
        return {a.key: a.value for a in self.args if a.key is not None}


Expr = Union[Name, Int, Frac, Str, Form, Attr, Call]


@dataclass(frozen=True)
class Let:
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assert:
    check: Call
    tag: str | None = None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


Statement = Union[Let, Assert]


@dataclass(frozen=True)
class Recipe:
    statements: tuple[Statement, ...]
    name: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.statements)
