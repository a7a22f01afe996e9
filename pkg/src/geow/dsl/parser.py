"""Recursive-descent parser for recipe files.

    recipe    := stmt* EOF
    stmt      := "let" ID "=" expr | "assert" call ["by" (ID | STRING)]
    expr      := primary ("." ID)*
    primary   := ID "(" [arg ("," arg)*] ")" | ID | number | STRING | form
    number    := ["-"] INT ["/" INT]
    form      := INT "CP2" "#" INT "mCP2"
    arg       := [ID "="] expr
"""
from __future__ import annotations

from pathlib import Path

from .syntax import (Arg, Assert, Attr, Call, Expr, Form, Frac, Int, Let, Name, ParseError, Recipe, Str,
                     Token, tokenize)

KEYWORDS = frozenset({"let", "assert", "by"})


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, *expected: str):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise ParseError(t.line, t.col, expected, found)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        t = self.tok
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            self.fail(repr(text) if text else kind)
        return t

    def ident(self) -> Token:
        t = self.tok
        if t.kind != "ID" or t.text in KEYWORDS:
            self.fail("ID")
        self.i += 1
        return t

    def recipe(self, name: str) -> Recipe:
        stmts = []
        while self.tok.kind != "EOF":
            stmts.append(self.statement())
        return Recipe(tuple(stmts), name)

    def statement(self):
        t = self.tok
        if self.accept("ID", "let"):
            name = self.ident().text
            self.expect("=")
            return Let(name, self.expr(), t.line, t.col)
        if self.accept("ID", "assert"):
            head = self.ident()
            check = self.call(head)
            tag = None
            if self.accept("ID", "by"):
                if self.tok.kind == "STRING":
                    tag = self.tok.text[1:-1]
                    self.i += 1
                else:
                    tag = self.ident().text
            return Assert(check, tag, t.line, t.col)
        self.fail("'let'", "'assert'")

    def call(self, head: Token) -> Call:
        self.expect("(")
        args: list[Arg] = []
        if not self.accept(")"):
            while True:
                args.append(self.arg())
                if self.accept(")"):
                    break
                if not self.accept(","):
                    self.fail("','", "')'")
        return Call(head.text, tuple(args), head.line, head.col)

    def arg(self) -> Arg:
        if self.tok.kind == "ID" and self.peek().kind == "=":
            key = self.ident().text
            self.expect("=")
            return Arg(key, self.expr())
        return Arg(None, self.expr())

    def expr(self) -> Expr:
        e = self.primary()
        while self.tok.kind == ".":
            dot = self.expect(".")
            e = Attr(e, self.ident().text, dot.line, dot.col)
        return e

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "ID" and t.text not in KEYWORDS:
            self.i += 1
            if self.tok.kind == "(":
                return self.call(t)
            return Name(t.text, t.line, t.col)
        if t.kind == "STRING":
            self.i += 1
            return Str(t.text[1:-1], t.line, t.col)
        if t.kind == "INT" and self.peek().kind == "ID" and self.peek().text == "CP2":
            return self.form()
        if t.kind in ("INT", "-"):
            return self.number()
        self.fail("ID", "INT", "STRING", "'-'")

    def number(self) -> Expr:
        t = self.tok
        sign = -1 if self.accept("-") else 1
        n = sign * int(self.expect("INT").text)
        if self.accept("/"):
            d = int(self.expect("INT").text)
            if d == 0:
                raise ParseError(t.line, t.col, ("nonzero denominator",), "0")
            return Frac(n, d, t.line, t.col)
        return Int(n, t.line, t.col)

    def form(self) -> Form:
        t = self.tok
        p = int(self.expect("INT").text)
        self.expect("ID", "CP2")
        self.expect("#")
        q = int(self.expect("INT").text)
        self.expect("ID", "mCP2")
        return Form(p, q, t.line, t.col)


def parse(source: str, name: str = "") -> Recipe:
    return _Parser(tokenize(source)).recipe(name)


def parse_file(path: str | Path) -> Recipe:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), path.name)
