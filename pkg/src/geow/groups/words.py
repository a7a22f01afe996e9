"""Free-group words in run-length form, plus a small word parser.

Words are stored as tuples of ``(symbol, exponent)`` pairs with nonzero
exponents. The canonical (freely reduced) form never has two adjacent pairs
with the same symbol.

Text syntax accepted by :func:`parse_word`::

    a2^3 a1^-1 j^8          juxtaposition, integer powers
    [x, y]                  commutator x y x^-1 y^-1
    (a b)^2                 grouping
    [c2^-1, b1]^m           powers of any factor (m bound via ``params``)
    1                       the empty word

:func:`parse_relation` additionally accepts ``lhs = rhs`` and returns the
relator ``lhs rhs^-1``.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence


class WordError(ValueError):
    pass


class Word:
    __slots__ = ("_syllables",)

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        self._syllables = _reduce(syllables)

    @classmethod
    def letter(cls, symbol: str, exponent: int = 1) -> "Word":
        return cls([(symbol, exponent)])

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> "Word":
        return cls(letters)

    @property
    def syllables(self) -> tuple[tuple[str, int], ...]:
        return self._syllables

    def letters(self) -> list[tuple[str, int]]:
        """Expanded form: one ``(symbol, +1 or -1)`` entry per letter."""
        out = []
        for s, k in self._syllables:
            sign = 1 if k > 0 else -1
            out.extend([(s, sign)] * abs(k))
        return out

    def __len__(self) -> int:
        return sum(abs(k) for _, k in self._syllables)

    def __bool__(self) -> bool:
        return bool(self._syllables)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._syllables == other._syllables

    def __hash__(self) -> int:
        return hash(self._syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self._syllables + other._syllables)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self._syllables * n)

    def inverse(self) -> "Word":
        return Word((s, -k) for s, k in reversed(self._syllables))

    def symbols(self) -> set[str]:
        return {s for s, _ in self._syllables}

    def exponent_sums(self) -> dict[str, int]:
        sums: dict[str, int] = {}
        for s, k in self._syllables:
            sums[s] = sums.get(s, 0) + k
        return sums

    def cyclic_reduce(self) -> "Word":
        letters = self.letters()
        while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return Word(letters)

    def __str__(self) -> str:
        if not self._syllables:
            return "1"
        return " ".join(s if k == 1 else f"{s}^{k}" for s, k in self._syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _reduce(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[list] = []
    for s, k in syllables:
        k = int(k)
        if k == 0:
            continue
        if stack and stack[-1][0] == s:
            stack[-1][1] += k
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([s, k])
    return tuple((s, k) for s, k in stack)


def free_reduce(w: Word, generators: Sequence[str] | None = None) -> Word:
    """Canonical reduced form of ``w``; raises on symbols outside ``generators``."""
    if generators is not None:
        unknown = w.symbols() - set(generators)
        if unknown:
            raise WordError(f"unknown symbol(s): {', '.join(sorted(unknown))}")
    return Word(w.syllables)


def commutator(x: Word, y: Word) -> Word:
    return x * y * x.inverse() * y.inverse()


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<sym>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[\^\[\]\(\),=*-]))")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordError(f"cannot parse word near {text[pos:pos + 10]!r}")
        tokens.append(m.group(m.lastgroup))
        pos = m.end()
    return tokens


class _WordParser:
    def __init__(self, text: str, params: Mapping[str, int] | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.params = dict(params or {})

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise WordError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def product(self, stop=(None, "]", ")", ",", "=")) -> Word:
        w = Word()
        while self.peek() not in stop:
            if self.peek() == "*":
                self.take()
                continue
            w = w * self.factor()
        return w

    def factor(self) -> Word:
        tok = self.take()
        if tok == "[":
            x = self.product()
            self.take(",")
            y = self.product()
            self.take("]")
            base = commutator(x, y)
        elif tok == "(":
            base = self.product()
            self.take(")")
        elif tok == "1":
            base = Word()
        elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", tok):
            base = Word.letter(tok)
        else:
            raise WordError(f"unexpected token {tok!r}")
        while self.peek() == "^":
            self.take()
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        tok = self.take()
        if tok == "(":
            inner = self.take()
            self.take(")")
            tok = inner
        sign = 1
        if tok == "-":
            sign, tok = -1, self.take()
        if re.fullmatch(r"-?\d+", tok):
            return sign * int(tok)
        if tok in self.params:
            return sign * int(self.params[tok])
        raise WordError(f"unbound exponent {tok!r}")


def parse_word(text: str, params: Mapping[str, int] | None = None) -> Word:
    p = _WordParser(text, params)
    w = p.product(stop=(None,))
    return w


def parse_relation(text: str, params: Mapping[str, int] | None = None) -> Word:
    """Parse ``lhs`` or ``lhs = rhs`` into a single relator word."""
    p = _WordParser(text, params)
    lhs = p.product()
    if p.peek() == "=":
        p.take("=")
        rhs = p.product()
        if p.peek() is not None:
            raise WordError(f"trailing input in relation {text!r}")
        return lhs * rhs.inverse()
    if p.peek() is not None:
        raise WordError(f"trailing input in relation {text!r}")
    return lhs
