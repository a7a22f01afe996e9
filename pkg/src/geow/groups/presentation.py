"""Finitely presented groups, their text format, and abelianization."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .smith import smith_normal_form
from .words import Word, WordError, free_reduce, parse_relation, parse_word


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    name: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise WordError("duplicate generator")
        rels = tuple(free_reduce(r, gens) for r in self.relators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    def with_relators(self, extra: Iterable[Word]) -> "GroupPresentation":
        return GroupPresentation(self.generators, self.relators + tuple(extra), self.name)

    def exponent_matrix(self) -> list[list[int]]:
        idx = {g: i for i, g in enumerate(self.generators)}
        rows = []
        for r in self.relators:
            row = [0] * len(self.generators)
            for s, k in r.syllables:
                row[idx[s]] += k
            rows.append(row)
        return rows

    def to_text(self) -> str:
        lines = [f"gens: {' '.join(self.generators)}"]
        lines += [f"rel: {r}" for r in self.relators]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors of a finitely generated abelian group; 0 is a free Z."""

    factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        fs = tuple(int(d) for d in self.factors)
        for a, b in zip(fs, fs[1:]):
            if a == 0 and b != 0 or (a and b % a):
                raise ValueError(f"not a divisibility chain: {fs}")
        object.__setattr__(self, "factors", fs)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        parts = [f"Z/{d}" for d in self.torsion]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts)


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    n = len(p.generators)
    if n == 0:
        return AbelianInvariants()
    rows = p.exponent_matrix()
    diag = smith_normal_form(rows).factors if rows else ()
    diag = list(diag) + [0] * (n - len(diag))
    return AbelianInvariants(tuple(d for d in diag if d != 1))


def commutator_pattern_check(w: Word, genus: int | None = None, literal: bool = False) -> bool:
    """Necessary test for ``w`` being a product of commutators.

    Every symbol must have total exponent zero. With ``literal=True`` the
    cyclically reduced word must additionally read, after some rotation, as
    ``[x1,y1]...[xg,yg]`` in single letters with ``2g`` distinct symbols.
    """
    if any(v for v in w.exponent_sums().values()):
        return False
    if not literal:
        return True
    letters = w.cyclic_reduce().letters()
    if genus is None:
        genus = len(letters) // 4
    if len(letters) != 4 * genus:
        return False
    for shift in range(len(letters)):
        rot = letters[shift:] + letters[:shift]
        if _is_commutator_product(rot, genus):
            return True
    return genus == 0


def _is_commutator_product(letters, genus) -> bool:
    seen = set()
    for i in range(genus):
        x, y, xi, yi = letters[4 * i:4 * i + 4]
        if x[0] == y[0] or (x[0], -x[1]) != xi or (y[0], -y[1]) != yi:
            return False
        if x[0] in seen or y[0] in seen:
            return False
        seen.update((x[0], y[0]))
    return True


# -- text format -------------------------------------------------------------

def parse_presentation(text: str, params: Mapping[str, int] | None = None, name: str = "") -> GroupPresentation:
    """Parse ``gens: ...`` / ``rel: ...`` lines; ``#`` starts a comment.

    A ``param: m = 1`` line binds symbolic exponents used in later relations.
    """
    gens: list[str] | None = None
    rels: list[Word] = []
    bound = dict(params or {})
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        try:
            if key == "gens":
                gens = rest.split()
            elif key == "rel":
                rels.append(parse_relation(rest, bound))
            elif key == "param":
                pname, _, value = rest.partition("=")
                bound.setdefault(pname.strip(), int(value))
            else:
                raise WordError(f"unknown record {key!r}")
        except WordError as exc:
            raise WordError(f"line {lineno}: {exc}") from None
    if gens is None:
        raise WordError("missing 'gens:' line")
    return GroupPresentation(tuple(gens), tuple(rels), name)


def load_presentation(path: str | Path, params: Mapping[str, int] | None = None) -> GroupPresentation:
    path = Path(path)
    return parse_presentation(path.read_text(encoding="utf-8"), params, name=path.stem)


def parse_word_list(text: str) -> list[Word]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_word(line))
    return out


# -- presentations used by the constructions ---------------------------------

def surface_group(genus: int, u: str = "u", v: str = "v") -> GroupPresentation:
    gens = []
    rel = Word()
    for i in range(1, genus + 1):
        gens += [f"{u}{i}", f"{v}{i}"]
        rel = rel * parse_word(f"[{u}{i}, {v}{i}]")
    return GroupPresentation(tuple(gens), (rel,), f"surface{genus}")


def luttinger_relations_yn(n: int, m: int = 1) -> GroupPresentation:
    """Relations holding in pi1 of the product Sigma_2 x Sigma_n after the
    2n+3 Luttinger surgeries and one m-surgery."""
    if n < 2:
        raise ValueError("n >= 2 required")
    gens = ["a1", "b1", "a2", "b2"] + [f"{x}{j}" for j in range(1, n + 1) for x in "cd"]
    rels = [
        "[b1^-1, d1^-1] = a1", "[a1^-1, d1] = b1", "[b2^-1, d2^-1] = a2", "[a2^-1, d2] = b2",
        "[d1^-1, b2^-1] = c1", "[c1^-1, b2] = d1", "[d2^-1, b1^-1] = c2", "[c2^-1, b1]^m = d2",
        "[a1, c1]", "[a1, c2]", "[a1, d2]", "[b1, c1]",
        "[a2, c1]", "[a2, c2]", "[a2, d1]", "[b2, c2]",
        "[a1, b1] [a2, b2]",
        " ".join(f"[c{j}, d{j}]" for j in range(1, n + 1)),
    ]
    for j in range(3, n + 1):
        rels += [f"[a1^-1, d{j}^-1] = c{j}", f"[a2^-1, c{j}^-1] = d{j}",
                 f"[b1, c{j}]", f"[b2, d{j}]"]
    words = tuple(parse_relation(r, {"m": m}) for r in rels)
    return GroupPresentation(tuple(gens), words, f"Y_{n}({m})")


def luttinger_relations_yn1(n: int, m: int = 1) -> GroupPresentation:
    """Relations holding in pi1 of Sigma_n x T^2 after the 2n torus surgeries."""
    if n < 2:
        raise ValueError("n >= 2 required")
    gens = [f"{x}{i}" for i in range(1, n + 1) for x in "ab"] + ["c", "d"]
    rels = []
    for i in range(1, n):
        rels += [f"[b{i}^-1, d^-1] = a{i}", f"[a{i}^-1, d] = b{i}"]
    rels += [f"[d^-1, b{n}^-1] = c", "[c^-1, b%d]^(-m) = d" % n]
    for i in range(1, n):
        rels += [f"[a{i}, c]", f"[b{i}, c]"]
    rels += [f"[a{n}, c]", f"[a{n}, d]"]
    rels += [" ".join(f"[a{i}, b{i}]" for i in range(1, n + 1)), "[c, d]"]
    words = tuple(parse_relation(r.replace("(-m)", "-m"), {"m": m}) for r in rels)
    return GroupPresentation(tuple(gens), words, f"Y_{n}(1,{m})")


# the eight generators of pi1 of the normalized genus-4 curve, in a1 a2 a3 j
CURVE_GENERATORS = {
    "p1": "a2^3 a1^-1 a3^-1 j^8 a2^-2 a1^-1 j^4",
    "p2": "a3^3 a1 a3^2 a2 a1 j^4 a3^-1 j^8 a3^-2 a1^-1 a3^-3",
    "p3": "j^8 a1^-1 a3^-3 a2^2 j^4 a3^-2 a1^-1 a3^-3",
    "p4": "j^8 a2 a1 a2^-2 a1^-1 j^4 a3^3 a1^2 a2^-1",
    "p5": "a3^3 a1 a3^2 j^4 a1^-1 j^8 a3^2 a1 a2^-3",
    "p6": "a3^3 a1 a2 a1 a3 a2^-3",
    "p7": "a3^3 a1 j^8 a1 a2^-2 a1^-1 a3^2 j^4",
    "p8": "j^4 a3^-2 j^8 a2 a1 a2 a1 a2^-2",
}
CURVE_RELATION = "p5^-1 p2^-1 p5 p1 p3 p8^-1 p4 p1^-1 p7^-1 p6^-1 p7 p2 p3^-1 p8 p4^-1 p6"
BOUNDARY_ELEMENTS = {
    "pi1": "a3^3 a1 a2^-1",
    "pi2": "a2 a1^-2 a3^-1 a1 a3^-1 a1^-1 a2^-2",
}


def curve_relation() -> Word:
    return parse_word(CURVE_RELATION)


def substitute(w: Word, images: Mapping[str, Word]) -> Word:
    out = Word()
    for s, k in w.syllables:
        out = out * (images[s] ** k if s in images else Word.letter(s, k))
    return out


def curve_subgroup_generators() -> list[Word]:
    """The words p1..p8 and pi1 pi2^-1 in the a1, a2, a3, j alphabet."""
    ws = [parse_word(CURVE_GENERATORS[f"p{i}"]) for i in range(1, 9)]
    ws.append(parse_word(BOUNDARY_ELEMENTS["pi1"]) * parse_word(BOUNDARY_ELEMENTS["pi2"]).inverse())
    return ws
