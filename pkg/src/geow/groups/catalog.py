"""Small finite presentations with known orders, used for self-checks."""
from __future__ import annotations

from .presentation import GroupPresentation
from .words import parse_relation


def _pres(name: str, gens: str, *rels: str) -> GroupPresentation:
    return GroupPresentation(tuple(gens.split()), tuple(parse_relation(r) for r in rels), name)


CATALOG: dict[str, tuple[GroupPresentation, int]] = {
    "Z3": (_pres("Z3", "a", "a^3"), 3),
    "Klein4": (_pres("Klein4", "a b", "a^2", "b^2", "(a b)^2"), 4),
    "S3": (_pres("S3", "a b", "a^3", "b^2", "(a b)^2"), 6),
    "Q8": (_pres("Q8", "a b", "a^4", "a^2 = b^2", "b^-1 a b a"), 8),
}


def catalog_presentation(name: str) -> GroupPresentation:
    return CATALOG[name][0]
