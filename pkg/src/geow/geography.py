"""Search for symplectic sums of two decorated blocks hitting target
``(sigma, chi_h)`` values.

A decoration of a block is one embedded symplectic surface obtained by

* taking an advertised surface as is,
* resolving a connected set of up to ``max_resolve`` surfaces at all of
  their recorded intersection points, or
* blowing up the node of a nodal curve and smoothing the two points where
  the transform meets the exceptional sphere,

followed by ``0..max_blowups`` blow-ups at points of the surface.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .blocks import block
from .invariants import (ClassificationRefused, InvariantError, Kind, ManifoldClass, StandardForm,
                         blow_up_node, resolve, standard_form)


@dataclass(frozen=True)
class Decoration:
    block: str
    ambient: ManifoldClass
    surface: str
    genus: int
    square: int
    steps: str
    blowups: int = 0

    @property
    def e(self) -> int:
        return self.ambient.e + self.blowups

    @property
    def sigma(self) -> int:
        return self.ambient.sigma - self.blowups

    @property
    def final_square(self) -> int:
        return self.square - self.blowups

    def encode(self) -> str:
        tail = f"+{self.blowups}bu" if self.blowups else ""
        return f"{self.block}[{self.steps}]{tail}"


@dataclass(frozen=True)
class Realization:
    e: int
    sigma: int
    chi_h: int
    form: StandardForm | None
    recipe: str

    def line(self) -> str:
        form = str(self.form) if self.form else "-"
        return f"e={self.e} sigma={self.sigma} chi={self.chi_h} {form} :: {self.recipe}"


def _block_label(ref) -> tuple[str, ManifoldClass]:
    if isinstance(ref, ManifoldClass):
        return ref.name, ref
    if isinstance(ref, str):
        return ref, block(ref)
    name, *params = ref
    return f"{name}({','.join(map(str, params))})", block(name, *params)


def _glueable(X: ManifoldClass, name: str) -> bool:
    s = X.surface(name)
    return s.kind is Kind.SYMPLECTIC and s.nodes == 0


def _connected_subsets(X: ManifoldClass, size: int) -> list[tuple[str, ...]]:
    names = [s.name for s in X.surfaces if s.kind is Kind.SYMPLECTIC and s.nodes == 0]
    out = []
    for combo in combinations(sorted(names), size):
        seen, todo = {combo[0]}, [combo[0]]
        while todo:
            cur = X.surface(todo.pop())
            for other, _ in cur.intersections:
                if other in combo and other not in seen:
                    seen.add(other)
                    todo.append(other)
        if len(seen) == size:
            out.append(combo)
    return out


def _resolve_all(X: ManifoldClass, combo: Sequence[str]) -> tuple[ManifoldClass, str] | None:
    remaining = list(combo[1:])
    current = combo[0]
    merged = "merged"
    while remaining:
        partner = next((r for r in remaining if X.surface(current).meets(r)), None)
        if partner is None:
            return None
        X, s = resolve(X, current, partner, X.surface(current).meets(partner), name=merged)
        current = s.name
        remaining.remove(partner)
    return X, current


def decorations(label: str, X: ManifoldClass, max_resolve: int = 3, max_blowups: int = 2) -> list[Decoration]:
    base: list[Decoration] = []
    if not X.symplectic:
        return base
    for s in X.surfaces:
        if _glueable(X, s.name):
            base.append(Decoration(label, X, s.name, s.genus, s.square, s.name))
        if s.nodes and s.kind is Kind.SYMPLECTIC:
            Y, t, sphere = blow_up_node(X, s.name, sphere="node_e")
            Y, r = resolve(Y, t.name, sphere.name, 2, name=s.name)
            base.append(Decoration(label, Y, r.name, r.genus, r.square, f"node({s.name})"))
    for size in range(2, max_resolve + 1):
        for combo in _connected_subsets(X, size):
            try:
                out = _resolve_all(X, combo)
            except InvariantError:
                continue
            if out is None:
                continue
            Y, name = out
            s = Y.surface(name)
            base.append(Decoration(label, Y, name, s.genus, s.square, "resolve(" + ",".join(combo) + ")"))
    out = []
    for d in base:
        for b in range(max_blowups + 1):
            out.append(Decoration(d.block, d.ambient, d.surface, d.genus, d.square, d.steps, b))
    return out


def geography_scan(inventory: Iterable, sigma: int, chi_range: tuple[int, int],
                   max_blowups: int = 2, max_resolve: int = 3) -> list[Realization]:
    """Every symplectic sum of two decorated inventory blocks with the given
    signature and ``chi_h`` in the closed range; sorted by recipe text."""
    lo, hi = chi_range
    decs: list[Decoration] = []
    for ref in inventory:
        label, X = _block_label(ref)
        decs.extend(decorations(label, X, max_resolve, max_blowups))
    by_genus: dict[int, list[Decoration]] = {}
    for d in decs:
        by_genus.setdefault(d.genus, []).append(d)
    found: dict[str, Realization] = {}
    for g, group in by_genus.items():
        for a, b in combinations(sorted(group, key=Decoration.encode), 2):
            if a.final_square + b.final_square != 0:
                continue
            s = a.sigma + b.sigma
            e = a.e + b.e + 4 * g - 4
            if s != sigma or (e + s) % 4:
                continue
            chi = (e + s) // 4
            if not lo <= chi <= hi:
                continue
            try:
                form = standard_form(e, s)
            except ClassificationRefused:
                form = None
            recipe = f"symsum({a.encode()}, {b.encode()}; genus {g})"
            found[recipe] = Realization(e, s, chi, form, recipe)
    return [found[k] for k in sorted(found)]
