"""Invariant records of closed 4-manifolds and the cut-and-paste operations
that act on them.

Every operation is a pure function returning a new :class:`ManifoldClass`.
Derived quantities (``c1sq``, ``chi``) are recomputed from ``e`` and
``sigma`` on access and never stored.

Fundamental-group bookkeeping is deliberately conservative: the only way an
operation concludes ``pi1 = Trivial`` for a glued manifold is the sufficient
rule in :func:`symplectic_sum` (one side has simply connected surface
complement, the other surface carries the ambient group). Anything else
becomes ``Unknown`` unless a recipe cites an argument with :func:`cite`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .groups import GroupPresentation, Word


class InvariantError(ValueError):
    """Precondition violation of an invariant-level operation."""


class ClassificationRefused(InvariantError):
    pass


class Pi1(str, enum.Enum):
    TRIVIAL = "Trivial"
    Z2 = "Z2"
    UNKNOWN = "Unknown"
    PRESENTED = "Presented"


class Spin(str, enum.Enum):
    SPIN = "Spin"
    NONSPIN = "NonSpin"
    UNKNOWN = "Unknown"


class Minimal(str, enum.Enum):
    YES = "Yes"
    UNKNOWN = "Unknown"


class Kind(str, enum.Enum):
    SYMPLECTIC = "Symplectic"
    LAGRANGIAN = "Lagrangian"


class BMY(str, enum.Enum):
    ON_LINE = "OnLine"
    BELOW = "Below"
    VIOLATED = "Violated"


@dataclass(frozen=True)
class Surface:
    """Embedded closed surface inside a :class:`ManifoldClass`.

    ``pi1_cokernel`` records what is known about the inclusion on pi1:
    ``"1"`` means surjective, ``"Z2"`` means the image is normal with
    quotient Z2, ``None`` means nothing is known.
    """

    name: str
    genus: int
    square: int
    kind: Kind = Kind.SYMPLECTIC
    pi1_cokernel: str | None = None
    complement_simply_connected: bool = False
    nodes: int = 0
    intersections: tuple[tuple[str, int], ...] = ()
    tags: frozenset[str] = frozenset()

    def __post_init__(self):
        if int(self.genus) != self.genus or self.genus < 0:
            raise InvariantError(f"surface {self.name}: genus must be a nonnegative integer")
        if int(self.square) != self.square:
            raise InvariantError(f"surface {self.name}: square must be an integer")

    @property
    def pi1_surjects(self) -> bool:
        return self.pi1_cokernel == "1"

    def meets(self, other: str) -> int:
        return dict(self.intersections).get(other, 0)

    def describe(self) -> str:
        extra = []
        if self.kind is Kind.LAGRANGIAN:
            extra.append("lagrangian")
        if self.nodes:
            extra.append(f"nodes={self.nodes}")
        if self.pi1_cokernel is not None:
            extra.append("pi1-surjects" if self.pi1_surjects else f"pi1-coker={self.pi1_cokernel}")
        if self.complement_simply_connected:
            extra.append("complement-sc")
        if self.intersections:
            extra.append("meets " + ",".join(f"{n}x{k}" if k > 1 else n for n, k in self.intersections))
        tail = f" [{'; '.join(extra)}]" if extra else ""
        return f"{self.name}(g={self.genus}, sq={self.square}){tail}"

    def to_dict(self) -> dict:
        return {
            "name": self.name, "genus": self.genus, "square": self.square,
            "kind": self.kind.value, "pi1_cokernel": self.pi1_cokernel,
            "complement_simply_connected": self.complement_simply_connected,
            "nodes": self.nodes, "intersections": [list(p) for p in self.intersections],
        }


@dataclass(frozen=True)
class ManifoldClass:
    name: str
    e: int
    sigma: int
    b1: int | None = 0
    pi1: Pi1 = Pi1.UNKNOWN
    presentation: GroupPresentation | None = None
    spin: Spin = Spin.UNKNOWN
    symplectic: bool = False
    minimal: Minimal = Minimal.UNKNOWN
    surfaces: tuple[Surface, ...] = ()
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        if int(self.e) != self.e or int(self.sigma) != self.sigma:
            raise InvariantError("e and sigma must be integers")
        if self.b1 is not None and self.b1 < 0:
            raise InvariantError("b1 must be nonnegative")
        if self.pi1 is Pi1.PRESENTED and self.presentation is None:
            raise InvariantError("Presented pi1 needs a presentation")
        if self.sigma % 8:
            # an even form has signature divisible by 8, and spin forces even
            if self.spin is Spin.SPIN:
                raise InvariantError(f"{self.name}: spin with signature {self.sigma} is impossible")
            object.__setattr__(self, "spin", Spin.NONSPIN)
        _check_symmetric(self.surfaces)

    # derived invariants
    @property
    def c1sq(self) -> int:
        return 3 * self.sigma + 2 * self.e

    @property
    def chi(self) -> Fraction:
        return Fraction(self.e + self.sigma, 4)

    @property
    def chi_integral(self) -> bool:
        return (self.e + self.sigma) % 4 == 0

    @property
    def chi_h(self) -> int | None:
        return (self.e + self.sigma) // 4 if self.chi_integral else None

    @property
    def b2(self) -> int | None:
        if self.b1 is None:
            return None
        return self.e - 2 + 2 * self.b1

    def surface(self, name: str) -> Surface:
        for s in self.surfaces:
            if s.name == name:
                return s
        raise InvariantError(f"{self.name} has no surface {name!r}")

    def surface_names(self) -> list[str]:
        return [s.name for s in self.surfaces]

    def summary(self) -> str:
        chi = str(self.chi_h) if self.chi_integral else f"{self.chi} (non-integral)"
        b1 = "?" if self.b1 is None else str(self.b1)
        return (f"{self.name}: e={self.e} sigma={self.sigma} c1sq={self.c1sq} chi={chi} b1={b1} "
                f"pi1={self.pi1.value} spin={self.spin.value} symplectic={str(self.symplectic).lower()} "
                f"minimal={self.minimal.value}")

    def to_dict(self) -> dict:
        return {
            "name": self.name, "e": self.e, "sigma": self.sigma, "c1sq": self.c1sq,
            "chi_h": self.chi_h, "chi": str(self.chi), "b1": self.b1, "pi1": self.pi1.value,
            "spin": self.spin.value, "symplectic": self.symplectic, "minimal": self.minimal.value,
            "surfaces": [s.to_dict() for s in self.surfaces],
            "provenance": list(self.provenance),
        }


@dataclass(frozen=True)
class StandardForm:
    p: int
    q: int
    parity: str = "Odd"

    def __str__(self) -> str:
        return f"{self.p} CP2 # {self.q} mCP2"


# -- inventory helpers --------------------------------------------------------

def _check_symmetric(surfaces: Sequence[Surface]) -> None:
    names = {s.name for s in surfaces}
    if len(names) != len(surfaces):
        raise InvariantError("duplicate surface names")
    table = {(s.name, o): k for s in surfaces for o, k in s.intersections}
    for (a, b), k in table.items():
        if b not in names:
            raise InvariantError(f"surface {a} meets unknown surface {b}")
        if table.get((b, a)) != k:
            raise InvariantError(f"asymmetric intersection record {a}/{b}")


def _meetings(surfaces: Iterable[Surface]) -> dict[frozenset, int]:
    out = {}
    for s in surfaces:
        for o, k in s.intersections:
            out[frozenset((s.name, o))] = k
    return out


def _rebuild(surfaces: Iterable[Surface], meetings: Mapping[frozenset, int]) -> tuple[Surface, ...]:
    """Reattach symmetric intersection data to a list of surfaces."""
    surfaces = list(surfaces)
    names = {s.name for s in surfaces}
    per: dict[str, dict[str, int]] = {n: {} for n in names}
    for pair, k in meetings.items():
        if k <= 0:
            continue
        a, b = sorted(pair)
        if a in names and b in names:
            per[a][b] = k
            per[b][a] = k
    return tuple(replace(s, intersections=tuple(sorted(per[s.name].items()))) for s in surfaces)


def _fresh(prefix: str, taken: Iterable[str], start: int = 1) -> str:
    taken = set(taken)
    i = start
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def _resolve_surface(a: ManifoldClass, s: Surface | str) -> Surface:
    name = s.name if isinstance(s, Surface) else s
    found = a.surface(name)
    if isinstance(s, Surface) and s != found:
        raise InvariantError(f"surface {name!r} does not lie in {a.name}")
    return found


def _spin_after_gluing(surfaces: Iterable[Surface]) -> Spin:
    # a closed surface of odd square makes the intersection form odd
    if any(s.square % 2 for s in surfaces):
        return Spin.NONSPIN
    return Spin.UNKNOWN


# -- operations --------------------------------------------------------------

def connected_sum(a: ManifoldClass, b: ManifoldClass, name: str | None = None) -> ManifoldClass:
    """Ordinary connected sum. The result is never asserted symplectic."""
    if a.spin is Spin.SPIN and b.spin is Spin.SPIN:
        spin = Spin.SPIN
    elif Spin.NONSPIN in (a.spin, b.spin):
        spin = Spin.NONSPIN
    else:
        spin = Spin.UNKNOWN
    pi1, pres = _free_product(a, b)
    taken = set(a.surface_names())
    renamed = {}
    for s in b.surfaces:
        renamed[s.name] = s.name if s.name not in taken else _fresh(s.name + "_", taken | set(renamed.values()), 2)
    b_surfaces = [replace(s, name=renamed[s.name], intersections=tuple((renamed[o], k) for o, k in s.intersections))
                  for s in b.surfaces]
    return ManifoldClass(
        name=name or f"{a.name}#{b.name}",
        e=a.e + b.e - 2,
        sigma=a.sigma + b.sigma,
        b1=None if a.b1 is None or b.b1 is None else a.b1 + b.b1,
        pi1=pi1, presentation=pres, spin=spin,
        symplectic=False, minimal=Minimal.UNKNOWN,
        surfaces=tuple(a.surfaces) + tuple(b_surfaces),
        provenance=a.provenance + b.provenance + (f"connected_sum({a.name}, {b.name})",),
    )


def _free_product(a: ManifoldClass, b: ManifoldClass) -> tuple[Pi1, GroupPresentation | None]:
    if a.pi1 is Pi1.TRIVIAL:
        return b.pi1, b.presentation
    if b.pi1 is Pi1.TRIVIAL:
        return a.pi1, a.presentation
    if a.pi1 is Pi1.PRESENTED and b.pi1 is Pi1.PRESENTED:
        pa, pb = a.presentation, b.presentation
        ren = {g: (g if g not in pa.generators else f"{g}_2") for g in pb.generators}
        rels = [Word((ren[s], k) for s, k in r.syllables) for r in pb.relators]
        return Pi1.PRESENTED, GroupPresentation(pa.generators + tuple(ren.values()), pa.relators + tuple(rels))
    return Pi1.UNKNOWN, None


def blow_up(a: ManifoldClass, k: int = 1, on: Sequence[tuple[Surface | str, int]] = (), name: str | None = None) -> ManifoldClass:
    """Blow up ``k`` points; ``on`` lists ``(surface, m)`` with ``m`` of the
    points lying on that surface. Remaining points avoid all surfaces."""
    if k < 1:
        raise InvariantError("blow_up needs k >= 1")
    hits = {}
    for s, m in on:
        surf = _resolve_surface(a, s)
        if m < 0:
            raise InvariantError("negative point count")
        hits[surf.name] = hits.get(surf.name, 0) + m
    if sum(hits.values()) > k:
        raise InvariantError(f"{sum(hits.values())} points requested on surfaces but only k={k} blow-ups")
    meet = _meetings(a.surfaces)
    surfaces = [replace(s, square=s.square - hits.get(s.name, 0)) for s in a.surfaces]
    taken = set(a.surface_names())
    targets = [n for n, m in hits.items() for _ in range(m)] + [None] * (k - sum(hits.values()))
    for target in targets:
        ename = _fresh("e", taken)
        taken.add(ename)
        surfaces.append(Surface(ename, 0, -1, Kind.SYMPLECTIC, tags=frozenset({"exceptional"})))
        if target is not None:
            meet[frozenset((ename, target))] = 1
    detail = ", ".join(f"{n}:{m}" for n, m in hits.items())
    return ManifoldClass(
        name=name or (f"{a.name}#mCP2" if k == 1 else f"{a.name}#{k}mCP2"),
        e=a.e + k, sigma=a.sigma - k, b1=a.b1,
        pi1=a.pi1, presentation=a.presentation,
        spin=Spin.NONSPIN, symplectic=a.symplectic, minimal=Minimal.UNKNOWN,
        surfaces=_rebuild(surfaces, meet),
        provenance=a.provenance + (f"blow_up(k={k}{'; on ' + detail if detail else ''})",),
    )


def blow_up_node(a: ManifoldClass, s: Surface | str, sphere: str | None = None,
                 name: str | None = None) -> tuple[ManifoldClass, Surface, Surface]:
    """Blow up a node of ``s``; the proper transform loses 4 from its square
    and meets the new exceptional sphere in two points."""
    surf = _resolve_surface(a, s)
    if surf.nodes < 1:
        raise InvariantError(f"surface {surf.name} has no recorded node")
    sphere = sphere or _fresh("e", a.surface_names())
    if sphere in a.surface_names():
        raise InvariantError(f"surface name {sphere!r} already used")
    tags = set(surf.tags)
    if surf.pi1_cokernel is not None:
        # smoothing both points against the sphere restores the node loop
        tags.add(f"node-partner={sphere}:{surf.pi1_cokernel}")
    transform = replace(surf, square=surf.square - 4, nodes=surf.nodes - 1, pi1_cokernel=None,
                        complement_simply_connected=False, tags=frozenset(tags))
    meet = _meetings(a.surfaces)
    meet[frozenset((sphere, surf.name))] = 2
    surfaces = [transform if t.name == surf.name else t for t in a.surfaces]
    surfaces.append(Surface(sphere, 0, -1, Kind.SYMPLECTIC, tags=frozenset({"exceptional"})))
    out = ManifoldClass(
        name=name or f"{a.name}#mCP2",
        e=a.e + 1, sigma=a.sigma - 1, b1=a.b1,
        pi1=a.pi1, presentation=a.presentation,
        spin=Spin.NONSPIN, symplectic=a.symplectic, minimal=Minimal.UNKNOWN,
        surfaces=_rebuild(surfaces, meet),
        provenance=a.provenance + (f"blow_up_node({surf.name}; sphere {sphere})",),
    )
    return out, out.surface(surf.name), out.surface(sphere)


def resolve(a: ManifoldClass, s1: Surface | str, s2: Surface | str, k: int = 1,
            name: str | None = None) -> tuple[ManifoldClass, Surface]:
    """Smooth ``k`` transverse intersection points of two surfaces.

    Returns the new ambient record and the resolved surface (genus
    ``g1 + g2 + k - 1``, square ``s1 + s2 + 2k``). Unresolved points between
    the two become nodes of the result.
    """
    x, y = _resolve_surface(a, s1), _resolve_surface(a, s2)
    if x.name == y.name:
        raise InvariantError("cannot resolve a surface with itself")
    if x.kind is not Kind.SYMPLECTIC or y.kind is not Kind.SYMPLECTIC:
        raise InvariantError("resolution needs symplectic surfaces")
    count = x.meets(y.name)
    if k < 1 or count < k:
        raise InvariantError(f"{x.name} and {y.name} meet in {count} recorded point(s); cannot resolve {k}")
    new_name = name or x.name
    if new_name in a.surface_names() and new_name not in (x.name, y.name):
        raise InvariantError(f"surface name {new_name!r} already used")

    cokernel = None
    for p, q in ((x, y), (y, x)):
        if p.pi1_cokernel == "1":
            cokernel = "1"
        elif k >= 2 and cokernel is None:
            for tag in p.tags:
                if tag.startswith(f"node-partner={q.name}:"):
                    cokernel = tag.split(":", 1)[1]
    merged = Surface(
        new_name, x.genus + y.genus + k - 1, x.square + y.square + 2 * k, Kind.SYMPLECTIC,
        pi1_cokernel=cokernel, nodes=x.nodes + y.nodes + (count - k),
    )
    meet = _meetings(a.surfaces)
    carried: dict[str, int] = {}
    for pair, c in list(meet.items()):
        if x.name in pair or y.name in pair:
            del meet[pair]
            other = next(iter(pair - {x.name, y.name}), None)
            if other is not None:
                carried[other] = carried.get(other, 0) + c
    for other, c in carried.items():
        meet[frozenset((new_name, other))] = c
    surfaces = [t for t in a.surfaces if t.name not in (x.name, y.name)] + [merged]
    out = replace(a, surfaces=_rebuild(surfaces, meet),
                  provenance=a.provenance + (f"resolve({x.name}, {y.name}, k={k}) -> {new_name}",))
    return out, out.surface(new_name)


def symplectic_sum(a: ManifoldClass, sa: Surface | str, b: ManifoldClass, sb: Surface | str,
                   usher: bool = False, name: str | None = None) -> ManifoldClass:
    """Gompf sum along surfaces of equal genus and opposite square.

    ``usher`` is the recipe's declaration that the minimality criterion's
    hypotheses hold; only then is the result marked minimal.
    """
    x, y = _resolve_surface(a, sa), _resolve_surface(b, sb)
    if x.genus != y.genus:
        raise InvariantError(f"genus mismatch: {x.genus} vs {y.genus}")
    if x.square + y.square != 0:
        raise InvariantError(f"squares {x.square} and {y.square} are not opposite")
    if x.kind is not Kind.SYMPLECTIC or y.kind is not Kind.SYMPLECTIC:
        raise InvariantError("both gluing surfaces must be symplectic")
    if not (a.symplectic and b.symplectic):
        raise InvariantError("both ambient manifolds must be symplectic")
    g = x.genus

    pi1, cited = Pi1.UNKNOWN, ""
    for (p, pm), (q, _) in (((x, a), (y, b)), ((y, b), (x, a))):
        why = complement_simply_connected(pm, p)
        if why and q.pi1_cokernel in ("1", "Z2"):
            pi1 = Pi1.TRIVIAL if q.pi1_cokernel == "1" else Pi1.Z2
            cited = f"; pi1 {pi1.value}: complement of {p.name} simply connected ({why}), {q.name} carries pi1"
            break

    keep_a = [s for s in a.surfaces if s.name != x.name and not s.meets(x.name)]
    keep_b = [s for s in b.surfaces if s.name != y.name and not s.meets(y.name)]
    taken = {s.name for s in keep_a}
    ren = {}
    for s in keep_b:
        ren[s.name] = s.name if s.name not in taken else _fresh(s.name + "_", taken | set(ren.values()), 2)
    keep_b = [replace(s, name=ren[s.name], intersections=tuple((ren[o], c) for o, c in s.intersections if o in ren))
              for s in keep_b]
    keep_a = [replace(s, intersections=tuple((o, c) for o, c in s.intersections if o in taken)) for s in keep_a]
    surfaces = keep_a + keep_b
    return ManifoldClass(
        name=name or f"({a.name})#[{x.name}={y.name}]({b.name})",
        e=a.e + b.e + 4 * g - 4,
        sigma=a.sigma + b.sigma,
        b1=0 if pi1 in (Pi1.TRIVIAL, Pi1.Z2) else None,
        pi1=pi1,
        spin=_spin_after_gluing(surfaces),
        symplectic=True,
        minimal=Minimal.YES if usher else Minimal.UNKNOWN,
        surfaces=_rebuild(surfaces, _meetings(surfaces)),
        provenance=a.provenance + b.provenance + (
            f"symplectic_sum({a.name}.{x.name}, {b.name}.{y.name}, genus {g}{'; usher' if usher else ''}{cited})",),
    )


def complement_simply_connected(a: ManifoldClass, s: Surface | str) -> str | None:
    """Reason the complement of ``s`` in ``a`` is simply connected, or None.

    Besides a recorded annotation, the only rule used: in a simply connected
    ambient the complement is normally generated by a meridian, and a sphere
    meeting ``s`` once caps that meridian off.
    """
    s = _resolve_surface(a, s)
    if s.complement_simply_connected:
        return "recorded"
    if a.pi1 is Pi1.TRIVIAL:
        for t in a.surfaces:
            if t.genus == 0 and s.meets(t.name) == 1:
                return f"sphere {t.name} meets it once"
    return None


def _check_torus(a: ManifoldClass, torus: Surface | str) -> Surface:
    t = _resolve_surface(a, torus)
    if t.genus != 1 or t.square != 0:
        raise InvariantError(f"{t.name} is not a square-zero torus")
    return t


def _after_torus_surgery(a: ManifoldClass, t: Surface, **changes) -> ManifoldClass:
    meet = _meetings(a.surfaces)
    surfaces = [s for s in a.surfaces if s.name != t.name]
    base = dict(surfaces=_rebuild(surfaces, meet), spin=Spin.UNKNOWN, b1=None)
    base.update(changes)
    return replace(a, **base)


def luttinger(a: ManifoldClass, torus: Surface | str, coeff: Fraction | int = 1,
              relator: Word | None = None) -> ManifoldClass:
    """``1/n`` Luttinger surgery on a Lagrangian torus; ``e`` and ``sigma``
    are unchanged. When ``a`` carries a presentation and ``relator`` (the
    word for meridian times the pushed-off loop to the n) is supplied, it is
    appended to the presentation."""
    t = _check_torus(a, torus)
    if t.kind is not Kind.LAGRANGIAN:
        raise InvariantError(f"{t.name} is not Lagrangian")
    c = Fraction(coeff)
    if c == 0 or abs(c.numerator) != 1:
        raise InvariantError(f"Luttinger coefficient must be 1/n, got {c}")
    if a.pi1 is Pi1.PRESENTED and relator is not None:
        pi1, pres = Pi1.PRESENTED, a.presentation.with_relators([relator])
    else:
        pi1, pres = Pi1.UNKNOWN, None
    return _after_torus_surgery(a, t, pi1=pi1, presentation=pres,
                                provenance=a.provenance + (f"luttinger({t.name}, {c})",))


def torus_surgery(a: ManifoldClass, torus: Surface | str, m: int, relator: Word | None = None) -> ManifoldClass:
    """Torus surgery with multiplicity ``m``; ``|m| = 1`` on a Lagrangian
    torus is a Luttinger surgery, otherwise the symplectic flag is lost."""
    t = _check_torus(a, torus)
    if m == 0:
        raise InvariantError("torus surgery multiplicity must be nonzero")
    if abs(m) == 1 and t.kind is Kind.LAGRANGIAN:
        return luttinger(a, t, Fraction(1, m), relator)
    if a.pi1 is Pi1.PRESENTED and relator is not None:
        pi1, pres = Pi1.PRESENTED, a.presentation.with_relators([relator])
    else:
        pi1, pres = Pi1.UNKNOWN, None
    symplectic = a.symplectic and abs(m) == 1
    return _after_torus_surgery(a, t, pi1=pi1, presentation=pres, symplectic=symplectic,
                                minimal=a.minimal if symplectic else Minimal.UNKNOWN,
                                provenance=a.provenance + (f"torus_surgery({t.name}, m={m})",))


def knot_surgery(a: ManifoldClass, torus: Surface | str, knot: str, fibered: bool = False) -> ManifoldClass:
    """Fintushel-Stern knot surgery: homeomorphism type unchanged, the
    result is tagged as a member of an infinite family indexed by the knot."""
    t = _check_torus(a, torus)
    if t.kind is not Kind.SYMPLECTIC and "perturbable" not in t.tags:
        raise InvariantError(f"{t.name} is not (perturbably) symplectically embedded")
    symplectic = a.symplectic and fibered
    return _after_torus_surgery(
        a, t, spin=a.spin, b1=a.b1, symplectic=symplectic,
        minimal=a.minimal if symplectic else Minimal.UNKNOWN,
        name=f"({a.name})_{knot}",
        provenance=a.provenance + (f"knot_surgery({t.name}, {knot}); family:knot-surgery",),
    )


def cite(a: ManifoldClass, tag: str, pi1: Pi1 | None = None, spin: Spin | None = None,
         surface: str | None = None, pi1_cokernel: str | None = None) -> ManifoldClass:
    """Record a claim proved outside the invariant calculus, with its tag."""
    changes: dict = {}
    notes = []
    if pi1 is not None:
        if a.pi1 not in (Pi1.UNKNOWN, pi1):
            raise InvariantError(f"{a.name}: cited pi1={pi1.value} contradicts derived {a.pi1.value}")
        changes.update(pi1=pi1, presentation=None if pi1 is not Pi1.PRESENTED else a.presentation)
        if pi1 in (Pi1.TRIVIAL, Pi1.Z2):
            changes["b1"] = 0
        notes.append(f"pi1={pi1.value}")
    if spin is not None:
        if a.spin not in (Spin.UNKNOWN, spin):
            raise InvariantError(f"{a.name}: cited spin={spin.value} contradicts derived {a.spin.value}")
        changes["spin"] = spin
        notes.append(f"spin={spin.value}")
    if surface is not None:
        s = a.surface(surface)
        surfaces = tuple(replace(t, pi1_cokernel=pi1_cokernel) if t.name == s.name else t for t in a.surfaces)
        changes["surfaces"] = surfaces
        notes.append(f"{surface} pi1-coker={pi1_cokernel}")
    return replace(a, provenance=a.provenance + (f"cite[{tag}]: {', '.join(notes)}",), **changes)


def rename(a: ManifoldClass, name: str) -> ManifoldClass:
    return replace(a, name=name)


# -- classification and geography ---------------------------------------------

def standard_form(e: int, sigma: int) -> StandardForm:
    """``p CP2 # q mCP2`` numbers for a simply connected odd class."""
    if (e - 2 + sigma) % 2 or (e - 2 - sigma) % 2:
        raise ClassificationRefused(f"e-2 +/- sigma must be even (e={e}, sigma={sigma})")
    p, q = (e - 2 + sigma) // 2, (e - 2 - sigma) // 2
    if p < 0 or q < 0:
        raise ClassificationRefused(f"negative b2 (b2+={p}, b2-={q})")
    return StandardForm(p, q, "Odd")


def classify_homeo(a: ManifoldClass) -> StandardForm:
    """Freedman's classification for simply connected, odd, closed classes."""
    if a.pi1 is not Pi1.TRIVIAL:
        raise ClassificationRefused(f"{a.name}: pi1 is {a.pi1.value}, classification needs Trivial")
    if a.spin is not Spin.NONSPIN:
        raise ClassificationRefused(f"{a.name}: parity {a.spin.value}; only odd forms are classified")
    return standard_form(a.e, a.sigma)


def bmy_check(a: ManifoldClass) -> BMY:
    if not a.chi_integral:
        raise InvariantError(f"{a.name}: chi_h = {a.chi} is not integral")
    bound = 9 * a.chi_h
    if a.c1sq == bound:
        return BMY.ON_LINE
    return BMY.BELOW if a.c1sq < bound else BMY.VIOLATED
