"""Line arrangements in the projective plane and abelian branched covers of
their blow-ups.

Arrangements are purely combinatorial: marked points, lines and the
incidence relation. Every marked point is blown up; crossings of two lines
away from the marked points are assumed to be ordinary double points.

A cover is given by ``phi``: a value in ``(Z/n)^k`` for every component of
the total transform ``D`` (proper transforms of the lines plus the
exceptional curves). All invariants are computed with exact integers and
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .groups import AbelianInvariants, smith_normal_form
from .invariants import (BMY, Kind, ManifoldClass, Minimal, Pi1, Spin, Surface,
                         blow_up, cite, resolve)


class ArrangementError(ValueError):
    pass


class CoverError(ValueError):
    pass


# -- arrangements --------------------------------------------------------------

@dataclass(frozen=True)
class Arrangement:
    points: tuple[str, ...]
    lines: tuple[str, ...]
    incidence: frozenset[tuple[str, str]]  # (point, line)
    name: str = ""

    def __post_init__(self):
        if len(set(self.points)) != len(self.points) or len(set(self.lines)) != len(self.lines):
            raise ArrangementError("duplicate point or line name")
        pts, lns = set(self.points), set(self.lines)
        for p, l in self.incidence:
            if p not in pts or l not in lns:
                raise ArrangementError(f"incidence ({p}, {l}) names an unknown point or line")
        for a, b in combinations(self.lines, 2):
            if len(self.points_on(a) & self.points_on(b)) > 1:
                raise ArrangementError(f"lines {a} and {b} share more than one point")

    def points_on(self, line: str) -> set[str]:
        return {p for p, l in self.incidence if l == line}

    def lines_through(self, point: str) -> set[str]:
        return {l for p, l in self.incidence if p == point}

    def multiplicity(self, point: str) -> int:
        return len(self.lines_through(point))

    def residual_pairs(self) -> list[tuple[str, str]]:
        """Line pairs meeting away from the marked points."""
        return [(a, b) for a, b in combinations(self.lines, 2)
                if not self.points_on(a) & self.points_on(b)]

    def double_points(self) -> int:
        count = comb(len(self.lines), 2) - sum(comb(self.multiplicity(p), 2) for p in self.points)
        if count < 0:
            raise ArrangementError("negative double point count")
        return count

    def describe(self) -> str:
        lines = [f"arrangement {self.name or '(unnamed)'}: {len(self.points)} points, {len(self.lines)} lines"]
        for p in self.points:
            on = sorted(self.lines_through(p), key=_natural)
            lines.append(f"  {p}: {' '.join(on)}")
        return "\n".join(lines)


def _natural(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


HESSE_INCIDENCE = {
    "p1": ("l1", "l4", "l7", "l10"),
    "p2": ("l2", "l4", "l9", "l11"),
    "p3": ("l3", "l4", "l12", "l8"),
    "p4": ("l1", "l5", "l11", "l12"),
    "p5": ("l2", "l5", "l7", "l8"),
    "p6": ("l3", "l5", "l9", "l10"),
    "p7": ("l1", "l6", "l8", "l9"),
    "p8": ("l2", "l6", "l12", "l10"),
    "p9": ("l3", "l6", "l7", "l11"),
}


def hesse() -> Arrangement:
    """Nine points, twelve lines, three points per line, four lines per point."""
    points = tuple(f"p{i}" for i in range(1, 10))
    lines = tuple(f"l{j}" for j in range(1, 13))
    inc = frozenset((p, l) for p, ls in HESSE_INCIDENCE.items() for l in ls)
    return Arrangement(points, lines, inc, "hesse")


def parse_arrangement(text: str, name: str = "") -> Arrangement:
    """Records: ``point p1``, ``line l1``, ``on p1 l1 l4 l7 l10``; ``#`` comments."""
    points, lines, inc = [], [], set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        key, args = words[0], words[1:]
        if key == "point":
            points.extend(args)
        elif key == "line":
            lines.extend(args)
        elif key == "on" and len(args) >= 2:
            inc.update((args[0], l) for l in args[1:])
        else:
            raise ArrangementError(f"line {lineno}: cannot read {raw.strip()!r}")
    return Arrangement(tuple(points), tuple(lines), frozenset(inc), name)


def arrangement_text(a: Arrangement) -> str:
    out = [f"point {' '.join(a.points)}", f"line {' '.join(a.lines)}"]
    for p in a.points:
        out.append(f"on {p} {' '.join(sorted(a.lines_through(p), key=_natural))}")
    return "\n".join(out) + "\n"


def load_arrangement(ref: str | Path) -> Arrangement:
    if str(ref) == "hesse":
        return hesse()
    path = Path(ref)
    return parse_arrangement(path.read_text(encoding="utf-8"), path.stem)


# -- the divisor in the blow-up ------------------------------------------------

def exceptional_name(point: str) -> str:
    m = re.fullmatch(r"p(\d+)", point)
    return f"E{m.group(1)}" if m else f"E_{point}"


@dataclass(frozen=True)
class DivisorModel:
    """Total transform ``D`` of an arrangement in ``T = CP2 # k mCP2``.

    Classes are vectors ``(h, c_1, ..., c_k)`` meaning ``h H + sum c_i E_i``
    with ``H^2 = 1``, ``E_i^2 = -1``.
    """

    arrangement: Arrangement
    components: tuple[str, ...]
    classes: Mapping[str, tuple[int, ...]]
    nodes: tuple[tuple[str, str], ...]
    kinds: Mapping[str, str]  # component -> "line" | "exceptional"
    point_of: Mapping[str, str]  # exceptional component -> point

    @property
    def rank(self) -> int:
        return 1 + len(self.arrangement.points)

    def dot(self, x: Sequence, y: Sequence):
        return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))

    def intersection(self, a: str, b: str) -> int:
        return self.dot(self.classes[a], self.classes[b])

    def nodes_on(self, c: str) -> list[tuple[str, str]]:
        return [nd for nd in self.nodes if c in nd]

    def euler_T(self) -> int:
        return 3 + len(self.arrangement.points)

    def euler_D_minus_nodes(self) -> int:
        return sum(2 - len(self.nodes_on(c)) for c in self.components)

    def euler_complement(self) -> int:
        return self.euler_T() - (self.euler_D_minus_nodes() + len(self.nodes))

    def h1_relations(self) -> list[list[int]]:
        """One relation per basis class ``x`` of H2(T): sum_c (x . C_c) c = 0."""
        basis = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        return [[self.dot(x, self.classes[c]) for c in self.components] for x in basis]

    def h1(self) -> AbelianInvariants:
        rows = self.h1_relations()
        diag = list(smith_normal_form(rows).factors)
        diag += [0] * (len(self.components) - len(diag))
        return AbelianInvariants(tuple(sorted((d for d in diag if d != 1), key=lambda d: (d == 0, d))))

    def h1_rank(self) -> int:
        return self.h1().rank


def divisor_model(a: Arrangement) -> DivisorModel:
    idx = {p: i for i, p in enumerate(a.points)}
    k = len(a.points)
    classes, kinds, point_of = {}, {}, {}
    for l in a.lines:
        vec = [1] + [0] * k
        for p in a.points_on(l):
            vec[1 + idx[p]] = -1
        classes[l] = tuple(vec)
        kinds[l] = "line"
    for p in a.points:
        e = exceptional_name(p)
        vec = [0] * (k + 1)
        vec[1 + idx[p]] = 1
        classes[e] = tuple(vec)
        kinds[e] = "exceptional"
        point_of[e] = p
    components = tuple(a.lines) + tuple(exceptional_name(p) for p in a.points)
    nodes = list(a.residual_pairs())
    for p in a.points:
        for l in sorted(a.lines_through(p), key=_natural):
            nodes.append((exceptional_name(p), l))
    return DivisorModel(a, components, classes, tuple(nodes), kinds, point_of)


# -- cover data ----------------------------------------------------------------

Element = tuple[int, ...]


@dataclass(frozen=True)
class CoverData:
    n: int
    k: int
    phi: Mapping[str, Element]
    name: str = ""

    @property
    def order(self) -> int:
        return self.n ** self.k

    @property
    def group_name(self) -> str:
        if self.order == 1:
            return "trivial"
        return f"Z{self.n}" if self.k == 1 else f"Z{self.n}^{self.k}"

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % self.n for a, b in zip(x, y))

    def zero(self) -> Element:
        return (0,) * self.k

    def subgroup(self, gens: Iterable[Element]) -> set[Element]:
        span = {self.zero()}
        frontier = [self.zero()]
        gens = [tuple(g) for g in gens]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.add(x, g)
                if y not in span:
                    span.add(y)
                    frontier.append(y)
        return span

    def element_order(self, x: Element) -> int:
        return len(self.subgroup([x]))


def _parse_group(text: str) -> tuple[int, int]:
    text = text.strip()
    if text in ("1", "trivial"):
        return 1, 0
    m = re.fullmatch(r"Z(\d+)(?:\^(\d+))?", text)
    if not m:
        raise CoverError(f"unsupported group {text!r}; expected Zn or Zn^k")
    return int(m.group(1)), int(m.group(2) or 1)


def parse_cover(text: str, name: str = "") -> CoverData:
    """Records ``group Z3^2`` and ``phi l1 = (1,0)``; ``#`` comments."""
    n = k = None
    phi: dict[str, Element] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"group\s+(\S+)", line)
        if m:
            n, k = _parse_group(m.group(1))
            continue
        m = re.fullmatch(r"phi\s+(\S+)\s*=\s*\(([-\d,\s]*)\)", line)
        if m:
            phi[m.group(1)] = tuple(int(v) for v in m.group(2).split(",") if v.strip())
            continue
        raise CoverError(f"line {lineno}: cannot read {line!r}")
    if n is None:
        raise CoverError("missing 'group' record")
    for c, v in phi.items():
        if len(v) != k:
            raise CoverError(f"phi({c}) has {len(v)} coordinates, group needs {k}")
    return CoverData(n, k, {c: tuple(x % n for x in v) for c, v in phi.items()}, name)


def cover_text(c: CoverData) -> str:
    out = [f"group {c.group_name if c.order > 1 else '1'}"]
    for comp, v in sorted(c.phi.items(), key=lambda kv: _natural(kv[0])):
        out.append(f"phi {comp} = ({','.join(map(str, v))})")
    return "\n".join(out) + "\n"


# reference assignment; it fails the relation and node checks of
# validate_cover and is kept so the two can be compared
PHI_PAPER = {
    "l1": (1, 0), "l2": (1, 0), "l3": (1, 0), "l4": (2, 0), "l5": (0, 1), "l6": (2, 2),
    "l7": (2, 1), "l8": (1, 2), "l9": (2, 0), "l10": (1, 1), "l11": (1, 1), "l12": (0, 2),
}

# first hit of the deterministic search in :func:`search_covers`; satisfies
# every check of :func:`validate_cover` on the Hesse arrangement
PHI_VALID = {
    "l1": (0, 1), "l2": (1, 0), "l3": (1, 1), "l4": (0, 1), "l5": (1, 0), "l6": (2, 2),
    "l7": (0, 2), "l8": (0, 2), "l9": (2, 0), "l10": (2, 0), "l11": (2, 1), "l12": (1, 2),
}

BUILTIN_COVERS = {
    "phi_paper": CoverData(3, 2, PHI_PAPER, "phi_paper"),
    "phi_valid": CoverData(3, 2, PHI_VALID, "phi_valid"),
}


def load_cover(ref: str | Path) -> CoverData:
    if str(ref) in BUILTIN_COVERS:
        return BUILTIN_COVERS[str(ref)]
    path = Path(ref)
    return parse_cover(path.read_text(encoding="utf-8"), path.stem)


def complete_cover(d: DivisorModel, c: CoverData) -> tuple[CoverData, list[str]]:
    """Fill in exceptional values from the H1 relation ``E_p = sum of lines
    through p``. Returns the completed data and any inconsistencies."""
    problems = []
    phi = dict(c.phi)
    for comp in phi:
        if comp not in d.kinds:
            raise CoverError(f"phi given on unknown component {comp!r}")
    missing = [l for l in d.arrangement.lines if l not in phi]
    if missing and c.order > 1:
        raise CoverError(f"phi missing on line(s): {', '.join(missing)}")
    for e, p in d.point_of.items():
        derived = c.zero()
        for l in d.arrangement.lines_through(p):
            derived = c.add(derived, phi.get(l, c.zero()))
        if e in phi and phi[e] != derived:
            problems.append(f"phi({e}) = {phi[e]} but lines through {p} sum to {derived}")
        phi.setdefault(e, derived)
    return CoverData(c.n, c.k, phi, c.name), problems


# -- validation ----------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    failures: tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]
    cover: CoverData

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok" if c.passed else f"FAIL ({len(c.failures)})"
            out.append(f"check {c.name}: {status}")
            out += [f"  - {f}" for f in c.failures]
        return out


def validate_cover(d: DivisorModel, c: CoverData) -> ValidationReport:
    """Conditions for ``phi`` to define a connected, smooth cover branched
    exactly along ``D`` with full ramification order ``n`` on every component:

    * ``relation``: ``phi`` kills the image of H2(T), i.e. the lines sum to
      zero and every exceptional value is the sum over its lines;
    * ``nonzero`` / ``inertia``: every component value has order ``n``;
    * ``nodes``: at every node the two values generate a subgroup of order
      ``ord(a) ord(b)``;
    * ``surjective``: the values generate the whole group.
    """
    full, problems = complete_cover(d, c)
    if c.order == 1:
        return ValidationReport((Check("unbranched", True),), full)
    rel_fail = list(problems)
    for row, basis in zip(d.h1_relations(), ["H"] + [exceptional_name(p) for p in d.arrangement.points]):
        total = full.zero()
        for coeff, comp in zip(row, d.components):
            total = full.add(total, tuple(coeff * x for x in full.phi[comp]))
        if total != full.zero():
            rel_fail.append(f"relation from {basis}: sum = {total}")
    zero_fail = [f"phi({comp}) = 0" for comp in d.components if full.phi[comp] == full.zero()]
    inertia_fail = [f"phi({comp}) has order {full.element_order(full.phi[comp])}"
                    for comp in d.components
                    if full.phi[comp] != full.zero() and full.element_order(full.phi[comp]) != c.n]
    node_fail = []
    for a, b in d.nodes:
        x, y = full.phi[a], full.phi[b]
        if len(full.subgroup([x, y])) != full.element_order(x) * full.element_order(y):
            node_fail.append(f"{a} x {b}: {x}, {y} dependent")
    span = full.subgroup(full.phi[comp] for comp in d.components)
    surj_fail = [] if len(span) == c.order else [f"image has order {len(span)} of {c.order}"]
    checks = (
        Check("relation", not rel_fail, tuple(rel_fail)),
        Check("nonzero", not zero_fail, tuple(zero_fail)),
        Check("inertia", not inertia_fail, tuple(inertia_fail)),
        Check("nodes", not node_fail, tuple(node_fail)),
        Check("surjective", not surj_fail, tuple(surj_fail)),
    )
    return ValidationReport(checks, full)


def search_covers(d: DivisorModel, n: int = 3, k: int = 2, limit: int | None = 1) -> list[CoverData]:
    """Deterministic backtracking over values on the lines; exceptional
    values are derived. Returns up to ``limit`` assignments passing every
    check of :func:`validate_cover`."""
    proto = CoverData(n, k, {})
    values = [v for v in product(range(n), repeat=k) if proto.element_order(v) == n]
    lines = list(d.arrangement.lines)
    residual = d.arrangement.residual_pairs()
    by_point = {p: sorted(d.arrangement.lines_through(p), key=lines.index) for p in d.arrangement.points}
    found: list[CoverData] = []

    def independent(x, y):
        return len(proto.subgroup([x, y])) == n * n

    def consistent(phi, new):
        for a, b in residual:
            if new in (a, b) and a in phi and b in phi and not independent(phi[a], phi[b]):
                return False
        for p, ls in by_point.items():
            if new in ls and all(l in phi for l in ls):
                e = proto.zero()
                for l in ls:
                    e = proto.add(e, phi[l])
                if proto.element_order(e) != n or not all(independent(e, phi[l]) for l in ls):
                    return False
        return True

    def walk(i, phi):
        if limit is not None and len(found) >= limit:
            return
        if i == len(lines):
            cand = CoverData(n, k, dict(phi), f"search{len(found) + 1}")
            if validate_cover(d, cand).ok:
                found.append(cand)
            return
        for v in values:
            phi[lines[i]] = v
            if consistent(phi, lines[i]):
                walk(i + 1, phi)
            del phi[lines[i]]

    walk(0, {})
    return found


def sweep(d: DivisorModel, n: int = 3, k: int = 2, samples: int = 1000, seed: int = 0) -> tuple[int, int]:
    """Random assignments on the lines; returns ``(passing, samples)``."""
    rng = random.Random(seed)
    passing = 0
    for _ in range(samples):
        phi = {l: tuple(rng.randrange(n) for _ in range(k)) for l in d.arrangement.lines}
        if validate_cover(d, CoverData(n, k, phi)).ok:
            passing += 1
    return passing, samples


# -- invariants of the cover ---------------------------------------------------

@dataclass(frozen=True)
class CoverInvariants:
    K2: int
    e: int
    chi_h: int | None
    sigma: int | None
    bmy: BMY | None
    valid: bool
    audit: Mapping[str, object] = field(default_factory=dict)

    def lines(self) -> list[str]:
        chi = str(self.chi_h) if self.chi_h is not None else "non-integral"
        out = [f"K^2 = {self.K2}", f"e = {self.e}", f"chi_h = {chi}"]
        if self.sigma is not None:
            out.append(f"sigma = {self.sigma}")
        if self.bmy is not None:
            out.append(f"BMY {self.bmy.value}")
        for key, value in self.audit.items():
            out.append(f"  {key}: {value}")
        return out


def canonical_class(d: DivisorModel, c: CoverData) -> tuple[Fraction, ...]:
    """Downstairs class ``K_T + (1 - 1/n) D`` whose pullback is ``K_W``."""
    k = len(d.arrangement.points)
    kt = [Fraction(-3)] + [Fraction(1)] * k
    coeff = 1 - Fraction(1, c.n) if c.order > 1 else Fraction(0)
    for comp in d.components:
        for i, x in enumerate(d.classes[comp]):
            kt[i] += coeff * x
    return tuple(kt)


def canonical_and_chern(d: DivisorModel, c: CoverData, require_valid: bool = True) -> CoverInvariants:
    """K^2, e and chi_h of the smooth cover with ramification order ``n``
    along every component and full stabilizer at every node.

    With ``require_valid=False`` the numbers are still produced for data
    that fails validation; they then describe the ramification model, not a
    cover defined by ``phi``, and ``valid`` is False.
    """
    report = validate_cover(d, c)
    if require_valid and not report.ok:
        bad = ", ".join(ch.name for ch in report.failed())
        raise CoverError(f"cover data fails validation: {bad}")
    G, n = c.order, (c.n if c.order > 1 else 1)
    K = canonical_class(d, c)
    if any(x.denominator != 1 for x in K):
        raise CoverError(f"downstairs canonical class {K} is not integral")
    K2 = int(G * d.dot(K, K))
    eT, eDo, nodes, eU = d.euler_T(), d.euler_D_minus_nodes(), len(d.nodes), d.euler_complement()
    e = G * eU + (G // n) * eDo + nodes
    grouped = G * eT - (G - G // n) * 2 * len(d.components) + (G - 2 * G // n + 1) * nodes
    audit: dict[str, object] = {
        "group": c.group_name,
        "downstairs K": _fmt_class(K),
        "downstairs K^2": d.dot(K, K),
        "e(T)": eT,
        "e(T - D)": eU,
        "e(D - nodes)": eDo,
        "nodes": nodes,
        "strata sum": f"{G}*{eU} + {G // n}*{eDo} + {nodes} = {e}",
        "grouped sum": f"{G}*{eT} - {G - G // n}*{2 * len(d.components)} + {G - 2 * G // n + 1}*{nodes} = {grouped}",
    }
    if grouped != e:
        raise CoverError(f"Euler number paths disagree: {e} vs {grouped}")
    if report.ok and G > 1:
        orbit = G * eU + (G // n) * eDo + sum(
            G // len(report.cover.subgroup([report.cover.phi[a], report.cover.phi[b]])) for a, b in d.nodes)
        if orbit != e:
            raise CoverError(f"orbit count {orbit} disagrees with strata sum {e}")
    if not report.ok:
        audit["validation"] = "FAILED: " + ", ".join(ch.name for ch in report.failed())
    chi = (K2 + e) // 12 if (K2 + e) % 12 == 0 else None
    sigma = (K2 - 2 * e) // 3 if (K2 - 2 * e) % 3 == 0 else None
    bmy = None
    if chi is not None:
        bmy = BMY.ON_LINE if K2 == 9 * chi else (BMY.BELOW if K2 < 9 * chi else BMY.VIOLATED)
    return CoverInvariants(K2, e, chi, sigma, bmy, report.ok, audit)


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _fmt_class(K: Sequence[Fraction]) -> str:
    h, rest = K[0], K[1:]
    if all(x == rest[0] for x in rest):
        return f"{h}H + {rest[0]}*sum(E)"
    return f"{h}H + " + " + ".join(f"{x}E{i + 1}" for i, x in enumerate(rest))


@dataclass(frozen=True)
class CurveLift:
    curve: str
    branch_points: int
    degree: int
    genus: int
    KC: int
    square: int
    audit: Mapping[str, object] = field(default_factory=dict)

    def line(self) -> str:
        return f"{self.curve}: r={self.branch_points} genus={self.genus} K.C={self.KC} C^2={self.square}"


def lift_curve(d: DivisorModel, c: CoverData, curve: str) -> CurveLift:
    """Genus, ``K_W . C`` and ``C^2`` of the lift of a component or of a
    generic line through a marked point (``generic:p1``).

    The lift is a cover of degree ``n`` totally ramified at the ``r`` branch
    points, so ``2g - 2 = n(-2) + r(n - 1)``; ``K_W . C = (|G|/n) K . C_down``
    and ``C^2`` follows from adjunction.
    """
    full, _ = complete_cover(d, c)
    G, n = c.order, c.n
    arr = d.arrangement
    k = len(arr.points)
    idx = {p: i for i, p in enumerate(arr.points)}
    if curve.startswith("generic:"):
        p = curve.split(":", 1)[1]
        if p not in idx:
            raise CoverError(f"unknown point {p!r}")
        down = [1] + [0] * k
        down[1 + idx[p]] = -1
        neighbours = [exceptional_name(p)] + [l for l in arr.lines if l not in arr.lines_through(p)]
        own = None
    elif curve in d.classes:
        down = list(d.classes[curve])
        neighbours = [b if a == curve else a for a, b in d.nodes_on(curve)]
        own = full.phi.get(curve)
    else:
        raise CoverError(f"unknown curve {curve!r}")
    r = len(neighbours)
    deg = n
    twice_g = deg * (-2) + r * (deg - deg // n) + 2
    if twice_g % 2 or twice_g < 0:
        raise CoverError(f"Riemann-Hurwitz gives non-integral genus for {curve}")
    g = twice_g // 2
    K = canonical_class(d, c)
    kc = Fraction(G, n) * d.dot(K, down)
    if kc.denominator != 1:
        raise CoverError(f"K.C is not integral for {curve}")
    kc = int(kc)
    sq = 2 * g - 2 - kc
    audit: dict[str, object] = {"assumption": f"connected lift of degree {deg}",
                                "downstairs K.C": _num(d.dot(K, down)), "downstairs C^2": d.dot(down, down)}
    if own is not None:
        audit["pullback square"] = _num(Fraction(G * d.dot(down, down), n * n))
    if G > 1 and all(x in full.phi for x in neighbours):
        # the lift splits into |G|/|image| pieces, each of degree |image|/|inertia|
        image = full.subgroup([full.phi[x] for x in neighbours] + ([own] if own else []))
        piece = len(image) // (n if own else 1)
        audit["preimage components"] = G // len(image)
        audit["component degree"] = piece
        if piece != deg:
            two_g = piece * (-2) + r * (piece - piece // n) + 2
            audit["genus at component degree"] = two_g // 2
    return CurveLift(curve, r, deg, g, kc, sq, audit)


# -- export to the invariant calculus ------------------------------------------

def cover_manifold(d: DivisorModel, c: CoverData, name: str = "W", require_valid: bool = True) -> ManifoldClass:
    """The cover as an invariant record carrying every component lift."""
    inv = canonical_and_chern(d, c, require_valid=require_valid)
    if inv.sigma is None:
        raise CoverError("signature is not integral")
    meet: dict[str, dict[str, int]] = {comp: {} for comp in d.components}
    for a, b in d.nodes:
        meet[a][b] = meet[a].get(b, 0) + 1
        meet[b][a] = meet[b].get(a, 0) + 1
    surfaces = []
    for comp in d.components:
        lift = lift_curve(d, c, comp)
        surfaces.append(Surface(comp, lift.genus, lift.square, Kind.SYMPLECTIC,
                                intersections=tuple(sorted(meet[comp].items(), key=lambda kv: _natural(kv[0]))),
                                tags=frozenset({"lift"})))
    spin = Spin.NONSPIN if any(s.square % 2 for s in surfaces) else Spin.UNKNOWN
    return ManifoldClass(
        name=name, e=inv.e, sigma=inv.sigma, b1=None, pi1=Pi1.UNKNOWN, spin=spin,
        symplectic=True, minimal=Minimal.YES if inv.bmy is BMY.ON_LINE else Minimal.UNKNOWN,
        surfaces=tuple(surfaces),
        provenance=(f"cover({d.arrangement.name or 'arrangement'}, {c.name or 'phi'}; "
                    f"{c.group_name}; K^2={inv.K2}, e={inv.e}{'' if inv.valid else '; phi fails validation'})",),
    )


@dataclass(frozen=True)
class Sigma9Package:
    W: ManifoldClass
    resolved: ManifoldClass
    blown_up: ManifoldClass
    steps: tuple[str, ...]


def sigma9_package(d: DivisorModel, c: CoverData, line: str = "l1", name: str = "Sigma9",
                   require_valid: bool = True) -> Sigma9Package:
    """Resolve the lift of ``line`` with the lifts of the exceptional curves
    on it, then blow up one point on the result.

    The surjection of pi1 of the square-zero surface onto the ambient group
    is recorded as a citation, not derived.
    """
    W = cover_manifold(d, c, require_valid=require_valid)
    points = sorted(d.arrangement.points_on(line), key=_natural)
    X, current = W, line
    steps = []
    for p in points:
        e = exceptional_name(p)
        X, surf = resolve(X, current, e, 1, name=name)
        current = surf.name
        steps.append(f"resolve {e}: genus {surf.genus}, square {surf.square}")
    resolved = X
    Y = blow_up(resolved, 1, on=[(current, 1)], name=f"{W.name}#mCP2")
    Y = cite(Y, "surjection-onto-ambient-pi1", surface=current, pi1_cokernel="1")
    s = Y.surface(current)
    steps.append(f"blow up once on {current}: genus {s.genus}, square {s.square}")
    return Sigma9Package(W, resolved, Y, tuple(steps))
