"""Builtin building blocks with their advertised surfaces.

``block(name, *params)`` returns a :class:`ManifoldClass`; its surfaces are
addressed by name (``X.S1`` in recipes). The registry is also rendered as a
versioned text manifest, see :func:`manifest_text`.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .groups import GroupPresentation, luttinger_relations_yn, luttinger_relations_yn1, parse_word
from .invariants import (InvariantError, Kind, ManifoldClass, Minimal, Pi1, Spin, Surface,
                         luttinger, torus_surgery)

MANIFEST_VERSION = 1


class BlockError(InvariantError):
    pass


@dataclass(frozen=True)
class BlockSpec:
    name: str
    params: tuple[str, ...]
    build: Callable[..., ManifoldClass]
    doc: str
    sample: tuple[int, ...] = ()


REGISTRY: dict[str, BlockSpec] = {}
ALIASES = {"E(n)_K": "E_n_K", "H(p)": "FPP_H", "FPP": "FPP_H"}


def _register(name, params=(), sample=()):
    def wrap(fn):
        REGISTRY[name] = BlockSpec(name, tuple(params), fn, (fn.__doc__ or "").strip().splitlines()[0], tuple(sample))
        return fn
    return wrap


def block(name: str, *params: int) -> ManifoldClass:
    spec = REGISTRY.get(ALIASES.get(name, name))
    if spec is None:
        raise BlockError(f"unknown block {name!r}; known: {', '.join(sorted(REGISTRY))}")
    if len(params) != len(spec.params):
        raise BlockError(f"block {spec.name} takes {len(spec.params)} parameter(s) ({', '.join(spec.params)}), got {len(params)}")
    for p in params:
        if isinstance(p, bool) or int(p) != p:
            raise BlockError(f"block parameters must be integers, got {p!r}")
    return spec.build(*(int(p) for p in params))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BlockError(msg)


def _meet(*pairs: tuple[str, str, int]) -> dict[str, tuple[tuple[str, int], ...]]:
    out: dict[str, dict[str, int]] = {}
    for a, b, k in pairs:
        out.setdefault(a, {})[b] = k
        out.setdefault(b, {})[a] = k
    return {n: tuple(sorted(d.items())) for n, d in out.items()}


def _with_meetings(surfaces: list[Surface], *pairs) -> tuple[Surface, ...]:
    m = _meet(*pairs)
    return tuple(replace(s, intersections=m.get(s.name, ())) for s in surfaces)


def _odd_spin(surfaces) -> Spin:
    return Spin.NONSPIN if any(s.square % 2 for s in surfaces) else Spin.UNKNOWN


def _product_presentation(g: int, h: int) -> GroupPresentation:
    left = [f"{x}{i}" for i in range(1, g + 1) for x in "ab"]
    right = [f"{x}{j}" for j in range(1, h + 1) for x in "cd"]
    rels = []
    if g:
        rels.append(parse_word(" ".join(f"[a{i}, b{i}]" for i in range(1, g + 1))))
    if h:
        rels.append(parse_word(" ".join(f"[c{j}, d{j}]" for j in range(1, h + 1))))
    rels += [parse_word(f"[{x}, {y}]") for x in left for y in right]
    return GroupPresentation(tuple(left + right), tuple(rels), f"pi1(Sigma{g} x Sigma{h})")


@_register("CP2")
def _cp2() -> ManifoldClass:
    """Complex projective plane with a line H."""
    return ManifoldClass("CP2", 3, 1, 0, Pi1.TRIVIAL, spin=Spin.NONSPIN, symplectic=True, minimal=Minimal.YES,
                         surfaces=(Surface("H", 0, 1),), provenance=("block CP2",))


@_register("mCP2")
def _mcp2() -> ManifoldClass:
    """CP2 with reversed orientation; the line E has square -1."""
    return ManifoldClass("mCP2", 3, -1, 0, Pi1.TRIVIAL, spin=Spin.NONSPIN, symplectic=False,
                         surfaces=(Surface("E", 0, -1),), provenance=("block mCP2",))


@_register("S4")
def _s4() -> ManifoldClass:
    """The 4-sphere."""
    return ManifoldClass("S4", 2, 0, 0, Pi1.TRIVIAL, spin=Spin.SPIN, symplectic=False, provenance=("block S4",))


@_register("S2xS2")
def _s2s2() -> ManifoldClass:
    """Product of two spheres with fibres F and G."""
    surfaces = _with_meetings([Surface("F", 0, 0), Surface("G", 0, 0)], ("F", "G", 1))
    return ManifoldClass("S2xS2", 4, 0, 0, Pi1.TRIVIAL, spin=Spin.SPIN, symplectic=True, minimal=Minimal.YES,
                         surfaces=surfaces, provenance=("block S2xS2",))


@_register("T4")
def _t4() -> ManifoldClass:
    """4-torus with dual symplectic tori A and B meeting once."""
    surfaces = _with_meetings([Surface("A", 1, 0), Surface("B", 1, 0)], ("A", "B", 1))
    return ManifoldClass("T4", 0, 0, 4, Pi1.PRESENTED, _product_presentation(1, 1), symplectic=True,
                         minimal=Minimal.YES, surfaces=surfaces, provenance=("block T4",))


@_register("T2xT2")
def _t2t2() -> ManifoldClass:
    """4-torus as a product, with symplectic A, B and Lagrangian tori L1, L2."""
    base = _t4()
    extra = (Surface("L1", 1, 0, Kind.LAGRANGIAN), Surface("L2", 1, 0, Kind.LAGRANGIAN))
    return replace(base, name="T2xT2", surfaces=base.surfaces + extra, provenance=("block T2xT2",))


@_register("Sigma_gxSigma_h", ("g", "h"), (2, 3))
def _product(g: int, h: int) -> ManifoldClass:
    """Product of closed surfaces with the two fibres meeting once."""
    _need(g >= 0 and h >= 0, "genera must be nonnegative")
    e = (2 - 2 * g) * (2 - 2 * h)
    surfaces = _with_meetings([Surface(f"Sigma{g}", g, 0), Surface(f"Sigma{h}" if h != g else f"Sigma{h}'", h, 0)],
                              (f"Sigma{g}", f"Sigma{h}" if h != g else f"Sigma{h}'", 1))
    pres = _product_presentation(g, h)
    return ManifoldClass(f"Sigma{g}xSigma{h}", e, 0, 2 * g + 2 * h,
                         Pi1.TRIVIAL if g == h == 0 else Pi1.PRESENTED, None if g == h == 0 else pres,
                         symplectic=True, surfaces=surfaces, provenance=(f"block Sigma_gxSigma_h({g},{h})",))


@_register("E_n_K", ("n", "g"), (9, 10))
def _enk(n: int, g: int) -> ManifoldClass:
    """Knot-surgered elliptic surface with a genus-g section S of square -n."""
    _need(n >= 1, "n >= 1 required")
    _need(g >= 1, "the fibered knot needs genus g >= 1")
    s = Surface("S", g, -n, complement_simply_connected=True)
    return ManifoldClass(f"E({n})_K", 12 * n, -8 * n, 0, Pi1.TRIVIAL, symplectic=True, minimal=Minimal.YES,
                         spin=_odd_spin([s]), surfaces=(s,), provenance=(f"block E(n)_K(n={n}, g={g})",))


@_register("FPP_H", ("p",), (3,))
def _fpp(p: int) -> ManifoldClass:
    """Fake projective plane with the surface H(p) in the class pH."""
    _need(p >= 3, "p >= 3 required")
    genus = 1 + p * (p + 3) // 2
    h = Surface("H", genus, p * p, pi1_cokernel="1")
    return ManifoldClass(f"FPP_H({p})", 3, 1, 0, Pi1.UNKNOWN, spin=Spin.NONSPIN, symplectic=True,
                         minimal=Minimal.YES, surfaces=(h,), provenance=(f"block FPP_H(p={p})",))


@_register("X_gg2", ("g",), (7,))
def _xgg2(g: int) -> ManifoldClass:
    """Simply connected minimal X_{g,g+2}: genus-2 S, genus-g S1 and S2, genus-(g+1) T."""
    _need(g >= 1, "g >= 1 required")
    surfaces = _with_meetings(
        [Surface("S", 2, 0), Surface("S1", g, -1), Surface("S2", g, -1), Surface("T", g + 1, 0),
         Surface("L1", 1, 0, Kind.LAGRANGIAN, tags=frozenset({"perturbable"})),
         Surface("L2", 1, 0, Kind.LAGRANGIAN, tags=frozenset({"perturbable"}))],
        ("S", "S1", 1), ("S", "S2", 1), ("S", "T", 1))
    return ManifoldClass(f"X_{g},{g + 2}", 4 * g + 2, -2, 0, Pi1.TRIVIAL, symplectic=True, minimal=Minimal.YES,
                         surfaces=surfaces, provenance=(f"block X_gg2(g={g})",))


@_register("X_gg1", ("g",), (2,))
def _xgg1(g: int) -> ManifoldClass:
    """Simply connected minimal X_{g,g+1}: genus-2 S and genus-(g+1) T; for g = 1 also R."""
    _need(g >= 1, "g >= 1 required")
    surfaces = [Surface("S", 2, 0), Surface("T", g + 1, 0)]
    pairs = [("S", "T", 1)]
    if g == 1:
        surfaces.append(Surface("R", 2, -1))
        pairs.append(("S", "R", 2))
    return ManifoldClass(f"X_{g},{g + 1}", 4 * g + 1, -1, 0, Pi1.TRIVIAL, symplectic=True, minimal=Minimal.YES,
                         surfaces=_with_meetings(surfaces, *pairs), provenance=(f"block X_gg1(g={g})",))


def _surgered(name: str, g: int, h: int, count: int, m: int, pres: GroupPresentation | None) -> ManifoldClass:
    """Product Sigma_g x Sigma_h after ``count`` Luttinger surgeries and one
    m-surgery on Lagrangian tori away from the two fibres."""
    base = _product(g, h)
    tori = tuple(Surface(f"T{i}", 1, 0, Kind.LAGRANGIAN) for i in range(1, count + 2))
    X = replace(base, surfaces=base.surfaces + tori)
    for t in tori[:-1]:
        X = luttinger(X, t.name, Fraction(1, 1))
    X = torus_surgery(X, tori[-1].name, m)
    pi1 = Pi1.PRESENTED if pres is not None else Pi1.UNKNOWN
    return replace(X, name=name, pi1=pi1, presentation=pres, b1=None,
                   minimal=Minimal.YES if m == 1 else Minimal.UNKNOWN,
                   provenance=X.provenance + ((f"relations listed as holding attached ({pres.name})",) if pres else ()))


@_register("Y_n", ("n", "m"), (2, 1))
def _yn(n: int, m: int) -> ManifoldClass:
    """Y_n(m): Sigma2 x Sigma_n after 2n+3 Luttinger surgeries and one m-surgery."""
    _need(n >= 2, "n >= 2 required")
    _need(m >= 1, "m >= 1 required")
    X = _surgered(f"Y_{n}({m})", 2, n, 2 * n + 3, m, luttinger_relations_yn(n, m))
    # same integer cohomology as (2n-3)(S2 x S2)
    return replace(X, b1=0)


@_register("Y_n1", ("n", "m"), (2, 1))
def _yn1(n: int, m: int) -> ManifoldClass:
    """Y_n(1,m): Sigma_n x T2 after 2n-1 Luttinger surgeries and one m-surgery."""
    _need(n >= 2, "n >= 2 required")
    _need(m >= 1, "m >= 1 required")
    return _surgered(f"Y_{n}(1,{m})", n, 1, 2 * n - 1, m, luttinger_relations_yn1(n, m))


@_register("Z_n", ("n", "m"), (2, 1))
def _zn(n: int, m: int) -> ManifoldClass:
    """Z_n(m): the same surgeries performed on Sigma3 x Sigma_n."""
    _need(n >= 2, "n >= 2 required")
    _need(m >= 1, "m >= 1 required")
    return _surgered(f"Z_{n}({m})", 3, n, 2 * n + 3, m, None)


@_register("M_n", ("n",), (1,))
def _mn(n: int) -> ManifoldClass:
    """Degree-n unramified cover of the Cartwright-Steger surface."""
    _need(n >= 1, "n >= 1 required")
    return ManifoldClass(f"M_{n}", 3 * n, n, 2 if n == 1 else None, Pi1.UNKNOWN, symplectic=True,
                         minimal=Minimal.YES, provenance=(f"block M_n(n={n})",))


def _nodal_copies(names, cokernel):
    return tuple(Surface(nm, 4, -1, nodes=1, pi1_cokernel=cokernel) for nm in names)


@_register("Mtilde")
def _mtilde() -> ManifoldClass:
    """Z2xZ2 cover of M_1 with the four disjoint nodal genus-4 curves E, E_b, E_c, E_d."""
    surfaces = _nodal_copies(("E", "E_b", "E_c", "E_d"), "1")
    return ManifoldClass("Mtilde", 12, 4, None, Pi1.UNKNOWN, spin=Spin.NONSPIN, symplectic=True,
                         minimal=Minimal.YES, surfaces=surfaces, provenance=("block Mtilde",))


@_register("M2")
def _m2() -> ManifoldClass:
    """Double cover of M_1 with the two nodal genus-4 curves E, E_b of pi1 cokernel Z2."""
    surfaces = _nodal_copies(("E", "E_b"), "Z2")
    return ManifoldClass("M2", 6, 2, None, Pi1.UNKNOWN, spin=Spin.NONSPIN, symplectic=True,
                         minimal=Minimal.YES, surfaces=surfaces, provenance=("block M2",))


@lru_cache(maxsize=None)
def _w_cached() -> ManifoldClass:
    from .arrangement import BUILTIN_COVERS, cover_manifold, divisor_model, hesse
    return cover_manifold(divisor_model(hesse()), BUILTIN_COVERS["phi_valid"], name="W")


@_register("W")
def _w() -> ManifoldClass:
    """Z3^2 cover of CP2 # 9mCP2 branched along the Hesse configuration, with its 21 curve lifts."""
    return _w_cached()


# -- manifest --------------------------------------------------------------------

def manifest_text() -> str:
    """Documented table of every block at its sample parameters."""
    out = [f"# geow block manifest v{MANIFEST_VERSION}",
           "# name | params | sample | e | sigma | c1sq | chi_h | pi1 | surfaces (name:genus:square)"]
    for name in sorted(REGISTRY):
        spec = REGISTRY[name]
        X = block(name, *spec.sample)
        chi = str(X.chi_h) if X.chi_integral else str(X.chi)
        surf = " ".join(f"{s.name}:{s.genus}:{s.square}" for s in X.surfaces) or "-"
        params = ",".join(spec.params) or "-"
        sample = ",".join(map(str, spec.sample)) or "-"
        out.append(f"{name} | {params} | {sample} | {X.e} | {X.sigma} | {X.c1sq} | {chi} | {X.pi1.value} | {surf}")
    return "\n".join(out) + "\n"


def shipped_manifest() -> str:
    from importlib.resources import files
    return files("geow").joinpath("data/blocks.manifest").read_text(encoding="utf-8")
