"""Evaluate parsed recipes against the invariant, cover and group kernels.

Statements run in order. An assertion failure is recorded and evaluation
continues; an operation whose preconditions fail aborts the recipe with the
provenance gathered so far.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from ..arrangement import (Arrangement, ArrangementError, CoverData, CoverError, CoverInvariants, CurveLift,
                           ValidationReport, canonical_and_chern, cover_manifold, divisor_model, lift_curve,
                           load_arrangement, load_cover, sigma9_package, validate_cover)
from ..blocks import ALIASES, REGISTRY, block
from ..groups import (CATALOG, CosetError, GroupPresentation, WordError, abelianization, catalog_presentation,
                      coset_enumeration, load_presentation, luttinger_relations_yn, luttinger_relations_yn1,
                      parse_word, surface_group)
from ..invariants import (ClassificationRefused, InvariantError, ManifoldClass, Minimal, Pi1, Spin,
                          blow_up, blow_up_node, bmy_check, cite, classify_homeo, connected_sum, knot_surgery,
                          luttinger, resolve, symplectic_sum, torus_surgery)
from .printer import format_statement
from .syntax import Assert, Attr, Call, Expr, Form, Frac, Int, Let, Name, Recipe, Str


class EvalError(Exception):
    def __init__(self, message: str, node=None):
        self.line = getattr(node, "line", 0)
        self.col = getattr(node, "col", 0)
        super().__init__(f"{self.line}:{self.col}: {message}" if self.line else message)
        self.message = message


@dataclass(frozen=True)
class Symbol:
    """An unbound bare identifier, used for names of surfaces, knots, tags."""
    text: str


@dataclass(frozen=True)
class SurfaceRef:
    manifold: ManifoldClass
    name: str

    @property
    def surface(self):
        return self.manifold.surface(self.name)


@dataclass(frozen=True)
class CoverResult:
    manifold: ManifoldClass
    invariants: CoverInvariants
    validation: ValidationReport


@dataclass
class StatementResult:
    index: int
    source: str
    kind: str
    status: str  # ok, pass, fail, error
    detail: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"index": self.index, "source": self.source, "kind": self.kind,
                "status": self.status, "detail": list(self.detail)}


@dataclass
class Report:
    recipe: str
    results: list[StatementResult] = field(default_factory=list)
    bindings: dict[str, Any] = field(default_factory=dict)
    error: EvalError | None = None
    trail: list[str] = field(default_factory=list)

    @property
    def assertions(self) -> list[StatementResult]:
        return [r for r in self.results if r.kind == "assert"]

    @property
    def failed(self) -> list[StatementResult]:
        return [r for r in self.assertions if r.status == "fail"]

    @property
    def passed(self) -> bool:
        return self.error is None and not self.failed

    def text(self) -> str:
        lines = [f"recipe {self.recipe or '<input>'}"]
        for r in self.results:
            mark = {"ok": "", "pass": "  PASS", "fail": "  FAIL", "error": "  ERROR"}[r.status]
            lines.append(f"  [{r.index}] {r.source}{mark}")
            lines += [f"      {d}" for d in r.detail]
        if self.error is not None:
            lines.append(f"  aborted: {self.error}")
            lines += [f"    trail: {t}" for t in self.trail]
        n = len(self.assertions)
        ok = n - len(self.failed)
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {verdict} ({ok}/{n} assertions)")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "schema": "geow.report/1",
            "recipe": self.recipe,
            "passed": self.passed,
            "assertions": {"total": len(self.assertions), "failed": len(self.failed)},
            "statements": [r.to_dict() for r in self.results],
            "bindings": {k: _value_dict(v) for k, v in self.bindings.items()},
            "error": None if self.error is None else {
                "message": self.error.message, "line": self.error.line, "col": self.error.col,
                "trail": list(self.trail)},
        }


def _value_dict(v) -> Any:
    if isinstance(v, ManifoldClass):
        return v.to_dict()
    if isinstance(v, CoverResult):
        d = v.manifold.to_dict()
        d["cover"] = {"K2": v.invariants.K2, "e": v.invariants.e, "chi_h": v.invariants.chi_h,
                      "valid": v.validation.ok, "checks": v.validation.lines()}
        return d
    if isinstance(v, CurveLift):
        return {"curve": v.curve, "genus": v.genus, "KC": v.KC, "square": v.square,
                "branch_points": v.branch_points, "degree": v.degree,
                "audit": {k: str(x) for k, x in v.audit.items()}}
    if isinstance(v, GroupPresentation):
        return {"generators": list(v.generators), "relators": [str(r) for r in v.relators],
                "h1": str(abelianization(v))}
    if isinstance(v, SurfaceRef):
        return {"manifold": v.manifold.name, **v.surface.to_dict()}
    return str(v)


def _describe(v) -> list[str]:
    if isinstance(v, ManifoldClass):
        return [v.summary()]
    if isinstance(v, CoverResult):
        out = [v.manifold.summary(), " ".join(v.invariants.lines()[:4])]
        if not v.validation.ok:
            out.append("cover validation FAILED: " + ", ".join(c.name for c in v.validation.failed()))
        return out
    if isinstance(v, CurveLift):
        return [v.line()]
    if isinstance(v, GroupPresentation):
        return [f"{len(v.generators)} generators, {len(v.relators)} relators, H1 = {abelianization(v)}"]
    if isinstance(v, SurfaceRef):
        return [f"{v.manifold.name}.{v.surface.describe()}"]
    return [str(v)]


_KERNEL_ERRORS = (InvariantError, ArrangementError, CoverError, WordError, CosetError, ValueError, OSError)


class Evaluator:
    def __init__(self, base_dir: str | Path | None = None):
        self.base = Path(base_dir) if base_dir else Path.cwd()
        self.env: dict[str, Any] = {}
        self.touched: list[ManifoldClass] = []

    # -- values ----------------------------------------------------------

    def value(self, e: Expr):
        if isinstance(e, Int):
            return e.value
        if isinstance(e, Frac):
            return Fraction(e.num, e.den)
        if isinstance(e, Str):
            return e.value
        if isinstance(e, Form):
            return e
        if isinstance(e, Name):
            return self.name(e)
        if isinstance(e, Attr):
            base = self.value(e.base)
            m = self._manifold(base, e.base)
            try:
                m.surface(e.attr)
            except InvariantError as exc:
                raise EvalError(f"{exc}; surfaces: {', '.join(m.surface_names()) or 'none'}", e) from None
            return SurfaceRef(m, e.attr)
        if isinstance(e, Call):
            return self.call(e)
        raise EvalError(f"cannot evaluate {e!r}")

    def name(self, e: Name):
        if e.id in self.env:
            return self.env[e.id]
        if e.id in ("yes", "true"):
            return True
        if e.id in ("no", "false"):
            return False
        if e.id in REGISTRY or e.id in ALIASES:
            spec = REGISTRY[ALIASES.get(e.id, e.id)]
            if not spec.params:
                return self._track(block(e.id))
        return Symbol(e.id)

    def _track(self, m: ManifoldClass) -> ManifoldClass:
        self.touched.append(m)
        return m

    def _manifold(self, v, node) -> ManifoldClass:
        if isinstance(v, CoverResult):
            return v.manifold
        if isinstance(v, ManifoldClass):
            return v
        raise EvalError(f"expected a manifold, got {_kind(v)}", node)

    def _surface(self, v, node) -> SurfaceRef:
        if not isinstance(v, SurfaceRef):
            raise EvalError(f"expected a surface selector like X.S, got {_kind(v)}", node)
        return v

    def _text(self, v, node) -> str:
        if isinstance(v, Symbol):
            return v.text
        if isinstance(v, str):
            return v
        raise EvalError(f"expected a name, got {_kind(v)}", node)

    def _int(self, v, node) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            raise EvalError(f"expected an integer, got {_kind(v)}", node)
        return v

    def _bool(self, v, node) -> bool:
        if not isinstance(v, bool):
            raise EvalError(f"expected yes or no, got {_kind(v)}", node)
        return v

    def _arrangement(self, v, node) -> Arrangement:
        if isinstance(v, Arrangement):
            return v
        ref = self._text(v, node)
        path = self.base / ref
        return load_arrangement(path if isinstance(v, str) and path.exists() else ref)

    def _cover(self, v, node) -> CoverData:
        if isinstance(v, CoverData):
            return v
        ref = self._text(v, node)
        path = self.base / ref
        return load_cover(path if isinstance(v, str) and path.exists() else ref)

    # -- calls ------------------------------------------------------------

    def call(self, c: Call):
        fn = _OPERATIONS.get(c.func)
        if fn is None:
            if c.func in REGISTRY or c.func in ALIASES:
                if c.keywords():
                    raise EvalError("block parameters are positional", c)
                params = [self._int(self.value(a), a) for a in c.positional()]
                return self._track(block(c.func, *params))
            raise EvalError(f"unknown operation {c.func!r}", c)
        pos = [(self.value(a), a) for a in c.positional()]
        kw = {k: (self.value(v), v) for k, v in c.keywords().items()}
        return fn(self, c, pos, kw)

    # -- statements -------------------------------------------------------

    def run(self, recipe: Recipe) -> Report:
        report = Report(recipe.name)
        for i, stmt in enumerate(recipe.statements, 1):
            source = format_statement(stmt)
            try:
                if isinstance(stmt, Let):
                    res = self.let(stmt, i, source)
                else:
                    res = self.check(stmt, i, source)
            except EvalError as exc:
                report.results.append(StatementResult(i, source, _stmt_kind(stmt), "error", [exc.message]))
                report.error = exc
                report.trail = self._trail(i)
                break
            except _KERNEL_ERRORS as exc:
                err = EvalError(str(exc), stmt)
                report.results.append(StatementResult(i, source, _stmt_kind(stmt), "error", [str(exc)]))
                report.error = err
                report.trail = self._trail(i)
                break
            report.results.append(res)
        report.bindings = dict(self.env)
        return report

    def _trail(self, upto: int) -> list[str]:
        seen, out = set(), []
        for m in self.touched:
            for p in m.provenance:
                if p not in seen:
                    seen.add(p)
                    out.append(p)
        return out

    def let(self, stmt: Let, i: int, source: str) -> StatementResult:
        if stmt.name in self.env:
            raise EvalError(f"{stmt.name} is already bound", stmt)
        v = self.value(stmt.expr)
        if isinstance(v, ManifoldClass):
            v = self._track(replace(v, name=stmt.name))
        elif isinstance(v, CoverResult):
            v = replace(v, manifold=self._track(replace(v.manifold, name=stmt.name)))
        self.env[stmt.name] = v
        return StatementResult(i, source, "let", "ok", _describe(v))

    def check(self, stmt: Assert, i: int, source: str) -> StatementResult:
        fn = _ASSERTIONS.get(stmt.check.func)
        if fn is None:
            raise EvalError(f"unknown assertion {stmt.check.func!r}", stmt.check)
        ok, detail = fn(self, stmt)
        return StatementResult(i, source, "assert", "pass" if ok else "fail", detail)

    def rebind(self, node: Expr, new: ManifoldClass) -> None:
        """Citations upgrade the binding they were stated about."""
        if isinstance(node, Name) and node.id in self.env:
            old = self.env[node.id]
            if isinstance(old, CoverResult):
                self.env[node.id] = replace(old, manifold=new)
            else:
                self.env[node.id] = new
            self._track(new)


def _kind(v) -> str:
    if isinstance(v, Symbol):
        return f"name {v.text!r}"
    if isinstance(v, SurfaceRef):
        return f"surface {v.manifold.name}.{v.name}"
    if isinstance(v, ManifoldClass):
        return f"manifold {v.name}"
    return type(v).__name__.lower() if not isinstance(v, (int, str)) else repr(v)


def _stmt_kind(stmt) -> str:
    return "let" if isinstance(stmt, Let) else "assert"


# -- operations -----------------------------------------------------------------

def _arity(c: Call, pos, lo: int, hi: int | None = None, keys: tuple[str, ...] = (), kw=None) -> None:
    hi = lo if hi is None else hi
    if not lo <= len(pos) <= hi:
        want = str(lo) if lo == hi else f"{lo}..{hi}"
        raise EvalError(f"{c.func} takes {want} positional argument(s), got {len(pos)}", c)
    for k in kw or {}:
        if k not in keys:
            raise EvalError(f"{c.func} has no parameter {k!r}", c)


def _op_connected_sum(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, kw=kw)
    (a, na), (b, nb) = pos
    return connected_sum(ev._manifold(a, na), ev._manifold(b, nb))


def _op_blow_up(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 1, 2, ("points",), kw)
    target, node = pos[0]
    k = ev._int(pos[1][0], pos[1][1]) if len(pos) > 1 else 1
    if isinstance(target, SurfaceRef):
        points = ev._int(*kw["points"]) if "points" in kw else k
        return blow_up(target.manifold, k, on=[(target.name, points)])
    if "points" in kw:
        raise EvalError("points= needs a surface target", c)
    return blow_up(ev._manifold(target, node), k)


def _op_blow_up_node(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 1, keys=("sphere",), kw=kw)
    ref = ev._surface(*pos[0])
    sphere = ev._text(*kw["sphere"]) if "sphere" in kw else None
    m, _, _ = blow_up_node(ref.manifold, ref.name, sphere=sphere)
    return m


def _op_resolve(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, 16, ("k", "name"), kw)
    refs = [ev._surface(v, n) for v, n in pos]
    for r, (_, n) in zip(refs[1:], pos[1:]):
        if r.manifold != refs[0].manifold:
            raise EvalError(f"{r.name} does not live in the same manifold as {refs[0].name}", n)
    k = ev._int(*kw["k"]) if "k" in kw else 1
    name = ev._text(*kw["name"]) if "name" in kw else None
    m, current = refs[0].manifold, refs[0].name
    for r in refs[1:]:
        m, s = resolve(m, current, r.name, k, name=name)
        current = s.name
    return m


def _op_symsum(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, keys=("usher",), kw=kw)
    a, b = ev._surface(*pos[0]), ev._surface(*pos[1])
    usher = ev._bool(*kw["usher"]) if "usher" in kw else False
    return symplectic_sum(a.manifold, a.name, b.manifold, b.name, usher=usher)


def _relator(ev: Evaluator, kw):
    if "relator" not in kw:
        return None
    return parse_word(ev._text(*kw["relator"]))


def _op_luttinger(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 1, 2, ("relator",), kw)
    ref = ev._surface(*pos[0])
    coeff = pos[1][0] if len(pos) > 1 else 1
    if isinstance(coeff, bool) or not isinstance(coeff, (int, Fraction)):
        raise EvalError("Luttinger coefficient must be a number like 1/2", pos[1][1])
    return luttinger(ref.manifold, ref.name, coeff, _relator(ev, kw))


def _op_torus_surgery(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, keys=("relator",), kw=kw)
    ref = ev._surface(*pos[0])
    return torus_surgery(ref.manifold, ref.name, ev._int(*pos[1]), _relator(ev, kw))


def _op_knot_surgery(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, keys=("fibered",), kw=kw)
    ref = ev._surface(*pos[0])
    fibered = ev._bool(*kw["fibered"]) if "fibered" in kw else False
    return knot_surgery(ref.manifold, ref.name, ev._text(*pos[1]), fibered)


def _cover_inputs(ev: Evaluator, pos):
    d = divisor_model(ev._arrangement(*pos[0]))
    return d, ev._cover(*pos[1])


def _op_cover(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, kw=kw)
    d, cov = _cover_inputs(ev, pos)
    inv = canonical_and_chern(d, cov, require_valid=False)
    return CoverResult(cover_manifold(d, cov, require_valid=False), inv, validate_cover(d, cov))


def _op_sigma9(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 2, keys=("line", "blowup"), kw=kw)
    d, cov = _cover_inputs(ev, pos)
    line = ev._text(*kw["line"]) if "line" in kw else "l1"
    pkg = sigma9_package(d, cov, line=line)
    if "blowup" in kw and not ev._bool(*kw["blowup"]):
        return pkg.resolved
    return pkg.blown_up


def _op_lift(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 3, kw=kw)
    d, cov = _cover_inputs(ev, pos)
    return lift_curve(d, cov, ev._text(*pos[2]))


def _op_generic(ev: Evaluator, c, pos, kw):
    """``generic(p1)``: a generic line through a marked point, for ``lift``."""
    _arity(c, pos, 1, kw=kw)
    return Symbol("generic:" + ev._text(*pos[0]))


def _op_presentation(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 1, keys=tuple(kw), kw=kw)
    ref, node = pos[0]
    params = {k: ev._int(*v) for k, v in kw.items()}
    if isinstance(ref, Symbol) and ref.text in CATALOG:
        return catalog_presentation(ref.text)
    text = ev._text(ref, node)
    path = ev.base / text
    if not path.exists():
        from ..corpus import corpus_path
        path = corpus_path(text)
    return load_presentation(path, params)


def _op_relations(fn: Callable[[int, int], GroupPresentation]):
    def op(ev: Evaluator, c, pos, kw):
        _arity(c, pos, 1, 2, kw=kw)
        n = ev._int(*pos[0])
        m = ev._int(*pos[1]) if len(pos) > 1 else 1
        return fn(n, m)
    return op


def _op_surface_group(ev: Evaluator, c, pos, kw):
    _arity(c, pos, 1, kw=kw)
    return surface_group(ev._int(*pos[0]))


_OPERATIONS = {
    "connected_sum": _op_connected_sum,
    "blow_up": _op_blow_up,
    "blow_up_node": _op_blow_up_node,
    "resolve": _op_resolve,
    "symsum": _op_symsum,
    "symplectic_sum": _op_symsum,
    "luttinger": _op_luttinger,
    "torus_surgery": _op_torus_surgery,
    "knot_surgery": _op_knot_surgery,
    "cover": _op_cover,
    "sigma9": _op_sigma9,
    "lift": _op_lift,
    "generic": _op_generic,
    "presentation": _op_presentation,
    "relations_yn": _op_relations(luttinger_relations_yn),
    "relations_yn1": _op_relations(luttinger_relations_yn1),
    "surface_group": _op_surface_group,
}


# -- assertions -------------------------------------------------------------------

def _target(ev: Evaluator, stmt: Assert, keys: tuple[str, ...] = (), extra: int = 0):
    c = stmt.check
    pos = c.positional()
    kw = c.keywords()
    if len(pos) != 1 + extra:
        raise EvalError(f"{c.func} takes {1 + extra} positional argument(s)", c)
    for k in kw:
        if k not in keys:
            raise EvalError(f"{c.func} has no parameter {k!r}", c)
    return pos, kw


def _compare(label: str, got, want) -> tuple[bool, str]:
    ok = got == want
    return ok, f"{label} = {got}" + ("" if ok else f" (expected {want})")


def _a_invariants(ev: Evaluator, stmt: Assert):
    pos, kw = _target(ev, stmt, ("e", "sigma", "c1sq", "chi", "b1", "b2"))
    m = ev._manifold(ev.value(pos[0]), pos[0])
    got = {"e": m.e, "sigma": m.sigma, "c1sq": m.c1sq, "chi": m.chi, "b1": m.b1, "b2": m.b2}
    ok, detail = True, []
    for k, node in kw.items():
        want = ev.value(node)
        if isinstance(want, bool) or not isinstance(want, (int, Fraction)):
            raise EvalError(f"{k} must be a number", node)
        good, line = _compare(k, got[k], want)
        ok &= good
        detail.append(line)
    return ok, detail


def _a_homeo(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt, extra=1)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    want = pos[1]
    try:
        form = classify_homeo(m)
    except ClassificationRefused as exc:
        refused = isinstance(want, Name) and want.id == "refused"
        return refused, [f"classification refused: {exc}"]
    if not isinstance(want, Form):
        return False, [f"classified as {form}, expected refusal"]
    ok = (form.p, form.q) == (want.p, want.q)
    return ok, [f"homeomorphic to {form}" + ("" if ok else f" (expected {want.p} CP2 # {want.q} mCP2)")]


def _a_bmy(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt, extra=1)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    want = ev._text(ev.value(pos[1]), pos[1])
    got = bmy_check(m).value
    ok, line = _compare("BMY", got, want)
    return ok, [f"c1sq = {m.c1sq}, 9 chi_h = {9 * m.chi}", line]


def _cited(ev: Evaluator, stmt: Assert, label: str, derived: bool, clash: str | None,
           apply: Callable[[ManifoldClass, str], ManifoldClass]):
    node = stmt.check.positional()[0]
    m = ev._manifold(ev.value(node), node)
    if derived:
        return True, [f"{label}: derived" + (f" (tag {stmt.tag} not needed)" if stmt.tag else "")]
    if clash:
        return False, [f"{label}: contradicts derived {clash}"]
    if stmt.tag is None:
        return False, [f"{label}: not derivable from the calculus; cite with 'by <tag>'"]
    ev.rebind(node, apply(m, stmt.tag))
    return True, [f"{label}: cited [{stmt.tag}]"]


def _a_simply_connected(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    clash = m.pi1.value if m.pi1 not in (Pi1.TRIVIAL, Pi1.UNKNOWN) else None
    return _cited(ev, stmt, "pi1 trivial", m.pi1 is Pi1.TRIVIAL, clash,
                  lambda x, tag: cite(x, tag, pi1=Pi1.TRIVIAL))


def _a_pi1(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt, extra=1)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    text = ev._text(ev.value(pos[1]), pos[1])
    try:
        want = Pi1(text)
    except ValueError:
        raise EvalError(f"unknown pi1 value {text!r}; use Trivial or Z2", pos[1]) from None
    clash = m.pi1.value if m.pi1 not in (want, Pi1.UNKNOWN) else None
    return _cited(ev, stmt, f"pi1 {want.value}", m.pi1 is want, clash,
                  lambda x, tag: cite(x, tag, pi1=want))


def _a_nonspin(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    clash = "Spin" if m.spin is Spin.SPIN else None
    return _cited(ev, stmt, "odd intersection form", m.spin is Spin.NONSPIN, clash,
                  lambda x, tag: cite(x, tag, spin=Spin.NONSPIN))


def _a_symplectic(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    return m.symplectic, [f"symplectic = {str(m.symplectic).lower()}"]


def _a_minimal(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    return m.minimal is Minimal.YES, [f"minimal = {m.minimal.value}"]


def _a_family(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    m = ev._manifold(ev.value(pos[0]), pos[0])
    tags = [p for p in m.provenance if "family:" in p]
    return bool(tags), tags or ["no family tag in provenance"]


def _a_surface(ev: Evaluator, stmt: Assert):
    pos, kw = _target(ev, stmt, ("genus", "square", "kc"))
    v = ev.value(pos[0])
    if isinstance(v, CurveLift):
        got = {"genus": v.genus, "square": v.square, "kc": v.KC}
        detail_head = [v.line()] + [f"{k}: {x}" for k, x in v.audit.items()]
    elif isinstance(v, SurfaceRef):
        s = v.surface
        got = {"genus": s.genus, "square": s.square, "kc": 2 * s.genus - 2 - s.square}
        detail_head = [f"{v.manifold.name}.{s.describe()}"]
    else:
        raise EvalError(f"expected a surface or lift, got {_kind(v)}", pos[0])
    ok, detail = True, []
    for k, node in kw.items():
        good, line = _compare(k, got[k], ev._int(ev.value(node), node))
        ok &= good
        detail.append(line)
    return ok, detail_head + detail


def _presentation(ev: Evaluator, node) -> GroupPresentation:
    v = ev.value(node)
    if not isinstance(v, GroupPresentation):
        raise EvalError(f"expected a presentation, got {_kind(v)}", node)
    return v


def _a_h1_trivial(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    h1 = abelianization(_presentation(ev, pos[0]))
    return h1.is_trivial, [f"H1 = {h1}"]


def _a_h1(ev: Evaluator, stmt: Assert):
    pos, kw = _target(ev, stmt, ("rank", "torsion"))
    h1 = abelianization(_presentation(ev, pos[0]))
    ok = True
    if "rank" in kw:
        ok &= h1.rank == ev._int(ev.value(kw["rank"]), kw["rank"])
    if "torsion" in kw:
        want = ev._text(ev.value(kw["torsion"]), kw["torsion"])
        ok &= " ".join(map(str, h1.torsion)) == want.strip()
    return ok, [f"H1 = {h1}"]


def _a_index(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt, extra=2)
    p = _presentation(ev, pos[0])
    gens = ev._text(ev.value(pos[1]), pos[1])
    words = [parse_word(w) for w in gens.split(",") if w.strip()]
    table = coset_enumeration(p, words)
    ok, line = _compare("index", table.index, ev._int(ev.value(pos[2]), pos[2]))
    return ok, [line]


def _a_cover_valid(ev: Evaluator, stmt: Assert):
    pos, _ = _target(ev, stmt)
    v = ev.value(pos[0])
    if not isinstance(v, CoverResult):
        raise EvalError(f"expected a cover, got {_kind(v)}", pos[0])
    return v.validation.ok, v.validation.lines()


_ASSERTIONS = {
    "invariants": _a_invariants,
    "homeo": _a_homeo,
    "bmy": _a_bmy,
    "simply_connected": _a_simply_connected,
    "pi1": _a_pi1,
    "nonspin": _a_nonspin,
    "symplectic": _a_symplectic,
    "minimal": _a_minimal,
    "family": _a_family,
    "surface": _a_surface,
    "h1_trivial": _a_h1_trivial,
    "h1": _a_h1,
    "index": _a_index,
    "cover_valid": _a_cover_valid,
}

OPERATIONS = tuple(sorted(_OPERATIONS))
ASSERTIONS = tuple(sorted(_ASSERTIONS))


def evaluate(recipe: Recipe, base_dir: str | Path | None = None) -> Report:
    return Evaluator(base_dir).run(recipe)
