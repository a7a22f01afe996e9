"""Command line front end: ``geow eval|check|cover|group|scan|fmt|blocks``.

Exit codes: 0 success, 1 failed assertion or validation, 2 usage error,
missing file or syntax error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .arrangement import (ArrangementError, CoverError, canonical_and_chern, divisor_model, lift_curve,
                          load_arrangement, load_cover, search_covers, validate_cover, cover_text)
from .blocks import BlockError, block, manifest_text
from .corpus import corpus_path, group_files, recipes
from .dsl import ParseError, format_recipe, parse_file
from .dsl.evaluator import Report, evaluate
from .geography import geography_scan
from .groups import (CosetError, WordError, abelianization, coset_enumeration, is_normal, load_presentation,
                     parse_word, quotient_identify)
from .invariants import InvariantError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, doc: dict) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2, default=str) + "\n")
    else:
        sys.stdout.write(text)


def _existing(path: str) -> Path:
    p = Path(path)
    if p.is_file():
        return p
    try:
        return corpus_path(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None


def _params(items: Sequence[str]) -> dict[str, int]:
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects NAME=INT, got {item!r}")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"--param value must be an integer: {item!r}") from None
    return out


# -- eval / check / fmt ----------------------------------------------------------

def _run_recipe(path: Path) -> Report:
    return evaluate(parse_file(path), path.parent)


def cmd_eval(args) -> int:
    path = _existing(args.file)
    report = _run_recipe(path)
    _emit(args, report.text(), report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_check(args) -> int:
    if args.corpus:
        paths = recipes()
    elif args.files:
        paths = [_existing(f) for f in args.files]
    else:
        raise UsageError("check needs --corpus or recipe files")
    start = time.perf_counter()
    reports = [(p, _run_recipe(p)) for p in paths]
    lines, docs = [], []
    for p, rep in reports:
        n = len(rep.assertions)
        verdict = "PASS" if rep.passed else "FAIL"
        lines.append(f"{verdict} {p.name} ({n - len(rep.failed)}/{n} assertions)")
        if not rep.passed or args.verbose:
            lines += ["  " + l for l in rep.text().splitlines()]
        docs.append(rep.to_dict())
    groups = []
    if args.corpus:
        for g in group_files():
            h1 = abelianization(load_presentation(g))
            groups.append({"file": g.name, "h1": str(h1)})
            lines.append(f"group {g.name}: H1 = {h1}")
    ok = sum(rep.passed for _, rep in reports)
    lines.append(f"{ok}/{len(reports)} recipes pass")
    if args.timing:
        lines.append(f"elapsed {time.perf_counter() - start:.2f}s")
    doc = {"schema": "geow.check/1", "passed": ok, "total": len(reports), "reports": docs, "groups": groups}
    _emit(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK if ok == len(reports) else EXIT_FAIL


def cmd_fmt(args) -> int:
    recipe = parse_file(_existing(args.file))
    sys.stdout.write(format_recipe(recipe))
    return EXIT_OK


# -- cover ----------------------------------------------------------------------------

def cmd_cover(args) -> int:
    arr = load_arrangement(args.arrangement)
    d = divisor_model(arr)
    if args.search:
        found = search_covers(d, args.n, args.k, limit=1)
        if not found:
            _emit(args, "no valid assignment found\n", {"schema": "geow.cover/1", "found": None})
            return EXIT_FAIL
        c = found[0]
    else:
        if args.phi is None:
            raise UsageError("cover needs a phi (builtin name or file) or --search")
        path = Path(args.phi)
        c = load_cover(path if path.is_file() else args.phi)
    report = validate_cover(d, c)
    inv = canonical_and_chern(d, c, require_valid=False)
    lines = [f"arrangement {arr.name or args.arrangement}: {len(arr.points)} points, {len(arr.lines)} lines",
             f"cover {c.name or 'phi'}: group {c.group_name}", "validation:"]
    lines += ["  " + l for l in report.lines()]
    lines += [f"K^2 = {inv.K2}", f"e = {inv.e}",
              f"chi_h = {inv.chi_h if inv.chi_h is not None else 'non-integral'}"]
    if inv.sigma is not None:
        lines.append(f"sigma = {inv.sigma}")
    if inv.bmy is not None:
        lines.append(f"BMY {inv.bmy.value}")
    lines += [f"  {k}: {v}" for k, v in inv.audit.items()]
    lifts = []
    if args.lifts:
        for curve in list(d.components) + [f"generic:{p}" for p in arr.points[:1]]:
            lift = lift_curve(d, c, curve)
            lifts.append({"curve": lift.curve, "genus": lift.genus, "KC": lift.KC, "square": lift.square,
                          "assumption": lift.audit["assumption"]})
            lines.append(f"lift {lift.line()} [assumes {lift.audit['assumption']}]")
    if args.search:
        lines.append("assignment:")
        lines += ["  " + l for l in cover_text(c).splitlines()]
    if not report.ok:
        lines.append("cover validation FAILED: " + ", ".join(ch.name for ch in report.failed())
                     + " (numbers above use the ramification model regardless)")
    doc = {
        "schema": "geow.cover/1", "arrangement": arr.name, "cover": c.name, "group": c.group_name,
        "valid": report.ok, "checks": report.lines(),
        "K2": inv.K2, "e": inv.e, "chi_h": inv.chi_h, "sigma": inv.sigma,
        "bmy": inv.bmy.value if inv.bmy else None,
        "audit": {k: str(v) for k, v in inv.audit.items()}, "lifts": lifts,
    }
    _emit(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- group ----------------------------------------------------------------------------

def cmd_group_abelianize(args) -> int:
    pres = load_presentation(_existing(args.pres), _params(args.param))
    h1 = abelianization(pres)
    text = f"{len(pres.generators)} generators, {len(pres.relators)} relators\nH1 = {h1}\n"
    _emit(args, text, {"schema": "geow.group/1", "generators": len(pres.generators),
                       "relators": len(pres.relators), "h1": str(h1), "factors": list(h1.factors),
                       "trivial": h1.is_trivial})
    return EXIT_OK


def _subgroup_words(spec: str):
    p = Path(spec)
    text = p.read_text(encoding="utf-8") if p.is_file() else spec.replace(",", "\n")
    words = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.append(parse_word(line))
    return words


def cmd_group_coset(args) -> int:
    pres = load_presentation(_existing(args.pres), _params(args.param))
    table = coset_enumeration(pres, _subgroup_words(args.subgens), args.max_cosets)
    doc = {"schema": "geow.group/1", "status": table.status, "bound": table.bound}
    lines = [table.describe()]
    if table.complete:
        normal = is_normal(table)
        doc.update(index=table.index, normal=normal)
        lines.append(f"normal: {'yes' if normal else 'no'}")
        if normal and table.index <= 64:
            q = quotient_identify(table)
            doc["quotient"] = q
            lines.append(f"quotient: {q}")
    _emit(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK if table.complete else EXIT_FAIL


# -- scan -------------------------------------------------------------------------------

DEFAULT_INVENTORY = ("Mtilde", "X_gg2:1", "X_gg2:2", "X_gg1:1", "X_gg1:2")


def _inventory_item(spec: str):
    name, _, params = spec.partition(":")
    try:
        values = tuple(int(x) for x in params.split(",") if x)
    except ValueError:
        raise UsageError(f"bad block spec {spec!r}; use NAME or NAME:P1,P2") from None
    block(name, *values)
    return (name, *values) if values else name


def _chi_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"--chi expects A..B, got {text!r}") from None


def cmd_scan(args) -> int:
    inventory = [_inventory_item(s) for s in (args.block or DEFAULT_INVENTORY)]
    lo, hi = _chi_range(args.chi)
    found = geography_scan(inventory, args.sigma, (lo, hi), args.max_blowups, args.max_resolve)
    lines = [r.line() for r in found] + [f"{len(found)} recipe(s)"]
    doc = {"schema": "geow.scan/1", "sigma": args.sigma, "chi": [lo, hi],
           "results": [{"e": r.e, "sigma": r.sigma, "chi_h": r.chi_h,
                        "form": str(r.form) if r.form else None, "recipe": r.recipe} for r in found]}
    _emit(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK


def cmd_blocks(args) -> int:
    text = manifest_text()
    _emit(args, text, {"schema": "geow.blocks/1", "manifest": text.splitlines()})
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("text", "json"), default="text")
    # repeated on subcommands without a default so either position works
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = _Parser(prog="geow", description="Invariant bookkeeping for symplectic 4-manifold recipes.",
                parents=[top])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", parents=[fmt], help="evaluate a recipe file")
    e.add_argument("file")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("check", parents=[fmt], help="run recipes and summarize")
    c.add_argument("--corpus", action="store_true", help="run every builtin recipe")
    c.add_argument("--verbose", "-v", action="store_true")
    c.add_argument("--timing", action="store_true")
    c.add_argument("files", nargs="*")
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("fmt", parents=[fmt], help="print a recipe in canonical form")
    f.add_argument("file")
    f.set_defaults(func=cmd_fmt)

    v = sub.add_parser("cover", parents=[fmt], help="invariants of an abelian cover of a line arrangement")
    v.add_argument("arrangement")
    v.add_argument("phi", nargs="?")
    v.add_argument("--search", action="store_true", help="search for a valid assignment instead")
    v.add_argument("--lifts", action="store_true", help="also print curve lifts")
    v.add_argument("-n", type=int, default=3)
    v.add_argument("-k", type=int, default=2)
    v.set_defaults(func=cmd_cover)

    g = sub.add_parser("group", help="finitely presented group tools")
    gsub = g.add_subparsers(dest="group_command", required=True, parser_class=_Parser)
    ga = gsub.add_parser("abelianize", parents=[fmt])
    ga.add_argument("pres")
    ga.add_argument("--param", action="append", metavar="NAME=INT")
    ga.set_defaults(func=cmd_group_abelianize)
    gc = gsub.add_parser("coset", parents=[fmt])
    gc.add_argument("pres")
    gc.add_argument("subgens", help="comma separated words or a file with one word per line")
    gc.add_argument("--max-cosets", type=int, default=None)
    gc.add_argument("--param", action="append", metavar="NAME=INT")
    gc.set_defaults(func=cmd_group_coset)

    s = sub.add_parser("scan", parents=[fmt], help="search two-block symplectic sums")
    s.add_argument("--sigma", type=int, required=True)
    s.add_argument("--chi", required=True, help="range A..B")
    s.add_argument("--block", action="append", metavar="NAME[:P1,P2]")
    s.add_argument("--max-blowups", type=int, default=2)
    s.add_argument("--max-resolve", type=int, default=3)
    s.set_defaults(func=cmd_scan)

    b = sub.add_parser("blocks", parents=[fmt], help="print the block manifest")
    b.set_defaults(func=cmd_blocks)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArrangementError, CoverError, WordError, BlockError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantError, CosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
