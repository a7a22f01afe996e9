"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import random
import time
from fractions import Fraction
from itertools import combinations
from math import gcd

from geow.arrangement import BUILTIN_COVERS, canonical_and_chern, divisor_model, hesse, lift_curve, sigma9_package
from geow.blocks import block
from geow.cli import main
from geow.corpus import corpus_path
from geow.dsl import parse_file
from geow.dsl.evaluator import evaluate
from geow.groups import (CATALOG, abelianization, commutator_pattern_check, coset_enumeration, curve_relation,
                         invariant_factors, is_normal, luttinger_relations_yn, parse_word, quotient_identify,
                         surface_group)
from geow.invariants import (BMY, InvariantError, Kind, ManifoldClass, Pi1, Spin, Surface, blow_up,
                             blow_up_node, bmy_check, classify_homeo, knot_surgery, luttinger, resolve,
                             symplectic_sum, torus_surgery)


def test_criterion_1_hesse_cover(criterion, capsys):
    code = main(["cover", "hesse", "phi_paper"])
    lines = capsys.readouterr().out.splitlines()
    reported = all(x in lines for x in ("K^2 = 144", "e = 48", "chi_h = 16", "BMY OnLine"))
    d = divisor_model(hesse())
    valid = canonical_and_chern(d, BUILTIN_COVERS["phi_valid"])
    same = (valid.K2, valid.e, valid.chi_h, valid.bmy) == (144, 48, 16, BMY.ON_LINE) and valid.valid
    ok = reported and same
    note = "validation of phi_paper fails (exit 1); phi_valid validates with the same numbers" if code == 1 else ""
    assert criterion(1, ok, f"cover hesse phi_paper -> K^2=144 e=48 chi_h=16 BMY OnLine; {note}")
    assert ok


def test_criterion_2_curve_lifts(criterion):
    d = divisor_model(hesse())
    c = BUILTIN_COVERS["phi_valid"]
    lines_ok = all((l.genus, l.square) == (3, -2) for l in (lift_curve(d, c, x) for x in hesse().lines))
    exc_ok = all((l.genus, l.square) == (2, -1) for l in (lift_curve(d, c, f"E{i}") for i in range(1, 10)))
    generic = lift_curve(d, c, "generic:p1")
    pkg = sigma9_package(d, c)
    s_res, s_bu = pkg.resolved.surface("Sigma9"), pkg.blown_up.surface("Sigma9")
    sigma_ok = (s_res.genus, s_res.square, s_bu.genus, s_bu.square) == (9, 1, 9, 0)
    ok = lines_ok and exc_ok and generic.genus == 7 and sigma_ok
    assert criterion(2, ok, f"l_j -> (3,-2); E_i -> (2,-1); generic -> genus {generic.genus}; "
                            f"Sigma9 square {s_res.square} then {s_bu.square}")
    assert ok


EXPECTED = [
    ("Y_sig12.gw", "Y", (112, 12, None, None), (61, 49)),
    ("V_sig11.gw", "V", (109, 11, None, None), (59, 48)),
    ("L_sig11.gw", "L", (117, 11, None, None), (63, 52)),
    ("M_1_10.gw", "M110", (39, 1, 10, 81), (19, 18)),
    ("M_0_9.gw", "M09", (36, 0, 9, 72), (17, 17)),
    ("M_2_10.gw", "M210", (38, 2, 10, 82), (19, 17)),
    ("M_1_9.gw", "M19", (35, 1, 9, 73), (17, 16)),
]


def test_criterion_3_corpus_invariants(criterion):
    failures = []
    for name, binding, (e, s, chi, c1sq), (p, q) in EXPECTED:
        path = corpus_path(name)
        rep = evaluate(parse_file(path), path.parent)
        X = rep.bindings[binding]
        got = (X.e, X.sigma, X.chi_h if chi is not None else None, X.c1sq if c1sq is not None else None)
        form = classify_homeo(X)
        if not rep.passed or got != (e, s, chi, c1sq) or (form.p, form.q) != (p, q):
            failures.append(name)
    path = corpus_path("remark_z2.gw")
    rep = evaluate(parse_file(path), path.parent)
    R = rep.bindings["R"]
    remark_ok = rep.passed and (R.e, R.sigma, R.chi_h, R.pi1) == (4 * 8 - 0, 0, 8, Pi1.Z2)
    if not remark_ok:
        failures.append("remark_z2.gw")
    ok = not failures
    assert criterion(3, ok, "seven corpus recipes reproduce (e, sigma, chi_h, c1sq) and 61#49 59#48 63#52 19#18 "
                            "17#17 19#17 17#16; remark (32, 0, Z2) refused"
                     + (f"; failing: {', '.join(failures)}" if failures else ""))
    assert ok


def test_criterion_4_block_library(criterion):
    checks = []
    checks.append(all((block("X_gg2", g).e, block("X_gg2", g).sigma) == (4 * g + 2, -2) for g in range(1, 21)))
    checks.append(all((block("X_gg1", g).e, block("X_gg1", g).sigma) == (4 * g + 1, -1) for g in range(1, 21)))
    checks.append(all(bmy_check(block("M_n", n)) is BMY.ON_LINE for n in range(1, 11)))
    M = block("Mtilde")
    checks.append((M.e, M.sigma, M.c1sq) == (12, 4, 36))
    checks.append(all(block("FPP_H", p).surface("H").genus == 1 + p * (p + 3) // 2 for p in range(3, 11)))
    enforced = True
    for p in range(3, 11):
        H = block("FPP_H", p)
        g = H.surface("H").genus
        symplectic_sum(H, "H", block("E_n_K", p * p, g), "S")
        try:
            symplectic_sum(H, "H", block("E_n_K", p * p - 1, g), "S")
            enforced = False
        except InvariantError:
            pass
    checks.append(enforced)
    ok = all(checks)
    assert criterion(4, ok, "X_gg2, X_gg1 for g=1..20; M_n on the BMY line n=1..10; Mtilde (12,4,36); "
                            "H(p) genus p=3..10; n = p^2 enforced")
    assert ok


def _det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


def _minors_oracle(M):
    m, n = len(M), len(M[0])
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, _det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            return tuple(out + [0] * (min(m, n) - k + 1))
        out.append(g // prev)
        prev = g
    return tuple(out)


def test_criterion_5_group_kernel(criterion):
    checks = [all(abelianization(luttinger_relations_yn(n)).is_trivial for n in (2, 3, 4))]
    checks.append(abelianization(surface_group(4)).factors == (0,) * 8)
    checks.append(commutator_pattern_check(curve_relation()))
    for name, index, tag in (("Z3", 3, "Z3"), ("Klein4", 4, "Z2xZ2"), ("S3", 6, "S3"), ("Q8", 8, "Q8")):
        t = coset_enumeration(CATALOG[name][0])
        checks.append(t.index == index and is_normal(t) and quotient_identify(t) == tag)
    s3 = coset_enumeration(CATALOG["S3"][0], [parse_word("b")])
    checks.append(s3.index == 3 and not is_normal(s3))
    rng = random.Random(5)
    agree = 0
    for _ in range(200):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        agree += invariant_factors(M) == _minors_oracle(M)
    checks.append(agree == 200)
    ok = all(checks)
    assert criterion(5, ok, f"Y_n H1 trivial n=2,3,4; genus-4 H1 Z^8; zero exponent sums; catalog indices 3,4,6,8 "
                            f"with quotients; SNF = minors on {agree}/200")
    assert ok


def test_criterion_6_property_suites(criterion):
    rng = random.Random(6)
    tori = (Surface("L", 1, 0, Kind.LAGRANGIAN), Surface("P", 1, 0, Kind.LAGRANGIAN, tags=frozenset({"perturbable"})))
    surgery_ok = chi_ok = blow_ok = True
    for _ in range(1000):
        a = ManifoldClass("a", rng.randint(-40, 200), rng.randint(-60, 60), surfaces=tori, symplectic=True)
        n = rng.randint(1, 9)
        outs = (luttinger(a, "L", Fraction(rng.choice([1, -1]), n)), torus_surgery(a, "L", rng.choice([2, 3, -4])),
                knot_surgery(a, "P", "K"))
        surgery_ok &= all((o.e, o.sigma) == (a.e, a.sigma) for o in outs)

        g, s = rng.randint(0, 12), rng.randint(-9, 9)
        x = ManifoldClass("x", rng.randint(-20, 120), rng.randint(-30, 30), symplectic=True, surfaces=(Surface("F", g, s),))
        y = ManifoldClass("y", rng.randint(-20, 120), rng.randint(-30, 30), symplectic=True, surfaces=(Surface("G", g, -s),))
        z = symplectic_sum(x, "F", y, "G")
        chi_ok &= z.e == x.e + y.e + 4 * g - 4
        if x.chi_integral and y.chi_integral:
            chi_ok &= z.chi_h == x.chi_h + y.chi_h + g - 1

        p, q = rng.randint(0, 100), rng.randint(0, 100)
        c = ManifoldClass("c", p + q + 2, p - q, 0, Pi1.TRIVIAL, spin=Spin.NONSPIN)
        f0, f1 = classify_homeo(c), classify_homeo(blow_up(c, 1))
        blow_ok &= (f1.p, f1.q) == (f0.p, f0.q + 1)
    M, _, _ = blow_up_node(block("Mtilde"), "E", sphere="e1")
    _, s5 = resolve(M, "E", "e1", 2)
    node_ok = (s5.genus, s5.square) == (5, -2)
    inv = canonical_and_chern(divisor_model(hesse()), BUILTIN_COVERS["phi_valid"])
    euler_ok = inv.e == 48 and inv.audit["grouped sum"].endswith("= 48") and inv.audit["strata sum"].endswith("= 48")
    ok = surgery_ok and chi_ok and blow_ok and node_ok and euler_ok
    assert criterion(6, ok, "1000 surgeries keep (e, sigma); chi_h and e formulas agree; blow-up adds one to q; "
                            f"node route gives ({s5.genus}, {s5.square}); strata = grouping = {inv.e}")
    assert ok


def test_criterion_7_corpus_runtime(criterion, capsys):
    start = time.perf_counter()
    code = main(["check", "--corpus"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    ok = code == 0 and elapsed < 10 and out.splitlines()[-1] == "9/9 recipes pass"
    assert criterion(7, ok, f"check --corpus exit {code}, {out.splitlines()[-1]}, {elapsed:.2f}s")
    assert ok
