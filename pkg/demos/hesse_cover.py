"""
Abelian cover of the blown-up Hesse arrangement
===============================================

Builds the divisor model of the twelve-line arrangement blown up at its
nine marked points, checks two candidate Z3^2 assignments, and reports
the invariants of the smooth cover together with the lifts of a few
curves.
"""

from geow.arrangement import (BUILTIN_COVERS, canonical_and_chern, divisor_model, hesse, lift_curve,
                              search_covers, validate_cover)

# the divisor model: lines l1..l12 and exceptional curves E1..E9
d = divisor_model(hesse())
print(len(d.arrangement.lines), "lines,", len(d.arrangement.points), "marked points")

# the reference assignment fails two checks; the numbers still come out
# of the ramification model, so they are printed with require_valid=False
ref = BUILTIN_COVERS["phi_paper"]
print("\n".join(validate_cover(d, ref).lines()))
print("\n".join(canonical_and_chern(d, ref, require_valid=False).lines()))

# the first assignment found by the deterministic search passes everything
good = search_covers(d, n=3, k=2, limit=1)[0]
print("search hit valid:", validate_cover(d, good).ok)
inv = canonical_and_chern(d, good)
print("K^2", inv.K2, "e", inv.e, "chi_h", inv.chi_h, "sigma", inv.sigma, "BMY", inv.bmy.value)

# lifts of a line, an exceptional curve and a generic line through p1
for curve in ("l1", "E1", "generic:p1"):
    print(lift_curve(d, good, curve).line())
