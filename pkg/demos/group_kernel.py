"""
Abelianizations and coset enumeration
=====================================

Abelianizes the two Luttinger relation families, checks a small
presentation by Todd-Coxeter, and measures the index of a subgroup.
"""

from geow.groups.catalog import CATALOG
from geow.groups.cosets import coset_enumeration, quotient_identify
from geow.groups.presentation import abelianization, luttinger_relations_yn, luttinger_relations_yn1, surface_group
from geow.groups.smith import smith_normal_form
from geow.groups.words import parse_word

# Smith normal form of a small relation matrix
print(smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).factors)

# the surface group of genus 2 abelianizes to Z^4
print("genus 2:", abelianization(surface_group(2)))

# the first family kills H1, the second leaves a free part
for n in (2, 3):
    print("Y", n, abelianization(luttinger_relations_yn(n)), "|",
          "Y'", n, abelianization(luttinger_relations_yn1(n)))

# coset enumeration over the trivial subgroup recovers the group order
for name, (p, order) in CATALOG.items():
    t = coset_enumeration(p)
    print(name, "cosets", t.index, "expected", order, "->", quotient_identify(t))

# index of <a> in S3 is 2
S3 = CATALOG["S3"][0]
print("[S3 : <a>] =", coset_enumeration(S3, [parse_word("a")]).index)
