"""
Building a simply connected manifold from two blocks
====================================================

Repeats the M_0_9 recipe with the Python API: resolve surfaces inside
two blocks until both carry a genus 5 surface of opposite square, sum
them, and classify the result. Then the same recipe is run through the
recipe language.
"""

from geow import block, blow_up, blow_up_node, bmy_check, classify_homeo, resolve, symplectic_sum
from geow.corpus import corpus_path
from geow.dsl import parse_file
from geow.dsl.evaluator import evaluate

# left side: blow up the node of E, then smooth it against the new sphere
M = block("Mtilde")
M, E, e1 = blow_up_node(M, "E", sphere="e1")
A, left = resolve(M, E, e1, k=2, name="Sigma5")
print("left ", left.name, "genus", left.genus, "square", left.square)

# right side: three surfaces merged, then one blow-up on the result
X = block("X_gg2", 1)
X, s = resolve(X, "S", "S1", name="Sigma5")
X, s = resolve(X, s, "T", name="Sigma5")
B = blow_up(X, 1, on=[(s, 1)])
right = B.surface("Sigma5")
print("right", right.name, "genus", right.genus, "square", right.square)

W = symplectic_sum(A, left, B, right, usher=True, name="M09")
print(W.name, "e", W.e, "sigma", W.sigma, "chi_h", W.chi_h, "c1^2", W.c1sq)
print("pi1", W.pi1.value, "BMY", bmy_check(W).value, "->", classify_homeo(W))

# the stored recipe says the same thing in seven lines
report = evaluate(parse_file(corpus_path("M_0_9.gw")))
print(report.text())
