import random
from itertools import combinations
from math import gcd

from hypothesis import given, strategies as st

from geow.groups import integer_rank, invariant_factors, smith_normal_form


def det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n))


def minors_oracle(M):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_(k-1)."""
    m, n = len(M), len(M[0])
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            out += [0] * (min(m, n) - k + 1)
            break
        out.append(g // prev)
        prev = g
    return tuple(out)


matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_snf_against_minors_on_200_random_matrices():
    rng = random.Random(20240601)
    for _ in range(200):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        assert invariant_factors(M) == minors_oracle(M), M


@given(matrices)
def test_snf_against_minors_property(M):
    assert invariant_factors(M) == minors_oracle(M)


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@given(matrices)
def test_transforms_are_unimodular_and_diagonalize(M):
    res = smith_normal_form(M, transforms=True)
    assert matmul(matmul(res.left, M), res.right) == res.diagonal
    assert abs(det(res.left)) == 1 and abs(det(res.right)) == 1


@given(matrices, st.randoms(use_true_random=False))
def test_invariant_under_unimodular_operations(M, rnd):
    A = [row[:] for row in M]
    for _ in range(6):
        if len(A) > 1 and rnd.random() < 0.5:
            i, j = rnd.sample(range(len(A)), 2)
            q = rnd.randint(-3, 3)
            A[j] = [x + q * y for x, y in zip(A[j], A[i])]
        elif len(A[0]) > 1:
            i, j = rnd.sample(range(len(A[0])), 2)
            q = rnd.randint(-3, 3)
            for row in A:
                row[j] += q * row[i]
        if rnd.random() < 0.3:
            A[0] = [-x for x in A[0]]
    assert invariant_factors(A) == invariant_factors(M)


@given(matrices)
def test_divisibility_chain_and_rank(M):
    fs = invariant_factors(M)
    nonzero = [d for d in fs if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert fs[len(nonzero):] == (0,) * (len(fs) - len(nonzero))
    assert integer_rank(M) == len(nonzero)


def test_known_forms():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)
    assert invariant_factors([[0, 0], [0, 0]]) == (0, 0)
    assert invariant_factors([[6]]) == (6,)
