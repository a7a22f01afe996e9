"""Smith normal form over the integers.

Pure-Python arbitrary precision; matrices are lists of lists of ``int``.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence


class SmithResult(NamedTuple):
    factors: tuple[int, ...]
    # U @ M @ V == D, with U, V unimodular; None unless requested
    left: list[list[int]] | None = None
    right: list[list[int]] | None = None
    diagonal: list[list[int]] | None = None


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[int]], transforms: bool = False) -> SmithResult:
    """Invariant factors ``d1 | d2 | ...`` of an integer matrix.

    Returns ``min(rows, cols)`` nonnegative diagonal entries (zeros last).
    With ``transforms=True`` the unimodular ``U``, ``V`` with ``U M V = D``
    are returned as well.
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row[dst] += q * row[src]
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in A:
            row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        if U is not None:
            U[i] = [-a for a in U[i]]

    for t in range(min(m, n)):
        # pivot: smallest nonzero |entry| in the remaining block
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    add_row(t, i, -q)
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(t, j, -q)
                if A[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: fold any offending row into row t
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            negate_row(t)

    k = min(m, n)
    factors = tuple(A[i][i] for i in range(k))
    if transforms:
        return SmithResult(factors, U, V, A)
    return SmithResult(factors)


def invariant_factors(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(matrix).factors


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    return sum(1 for d in invariant_factors(matrix) if d)
