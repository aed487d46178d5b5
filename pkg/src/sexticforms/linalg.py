"""Exact linear algebra over Q via fraction-free-ish Gaussian elimination.

Small dense problems only: rank of coefficient matrices of modular forms,
solving for linear-combination coefficients, and determinants of resultant
matrices.  Everything works on lists of lists of ints/Fractions.
"""

from __future__ import annotations

from fractions import Fraction


def _row_reduce(matrix):
    """Return (rref rows, pivot column list) over Q. Input is not mutated."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix) -> int:
    _, pivots = _row_reduce(matrix)
    return len(pivots)


def solve_linear(matrix, rhs):
    """One exact solution of M x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    if not matrix:
        return [] if not any(rhs) else None
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = _row_reduce(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


def nullspace(matrix):
    """Basis of the right kernel of M, as lists of Fractions."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = _row_reduce(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis


def in_span(matrix, vector) -> bool:
    """Whether ``vector`` lies in the row span of ``matrix``."""
    if not matrix:
        return not any(vector)
    cols = list(zip(*matrix))
    return solve_linear([list(c) for c in cols], vector) is not None


def determinant(matrix) -> Fraction:
    """Exact determinant by expansion with memoized minors.

    Suits the sparse smallish matrices we feed it (resultant matrices up
    to 10x10); memoization over column subsets keeps it fast.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in matrix]
    cache = {}

    def minor(row, cols):
        if row == n:
            return Fraction(1)
        key = cols
        if key in cache:
            return cache[key]
        total = Fraction(0)
        for k, c in enumerate(cols):
            a = rows[row][c]
            if a:
                sub = minor(row + 1, cols[:k] + cols[k + 1 :])
                total += a * sub if k % 2 == 0 else -a * sub
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))
