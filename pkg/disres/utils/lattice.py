"""Integer row reduction with unimodular extended-gcd steps."""
from typing import List, Sequence

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex


def echelon(rows: Sequence[Sequence[int]], limit: int) -> List[List[int]]:
    """Row echelon form over Z of the first `limit` columns.

    Two rows with entries a, b in the working column are replaced by
    [[s, t], [-b/g, a/g]] times themselves, where s*a + t*b = g.
    """
    rows = [list(row) for row in rows]
    pivot = 0
    for col in range(limit):
        if pivot >= len(rows):
            break
        for r in range(pivot + 1, len(rows)):
            b = rows[r][col]
            if b == 0:
                continue
            a = rows[pivot][col]
            if a == 0:
                rows[pivot], rows[r] = rows[r], rows[pivot]
                continue
            s, t, g = (int(v) for v in igcdex(a, b))
            top, low = rows[pivot], rows[r]
            rows[pivot] = [s * x + t * y for x, y in zip(top, low)]
            rows[r] = [(-b // g) * x + (a // g) * y for x, y in zip(top, low)]
        if rows[pivot][col] != 0:
            pivot += 1
    return rows


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row HNF: zero rows dropped, positive pivots, entries above pivots in [0, pivot)."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced = [row for row in echelon(rows, ncols) if any(row)]
    pivots = []
    for i, row in enumerate(reduced):
        col = next(j for j, v in enumerate(row) if v)
        if row[col] < 0:
            reduced[i] = row = [-v for v in row]
        pivots.append(col)
        for k in range(i):
            q = reduced[k][col] // row[col]
            if q:
                reduced[k] = [x - q * y for x, y in zip(reduced[k], row)]
    return reduced


def kernel(matrix: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """HNF basis of {v in Z^ncols : matrix . v = 0}."""
    if not any(any(row) for row in matrix):
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    neq = len(matrix)
    augmented = [
        [matrix[e][i] for e in range(neq)] + [int(i == j) for j in range(ncols)]
        for i in range(ncols)
    ]
    reduced = echelon(augmented, neq)
    tails = [row[neq:] for row in reduced if not any(row[:neq])]
    return hermite_normal_form(tails)
