"""Exact linear algebra over Q on top of sympy matrices."""
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import Matrix, Rational


def _to_sympy(c: Fraction) -> Rational:
    return Rational(c.numerator, c.denominator)


def _to_fraction(c) -> Fraction:
    c = Rational(c)
    return Fraction(int(c.p), int(c.q))


def to_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    if not rows:
        return Matrix.zeros(0, ncols)
    return Matrix([[_to_sympy(Fraction(c)) for c in row] for row in rows])


def echelon_basis(vectors: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Reduced row echelon basis of the span: leading ones, ascending pivots."""
    if not vectors:
        return []
    reduced, pivots = to_matrix(vectors, ncols).rref()
    return [[_to_fraction(c) for c in reduced.row(i)] for i in range(len(pivots))]


def nullspace_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Echelon-normalized basis of {v : rows . v = 0} in Q^ncols."""
    if ncols == 0:
        return []
    nonzero = [row for row in rows if any(row)]
    if not nonzero:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    kernel = to_matrix(nonzero, ncols).nullspace()
    vectors = [[_to_fraction(c) for c in v] for v in kernel]
    return echelon_basis(vectors, ncols)


def solve_particular(
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    ncols: int,
) -> Optional[List[Fraction]]:
    """One solution of rows . y = rhs with free unknowns set to 0, None if inconsistent."""
    if not rows:
        return [Fraction(0)] * ncols
    augmented = to_matrix([list(row) + [b] for row, b in zip(rows, rhs)], ncols + 1)
    reduced, pivots = augmented.rref()
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = _to_fraction(reduced[i, ncols])
    return solution
