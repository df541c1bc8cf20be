from loguru import logger

from .qpoly import (
    Poly,
    derivative,
    exact_div,
    gcd_monic,
    is_squarefree,
    root_bound,
    shift_resultant,
    square_root_shifts,
    squarefree_part,
)
from .ratfun import RatFun
from .data._results import ShiftSet
from ._errors import ConstantDenominatorError, NotSquarefreeError, ZeroInputError


def shift_set(b: Poly) -> ShiftSet:
    """Positive integers l with gcd(b(x), b(x+l)) non-constant.

    R(z) = Res_x(b(x), b(x+z)) loses its root at zero and its repeated roots,
    which leaves an even polynomial T(z^2); the shifts are the positive l with
    T(l^2) == 0.
    """
    if b.is_zero():
        raise ZeroInputError('Shift set of the zero polynomial')
    if not is_squarefree(b):
        raise NotSquarefreeError(f'Shift set needs a squarefree polynomial, got {b}')
    if b.degree <= 1:
        return ShiftSet()

    r = shift_resultant(b)
    r_tilde = exact_div(r, gcd_monic(r, derivative(r)) * Poly((0, 1))).monic()
    t = Poly(r_tilde.coeffs[::2])
    # a shift is a difference of two roots of b
    shifts = square_root_shifts(t, 2 * root_bound(b))
    logger.debug(f'Shift set of degree {b.degree} polynomial: {shifts}')
    return ShiftSet(shifts=shifts)


def dispersion(b: Poly) -> int:
    """Largest shift of squarefree_part(b), 0 when there is none."""
    return shift_set(squarefree_part(b)).dispersion


def is_shiftfree(b: Poly) -> bool:
    return dispersion(b) == 0


def pdisp(f: RatFun) -> int:
    if f.den.degree < 1:
        raise ConstantDenominatorError(f'Polar dispersion needs a pole, got {f}')
    return dispersion(f.den)
