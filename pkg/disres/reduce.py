"""Shift reduction of simple-pole rational functions.

Every pole is moved to the leftmost root of its Z-orbit inside the
denominator ("initial roots"), which leaves a function with squarefree and
shiftfree denominator that differs from the input by a summable function.
The telescoping sums that realize the difference are returned as
certificates.
"""
from math import factorial
from fractions import Fraction
from typing import Dict, List, Sequence

from loguru import logger

from .qpoly import ONE, Poly, exact_div, gcd_monic, is_squarefree, lcm_monic
from .ratfun import RatFun, d_dx_pow, delta, parfrac, sigma_pow
from .dispersion import shift_set
from .hermite import hermite_list
from .data._results import AdditiveDecomposition, JointReducedForms, ReducedForm
from ._errors import CertificateMismatchError, NotProperError, NotSquarefreeError


def _check_simple_poles(f: RatFun, index=None) -> None:
    if not f.is_proper():
        raise NotProperError(f'{f} is not proper', index=index)
    if not is_squarefree(f.den):
        raise NotSquarefreeError(f'Denominator of {f} is not squarefree', index=index)


def _initial_divisor(b: Poly, shifts: Sequence[int]) -> Poly:
    """Factor b_0 of b whose roots are the leftmost roots of b in their orbits."""
    g = ONE
    for ell in shifts:
        g = lcm_monic(g, gcd_monic(b, b.shift(-ell)))
    return exact_div(b, g)


def _reduce_against(f: RatFun, b0: Poly, shifts: Sequence[int]) -> ReducedForm:
    """Reduce f onto the initial divisor b0 of a common denominator."""
    if f.is_zero():
        return ReducedForm(reduced=RatFun(), certificate=RatFun())
    pieces: Dict[int, Poly] = {}
    for ell in [0, *shifts]:
        piece = gcd_monic(b0.shift(-ell), f.den)
        if piece.degree >= 1:
            pieces[ell] = piece
    numerators = parfrac(f, list(pieces.values()))

    reduced = RatFun()
    certificate = RatFun()
    for (ell, piece), a in zip(pieces.items(), numerators):
        term = RatFun(a, piece)
        reduced = reduced + sigma_pow(term, ell)
        for i in range(ell):
            certificate = certificate - sigma_pow(term, i)
    result = ReducedForm(reduced=reduced, certificate=certificate)

    if __debug__:
        if delta(certificate) != f - reduced:
            raise CertificateMismatchError(f'Reduction certificate of {f} does not telescope')
    return result


def simple_reduction(f: RatFun) -> ReducedForm:
    """Reduced form of a proper f with squarefree denominator.

    The result keeps the first-order discrete residues of f and its
    denominator is squarefree and shiftfree.
    """
    _check_simple_poles(f)
    if f.den.degree <= 1:
        return ReducedForm(reduced=f, certificate=RatFun())
    shifts = shift_set(f.den).shifts
    if not shifts:
        return ReducedForm(reduced=f, certificate=RatFun())
    b0 = _initial_divisor(f.den, shifts)
    logger.debug(f'Reducing onto initial divisor {b0} with shifts {shifts}')
    return _reduce_against(f, b0, shifts)


def simple_reduction_plus(fs: Sequence[RatFun]) -> JointReducedForms:
    """Reduce several simple-pole functions onto one common initial divisor.

    The product of the reduced denominators is shiftfree, so poles in the same
    orbit land on the same representative across all inputs.
    """
    for i, f in enumerate(fs):
        _check_simple_poles(f, index=i)
    b = ONE
    for f in fs:
        b = lcm_monic(b, f.den)
    shifts = shift_set(b).shifts if b.degree > 1 else []
    b0 = _initial_divisor(b, shifts)
    logger.debug(f'Joint reduction of {len(fs)} inputs onto {b0} with shifts {shifts}')

    forms = [_reduce_against(f, b0, shifts) for f in fs]
    return JointReducedForms(
        reduced=[form.reduced for form in forms],
        certificates=[form.certificate for form in forms],
    )


def additive_decomposition(f: RatFun) -> AdditiveDecomposition:
    """f = Delta(certificate) + remainder with pdisp(remainder) = 0.

    All pole orders of f are reduced jointly so each orbit keeps one
    representative in the remainder.
    """
    if not f.is_proper():
        raise NotProperError(f'Additive decomposition needs a proper input, got {f}')
    if f.is_zero():
        return AdditiveDecomposition(remainder=RatFun(), certificate=RatFun())

    components = hermite_list(f).components
    joint = simple_reduction_plus(components)
    remainder = RatFun()
    certificate = RatFun()
    for k, (reduced, cert) in enumerate(zip(joint.reduced, joint.certificates), start=1):
        scale = Fraction((-1) ** (k - 1), factorial(k - 1))
        if reduced:
            remainder = remainder + d_dx_pow(reduced, k - 1) * scale
        if cert:
            certificate = certificate + d_dx_pow(cert, k - 1) * scale
    result = AdditiveDecomposition(remainder=remainder, certificate=certificate)

    if __debug__:
        if delta(certificate) != f - remainder:
            raise CertificateMismatchError(f'Additive decomposition of {f} does not telescope')
    return result


def reduction_factors(f: RatFun) -> List[Poly]:
    """The factorization b = prod b_l used by simple_reduction, in ascending l."""
    _check_simple_poles(f)
    if f.den.degree <= 1:
        return [f.den] if f.den.degree == 1 else []
    shifts = shift_set(f.den).shifts
    b0 = _initial_divisor(f.den, shifts)
    factors = [b0]
    for ell in shifts:
        piece = gcd_monic(b0.shift(-ell), f.den)
        if piece.degree >= 1:
            factors.append(piece)
    return factors
