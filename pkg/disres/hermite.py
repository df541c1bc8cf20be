"""Hermite reduction and the iterated Hermite list."""
from fractions import Fraction

from loguru import logger

from .qpoly import ONE, ZERO, derivative, exact_div, inverse_mod, squarefree_decomposition
from .ratfun import RatFun
from .data._results import HermiteList, HermiteSplit
from ._errors import CertificateMismatchError, NotProperError, ZeroInputError


def hermite_reduction(f: RatFun) -> HermiteSplit:
    """Split a proper f into d/dx(g) + h with h having squarefree denominator.

    Uses the squarefree decomposition of the denominator and one Bezout step
    per multiplicity, so no factorization is needed. The pieces b/v^j of g
    are summed over the common denominator prod v_i^(i-1) and normalized once.
    """
    if not f.is_proper():
        raise NotProperError(f'Hermite reduction needs a proper input, got {f}')
    if f.is_zero():
        return HermiteSplit(g=RatFun(), h=RatFun())

    a, d = f.num, f.den
    g_num, g_den = ZERO, ONE
    factors = squarefree_decomposition(d)
    for i in range(2, len(factors) + 1):
        v = factors[i - 1]
        if v.degree < 1:
            continue
        u = exact_div(d, v ** i)
        uv_prime = u * derivative(v)
        inv = inverse_mod(uv_prime, v)
        # part_num / v^(i-1) accumulates b_j / v^j for j = i-1, ..., 1
        part_num, scale = ZERO, ONE
        for j in range(i - 1, 0, -1):
            rhs = a * Fraction(-1, j)
            b = (inv * (rhs % v)) % v
            c = exact_div(rhs - b * uv_prime, v)
            part_num = part_num + b * scale
            scale = scale * v
            a = c * (-j) - u * derivative(b)
        g_num = g_num * scale + part_num * g_den
        g_den = g_den * scale
        d = u * v
    return HermiteSplit(g=RatFun(g_num, g_den), h=RatFun(a, d))


def hermite_list(f: RatFun) -> HermiteList:
    """Pure-order components (f_1, ..., f_m) of a nonzero proper f.

    f = sum_k (-1)^(k-1)/(k-1)! * d^(k-1)/dx^(k-1) f_k and every f_k has
    squarefree denominator. The sign and factorial are folded into the
    remainder at each pass: after pass k it is multiplied by -k.
    """
    if not f.is_proper():
        raise NotProperError(f'Hermite list needs a proper input, got {f}')
    if f.is_zero():
        raise ZeroInputError('Hermite list of zero')

    components = []
    rest = f
    while rest:
        split = hermite_reduction(rest)
        components.append(split.h)
        rest = split.g * -len(components)
    result = HermiteList(components=components)
    logger.debug(f'Hermite list of length {result.m} for denominator of degree {f.den.degree}')

    if __debug__:
        if result.reconstruct() != f:
            raise CertificateMismatchError('Hermite list does not reconstruct its input')
    return result

