from fractions import Fraction
from typing import List, Sequence, Tuple

from loguru import logger

from .qpoly import ONE, ZERO, Number, Poly, derivative, exact_div, integer_roots, inverse_mod, lcm_monic
from .ratfun import RatFun
from .hermite import hermite_list
from .reduce import _check_simple_poles, simple_reduction, simple_reduction_plus
from .data._results import ResiduePair, ResidueSystem, SharedResidueSystem
from ._errors import NotProperError, ZeroInputError


def first_residues(f: RatFun) -> ResiduePair:
    """(b, r) with r*b' = a mod b for f = a/b with simple poles.

    r evaluates to the residue of f at every root of b; zero maps to (1, 0).
    """
    _check_simple_poles(f)
    if f.is_zero():
        return ResiduePair.zero()
    b = f.den
    r = (f.num * inverse_mod(derivative(b), b)) % b
    return ResiduePair(B=b, D=r)


def first_residues_plus(fs: Sequence[RatFun]) -> Tuple[Poly, List[Poly]]:
    """Residue numerators of several functions over their common denominator.

    Returns (B, (p_1, ..., p_n)) with B the lcm of the denominators,
    p_i = r_i mod b_i and p_i = 0 mod B/b_i.
    """
    for i, f in enumerate(fs):
        _check_simple_poles(f, index=i)
    big_b = ONE
    for f in fs:
        big_b = lcm_monic(big_b, f.den)
    ps = []
    for f in fs:
        if f.is_zero():
            ps.append(ZERO)
            continue
        pair = first_residues(f)
        cofactor = exact_div(big_b, pair.B)
        q = (pair.D * inverse_mod(cofactor, pair.B)) % pair.B
        ps.append(cofactor * q)
    return big_b, ps


def discrete_residues(f: RatFun) -> ResidueSystem:
    """Q-rational system of discrete residues of a nonzero proper f."""
    if f.is_zero():
        raise ZeroInputError('Discrete residues of zero')
    if not f.is_proper():
        raise NotProperError(f'Discrete residues need a proper input, got {f}')
    pairs = [
        first_residues(simple_reduction(fk).reduced)
        for fk in hermite_list(f).components
    ]
    return ResidueSystem(pairs=pairs)


def _hermite_components(fs: Sequence[RatFun]) -> List[List[RatFun]]:
    return [hermite_list(f).components if f else [] for f in fs]


def shared_residues(fs: Sequence[RatFun]) -> SharedResidueSystem:
    """Shared residue system that tolerates zero inputs (orders 0, zero rows)."""
    for i, f in enumerate(fs):
        if not f.is_proper():
            raise NotProperError(f'{f} is not proper', index=i)
    lists = _hermite_components(fs)
    orders = [len(components) for components in lists]
    m = max(orders, default=0)
    grid = [components + [RatFun()] * (m - len(components)) for components in lists]
    flat = [fk for row in grid for fk in row]

    reduced = simple_reduction_plus(flat).reduced
    big_b, ps = first_residues_plus(reduced)
    rows = [ps[i * m:(i + 1) * m] for i in range(len(fs))]
    logger.debug(f'Shared residue system: n={len(fs)}, m={m}, deg B={big_b.degree}')
    return SharedResidueSystem(B=big_b, D=rows, orders=orders)


def discrete_residues_plus(fs: Sequence[RatFun]) -> SharedResidueSystem:
    """One B serving every input and every order."""
    for i, f in enumerate(fs):
        if f.is_zero():
            raise ZeroInputError('Discrete residues of zero', index=i)
    return shared_residues(fs)


def residue_at_orbit(pair: ResiduePair, alpha: Number) -> Fraction:
    """D evaluated at the root of B in the orbit alpha + Z, 0 if B has none there."""
    if pair.is_zero():
        return Fraction(0)
    alpha = Fraction(alpha)
    roots = integer_roots(pair.B.shift(alpha))
    if not roots:
        return Fraction(0)
    return pair.D(alpha + roots[0])
