"""Reduced rational functions over Q with monic denominators."""
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .qpoly import (
    ONE,
    ZERO,
    Number,
    Poly,
    derivative,
    divrem,
    exact_div,
    gcd_monic,
    is_squarefree,
    xgcd,
)
from ._errors import (
    FactorsNotCoprimeError,
    NotProperError,
    NotSquarefreeError,
    ProductMismatchError,
    ZeroDenominatorError,
)


class RatFun:
    """num/den with gcd(num, den) = 1 and den monic; zero is 0/1."""
    __slots__ = ('_num', '_den')

    def __init__(self, num: Union[Poly, Number] = ZERO, den: Union[Poly, Number] = ONE) -> None:
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if den.is_zero():
            raise ZeroDenominatorError('Rational function with zero denominator')
        if num.is_zero():
            num, den = ZERO, ONE
        elif den.degree > 0:
            g = gcd_monic(num, den)
            if g.degree > 0:
                num, den = exact_div(num, g), exact_div(den, g)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        self._num = num
        self._den = den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> 'RatFun':
        """Trusted constructor for already normalized parts."""
        f = object.__new__(cls)
        f._num = num
        f._den = den
        return f

    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.degree == 0

    def is_proper(self) -> bool:
        return self._num.degree < self._den.degree

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash(('RatFun', self._num.coeffs, self._den.coeffs))

    def __repr__(self) -> str:
        return f"RatFun('{self.to_text()}')"

    def __str__(self) -> str:
        return self.to_text()

    def __neg__(self) -> 'RatFun':
        return RatFun._raw(-self._num, self._den)

    def __add__(self, other) -> 'RatFun':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return RatFun(self._num + other._num, self._den)
        return RatFun(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other) -> 'RatFun':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'RatFun':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'RatFun':
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFun()
            return RatFun._raw(self._num * other, self._den)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RatFun':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominatorError('Rational function divided by zero')
        return RatFun(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> 'RatFun':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> 'RatFun':
        if not isinstance(n, int):
            raise ValueError(f'Rational function exponent must be an integer, got {n}')
        if n < 0:
            if self.is_zero():
                raise ZeroDenominatorError('Negative power of zero')
            return RatFun._raw_monic(self._den ** -n, self._num ** -n)
        return RatFun._raw(self._num ** n, self._den ** n)

    @classmethod
    def _raw_monic(cls, num: Poly, den: Poly) -> 'RatFun':
        """Coprime parts whose denominator may need rescaling."""
        lc = den.lc
        return cls._raw(num / lc, den / lc)

    def __call__(self, x: Number) -> Fraction:
        d = self._den(x)
        if d == 0:
            raise ZeroDenominatorError(f'Evaluation at the pole {x}')
        return self._num(x) / d

    def shift(self, ell: Number) -> 'RatFun':
        return sigma_pow(self, ell)

    def derivative(self) -> 'RatFun':
        return d_dx(self)

    def to_text(self, var: str = 'x') -> str:
        num = self._num.to_text(var)
        if self._den.degree == 0:
            return num
        if self._num.term_count() > 1:
            num = f'({num})'
        den = self._den.to_text(var)
        if self._den.term_count() > 1:
            den = f'({den})'
        return f'{num}/{den}'


def _coerce(other) -> RatFun:
    if isinstance(other, RatFun):
        return other
    if isinstance(other, Poly):
        return RatFun._raw(other, ONE)
    if isinstance(other, (int, Fraction)):
        return RatFun._raw(Poly.constant(other), ONE)
    return NotImplemented


def normalize(num: Poly, den: Poly) -> RatFun:
    return RatFun(num, den)


def proper_split(f: RatFun) -> Tuple[Poly, RatFun]:
    """Split f into its polynomial part and proper part."""
    q, r = divrem(f.num, f.den)
    return q, RatFun._raw(r, f.den if r else ONE)


def parfrac(f: RatFun, factors: Sequence[Poly]) -> List[Poly]:
    """Partial fraction numerators (a_1, ..., a_n) with f = sum a_i/b_i.

    Each a_i is computed from the Bezout relation
    d_i*(b/b_i) + e_i*b_i = 1 as a_i = num(f)*d_i mod b_i.
    """
    if not f.is_proper():
        raise NotProperError(f'{f} is not proper')
    b = ONE
    for factor in factors:
        b = b * factor
    if b != f.den:
        raise ProductMismatchError(f'Product of factors {b} differs from denominator {f.den}')
    cofactors = []
    for i, bi in enumerate(factors):
        di = exact_div(b, bi)
        g, s, _ = xgcd(di, bi)
        if g.degree != 0:
            raise FactorsNotCoprimeError(f'Factor {bi} shares {g} with the other factors', index=i)
        cofactors.append(s)
    if not is_squarefree(b):
        raise NotSquarefreeError(f'Denominator {b} is not squarefree')
    return [(f.num * s) % bi for s, bi in zip(cofactors, factors)]


def sigma_pow(f: RatFun, ell: Number) -> RatFun:
    """f(x + ell)."""
    if ell == 0:
        return f
    return RatFun._raw(f.num.shift(ell), f.den.shift(ell))


def d_dx(f: RatFun) -> RatFun:
    num, den = f.num, f.den
    if den.degree == 0:
        return RatFun._raw(derivative(num), ONE)
    return RatFun(derivative(num) * den - num * derivative(den), den * den)


def d_dx_pow(f: RatFun, k: int) -> RatFun:
    for _ in range(k):
        f = d_dx(f)
    return f


def delta(f: RatFun) -> RatFun:
    """Forward difference f(x+1) - f(x)."""
    return sigma_pow(f, 1) - f
