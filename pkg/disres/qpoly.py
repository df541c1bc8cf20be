"""Dense univariate polynomials over Q.

Coefficients are kept as an immutable tuple of `Fraction` values in ascending
order (index i holds the coefficient of x^i) with no trailing zeros, so the zero
polynomial is the empty tuple and has degree -1.
"""
import math
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple, Union

from loguru import logger
from sympy import divisors, factorint, integer_nthroot

from ._errors import (
    BothZeroError,
    DegreeTooSmallError,
    DivisionByZeroPolyError,
    ZeroInputError,
)


Rat = Fraction
Number = Union[int, Fraction]

# Root bound under which integer root candidates are scanned one by one
# instead of being derived from the trailing coefficient.
_DIRECT_SCAN_LIMIT = 100_000


def _strip(cs: List) -> List:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _integerize(cs: Sequence[Fraction]) -> Tuple[int, List[int]]:
    """Return (den, ints) with cs[i] == ints[i] / den."""
    den = math.lcm(*(c.denominator for c in cs)) if cs else 1
    return den, [c.numerator * (den // c.denominator) for c in cs]


class Poly:
    __slots__ = ('_c',)

    def __init__(self, coeffs: Iterable = ()) -> None:
        self._c: Tuple[Fraction, ...] = tuple(_strip([Fraction(c) for c in coeffs]))

    @classmethod
    def _raw(cls, cs: Iterable[Fraction]) -> 'Poly':
        p = object.__new__(cls)
        p._c = tuple(_strip(list(cs)))
        return p

    @classmethod
    def constant(cls, c: Number) -> 'Poly':
        return cls((c,))

    @classmethod
    def monomial(cls, c: Number, n: int) -> 'Poly':
        return cls([0] * n + [c])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lc(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    @property
    def tc(self) -> Fraction:
        """Trailing (constant) coefficient."""
        return self._c[0] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(('Poly', self._c))

    def __repr__(self) -> str:
        return f"Poly('{self.to_text()}')"

    def __str__(self) -> str:
        return self.to_text()

    def __neg__(self) -> 'Poly':
        return Poly._raw(-c for c in self._c)

    def __add__(self, other) -> 'Poly':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> 'Poly':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'Poly':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'Poly':
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Poly._raw(c * other for c in self._c)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._c or not other._c:
            return ZERO
        da, ia = _integerize(self._c)
        db, ib = _integerize(other._c)
        out = [0] * (len(ia) + len(ib) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        den = da * db
        return Poly._raw(Fraction(c, den) for c in out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> 'Poly':
        """Division by a nonzero scalar."""
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise DivisionByZeroPolyError('Polynomial divided by the zero scalar')
        inv = 1 / Fraction(other)
        return Poly._raw(c * inv for c in self._c)

    def __pow__(self, n: int) -> 'Poly':
        if not isinstance(n, int) or n < 0:
            raise ValueError(f'Polynomial exponent must be a non-negative integer, got {n}')
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        return divrem(self, _coerce(other))

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return divrem(self, _coerce(other))[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return divrem(self, _coerce(other))[1]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        x = Fraction(x)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def monic(self) -> 'Poly':
        if not self._c or self._c[-1] == 1:
            return self
        inv = 1 / self._c[-1]
        return Poly._raw(c * inv for c in self._c)

    def derivative(self) -> 'Poly':
        return derivative(self)

    def shift(self, c: Number) -> 'Poly':
        return taylor_shift(self, c)

    def to_text(self, var: str = 'x') -> str:
        if not self._c:
            return '0'
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = _rat_text(mag)
            else:
                mono = var if i == 1 else f'{var}^{i}'
                body = mono if mag == 1 else f'{_rat_text(mag)}*{mono}'
            terms.append(('-' if c < 0 else '+', body))
        sign, body = terms[0]
        text = f'-{body}' if sign == '-' else body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text

    def term_count(self) -> int:
        return sum(1 for c in self._c if c != 0)


def _rat_text(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f'{c.numerator}/{c.denominator}'


def _coerce(other) -> 'Poly':
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly.constant(other)
    return NotImplemented


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Euclidean division `a = q*b + r` with deg(r) < deg(b)."""
    if b.is_zero():
        raise DivisionByZeroPolyError('Polynomial division by zero')
    if a.degree < b.degree:
        return ZERO, a
    r = list(a.coeffs)
    bc = b.coeffs
    db = b.degree
    inv = 1 / b.lc
    q = [Fraction(0)] * (a.degree - db + 1)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for i in range(db):
                r[k + i] -= c * bc[i]
    return Poly._raw(q), Poly._raw(r[:db])


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divrem(a, b)
    if r:
        raise ArithmeticError(f'{b} does not divide {a}')
    return q


def gcd_monic(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the primitive PRS over Z: every pseudo-remainder is made primitive."""
    if a.is_zero() and b.is_zero():
        raise BothZeroError('gcd of two zero polynomials')
    if a.is_zero() or b.is_zero():
        return (b if a.is_zero() else a).monic()
    _, A = _integer_primitive(a)
    _, B = _integer_primitive(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _prem(A, B)
        A, B = B, _primitive_ints(R)
    return Poly(A).monic()


def lcm_monic(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        raise ZeroInputError('lcm with a zero polynomial')
    return exact_div(a * b, gcd_monic(a, b)).monic()


def xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Extended Euclid: (g, s, t) with s*a + t*b = g and g the monic gcd.

    Equal inputs give (monic(a), 0, 1/lc(b)).
    """
    if a.is_zero() and b.is_zero():
        raise BothZeroError('xgcd of two zero polynomials')
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def inverse_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of `a` modulo `m`; they must be coprime."""
    g, s, _ = xgcd(a % m, m)
    if g.degree != 0:
        raise ArithmeticError(f'{a} is not invertible modulo {m}')
    return s % m


def derivative(p: Poly) -> Poly:
    return Poly._raw(i * c for i, c in enumerate(p.coeffs) if i)


def taylor_shift(p: Poly, c: Number) -> Poly:
    """p(x + c)."""
    c = Fraction(c)
    if c == 0 or p.degree < 1:
        return p
    if c.denominator == 1:
        den, ints = _integerize(p.coeffs)
        k = c.numerator
        out: List[int] = []
        for coef in reversed(ints):
            new = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                new[i + 1] += v
                new[i] += k * v
            new[0] += coef
            out = new
        return Poly._raw(Fraction(v, den) for v in out)
    acc: List[Fraction] = []
    for coef in reversed(p.coeffs):
        new = [Fraction(0)] * (len(acc) + 1)
        for i, v in enumerate(acc):
            new[i + 1] += v
            new[i] += c * v
        new[0] += coef
        acc = new
    return Poly._raw(acc)


def squarefree_part(b: Poly) -> Poly:
    if b.is_zero():
        raise ZeroInputError('Squarefree part of the zero polynomial')
    if b.degree == 0:
        return ONE
    return exact_div(b, gcd_monic(b, derivative(b))).monic()


def is_squarefree(b: Poly) -> bool:
    if b.degree < 1:
        return True
    return gcd_monic(b, derivative(b)).degree == 0


def squarefree_decomposition(b: Poly) -> List[Poly]:
    """Yun's algorithm: monic (s_1, ..., s_m) with monic(b) = prod s_i^i.

    The s_i are squarefree and pairwise coprime; s_m is non-constant and the
    empty list is returned for constants.
    """
    if b.is_zero():
        raise ZeroInputError('Squarefree decomposition of the zero polynomial')
    b = b.monic()
    if b.degree == 0:
        return []
    db = derivative(b)
    a0 = gcd_monic(b, db)
    bi = exact_div(b, a0)
    ci = exact_div(db, a0)
    di = ci - derivative(bi)
    out = []
    while bi.degree > 0:
        ai = gcd_monic(bi, di)
        bi = exact_div(bi, ai)
        ci = exact_div(di, ai)
        di = ci - derivative(bi)
        out.append(ai)
    return out


def _integer_primitive(p: Poly) -> Tuple[Fraction, List[int]]:
    """Return (c, q) with p = c*q, q primitive over Z with positive leading coefficient."""
    den, ints = _integerize(p.coeffs)
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [v // g for v in ints]


def _primitive_ints(ints: List[int]) -> List[int]:
    if not ints:
        return ints
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [v // g for v in ints]


def _prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder of `lc(b)^(deg a - deg b + 1) * a` by `b` over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, v in enumerate(b):
            r[i + shift] -= lr * v
        _strip(r)
        e -= 1
    if e > 0 and r:
        f = lb ** e
        r = [f * v for v in r]
    return r


def resultant(a: Poly, b: Poly) -> Fraction:
    """Res_x(a, b) by the subresultant PRS on primitive integer forms."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    ca, A = _integer_primitive(a)
    cb, B = _integer_primitive(b)
    da, db = len(A) - 1, len(B) - 1
    t = ca ** db * cb ** da
    s = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da % 2 == 1 and db % 2 == 1:
            s = -1
    if db == 0:
        return s * t * Fraction(B[0]) ** da
    g = h = 1
    while True:
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B)
        A, da = B, db
        if not R:
            return Fraction(0)
        div = g * h ** delta
        B = [v // div for v in R]
        db = len(B) - 1
        g = A[-1]
        if delta > 0:
            h = g ** delta // h ** (delta - 1)
        if db == 0:
            return s * t * Fraction(B[0] ** da, h ** (da - 1))


def interpolate(points: Sequence[Tuple[Number, Number]]) -> Poly:
    """Newton interpolation through (x_i, y_i) with distinct x_i."""
    xs = [Fraction(x) for x, _ in points]
    coef = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = ZERO
    for i in range(n - 1, -1, -1):
        p = p * Poly((-xs[i], 1)) + coef[i]
    return p


def parametric_resultant(a: Poly, b_at: Callable[[int], Poly], degree: int) -> Poly:
    """Res_x(a(x), b_z(x)) as a polynomial in z of degree at most `degree`.

    `b_at(z0)` returns the specialization of b at the integer z0; the result is
    interpolated through z0 = 0, ..., degree.
    """
    points = [(z0, resultant(a, b_at(z0))) for z0 in range(degree + 1)]
    return interpolate(points)


def shift_resultant(b: Poly) -> Poly:
    """R(z) = Res_x(b(x), b(x+z))."""
    if b.degree < 2:
        raise DegreeTooSmallError(f'shift resultant needs degree >= 2, got {b.degree}')
    d = b.degree
    logger.debug(f'Interpolating shift resultant of degree {d} polynomial at {d * d + 1} points')
    return parametric_resultant(b, lambda z0: taylor_shift(b, z0), d * d)


def _eval_int(ints: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _strip_zero_roots(ints: List[int]) -> Tuple[int, List[int]]:
    v = 0
    while ints[v] == 0:
        v += 1
    return v, ints[v:]


def root_bound(p: Poly) -> int:
    """Integer B with |z| <= B for every complex root z of p (Fujiwara's bound)."""
    if p.is_zero():
        raise ZeroInputError('Root bound of the zero polynomial')
    n = p.degree
    if n < 1:
        return 0
    an = abs(p.coeffs[-1])
    best = 0
    for i in range(1, n + 1):
        q = abs(p.coeffs[n - i]) / an
        if i == n:
            q /= 2
        if not q:
            continue
        r, exact = integer_nthroot(math.ceil(q), i)
        best = max(best, int(r) if exact else int(r) + 1)
    return 2 * best


def integer_roots(p: Poly) -> List[int]:
    """All integer roots of p, ascending."""
    if p.is_zero():
        raise ZeroInputError('Integer roots of the zero polynomial')
    _, ints = _integer_primitive(p)
    v, ints = _strip_zero_roots(ints)
    roots = [0] if v else []
    if len(ints) == 1:
        return roots
    a0 = ints[0]
    bound = min(root_bound(Poly(ints)), abs(a0))
    if bound <= _DIRECT_SCAN_LIMIT:
        candidates = (n for n in range(1, bound + 1) if a0 % n == 0)
    else:
        candidates = (n for n in divisors(abs(a0), generator=True) if n <= bound)
    for n in candidates:
        for x in (n, -n):
            if _eval_int(ints, x) == 0:
                roots.append(x)
    return sorted(roots)


def _square_divisor_roots(n: int, limit: int) -> List[int]:
    """All l <= limit with l^2 dividing n, from the factorization of n."""
    ells = [1]
    for prime, exponent in factorint(n).items():
        ells = [e * prime ** k for e in ells for k in range(exponent // 2 + 1) if e * prime ** k <= limit]
    return sorted(ells)


def square_root_shifts(t: Poly, limit: int) -> List[int]:
    """Positive l <= limit with t(l^2) == 0, ascending.

    Only l with l^2 dividing the trailing coefficient of the primitive integer
    form of t can qualify.
    """
    if t.is_zero():
        raise ZeroInputError('Square root shifts of the zero polynomial')
    _, ints = _integer_primitive(t)
    _, ints = _strip_zero_roots(ints)
    if len(ints) == 1 or limit < 1:
        return []
    a0 = abs(ints[0])
    limit = min(limit, math.isqrt(a0))
    if limit <= _DIRECT_SCAN_LIMIT:
        candidates = (ell for ell in range(1, limit + 1) if a0 % (ell * ell) == 0)
    else:
        candidates = _square_divisor_roots(a0, limit)
    return [ell for ell in candidates if _eval_int(ints, ell * ell) == 0]
