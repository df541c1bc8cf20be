import random
from fractions import Fraction
from math import factorial
from typing import Callable

import pytest

from disres.qpoly import ONE, Poly, exact_div
from disres.ratfun import RatFun, d_dx_pow
from disres.utils.expr import parse_ratfun


_SEED = 20240917


def poly(text: str) -> Poly:
    """Polynomial from expression text."""
    f = parse_ratfun(text)
    assert f.is_polynomial(), text
    return f.num


def rf(text: str) -> RatFun:
    return parse_ratfun(text)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(_SEED)


@pytest.fixture
def random_poly(rng) -> Callable[..., Poly]:
    def make(degree: int, bound: int = 10, monic: bool = False) -> Poly:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
        lead = 1 if monic else rng.choice([c for c in range(-bound, bound + 1) if c])
        return Poly(coeffs + [lead])
    return make


@pytest.fixture
def random_proper(rng, random_poly) -> Callable[..., RatFun]:
    """Proper f with denominator prod q_i^i, deg q_i <= max_degree."""
    def make(multiplicity: int = 3, max_degree: int = 3, bound: int = 5) -> RatFun:
        den = ONE
        for i in range(1, multiplicity + 1):
            q = random_poly(rng.randint(1, max_degree), bound=bound, monic=True)
            den = den * q ** i
        num = random_poly(rng.randint(0, den.degree - 1), bound=bound)
        return RatFun(num, den)
    return make


def laurent_coefficient(f: RatFun, alpha: Fraction, k: int) -> Fraction:
    """Coefficient of (x - alpha)^-k in the Laurent expansion of f at alpha."""
    linear = Poly([-Fraction(alpha), 1])
    m = 0
    den = f.den
    while den(alpha) == 0:
        den = exact_div(den, linear)
        m += 1
    if k > m:
        return Fraction(0)
    g = RatFun(f.num, den)
    j = m - k
    return d_dx_pow(g, j)(alpha) / factorial(j)


def orbit_residue(f: RatFun, alpha: Fraction, k: int, reach: int = 30) -> Fraction:
    """Sum of the (x - beta)^-k coefficients of f over beta = alpha + j, |j| <= reach."""
    total = Fraction(0)
    for j in range(-reach, reach + 1):
        beta = Fraction(alpha) + j
        if f.den(beta) == 0:
            total += laurent_coefficient(f, beta, k)
    return total
