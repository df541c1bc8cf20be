from fractions import Fraction as F

import pytest

from disres.qpoly import (
    ONE,
    X,
    ZERO,
    Poly,
    derivative,
    divrem,
    gcd_monic,
    integer_roots,
    interpolate,
    inverse_mod,
    is_squarefree,
    lcm_monic,
    resultant,
    root_bound,
    shift_resultant,
    square_root_shifts,
    squarefree_decomposition,
    squarefree_part,
    taylor_shift,
    xgcd,
)
from disres._errors import (
    BothZeroError,
    DegreeTooSmallError,
    DivisionByZeroPolyError,
    ZeroInputError,
)
from conftest import poly


class TestPoly:
    def test_normalizes_trailing_zeros(self):
        assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
        assert Poly([0, 0]).is_zero()
        assert ZERO.degree == -1
        assert ZERO == 0

    def test_arithmetic(self):
        p = poly('x^2 + 1')
        q = poly('x - 1')
        assert p + q == poly('x^2 + x')
        assert p - p == ZERO
        assert p * q == poly('x^3 - x^2 + x - 1')
        assert q ** 3 == poly('x^3 - 3x^2 + 3x - 1')
        assert (p / 2).coeffs == (F(1, 2), 0, F(1, 2))
        assert 3 - q == poly('4 - x')

    def test_evaluation(self):
        assert poly('x^2 + 1')(2) == 5
        assert poly('x/2 + 1')(F(1, 3)) == F(7, 6)

    def test_to_text(self):
        assert Poly([F(1, 24), F(1, 72), F(1, 36)]).to_text() == '1/36*x^2 + 1/72*x + 1/24'
        assert Poly([0, -1, 1]).to_text() == 'x^2 - x'
        assert Poly([-1]).to_text() == '-1'
        assert ZERO.to_text() == '0'
        assert X.to_text('t') == 't'

    def test_scalar_division_by_zero(self):
        with pytest.raises(DivisionByZeroPolyError):
            X / 0

    def test_negative_power(self):
        with pytest.raises(ValueError):
            X ** -1


class TestDivision:
    def test_divrem(self):
        q, r = divrem(poly('x^3 + 2x + 1'), poly('x^2 + 1'))
        assert q == X
        assert r == poly('x + 1')

    def test_divide_by_zero(self):
        with pytest.raises(DivisionByZeroPolyError):
            divrem(X, ZERO)

    def test_divrem_reconstruction(self, random_poly, rng):
        for _ in range(50):
            a = random_poly(rng.randint(0, 12), bound=50)
            b = random_poly(rng.randint(0, 6), bound=50)
            q, r = divrem(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


class TestGcd:
    def test_gcd_monic(self):
        assert gcd_monic(poly('2x^2 - 2'), poly('3x + 3')) == poly('x + 1')
        assert gcd_monic(poly('x^2 + 1'), ZERO) == poly('x^2 + 1')
        assert gcd_monic(ZERO, poly('2x - 1')) == poly('x - 1/2')
        assert gcd_monic(poly('x + 1'), poly('x + 2')) == ONE

    def test_gcd_rational_coefficients(self):
        a = poly('(3x - 1)(x^2 + 5)(x + 2)/7')
        b = poly('(x - 1/3)(x^2 + 5)(2x - 9)')
        assert gcd_monic(a, b) == poly('(x - 1/3)(x^2 + 5)')
        assert gcd_monic(b, a) == gcd_monic(a, b)

    def test_gcd_both_zero(self):
        with pytest.raises(BothZeroError):
            gcd_monic(ZERO, ZERO)

    def test_lcm(self):
        assert lcm_monic(poly('x(x+1)'), poly('(x+1)(x+2)')) == poly('x(x+1)(x+2)')
        with pytest.raises(ZeroInputError):
            lcm_monic(ZERO, X)

    @pytest.mark.parametrize('a, b, expected', [
        ('x^2', 'x', ('x', '0', '1')),
        ('x - 1', 'x - 1', ('x - 1', '0', '1')),
        ('x', '1', ('1', '0', '1')),
    ])
    def test_xgcd_examples(self, a, b, expected):
        assert xgcd(poly(a), poly(b)) == tuple(poly(e) for e in expected)

    def test_xgcd_both_zero(self):
        with pytest.raises(BothZeroError):
            xgcd(ZERO, ZERO)

    def _check_xgcd(self, random_poly, rng, count):
        for _ in range(count):
            a = random_poly(rng.randint(0, 15), bound=100)
            b = random_poly(rng.randint(0, 15), bound=100)
            g, s, t = xgcd(a, b)
            assert s * a + t * b == g
            assert g.is_monic()
            assert (a % g).is_zero() and (b % g).is_zero()

    def test_xgcd_identity(self, random_poly, rng):
        self._check_xgcd(random_poly, rng, 25)

    @pytest.mark.slow
    def test_xgcd_identity_many(self, random_poly, rng):
        self._check_xgcd(random_poly, rng, 200)

    def test_inverse_mod(self):
        assert inverse_mod(X, poly('x^2 + 1')) == -X


class TestDerivativeAndShift:
    @pytest.mark.parametrize('p, expected', [
        ('x^2', '2x'),
        ('7', '0'),
        ('x^3 + 2x^2 + 5x + 10', '3x^2 + 4x + 5'),
    ])
    def test_derivative(self, p, expected):
        assert derivative(poly(p)) == poly(expected)

    @pytest.mark.parametrize('p, c, expected', [
        ('x^2', 1, 'x^2 + 2x + 1'),
        ('x', -2, 'x - 2'),
        ('x^2', F(1, 2), 'x^2 + x + 1/4'),
        ('5', 3, '5'),
    ])
    def test_taylor_shift(self, p, c, expected):
        assert taylor_shift(poly(p), c) == poly(expected)

    def test_shift_inverse(self, random_poly, rng):
        for _ in range(30):
            p = random_poly(rng.randint(0, 10), bound=20)
            c = F(rng.randint(-9, 9), rng.randint(1, 4))
            assert taylor_shift(taylor_shift(p, c), -c) == p


class TestSquarefree:
    @pytest.mark.parametrize('b, expected', [
        ('(x-1)^2(x+1)', '(x-1)(x+1)'),
        ('x', 'x'),
        ('5', '1'),
        ('3x^3', 'x'),
    ])
    def test_squarefree_part(self, b, expected):
        assert squarefree_part(poly(b)) == poly(expected)

    def test_squarefree_part_of_zero(self):
        with pytest.raises(ZeroInputError):
            squarefree_part(ZERO)

    def test_is_squarefree(self):
        assert is_squarefree(poly('x^2 + 1'))
        assert not is_squarefree(poly('x^2(x+1)'))
        assert is_squarefree(ONE)

    def test_decomposition(self):
        assert squarefree_decomposition(poly('(x-1)^2(x+1)')) == [poly('x + 1'), poly('x - 1')]
        assert squarefree_decomposition(poly('x^3')) == [ONE, ONE, X]
        assert squarefree_decomposition(poly('4')) == []

    def test_decomposition_rebuilds_input(self, random_poly, rng):
        for _ in range(20):
            b = ONE
            for i in range(1, 4):
                b = b * random_poly(rng.randint(1, 2), bound=4, monic=True) ** i
            parts = squarefree_decomposition(b)
            rebuilt = ONE
            for i, s in enumerate(parts, start=1):
                assert is_squarefree(s)
                rebuilt = rebuilt * s ** i
            assert rebuilt == b
            assert parts[-1].degree > 0
            assert gcd_monic(squarefree_part(b), derivative(squarefree_part(b))) == ONE


class TestResultant:
    @pytest.mark.parametrize('a, b, expected', [
        ('x', 'x + 2', 2),
        ('x^2 + 1', 'x - 1', 2),
        ('3', 'x^2 + 1', 9),
        ('x^2 - 1', 'x - 1', 0),
        ('2x', 'x/3 + 1', 2),
    ])
    def test_examples(self, a, b, expected):
        assert resultant(poly(a), poly(b)) == expected

    def test_matches_root_product(self):
        # Res(a, b) = prod b(alpha) over the roots of a monic a.
        a = poly('(x-1)(x-2)(x+3)')
        b = poly('x^2 + 2x - 7')
        assert resultant(a, b) == b(1) * b(2) * b(-3)

    def test_interpolate(self):
        assert interpolate([(0, 1), (1, 2), (2, 5)]) == poly('x^2 + 1')

    def test_shift_resultant_roots(self):
        assert integer_roots(shift_resultant(poly('x(x+2)'))) == [-2, 0, 2]
        assert integer_roots(shift_resultant(poly('x(x+1)'))) == [-1, 0, 1]
        assert integer_roots(shift_resultant(poly('x^2 + 2'))) == [0]

    def test_shift_resultant_degree_too_small(self):
        with pytest.raises(DegreeTooSmallError):
            shift_resultant(X)

    def test_shift_resultant_detects_shifts(self):
        b = poly('x(x+3)(x^2+1)(x-4)')
        r = shift_resultant(b)
        assert r.degree <= b.degree ** 2
        for n in range(-10, 11):
            shared = gcd_monic(b, taylor_shift(b, n)).degree > 0
            assert (r(n) == 0) == shared


class TestIntegerRoots:
    @pytest.mark.parametrize('p, expected', [
        ('x^2(x-2)(x+2)', [-2, 0, 2]),
        ('x^2 + 1', []),
        ('3x - 6', [2]),
        ('x/2 + 1/4', []),
        ('7', []),
        ('(x - 200000)(x + 1)', [-1, 200000]),
    ])
    def test_examples(self, p, expected):
        assert integer_roots(poly(p)) == expected

    def test_zero(self):
        with pytest.raises(ZeroInputError):
            integer_roots(ZERO)


class TestRootBounds:
    @pytest.mark.parametrize('p', [
        'x^2 - 4',
        'x - 7',
        '(x - 25)(x + 13/2)(x^2 + 9)',
        '3x^3 - 1000',
    ])
    def test_bounds_every_root(self, p):
        p = poly(p)
        bound = root_bound(p)
        for r in integer_roots(p):
            assert abs(r) <= bound
        assert p(bound + 1) != 0 and p(-bound - 1) != 0

    def test_constant(self):
        assert root_bound(poly('5')) == 0

    def test_square_root_shifts(self):
        assert square_root_shifts(poly('x - 4'), 10) == [2]
        assert square_root_shifts(poly('x - 4'), 1) == []
        assert square_root_shifts(poly('x^2 + 1'), 10) == []

    def test_square_root_shifts_from_factorization(self, monkeypatch):
        monkeypatch.setattr('disres.qpoly._DIRECT_SCAN_LIMIT', 0)
        t = poly('(x - 36)(x - 100)')
        assert square_root_shifts(t, 100) == [6, 10]
        assert square_root_shifts(t, 8) == [6]
