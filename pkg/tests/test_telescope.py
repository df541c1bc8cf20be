from fractions import Fraction as F

import pytest

from disres.qpoly import Poly
from disres.ratfun import RatFun, delta
from disres.residues import discrete_residues_plus
from disres.telescope import (
    apply_operators,
    express_in_generators,
    in_wspace,
    is_summable,
    vspace_basis,
    wspace_bounded,
    wspace_generators,
)
from disres.data._results import DiffOp, OperatorTuple, SummabilityVerdict
from disres._errors import NonzeroPolynomialPartError
from conftest import rf


def ops(*coeff_lists) -> OperatorTuple:
    return OperatorTuple(ops=[DiffOp(coeffs=list(cs)) for cs in coeff_lists])


class TestIsSummable:
    def test_telescoping_pair(self):
        verdict = is_summable(rf('1/(x(x+1))'))
        assert verdict.summable
        assert verdict.certificate == rf('-1/x')

    @pytest.mark.parametrize('f', [
        '1/x^2 - 1/(x+1)^2',
        '1/x^3 - 1/(x+4)^3 + 1/(x^2+1) - 1/(x^2+6x+10)',
        '(2x+1)/(x^2(x+1)^2)',
    ])
    def test_certificates_telescope(self, f):
        f = rf(f)
        verdict = is_summable(f)
        assert verdict.summable
        assert delta(verdict.certificate) == f

    @pytest.mark.parametrize('f', [
        '1/x',
        '1/x^2',
        '(x+2)/(x(x^2-1)^2(x^2+2)^2)',
        '1/(x^2+1)',
    ])
    def test_not_summable(self, f):
        verdict = is_summable(rf(f))
        assert not verdict.summable
        assert verdict.certificate is None

    def test_zero(self):
        assert is_summable(RatFun()) == SummabilityVerdict(summable=True, certificate=RatFun())

    def test_polynomial_part_rejected(self):
        with pytest.raises(NonzeroPolynomialPartError):
            is_summable(rf('x + 1/x'))

    def test_verdict_consistency(self):
        with pytest.raises(ValueError):
            SummabilityVerdict(summable=False, certificate=RatFun())

    def test_difference_of_random_function_is_summable(self, random_proper):
        for _ in range(10):
            g = random_proper(multiplicity=2, max_degree=2)
            verdict = is_summable(delta(g))
            assert verdict.summable
            assert delta(verdict.certificate) == delta(g)

    @pytest.mark.slow
    def test_difference_of_random_function_is_summable_many(self, random_proper, rng):
        for _ in range(100):
            g = random_proper(multiplicity=rng.randint(1, 3), max_degree=2)
            verdict = is_summable(delta(g))
            assert verdict.summable
            assert delta(verdict.certificate) == delta(g)


class TestVSpace:
    @pytest.mark.parametrize('fs, expected', [
        (['1/x', '1/(x+1)'], [[1, -1]]),
        (['1/x^2', '1/(x+5)^2'], [[1, -1]]),
        (['1/x', '1/x^2'], []),
        (['1/(x(x+1))', '1/x'], [[1, 0]]),
        (['1/(2x)', '1/(3(x+7))', '1/(x^2+1)'], [[1, F(-3, 2), 0]]),
    ])
    def test_basis(self, fs, expected):
        assert vspace_basis([rf(f) for f in fs]) == expected

    def test_basis_vectors_are_summable(self):
        fs = [rf('1/x + 1/(x^2+1)'), rf('2/(x+3)'), rf('1/(x^2+4x+5) - 1/(x+1)')]
        for v in vspace_basis(fs):
            combined = sum((f * c for f, c in zip(fs, v)), RatFun())
            assert is_summable(combined).summable


class TestWSpace:
    def test_generators_of_derivative_pair(self):
        assert wspace_generators([rf('1/x^2'), rf('1/x')]) == [ops([1], [0, 1])]

    def test_generators_of_shifted_pair(self):
        assert wspace_generators([rf('1/x^2'), rf('1/(x+5)^2')]) == [ops([1], [-1])]

    def test_generators_beyond_hermite_length_bounds(self):
        fs = [rf('-1/(x+3)^2 + 3/(x-3)^3'), rf('-3/(x+1)^3 - 1/(x-3)^2')]
        generators = wspace_generators(fs)
        assert generators == [ops([1, F(-3, 2)], [-1, F(-3, 2)])]
        assert wspace_bounded(fs, 0) == []
        assert is_summable(apply_operators(fs, generators[0])).summable

    def test_bounded(self):
        fs = [rf('1/x^2'), rf('1/x')]
        assert wspace_bounded(fs, 0) == []
        assert wspace_bounded(fs, 1) == [ops([1], [0, 1])]
        assert wspace_bounded(fs, 2) == [ops([1], [0, 1]), ops([0, 1], [0, 0, 1])]

    def test_bad_beta(self):
        with pytest.raises(ValueError):
            wspace_bounded([rf('1/x')], -1)

    def test_operators_telescope(self):
        fs = [rf('1/(x^2+1)^2'), rf('x/(x^2+1)^2 + 1/(x^2+4x+5)'), rf('1/(x+1)')]
        for generator in wspace_generators(fs):
            assert is_summable(apply_operators(fs, generator)).summable
        for generator in wspace_bounded(fs, 1):
            assert in_wspace(fs, generator)

    def test_in_wspace(self):
        fs = [rf('1/x^2'), rf('1/x')]
        assert in_wspace(fs, ops([1], [0, 1]))
        assert in_wspace(fs, [DiffOp(coeffs=[0, 2]), DiffOp(coeffs=[0, 0, 2])])
        assert not in_wspace(fs, ops([1], [1]))
        assert apply_operators(fs, ops([1], [0, 1])).is_zero()

    def test_express_in_generators(self):
        generators = wspace_generators([rf('1/x^2'), rf('1/x')])
        combination = express_in_generators(generators, ops([0, 1], [0, 0, 1]))
        assert [c.coeffs for c in combination] == [[0, 1]]
        assert express_in_generators(generators, ops([1], [0])) is None

    def test_diffop_algebra(self):
        a = DiffOp(coeffs=[1, 2])
        b = DiffOp(coeffs=[0, 1, 0])
        assert b.order == 1
        assert (a + b).coeffs == [1, 3]
        assert (a * b).coeffs == [0, 1, 2]
        assert (a * b).to_text() == '2*d^2/dx^2 + d/dx'
        assert ops([1], [-1]).to_text() == '(1, -1)'
        assert a.apply(rf('1/x')) == rf('1/x - 2/x^2')


_POLES = [F(0), F(1), F(-2), F(3), F(1, 2), F(5, 2)]


def _random_inputs(rng):
    n = rng.randint(2, 3)
    fs = []
    while len(fs) < n:
        f = RatFun()
        for _ in range(rng.randint(1, 3)):
            pole = Poly([-rng.choice(_POLES), 1])
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            f = f + RatFun(Poly([c]), pole ** rng.randint(1, 3))
        if not f.is_zero():
            fs.append(f)
    return fs


@pytest.mark.slow
def test_generators_span_bounded_spaces(rng):
    for _ in range(50):
        fs = _random_inputs(rng)
        generators = wspace_generators(fs)
        for generator in generators:
            assert in_wspace(fs, generator)
        m = discrete_residues_plus(fs).m
        for beta in range(m + 3):
            for element in wspace_bounded(fs, beta):
                assert express_in_generators(generators, element) is not None
