import pytest

from disres.dispersion import pdisp
from disres.hermite import hermite_list
from disres.reduce import (
    additive_decomposition,
    reduction_factors,
    simple_reduction,
    simple_reduction_plus,
)
from disres.ratfun import RatFun, delta
from disres._errors import NotProperError, NotSquarefreeError
from conftest import poly, rf


PAULE_F1 = '-(x^3+4x^2+13x+36)/(36x(x^2-1)(x^2+2))'
PAULE_F2 = '(x^3+2x^2+5x+10)/(36(x^2-1)(x^2+2))'
EXAMPLE_2 = '1/(x^3(x+2)^3(x+3)(x^2+1)(x^2+4x+5)^2)'


class TestSimpleReduction:
    @pytest.mark.parametrize('f, reduced', [
        (PAULE_F2, '(x^2-3x+2)/(36(x+1)(x^2+2))'),
        (PAULE_F1, '(-x+13)/(36(x+1)(x^2+2))'),
        ('-(7x-1)/(300(x+2)x)', '-7/(300(x+2))'),
        ('1/(x(x+1))', '0'),
        ('1/(x^2+1)', '1/(x^2+1)'),
    ])
    def test_reduced_forms(self, f, reduced):
        f = rf(f)
        form = simple_reduction(f)
        assert form.reduced == rf(reduced)
        assert delta(form.certificate) == f - form.reduced

    def test_shiftfree_input_has_zero_certificate(self):
        assert simple_reduction(rf('1/(x(x+1/2))')).certificate.is_zero()

    def test_reduced_denominator_is_shiftfree(self, random_proper):
        for _ in range(10):
            f = hermite_list(random_proper(multiplicity=1)).components[0]
            form = simple_reduction(f)
            if form.reduced:
                assert pdisp(form.reduced) == 0

    def test_errors(self):
        with pytest.raises(NotProperError):
            simple_reduction(rf('x/(x+1)'))
        with pytest.raises(NotSquarefreeError):
            simple_reduction(rf('1/x^2'))

    def test_paule_factors(self):
        assert reduction_factors(rf(PAULE_F2)) == [poly('(x+1)(x^2+2)'), poly('x - 1')]
        assert reduction_factors(rf(PAULE_F1)) == [poly('(x+1)(x^2+2)'), poly('x'), poly('x - 1')]

    def test_example_2_factors(self):
        f1 = hermite_list(rf(EXAMPLE_2)).components[0]
        assert reduction_factors(f1) == [
            poly('(x+3)(x^2+4x+5)'),
            poly('x + 2'),
            poly('x^2 + 1'),
            poly('x'),
        ]


class TestJointReduction:
    def test_common_representative(self):
        joint = simple_reduction_plus([rf('1/x'), rf('1/(x+1)')])
        assert joint.reduced == [rf('1/(x+1)'), rf('1/(x+1)')]
        assert joint.certificates == [rf('-1/x'), RatFun()]

    def test_zero_inputs_pass_through(self):
        joint = simple_reduction_plus([RatFun(), rf('2/(x+3)')])
        assert joint.reduced == [RatFun(), rf('2/(x+3)')]

    def test_error_reports_index(self):
        with pytest.raises(NotSquarefreeError) as e:
            simple_reduction_plus([rf('1/x'), rf('1/x^3')])
        assert e.value.index == 1


class TestAdditiveDecomposition:
    @pytest.mark.parametrize('f', [
        '1/x^2 - 1/(x+1)^2',
        '1/(x^2(x+1))',
        '(x+2)/(x(x^2-1)^2(x^2+2)^2)',
        '1/(x^2+1)',
    ])
    def test_decomposition(self, f):
        f = rf(f)
        result = additive_decomposition(f)
        assert delta(result.certificate) + result.remainder == f
        if result.remainder:
            assert pdisp(result.remainder) == 0

    def test_summable_input_leaves_nothing(self):
        assert additive_decomposition(rf('1/x^2 - 1/(x+1)^2')).remainder.is_zero()

    def test_zero(self):
        result = additive_decomposition(RatFun())
        assert result.remainder.is_zero() and result.certificate.is_zero()

    def test_not_proper(self):
        with pytest.raises(NotProperError):
            additive_decomposition(rf('x'))
