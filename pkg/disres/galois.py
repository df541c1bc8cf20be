"""Relation lattices of diagonal and block-diagonal difference systems over Q."""
import math
from fractions import Fraction
from typing import Dict, List, Sequence

from loguru import logger
from sympy import factorint, isprime

from .qpoly import ONE, derivative, gcd_monic, integer_roots, parametric_resultant
from .ratfun import RatFun, d_dx, sigma_pow
from .residues import discrete_residues_plus, shared_residues
from .reduce import _check_simple_poles
from .telescope import is_summable, serial_equations, vspace_basis, wspace_generators
from .data._requests import DiagonalSystem
from .data._results import (
    AdditiveGroupEquations,
    DiagonalGroupData,
    EpsilonWitness,
    IntLattice,
    MultRelationData,
)
from .utils.lattice import hermite_normal_form, kernel
from ._errors import (
    FactorizationBoundError,
    NonConstantEpsilonError,
    NonIntegerResiduesError,
    WitnessConstructionError,
    ZeroEpsilonError,
    ZeroInputError,
)


_DEFAULT_TRIAL_DIVISION_BOUND = 10 ** 6
_MIN_TRIAL_DIVISION_BOUND = 2
_MAX_TRIAL_DIVISION_BOUND = 10 ** 9


def log_derivative(r: RatFun) -> RatFun:
    """r'/r."""
    if r.is_zero():
        raise ZeroInputError('Logarithmic derivative of zero')
    return d_dx(r) / r


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for row in rows:
        den = math.lcm(*(c.denominator for c in row))
        out.append([c.numerator * (den // c.denominator) for c in row])
    return out


def _lattice_of(fs: Sequence[RatFun], allow_zero: bool) -> IntLattice:
    system = shared_residues(fs) if allow_zero else discrete_residues_plus(fs)
    rows = _integer_rows(serial_equations(system))
    return IntLattice(dimension=len(fs), basis=kernel(rows, len(fs)))


def integer_lattice(fs: Sequence[RatFun]) -> IntLattice:
    """HNF basis of the integer vectors e with sum e_i f_i summable."""
    return _lattice_of(fs, allow_zero=False)


def exp_log_integrate(g: RatFun) -> RatFun:
    """p with p'/p = g, for g with simple poles and integer residues.

    Candidate residues are the integer roots of Res_x(b, a - z*b'); each
    contributes gcd(b, a - c*b')^c.
    """
    _check_simple_poles(g)
    if g.is_zero():
        return RatFun(ONE)
    a, b = g.num, g.den
    db = derivative(b)
    res = parametric_resultant(b, lambda z0: a - db * z0, b.degree)
    p = RatFun(ONE)
    for c in integer_roots(res) if res else []:
        if c == 0:
            continue
        factor = gcd_monic(b, a - db * c)
        if factor.degree > 0:
            p = p * RatFun(factor) ** c
    if log_derivative(p) != g:
        raise NonIntegerResiduesError(f'{g} has residues that are not all integers')
    return p


def _is_constant(f: RatFun) -> bool:
    return f.den.degree == 0 and f.num.degree <= 0


def diagonal_relations(sys: DiagonalSystem) -> MultRelationData:
    """Lattice of e with prod r_i^(e_i) = epsilon * sigma(p)/p, with witnesses."""
    fs = [log_derivative(r) for r in sys.rs]
    lattice = _lattice_of(fs, allow_zero=True)
    witnesses = []
    for e in lattice.basis:
        combined = RatFun()
        product = RatFun(ONE)
        for ei, fi, ri in zip(e, fs, sys.rs):
            if ei:
                combined = combined + fi * ei
                product = product * ri ** ei
        verdict = is_summable(combined)
        if not verdict.summable:
            raise WitnessConstructionError(f'Lattice vector {e} is not summable')
        try:
            p = exp_log_integrate(verdict.certificate)
        except NonIntegerResiduesError as err:
            raise WitnessConstructionError(f'No rational witness for {e}: {err}') from err
        epsilon = product * p / sigma_pow(p, 1)
        if not _is_constant(epsilon):
            raise NonConstantEpsilonError(f'epsilon = {epsilon} for lattice vector {e}')
        witnesses.append(EpsilonWitness(p=p, epsilon=epsilon.num.tc))
        logger.debug(f'Witness for {e}: p = {p}, epsilon = {epsilon}')
    return MultRelationData(lattice=lattice, witnesses=witnesses)


def _checked_bound(bound) -> int:
    if (
        not isinstance(bound, int)
        or
        not _MIN_TRIAL_DIVISION_BOUND <= bound <= _MAX_TRIAL_DIVISION_BOUND
    ):
        logger.warning(
            f'`trial_division_bound` must be an integer between {_MIN_TRIAL_DIVISION_BOUND} and '
            f'{_MAX_TRIAL_DIVISION_BOUND}, using default value {_DEFAULT_TRIAL_DIVISION_BOUND} '
            'instead'
        )
        return _DEFAULT_TRIAL_DIVISION_BOUND
    return bound


def _factor(n: int, bound: int) -> Dict[int, int]:
    factors = {int(q): int(k) for q, k in factorint(n, limit=bound).items()}
    for q in factors:
        if q > bound * bound and not isprime(q):
            raise FactorizationBoundError(q, bound)
    return factors


def multiplicative_relations(
    eps: Sequence[Fraction],
    trial_division_bound: int = _DEFAULT_TRIAL_DIVISION_BOUND,
) -> IntLattice:
    """HNF basis of the m with prod eps_j^(m_j) = 1."""
    bound = _checked_bound(trial_division_bound)
    eps = [Fraction(e) for e in eps]
    for j, e in enumerate(eps):
        if e == 0:
            raise ZeroEpsilonError('Multiplicative relations of zero', index=j)
    exponents: Dict[int, List[int]] = {}
    for j, e in enumerate(eps):
        for prime, mult in _factor(abs(e.numerator), bound).items():
            exponents.setdefault(prime, [0] * len(eps))[j] += mult
        for prime, mult in _factor(e.denominator, bound).items():
            exponents.setdefault(prime, [0] * len(eps))[j] -= mult
    matrix = [exponents[prime] for prime in sorted(exponents)]
    basis = kernel(matrix, len(eps)) if matrix else [
        [int(i == j) for j in range(len(eps))] for i in range(len(eps))
    ]

    negative = [j for j, e in enumerate(eps) if e < 0]
    parity = [sum(row[j] for j in negative) % 2 for row in basis]
    if any(parity):
        r0 = parity.index(1)
        pivot = basis[r0]
        basis = [
            [2 * v for v in row] if r == r0
            else row if parity[r] == 0
            else [x + y for x, y in zip(row, pivot)]
            for r, row in enumerate(basis)
        ]
    return IntLattice(dimension=len(eps), basis=hermite_normal_form(basis))


def galois_group_lattice(
    sys: DiagonalSystem,
    trial_division_bound: int = _DEFAULT_TRIAL_DIVISION_BOUND,
) -> DiagonalGroupData:
    """E = {sum m_j e_j : prod epsilon_j^(m_j) = 1} inside the witness lattice."""
    data = diagonal_relations(sys)
    relations = multiplicative_relations(
        [w.epsilon for w in data.witnesses], trial_division_bound=trial_division_bound,
    )
    rows = [
        [sum(m * e[i] for m, e in zip(row, data.lattice.basis)) for i in range(len(sys.rs))]
        for row in relations.basis
    ]
    group = IntLattice(dimension=len(sys.rs), basis=hermite_normal_form(rows))
    return DiagonalGroupData(relations=data, epsilon_relations=relations, group=group)


def additive_group_equations(fs: Sequence[RatFun], differential: bool = False) -> AdditiveGroupEquations:
    """Defining equations of the Galois group of a block-diagonal additive system.

    The group is the common zero set of sum v_i eta_i for v in V(f); with
    `differential` the telescoping generators are added as operator equations.
    """
    relations = vspace_basis(fs)
    operators = wspace_generators(fs) if differential else None
    return AdditiveGroupEquations(relations=relations, operator_relations=operators)
