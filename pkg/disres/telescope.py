"""Summability decisions, serial summability and creative telescoping.

All linear conditions are read off a shared residue system: an identity
"sum of D polynomials = 0" over the common B gives deg(B) scalar equations,
one per coefficient, because every D has degree below deg(B).
"""
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple, Union

from loguru import logger

from .qpoly import Poly
from .ratfun import RatFun, d_dx_pow, delta, proper_split
from .hermite import hermite_list
from .reduce import simple_reduction
from .residues import discrete_residues_plus
from .data._results import DiffOp, OperatorTuple, SharedResidueSystem, SummabilityVerdict
from .utils.linalg import echelon_basis, nullspace_basis, solve_particular
from ._errors import CertificateMismatchError, NonzeroPolynomialPartError


Contribution = Tuple[int, Fraction, Poly]


def _scale(k: int) -> Fraction:
    """(-1)^(k-1) / (k-1)!"""
    return Fraction((-1) ** (k - 1), factorial(k - 1))


def is_summable(f: RatFun) -> SummabilityVerdict:
    """Decide whether f = g(x+1) - g(x) for a rational g, and return g if so."""
    polypart, _ = proper_split(f)
    if polypart:
        raise NonzeroPolynomialPartError(f'Polynomial part {polypart} must be split off first')
    if f.is_zero():
        return SummabilityVerdict(summable=True, certificate=RatFun())

    certificate = RatFun()
    for k, fk in enumerate(hermite_list(f).components, start=1):
        form = simple_reduction(fk)
        if form.reduced:
            logger.debug(f'Order {k} keeps a nonzero reduced form {form.reduced}')
            return SummabilityVerdict(summable=False)
        if form.certificate:
            certificate = certificate + d_dx_pow(form.certificate, k - 1) * _scale(k)

    if __debug__:
        if delta(certificate) != f:
            raise CertificateMismatchError(f'Summability certificate of {f} does not telescope')
    return SummabilityVerdict(summable=True, certificate=certificate)


def _equation_rows(
    identities: Sequence[Sequence[Contribution]],
    nunknowns: int,
    width: int,
) -> List[List[Fraction]]:
    """Coefficient-wise rows of polynomial identities sum(scalar * D) = 0."""
    rows = []
    for identity in identities:
        block = [[Fraction(0)] * nunknowns for _ in range(width)]
        touched = False
        for unknown, scalar, poly in identity:
            for c, value in enumerate(poly.coeffs):
                if value:
                    block[c][unknown] += scalar * value
                    touched = True
        if touched:
            rows.extend(row for row in block if any(row))
    return rows


def serial_equations(system: SharedResidueSystem) -> List[List[Fraction]]:
    """Rows of sum_i v_i D_{i,k} = 0 for every order k."""
    identities = [
        [(i, Fraction(1), system.D[i][k]) for i in range(system.n)]
        for k in range(system.m)
    ]
    return _equation_rows(identities, system.n, system.B.degree)


def vspace_basis(fs: Sequence[RatFun]) -> List[List[Fraction]]:
    """Echelon basis of the rational vectors v with sum v_i f_i summable."""
    system = discrete_residues_plus(fs)
    return nullspace_basis(serial_equations(system), system.n)


def _telescoping_equations(
    system: SharedResidueSystem,
    bounds: Sequence[int],
    k_max: int,
) -> Tuple[List[List[Fraction]], List[int]]:
    """Rows for sum_i sum_j lambda_{i,k-j} (-1)^j D_{i,j}/(j-1)! = 0, k = 1..k_max.

    Unknown lambda_{i,t} sits at offsets[i] + t for 0 <= t <= bounds[i].
    """
    offsets = []
    total = 0
    for beta_i in bounds:
        offsets.append(total)
        total += beta_i + 1
    identities = []
    for k in range(1, k_max + 1):
        identity = []
        for i in range(system.n):
            for j in range(1, system.m + 1):
                t = k - j
                if 0 <= t <= bounds[i] and system.D[i][j - 1]:
                    scalar = Fraction((-1) ** j, factorial(j - 1))
                    identity.append((offsets[i] + t, scalar, system.D[i][j - 1]))
        identities.append(identity)
    return _equation_rows(identities, total, system.B.degree), offsets


def _operator_tuples(
    vectors: Sequence[Sequence[Fraction]],
    bounds: Sequence[int],
    offsets: Sequence[int],
) -> List[OperatorTuple]:
    return [
        OperatorTuple(ops=[
            DiffOp(coeffs=list(v[offsets[i]:offsets[i] + bounds[i] + 1]))
            for i in range(len(bounds))
        ])
        for v in vectors
    ]


def wspace_bounded(fs: Sequence[RatFun], beta: int) -> List[OperatorTuple]:
    """Basis of the operator tuples of order at most beta in the telescoping module."""
    if not isinstance(beta, int) or beta < 0:
        raise ValueError(f'`beta` must be a non-negative integer, got {beta}')
    system = discrete_residues_plus(fs)
    bounds = [beta] * system.n
    rows, offsets = _telescoping_equations(system, bounds, system.m + beta)
    basis = nullspace_basis(rows, sum(b + 1 for b in bounds))
    logger.debug(f'Bounded telescoping space for beta={beta} has dimension {len(basis)}')
    return _operator_tuples(basis, bounds, offsets)


def _shifted(generator: Sequence[Sequence[Fraction]], k: int, width: int) -> List[Fraction]:
    """s^k * generator, flattened with `width` slots per component."""
    out = []
    for coeffs in generator:
        padded = [Fraction(0)] * k + list(coeffs)
        out.extend(padded + [Fraction(0)] * (width - len(padded)))
    return out


def wspace_generators(fs: Sequence[RatFun]) -> List[OperatorTuple]:
    """Row-reduced generators of the telescoping module.

    Degrees are completed one at a time: at order beta, every element of the
    bounded space that the shifts of earlier generators do not reach becomes a
    new generator. The minimal degrees of the module never exceed
    sum(m_i), so stopping there yields the whole module.
    """
    system = discrete_residues_plus(fs)
    n = system.n
    top = sum(system.orders)
    generators: List[List[List[Fraction]]] = []
    for beta in range(top + 1):
        width = beta + 1
        rows, _ = _telescoping_equations(system, [beta] * n, system.m + beta)
        space = nullspace_basis(rows, n * width)
        spanned = [
            _shifted(g, k, width)
            for g in generators
            for k in range(width - len(g[0]) + 1)
        ]
        rank = len(echelon_basis(spanned, n * width))
        for v in space:
            if rank == len(space):
                break
            if len(echelon_basis(spanned + [v], n * width)) > rank:
                spanned.append(v)
                rank += 1
                generators.append([v[i * width:(i + 1) * width] for i in range(n)])
    logger.debug(f'Telescoping module up to order {top}: {len(generators)} generators')
    return [OperatorTuple(ops=[DiffOp(coeffs=list(c)) for c in g]) for g in generators]


def apply_operators(fs: Sequence[RatFun], ops: Union[OperatorTuple, Sequence[DiffOp]]) -> RatFun:
    """sum_i L_i(f_i)."""
    if not isinstance(ops, OperatorTuple):
        ops = OperatorTuple(ops=list(ops))
    return ops.apply(fs)


def in_wspace(fs: Sequence[RatFun], ops: Union[OperatorTuple, Sequence[DiffOp]]) -> bool:
    """Whether sum_i L_i(f_i) is summable, checked on orders up to max(ord L_i + m_i)."""
    if not isinstance(ops, OperatorTuple):
        ops = OperatorTuple(ops=list(ops))
    system = discrete_residues_plus(fs)
    reach = ops.reach(system.orders)
    for k in range(1, reach + 1):
        total = Poly()
        for i, op in enumerate(ops.ops):
            for j in range(1, system.m + 1):
                t = k - j
                if 0 <= t <= op.order and op.coeffs[t] and system.D[i][j - 1]:
                    total = total + system.D[i][j - 1] * (
                        op.coeffs[t] * Fraction((-1) ** j, factorial(j - 1))
                    )
        if total:
            return False
    return True


def express_in_generators(
    generators: Sequence[OperatorTuple],
    target: OperatorTuple,
    max_degree: Optional[int] = None,
) -> Optional[List[DiffOp]]:
    """Operators c_g with sum_g c_g * G_g = target componentwise, or None.

    The c_g have order at most `max_degree`, by default the order of the
    target plus the largest generator order.
    """
    n = target.n
    target_order = max((op.order for op in target.ops), default=-1)
    if not generators:
        return [] if target_order < 0 else None
    gen_order = max((op.order for g in generators for op in g.ops), default=0)
    if max_degree is None:
        max_degree = max(target_order, 0) + max(gen_order, 0)
    width = max_degree + 1
    top = max(max_degree + gen_order, target_order)

    rows = []
    rhs = []
    for i in range(n):
        for e in range(top + 1):
            row = [Fraction(0)] * (len(generators) * width)
            for g, gen in enumerate(generators):
                coeffs = gen.ops[i].coeffs
                for t in range(width):
                    if 0 <= e - t < len(coeffs):
                        row[g * width + t] = coeffs[e - t]
            rows.append(row)
            rhs.append(target.ops[i].coeffs[e] if e < len(target.ops[i].coeffs) else Fraction(0))
    solution = solve_particular(rows, rhs, len(generators) * width)
    if solution is None:
        return None
    return [DiffOp(coeffs=solution[g * width:(g + 1) * width]) for g in range(len(generators))]
