from fractions import Fraction
from typing import List, Sequence

from ..qpoly import Poly
from ..data._results import DiffOp, IntLattice, OperatorTuple, ResidueSystem


def rat_json(c: Fraction) -> str:
    c = Fraction(c)
    return f'{c.numerator}/{c.denominator}'


def poly_json(p: Poly) -> List[str]:
    """Ascending coefficient strings "num/den"."""
    return [rat_json(c) for c in p.coeffs]


def vector_json(v: Sequence[Fraction]) -> List[str]:
    return [rat_json(c) for c in v]


def diffop_json(op: DiffOp) -> List[str]:
    return [rat_json(c) for c in op.coeffs]


def operator_tuple_json(ops: OperatorTuple) -> List[List[str]]:
    return [diffop_json(op) for op in ops.ops]


def lattice_json(lattice: IntLattice) -> List[List[int]]:
    return [list(row) for row in lattice.basis]


def residue_system_text(system: ResidueSystem, var: str = 'x') -> str:
    lines = []
    for k, pair in enumerate(system.pairs, start=1):
        lines.append(f'B_{k} = {pair.B.to_text(var)}, D_{k} = {pair.D.to_text(var)}')
    return '\n'.join(lines)


def vector_text(v: Sequence[Fraction]) -> str:
    return '(' + ', '.join(str(Fraction(c)) for c in v) + ')'


def lattice_text(lattice: IntLattice) -> str:
    if not lattice.basis:
        return '{}'
    return '{' + ', '.join('(' + ', '.join(str(c) for c in row) + ')' for row in lattice.basis) + '}'
