from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..qpoly import ONE, Poly
from ..ratfun import RatFun, d_dx, d_dx_pow


_MODEL_CONFIG = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class HermiteSplit(BaseModel):
    """f = d/dx(g) + h with h having squarefree denominator."""
    model_config = _MODEL_CONFIG

    g: RatFun
    h: RatFun


class HermiteList(BaseModel):
    model_config = _MODEL_CONFIG

    components: List[RatFun] = Field(min_length=1)

    @model_validator(mode='after')
    def fields_check(self):
        if self.components[-1].is_zero():
            raise ValueError('The last Hermite component must be nonzero')
        return self

    @property
    def m(self) -> int:
        return len(self.components)

    def reconstruct(self) -> RatFun:
        """sum_k (-1)^(k-1)/(k-1)! * d^(k-1)/dx^(k-1) f_k."""
        total = RatFun()
        for k, fk in enumerate(self.components, start=1):
            if fk:
                total = total + d_dx_pow(fk, k - 1) * Fraction((-1) ** (k - 1), factorial(k - 1))
        return total


class ShiftSet(BaseModel):
    model_config = _MODEL_CONFIG

    shifts: List[int] = Field(default_factory=list)

    @model_validator(mode='after')
    def fields_check(self):
        if any(s <= 0 for s in self.shifts) or self.shifts != sorted(set(self.shifts)):
            raise ValueError(f'Shifts must be ascending positive integers, got {self.shifts}')
        return self

    @property
    def dispersion(self) -> int:
        return self.shifts[-1] if self.shifts else 0

    def __contains__(self, ell: int) -> bool:
        return ell in self.shifts

    def __str__(self) -> str:
        return '{' + ', '.join(str(s) for s in self.shifts) + '}'


class ReducedForm(BaseModel):
    """input - reduced = Delta(certificate)."""
    model_config = _MODEL_CONFIG

    reduced: RatFun
    certificate: RatFun


class JointReducedForms(BaseModel):
    model_config = _MODEL_CONFIG

    reduced: List[RatFun]
    certificates: List[RatFun]

    @model_validator(mode='after')
    def fields_check(self):
        if len(self.reduced) != len(self.certificates):
            raise ValueError('Reduced forms and certificates differ in length')
        return self


class AdditiveDecomposition(BaseModel):
    """input = Delta(certificate) + remainder with pdisp(remainder) = 0."""
    model_config = _MODEL_CONFIG

    remainder: RatFun
    certificate: RatFun


class ResiduePair(BaseModel):
    model_config = _MODEL_CONFIG

    B: Poly
    D: Poly

    @model_validator(mode='after')
    def fields_check(self):
        if not self.B.is_monic():
            raise ValueError(f'B must be monic and nonzero, got {self.B}')
        if self.D.degree >= self.B.degree:
            raise ValueError(f'deg D must be below deg B, got D={self.D}, B={self.B}')
        return self

    @classmethod
    def zero(cls) -> 'ResiduePair':
        return cls(B=ONE, D=Poly())

    def is_zero(self) -> bool:
        return self.D.is_zero()


class ResidueSystem(BaseModel):
    model_config = _MODEL_CONFIG

    pairs: List[ResiduePair]

    @property
    def m(self) -> int:
        return len(self.pairs)

    def is_trivial(self) -> bool:
        return all(pair.is_zero() for pair in self.pairs)

    def reduced_form_text(self, var: str = 'x') -> str:
        """The reduced form h = sum_k sum_{B_k(a)=0} D_k(a)/(x-a)^k, as text."""
        terms = []
        for k, pair in enumerate(self.pairs, start=1):
            if pair.is_zero():
                continue
            power = '' if k == 1 else f'^{k}'
            terms.append(
                f'RootSum({pair.B.to_text("a")}, a -> ({pair.D.to_text("a")})/({var} - a){power})'
            )
        return ' + '.join(terms) if terms else '0'


class SharedResidueSystem(BaseModel):
    """One B serving every input and order; D[i][k-1] is the order-k numerator of input i."""
    model_config = _MODEL_CONFIG

    B: Poly
    D: List[List[Poly]]
    orders: List[int]

    @model_validator(mode='after')
    def fields_check(self):
        if len(self.orders) != len(self.D):
            raise ValueError('One Hermite length per input is required')
        if len({len(row) for row in self.D}) > 1:
            raise ValueError('Every input must carry the same number of orders')
        return self

    @property
    def n(self) -> int:
        return len(self.D)

    @property
    def m(self) -> int:
        return len(self.D[0]) if self.D else 0

    def system_for(self, i: int) -> ResidueSystem:
        return ResidueSystem(pairs=[
            ResiduePair(B=self.B, D=d) if d else ResiduePair.zero() for d in self.D[i]
        ])


class DiffOp(BaseModel):
    """sum_j coeffs[j] * d^j/dx^j."""
    model_config = _MODEL_CONFIG

    coeffs: List[Fraction] = Field(default_factory=list)

    @model_validator(mode='before')
    @classmethod
    def fields_check(cls, data):
        if not isinstance(data, dict):
            return data
        coeffs = [Fraction(c) for c in data.get('coeffs', [])]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        data['coeffs'] = coeffs
        return data

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def apply(self, f: RatFun) -> RatFun:
        total = RatFun()
        for c in self.coeffs:
            if c:
                total = total + f * c
            f = d_dx(f)
        return total

    def __add__(self, other: 'DiffOp') -> 'DiffOp':
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return DiffOp(coeffs=out)

    def __mul__(self, other: 'DiffOp') -> 'DiffOp':
        if self.is_zero() or other.is_zero():
            return DiffOp()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DiffOp(coeffs=out)

    def to_text(self) -> str:
        if not self.coeffs:
            return '0'
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            if j == 0:
                body = str(abs(c))
            else:
                mono = 'd/dx' if j == 1 else f'd^{j}/dx^{j}'
                body = mono if abs(c) == 1 else f'{abs(c)}*{mono}'
            terms.append(('-' if c < 0 else '+', body))
        sign, body = terms[0]
        text = f'-{body}' if sign == '-' else body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


class OperatorTuple(BaseModel):
    model_config = _MODEL_CONFIG

    ops: List[DiffOp]

    @property
    def n(self) -> int:
        return len(self.ops)

    def orders(self) -> List[int]:
        return [op.order for op in self.ops]

    def reach(self, hermite_lengths: Sequence[int]) -> int:
        """max(ord(L_i) + m_i) over the nonzero operators, 0 if all vanish."""
        return max(
            (op.order + mi for op, mi in zip(self.ops, hermite_lengths) if not op.is_zero()),
            default=0,
        )

    def apply(self, fs: Sequence[RatFun]) -> RatFun:
        total = RatFun()
        for op, f in zip(self.ops, fs):
            total = total + op.apply(f)
        return total

    def to_text(self) -> str:
        return '(' + ', '.join(op.to_text() for op in self.ops) + ')'


class SummabilityVerdict(BaseModel):
    model_config = _MODEL_CONFIG

    summable: bool
    certificate: Optional[RatFun] = None

    @model_validator(mode='after')
    def fields_check(self):
        if self.summable != (self.certificate is not None):
            raise ValueError('A certificate is present exactly when the input is summable')
        return self


class IntLattice(BaseModel):
    """Row basis in Hermite normal form inside Z^dimension."""
    model_config = _MODEL_CONFIG

    dimension: int = Field(ge=0)
    basis: List[List[int]] = Field(default_factory=list)

    @model_validator(mode='after')
    def fields_check(self):
        if any(len(row) != self.dimension for row in self.basis):
            raise ValueError(f'Every basis row must have length {self.dimension}')
        return self

    @property
    def rank(self) -> int:
        return len(self.basis)


class EpsilonWitness(BaseModel):
    """prod r_i^(e_i) = epsilon * sigma(p)/p."""
    model_config = _MODEL_CONFIG

    p: RatFun
    epsilon: Fraction


class MultRelationData(BaseModel):
    model_config = _MODEL_CONFIG

    lattice: IntLattice
    witnesses: List[EpsilonWitness]

    @model_validator(mode='after')
    def fields_check(self):
        if len(self.witnesses) != self.lattice.rank:
            raise ValueError('One witness per lattice basis vector is required')
        return self


class DiagonalGroupData(BaseModel):
    """Ẽ with its witnesses, the epsilon relation lattice and E itself."""
    model_config = _MODEL_CONFIG

    relations: MultRelationData
    epsilon_relations: IntLattice
    group: IntLattice


class AdditiveGroupEquations(BaseModel):
    """Defining equations sum v_i eta_i = 0 of an additive Galois group."""
    model_config = _MODEL_CONFIG

    relations: List[List[Fraction]]
    operator_relations: Optional[List[OperatorTuple]] = None
