from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..qpoly import Poly
from ..ratfun import RatFun


COMMANDS = (
    'hermite',
    'shiftset',
    'reduce',
    'decompose',
    'dres',
    'dresplus',
    'summable',
    'vspace',
    'telescope',
    'galois-diag',
)
_SINGLE_INPUT_COMMANDS = ('hermite', 'shiftset', 'reduce', 'decompose', 'dres', 'summable')


class OrbitEntry(BaseModel):
    """c / (x - alpha - offset)^order."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: Fraction
    offset: int = Field(ge=0, le=10)
    order: int = Field(ge=1, le=4)
    coeff: Fraction

    @field_validator('alpha', 'coeff', mode='before')
    @classmethod
    def to_fraction(cls, value):
        return Fraction(value)


class OrbitSpec(BaseModel):
    """Poles grouped by Z-orbit; distinct alphas must lie in distinct orbits."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    entries: List[OrbitEntry]

    @model_validator(mode='after')
    def fields_check(self):
        alphas = sorted({entry.alpha for entry in self.entries})
        for i, a in enumerate(alphas):
            for b in alphas[i + 1:]:
                if (b - a).denominator == 1:
                    raise ValueError(f'alpha values {a} and {b} lie in the same orbit')
        return self

    def to_ratfun(self) -> RatFun:
        total = RatFun()
        for entry in self.entries:
            pole = Poly((-(entry.alpha + entry.offset), 1))
            total = total + RatFun(Poly.constant(entry.coeff), pole ** entry.order)
        return total

    def orbit_sums(self) -> Dict[Tuple[int, Fraction], Fraction]:
        """(order, alpha) -> sum of the coefficients over the orbit of alpha."""
        sums: Dict[Tuple[int, Fraction], Fraction] = defaultdict(Fraction)
        for entry in self.entries:
            sums[(entry.order, entry.alpha)] += entry.coeff
        return dict(sums)


class DiagonalSystem(BaseModel):
    """sigma(Y) = diag(r_1, ..., r_n) Y."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    rs: List[RatFun] = Field(min_length=1)

    @model_validator(mode='after')
    def fields_check(self):
        for i, r in enumerate(self.rs):
            if r.is_zero():
                raise ValueError(f'r_{i + 1} must be nonzero')
        return self


class CommandRequest(BaseModel):
    command: Literal[COMMANDS]
    expressions: List[str] = Field(min_length=1)
    json_output: bool = False
    var: str = Field(default='x', pattern=r'^[A-Za-z_][A-Za-z_0-9]*$')
    beta: Optional[int] = Field(default=None, ge=0)
    trial_division_bound: Optional[int] = None

    @model_validator(mode='before')
    @classmethod
    def fields_check(cls, data):
        if not isinstance(data, dict):
            return data
        command = data.get('command')
        expressions = data.get('expressions') or []
        if command in _SINGLE_INPUT_COMMANDS and len(expressions) != 1:
            raise ValueError(f'`{command}` takes exactly one expression, got {len(expressions)}')
        if data.get('beta') is not None and command != 'telescope':
            raise ValueError('`--beta` only applies to `telescope`')
        return data
