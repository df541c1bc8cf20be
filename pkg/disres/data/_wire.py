from typing import List, Optional

from pydantic import BaseModel, Field


Coeffs = List[str]


class ErrorModel(BaseModel):
    error: str
    detail: str


class HermiteOutputModel(BaseModel):
    components: List[str]
    polynomial_part: Optional[Coeffs] = None


class ShiftSetOutputModel(BaseModel):
    shifts: List[int]


class ReduceOutputModel(BaseModel):
    reduced: str
    certificate: str
    polynomial_part: Optional[Coeffs] = None


class DecomposeOutputModel(BaseModel):
    remainder: str
    certificate: str
    polynomial_part: Optional[Coeffs] = None


class ResiduePairModel(BaseModel):
    k: int
    big_b: Coeffs = Field(serialization_alias='B')
    d: Coeffs = Field(serialization_alias='D')


class DresOutputModel(BaseModel):
    system: List[ResiduePairModel]
    polynomial_part: Optional[Coeffs] = None


class DresPlusOutputModel(BaseModel):
    big_b: Coeffs = Field(serialization_alias='B')
    d: List[List[Coeffs]] = Field(serialization_alias='D')
    orders: List[int]
    polynomial_parts: Optional[List[Coeffs]] = None


class SummableOutputModel(BaseModel):
    summable: bool
    certificate: Optional[str] = None
    polynomial_part: Optional[Coeffs] = None


class VSpaceOutputModel(BaseModel):
    basis: List[Coeffs]
    polynomial_parts: Optional[List[Coeffs]] = None


class TelescopeOutputModel(BaseModel):
    operators: List[List[Coeffs]]
    beta: Optional[int] = None
    polynomial_parts: Optional[List[Coeffs]] = None


class WitnessModel(BaseModel):
    p: str
    epsilon: str


class GaloisDiagOutputModel(BaseModel):
    lattice: List[List[int]]
    witnesses: List[WitnessModel]
    relations: List[List[int]]
    group: List[List[int]]
