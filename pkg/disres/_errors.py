from typing import Optional


class DisresError(Exception):
    """Base class of every error raised by the library.

    `code` is the stable machine-readable name reported by the CLI, `exit_code`
    the process status it maps to.
    """
    code = 'DisresError'
    exit_code = 4

    def __init__(self, detail: str = '', index: Optional[int] = None) -> None:
        self.detail = detail
        self.index = index
        super().__init__(detail)

    @property
    def message(self) -> str:
        where = f'(input #{self.index}) ' if self.index is not None else ''
        return f'{where}{self.detail}'.strip()

    def __str__(self) -> str:
        return f'[{self.code}] {self.message}'.strip()


class ExprError(DisresError):
    exit_code = 2


class ExprSyntaxError(ExprError):
    code = 'SyntaxError'

    def __init__(self, detail: str, offset: int) -> None:
        self.offset = offset
        super().__init__(f'{detail} at byte offset {offset}')


class UnknownVariableError(ExprError):
    code = 'UnknownVariable'

    def __init__(self, name: str, expected: str) -> None:
        self.name = name
        super().__init__(f'Unknown variable `{name}`, expected `{expected}`')


class DomainError(DisresError):
    exit_code = 3


class DivisionByZeroPolyError(DomainError):
    code = 'DivisionByZeroPoly'


class BothZeroError(DomainError):
    code = 'BothZero'


class ZeroInputError(DomainError):
    code = 'ZeroInput'


class DegreeTooSmallError(DomainError):
    code = 'DegreeTooSmall'


class ZeroDenominatorError(DomainError):
    code = 'ZeroDenominator'


class NotProperError(DomainError):
    code = 'NotProper'


class NotPolynomialError(DomainError):
    code = 'NotPolynomial'


class FactorsNotCoprimeError(DomainError):
    code = 'FactorsNotCoprime'


class ProductMismatchError(DomainError):
    code = 'ProductMismatch'


class NotSquarefreeError(DomainError):
    code = 'NotSquarefree'


class ConstantDenominatorError(DomainError):
    code = 'ConstantDenominator'


class NonzeroPolynomialPartError(DomainError):
    code = 'NonzeroPolynomialPart'


class NonIntegerResiduesError(DomainError):
    code = 'NonIntegerResidues'


class ZeroEpsilonError(DomainError):
    code = 'ZeroEpsilon'


class FactorizationBoundError(DomainError):
    code = 'FactorizationBoundExceeded'

    def __init__(self, value: int, bound: int) -> None:
        self.value = value
        self.bound = bound
        super().__init__(
            f'Cofactor {value} has no prime factor below {bound} and is not prime'
        )


class InternalConsistencyError(DisresError):
    exit_code = 4


class CertificateMismatchError(InternalConsistencyError):
    code = 'CertificateMismatch'


class NonConstantEpsilonError(InternalConsistencyError):
    code = 'NonConstantEpsilon'


class WitnessConstructionError(InternalConsistencyError):
    code = 'WitnessConstruction'
