"""Expression language for rational functions in one variable.

Precedence from tight to loose: `^` (literal integer exponent, negative
allowed), unary minus, `*` `/` and juxtaposition, `+` `-`. Binary operators
associate to the left, so "x(x+2)" and "2x^2" are products.
"""
from dataclasses import dataclass
from typing import Union

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput

from ..qpoly import Poly
from ..ratfun import RatFun
from .._errors import ExprSyntaxError, UnknownVariableError


_GRAMMAR = r"""
?start: sum

?sum: product
    | sum "+" product   -> add
    | sum "-" product   -> sub

?product: unary
    | product "*" unary -> mul
    | product "/" unary -> div
    | product power     -> mul

?unary: power
    | "-" unary         -> neg

?power: atom
    | atom "^" exponent -> pow

exponent: SIGNED_INT
    | "(" SIGNED_INT ")"

?atom: INT              -> number
    | NAME              -> name
    | "(" sum ")"

%import common.INT
%import common.SIGNED_INT
%import common.CNAME -> NAME
%import common.WS
%ignore WS
"""

_parser = Lark(_GRAMMAR, parser='lalr', lexer='contextual')


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: 'Expr'


@dataclass(frozen=True)
class BinOp:
    op: str
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Pow:
    base: 'Expr'
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]


class _ExprBuilder(Transformer):
    def number(self, items):
        return Num(int(items[0]))

    def name(self, items):
        return Var(str(items[0]))

    def neg(self, items):
        return Neg(items[0])

    def add(self, items):
        return BinOp('+', items[0], items[1])

    def sub(self, items):
        return BinOp('-', items[0], items[1])

    def mul(self, items):
        return BinOp('*', items[0], items[1])

    def div(self, items):
        return BinOp('/', items[0], items[1])

    def exponent(self, items):
        return int(items[0])

    def pow(self, items):
        return Pow(items[0], items[1])


def _byte_offset(text: str, pos: int) -> int:
    if pos is None or pos < 0:
        pos = len(text)
    return len(text[:pos].encode('utf-8'))


def parse_expr(text: str) -> Expr:
    try:
        tree = _parser.parse(text)
    except UnexpectedEOF:
        raise ExprSyntaxError('Unexpected end of input', _byte_offset(text, -1)) from None
    except UnexpectedInput as e:
        pos = getattr(e, 'pos_in_stream', None)
        token = getattr(e, 'token', None)
        if token is not None:
            pos = -1 if token.type == '$END' else token.start_pos
        raise ExprSyntaxError('Unexpected input', _byte_offset(text, pos)) from None
    return _ExprBuilder().transform(tree)


def evaluate(expr: Expr, var: str = 'x') -> RatFun:
    if isinstance(expr, Num):
        return RatFun(Poly.constant(expr.value))
    if isinstance(expr, Var):
        if expr.name != var:
            raise UnknownVariableError(expr.name, var)
        return RatFun(Poly((0, 1)))
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, var)
    if isinstance(expr, Pow):
        return evaluate(expr.base, var) ** expr.exponent
    left, right = evaluate(expr.left, var), evaluate(expr.right, var)
    if expr.op == '+':
        return left + right
    if expr.op == '-':
        return left - right
    if expr.op == '*':
        return left * right
    return left / right


def parse_ratfun(text: str, var: str = 'x') -> RatFun:
    """Parse `text` into a normalized rational function in `var`."""
    return evaluate(parse_expr(text), var)
