import argparse
import json
import sys
from functools import wraps
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ValidationError

from .qpoly import squarefree_part
from .ratfun import RatFun, proper_split
from .hermite import hermite_list
from .dispersion import shift_set
from .reduce import additive_decomposition, simple_reduction
from .residues import discrete_residues, discrete_residues_plus
from .telescope import is_summable, vspace_basis, wspace_bounded, wspace_generators
from .galois import _DEFAULT_TRIAL_DIVISION_BOUND, galois_group_lattice
from .data._requests import COMMANDS, CommandRequest, DiagonalSystem
from .data._wire import (
    DecomposeOutputModel,
    DresOutputModel,
    DresPlusOutputModel,
    ErrorModel,
    GaloisDiagOutputModel,
    HermiteOutputModel,
    ReduceOutputModel,
    ResiduePairModel,
    ShiftSetOutputModel,
    SummableOutputModel,
    TelescopeOutputModel,
    VSpaceOutputModel,
    WitnessModel,
)
from .utils.expr import parse_ratfun
from .utils.render import (
    lattice_json,
    lattice_text,
    operator_tuple_json,
    poly_json,
    rat_json,
    residue_system_text,
    vector_json,
    vector_text,
)
from ._errors import DisresError, NotPolynomialError, ZeroInputError


_LOG_LEVELS = ('TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL')
_DEFAULT_LOG_LEVEL = 'WARNING'
_EXIT_USAGE = 2
_EXIT_INTERNAL = 4

# (one-line help, --json output shape); coefficient lists are ascending "p/q" strings
_COMMAND_HELP: Dict[str, Tuple[str, str]] = {
    'hermite': ('Hermite reduction f = f_1 + ... + f_m.',
                '{"components": [str], "polynomial_part"?: [str]}'),
    'shiftset': ('Shift set of the squarefree part of a polynomial.',
                 '{"shifts": [int]}'),
    'reduce': ('Simple reduction f = Delta(g) + r.',
               '{"reduced": str, "certificate": str, "polynomial_part"?: [str]}'),
    'decompose': ('Additive decomposition f = Delta(g) + r.',
                  '{"remainder": str, "certificate": str, "polynomial_part"?: [str]}'),
    'dres': ('Discrete residues of a rational function.',
             '{"system": [{"k": int, "B": [str], "D": [str]}], "polynomial_part"?: [str]}'),
    'dresplus': ('Discrete residues of several rational functions over a common B.',
                 '{"B": [str], "D": [[[str]]], "orders": [int], "polynomial_parts"?: [[str]]}'),
    'summable': ('Decide summability and return a certificate.',
                 '{"summable": bool, "certificate": str|null, "polynomial_part"?: [str]}'),
    'vspace': ('Basis of the rational relations with a summable combination.',
               '{"basis": [[str]], "polynomial_parts"?: [[str]]}'),
    'telescope': ('Operator tuples with a summable combination (all, or order <= --beta).',
                  '{"operators": [[[str]]], "beta": int|null, "polynomial_parts"?: [[str]]}'),
    'galois-diag': ('Galois group lattice of a diagonal difference system.',
                    '{"lattice": [[int]], "witnesses": [{"p": str, "epsilon": str}], '
                    '"relations": [[int]], "group": [[int]]}'),
}

Rendered = Tuple[str, BaseModel]


def _emit_error(code: str, detail: str, json_output: bool) -> None:
    if json_output:
        error = ErrorModel(error=code, detail=detail)
        print(json.dumps(error.model_dump(mode='json'), indent=2), file=sys.stderr)
    else:
        print(f'error: [{code}] {detail}', file=sys.stderr)


def handle_exceptions(func):
    """Map library errors to exit codes and an error report on stderr."""
    @wraps(func)
    def wrapper(request: CommandRequest) -> int:
        try:
            return func(request)
        except DisresError as e:
            logger.debug(f'{func.__name__} failed: {e}')
            _emit_error(e.code, e.message, request.json_output)
            return e.exit_code
        except Exception as e:
            level = 'DEBUG' if request.json_output else 'ERROR'
            logger.opt(exception=e).log(level, f'Unexpected failure: {e}')
            _emit_error('Internal', str(e), request.json_output)
            return _EXIT_INTERNAL
    return wrapper


def _split(f: RatFun, parts: List) -> RatFun:
    polypart, proper = proper_split(f)
    parts.append(polypart)
    return proper


def _polypart(parts: Sequence) -> Optional[List[str]]:
    return poly_json(parts[0]) if parts and parts[0] else None


def _polypart_line(parts: Sequence, var: str) -> List[str]:
    return [f'polynomial part = {parts[0].to_text(var)}'] if parts and parts[0] else []


def _polyparts(parts: Sequence) -> Optional[List[List[str]]]:
    return [poly_json(p) for p in parts] if any(parts) else None


def _polyparts_lines(parts: Sequence, var: str) -> List[str]:
    return [
        f'polynomial part {i} = {p.to_text(var)}' for i, p in enumerate(parts, start=1) if p
    ]


def _hermite(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    components = hermite_list(_split(fs[0], parts)).components
    var = request.var
    text = [f'f_{k} = {fk.to_text(var)}' for k, fk in enumerate(components, start=1)]
    model = HermiteOutputModel(
        components=[fk.to_text(var) for fk in components], polynomial_part=_polypart(parts),
    )
    return '\n'.join(_polypart_line(parts, var) + text), model


def _shiftset(fs: List[RatFun], request: CommandRequest) -> Rendered:
    f = fs[0]
    if not f.is_polynomial():
        raise NotPolynomialError(f'shiftset expects a polynomial, got {f.to_text(request.var)}')
    result = shift_set(squarefree_part(f.num))
    return str(result), ShiftSetOutputModel(shifts=result.shifts)


def _reduce(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    form = simple_reduction(_split(fs[0], parts))
    var = request.var
    text = [
        f'reduced = {form.reduced.to_text(var)}',
        f'certificate = {form.certificate.to_text(var)}',
    ]
    model = ReduceOutputModel(
        reduced=form.reduced.to_text(var),
        certificate=form.certificate.to_text(var),
        polynomial_part=_polypart(parts),
    )
    return '\n'.join(_polypart_line(parts, var) + text), model


def _decompose(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    result = additive_decomposition(_split(fs[0], parts))
    var = request.var
    text = [
        f'remainder = {result.remainder.to_text(var)}',
        f'certificate = {result.certificate.to_text(var)}',
    ]
    model = DecomposeOutputModel(
        remainder=result.remainder.to_text(var),
        certificate=result.certificate.to_text(var),
        polynomial_part=_polypart(parts),
    )
    return '\n'.join(_polypart_line(parts, var) + text), model


def _dres(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    system = discrete_residues(_split(fs[0], parts))
    model = DresOutputModel(
        system=[
            ResiduePairModel(k=k, big_b=poly_json(pair.B), d=poly_json(pair.D))
            for k, pair in enumerate(system.pairs, start=1)
        ],
        polynomial_part=_polypart(parts),
    )
    text = _polypart_line(parts, request.var) + [residue_system_text(system, request.var)]
    return '\n'.join(text), model


def _dresplus(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    propers = [_split(f, parts) for f in fs]
    system = discrete_residues_plus(propers)
    var = request.var
    text = [f'B = {system.B.to_text(var)}']
    for i, row in enumerate(system.D, start=1):
        for k, d in enumerate(row, start=1):
            text.append(f'D_{i},{k} = {d.to_text(var)}')
    model = DresPlusOutputModel(
        big_b=poly_json(system.B),
        d=[[poly_json(d) for d in row] for row in system.D],
        orders=system.orders,
        polynomial_parts=_polyparts(parts),
    )
    return '\n'.join(_polyparts_lines(parts, var) + text), model


def _summable(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    verdict = is_summable(_split(fs[0], parts))
    var = request.var
    if verdict.summable:
        text = f'summable, certificate = {verdict.certificate.to_text(var)}'
        certificate = verdict.certificate.to_text(var)
    else:
        text = 'not summable'
        certificate = None
    model = SummableOutputModel(
        summable=verdict.summable, certificate=certificate, polynomial_part=_polypart(parts),
    )
    return '\n'.join(_polypart_line(parts, var) + [text]), model


def _vspace(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    basis = vspace_basis([_split(f, parts) for f in fs])
    text = [vector_text(v) for v in basis] if basis else ['{}']
    model = VSpaceOutputModel(
        basis=[vector_json(v) for v in basis], polynomial_parts=_polyparts(parts),
    )
    return '\n'.join(_polyparts_lines(parts, request.var) + text), model


def _telescope(fs: List[RatFun], request: CommandRequest) -> Rendered:
    parts = []
    propers = [_split(f, parts) for f in fs]
    if request.beta is None:
        operators = wspace_generators(propers)
    else:
        operators = wspace_bounded(propers, request.beta)
    text = [ops.to_text() for ops in operators] if operators else ['{}']
    model = TelescopeOutputModel(
        operators=[operator_tuple_json(ops) for ops in operators],
        beta=request.beta,
        polynomial_parts=_polyparts(parts),
    )
    return '\n'.join(_polyparts_lines(parts, request.var) + text), model


def _galois_diag(fs: List[RatFun], request: CommandRequest) -> Rendered:
    for i, r in enumerate(fs):
        if r.is_zero():
            raise ZeroInputError('Diagonal entries must be nonzero', index=i)
    bound = request.trial_division_bound
    data = galois_group_lattice(
        DiagonalSystem(rs=fs),
        trial_division_bound=_DEFAULT_TRIAL_DIVISION_BOUND if bound is None else bound,
    )
    var = request.var
    witnesses = data.relations.witnesses
    text = [f'lattice = {lattice_text(data.relations.lattice)}']
    for j, w in enumerate(witnesses, start=1):
        text.append(f'p_{j} = {w.p.to_text(var)}, epsilon_{j} = {w.epsilon}')
    text.append(f'relations = {lattice_text(data.epsilon_relations)}')
    text.append(f'group = {lattice_text(data.group)}')
    model = GaloisDiagOutputModel(
        lattice=lattice_json(data.relations.lattice),
        witnesses=[WitnessModel(p=w.p.to_text(var), epsilon=rat_json(w.epsilon)) for w in witnesses],
        relations=lattice_json(data.epsilon_relations),
        group=lattice_json(data.group),
    )
    return '\n'.join(text), model


_HANDLERS: Dict[str, Callable[[List[RatFun], CommandRequest], Rendered]] = {
    'hermite': _hermite,
    'shiftset': _shiftset,
    'reduce': _reduce,
    'decompose': _decompose,
    'dres': _dres,
    'dresplus': _dresplus,
    'summable': _summable,
    'vspace': _vspace,
    'telescope': _telescope,
    'galois-diag': _galois_diag,
}


def run(request: CommandRequest) -> str:
    """Execute one request and return its rendered output."""
    fs = [parse_ratfun(text, request.var) for text in request.expressions]
    text, model = _HANDLERS[request.command](fs, request)
    if request.json_output:
        return json.dumps(model.model_dump(mode='json', by_alias=True, exclude_none=True), indent=2)
    return text


@handle_exceptions
def _run_and_print(request: CommandRequest) -> int:
    print(run(request))
    logger.success(f'`{request.command}` finished')
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--json', dest='json_output', action='store_true',
        help='Emit JSON on stdout; errors go to stderr as one JSON object {"error", "detail"}.',
    )
    common.add_argument('--var', default='x', help='Name of the variable (default: x).')
    common.add_argument('--log-level', default=_DEFAULT_LOG_LEVEL, choices=_LOG_LEVELS)
    common.add_argument('--verbose', action='store_true', help='Shortcut for --log-level DEBUG.')

    parser = argparse.ArgumentParser(
        prog='disres',
        description='Discrete residues, summability and creative telescoping over Q.',
    )
    sub = parser.add_subparsers(dest='command', required=True)
    for command in COMMANDS:
        summary, shape = _COMMAND_HELP[command]
        cmd = sub.add_parser(
            command, parents=[common], help=summary,
            description=f'{summary} JSON output: {shape}',
        )
        cmd.add_argument('expressions', nargs='+', metavar='EXPR')
        if command == 'telescope':
            cmd.add_argument('--beta', type=int, default=None, help='Order bound of the operators.')
        if command == 'galois-diag':
            cmd.add_argument(
                '--trial-division-bound', type=int, default=None,
                help=f'Trial division bound for epsilon factorization (default: {_DEFAULT_TRIAL_DIVISION_BOUND}).',
            )
    return parser


def _configure_logging(level: str, quiet: bool = False) -> None:
    """One stderr sink at `level`; none when `quiet`, so --json stderr stays parseable."""
    logger.remove()
    if not quiet:
        logger.add(sys.stderr, level=level)
    logger.enable('disres')


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    _configure_logging(
        'DEBUG' if args.verbose else args.log_level,
        quiet=args.json_output and not args.verbose,
    )
    try:
        request = CommandRequest(
            command=args.command,
            expressions=args.expressions,
            json_output=args.json_output,
            var=args.var,
            beta=getattr(args, 'beta', None),
            trial_division_bound=getattr(args, 'trial_division_bound', None),
        )
    except ValidationError as e:
        _emit_error('InvalidRequest', str(e), args.json_output)
        return _EXIT_USAGE
    return _run_and_print(request)


if __name__ == '__main__':
    sys.exit(main())
