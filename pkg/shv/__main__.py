import argparse
import json
import typing

import pydantic

from shv.circlesheaf import CircleSheaf, circle_hom_dim, cohomology_circle, decompose_circle, dual_circle, \
    ss_circle, tensor_circle
from shv.errors import ShvError
from shv.exactalg import Rational, format_rational, parse_rational
from shv.linesheaf import Covector, Interval, LineSheaf, Sign, cohomology_line, decompose_line, dual_line, \
    hom_dim_line, ss_line, tensor_line
from shv.logger import WARNING, log
from shv.microlocal import CoverSpec, cech_class, f_linked_exact, f_linked_interval_criterion, h_invariant, \
    m_gamma, mv_twist, scalar_aut, shift_difference, twist_restrictions_agree
from shv.quiverrep import LineQuiverRep
from shv.schema import AutModel, CoverModel, CovectorModel, PathStepModel, RepModel, dump_sheaf, parse_sheaf
from shv.verification import SUITES, run_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

Sheaf = typing.Union[LineSheaf, CircleSheaf]


def rational(value: str) -> Rational:
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def window(value: str) -> Interval:
    """
    "lo,hi" as the open interval (lo, hi)
    """
    try:
        lo, hi = (parse_rational(part) for part in value.split(','))
        return Interval.open(lo, hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f'window must be "lo,hi" with lo < hi: {exc}') from None


def covector(value: str) -> Covector:
    """
    "base:sign" or "base:sign:degree", sign being + or -
    """
    parts = value.split(':')
    try:
        degree = int(parts[2]) if len(parts) == 3 else 0
        if len(parts) not in (2, 3):
            raise ValueError('expected base:sign[:degree]')
        return Covector(parse_rational(parts[0]), Sign(parts[1]), degree)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f'bad covector {value!r}: {exc}') from None


COMMANDS = ('decompose', 'ss', 'cohomology', 'tensor', 'dual', 'hom', 'twist', 'invariant', 'linked',
            'verify-lemmas')

parser = argparse.ArgumentParser(prog='shv', description='Exact computations with constructible sheaves on R '
                                                         'and on the circle')
parser.add_argument(
    'command',
    choices=COMMANDS,
    help='Operation to run'
)
parser.add_argument(
    '--input',
    action='append',
    dest='inputs',
    default=[],
    help='Input JSON file: a representation for decompose, a sheaf otherwise | repeat for tensor and hom'
)
parser.add_argument(
    '--alpha',
    type=rational,
    default=Rational(1),
    help="Jordan block eigenvalue as p/q | optional default is '1'"
)
parser.add_argument(
    '--r',
    type=int,
    default=1,
    help='Jordan block size | optional default is 1'
)
parser.add_argument(
    '--degree',
    type=int,
    default=0,
    help='Cohomological degree | optional default is 0'
)
parser.add_argument(
    '--window',
    type=window,
    default=None,
    help='Open window lo,hi for linked | optional default is the whole space'
)
parser.add_argument(
    '--covector',
    action='append',
    type=covector,
    dest='covectors',
    default=[],
    help='Covector base:sign[:degree] | give twice for linked'
)
parser.add_argument(
    '--lambda',
    type=rational,
    dest='scalar',
    default=None,
    help='Twist by this scalar on the first overlap component'
)
parser.add_argument(
    '--cover',
    default=None,
    help="Cover JSON file for twist | optional default is U = (0, 3/4), V = (1/2, 1/4)"
)
parser.add_argument(
    '--aut',
    default=None,
    help='Automorphism JSON file for twist, instead of --lambda'
)
parser.add_argument(
    '--path',
    default=None,
    help='Path JSON file for twist, a list of overlap crossings | prints the twist along the path instead'
)
parser.add_argument(
    '--suite',
    choices=list(SUITES) + ['all'],
    default='all',
    help="Suite for verify-lemmas | optional default is 'all'"
)
parser.add_argument(
    '--grid-size',
    type=int,
    default=4,
    help='Parameter grid size for verify-lemmas | optional default is 4'
)
parser.add_argument(
    '--seed',
    type=int,
    default=0,
    help='Random seed for verify-lemmas | optional default is 0'
)
parser.add_argument(
    '--json',
    action='store_true',
    help='Print a machine-readable JSON document'
)


def _read(path: str) -> typing.Any:
    with open(path) as fp:
        return json.load(fp)


def _inputs(args: argparse.Namespace, count: int) -> typing.List[typing.Any]:
    if len(args.inputs) != count:
        raise ValueError(f'{args.command} needs {count} --input file(s), got {len(args.inputs)}')
    return [_read(path) for path in args.inputs]


def _sheaves(args: argparse.Namespace, count: int) -> typing.List[Sheaf]:
    return [parse_sheaf(data) for data in _inputs(args, count)]


def _circle(args: argparse.Namespace) -> CircleSheaf:
    sheaf = _sheaves(args, 1)[0]
    if not isinstance(sheaf, CircleSheaf):
        raise ValueError(f'{args.command} needs a circle sheaf')
    return sheaf


def _emit(args: argparse.Namespace, document: typing.Any, text: str) -> None:
    log.direct(json.dumps(document) if args.json else text)


def _dims(dims: typing.Dict[int, int]) -> typing.Dict[str, int]:
    return {str(d): n for d, n in dims.items()}


def decompose(args: argparse.Namespace) -> int:
    rep = RepModel.parse_obj(_inputs(args, 1)[0]).to_domain()
    sheaf = decompose_line(rep) if isinstance(rep, LineQuiverRep) else decompose_circle(rep)
    log.info(f'Representation of total dimension {rep.total_dim} over {len(rep.points)} points')
    _emit(args, dump_sheaf(sheaf), str(sheaf))
    return EXIT_OK


def ss(args: argparse.Namespace) -> int:
    sheaf = _sheaves(args, 1)[0]
    covectors = ss_line(sheaf) if isinstance(sheaf, LineSheaf) else ss_circle(sheaf)
    _emit(args, [CovectorModel.from_domain(c).dict() for c in covectors],
          ' '.join(str(c) for c in covectors) or 'empty')
    return EXIT_OK


def cohomology(args: argparse.Namespace) -> int:
    sheaf = _sheaves(args, 1)[0]
    dims = cohomology_line(sheaf) if isinstance(sheaf, LineSheaf) else cohomology_circle(sheaf)
    _emit(args, _dims(dims), ', '.join(f'H^{d} = {n}' for d, n in dims.items()) or 'acyclic')
    return EXIT_OK


def tensor(args: argparse.Namespace) -> int:
    a, b = _sheaves(args, 2)
    if isinstance(a, LineSheaf) and isinstance(b, LineSheaf):
        product: Sheaf = tensor_line(a, b)
    elif isinstance(a, CircleSheaf) and isinstance(b, CircleSheaf):
        product = tensor_circle(a, b)
    else:
        raise ValueError('tensor needs two sheaves on the same space')
    _emit(args, dump_sheaf(product), str(product))
    return EXIT_OK


def dual(args: argparse.Namespace) -> int:
    sheaf = _sheaves(args, 1)[0]
    result = dual_line(sheaf) if isinstance(sheaf, LineSheaf) else dual_circle(sheaf)
    _emit(args, dump_sheaf(result), str(result))
    return EXIT_OK


def hom(args: argparse.Namespace) -> int:
    a, b = _sheaves(args, 2)
    if isinstance(a, LineSheaf) and isinstance(b, LineSheaf):
        dim = hom_dim_line(a, b)
    elif isinstance(a, CircleSheaf) and isinstance(b, CircleSheaf):
        dim = circle_hom_dim(a, b)
    else:
        raise ValueError('hom needs two sheaves on the same space')
    _emit(args, dim, str(dim))
    return EXIT_OK


def twist(args: argparse.Namespace) -> int:
    sheaf = _circle(args)
    cover = CoverSpec.default() if args.cover is None else CoverModel.parse_obj(_read(args.cover)).to_domain()
    if args.aut is not None:
        alpha = AutModel.parse_obj(_read(args.aut)).to_domain()
    else:
        alpha = scalar_aut(sheaf, cover, Rational(1) if args.scalar is None else args.scalar)
    log.info(f'Twisting {sheaf} over {cover.u} and {cover.v}')
    twisted = mv_twist(sheaf, cover, alpha)
    if not twist_restrictions_agree(sheaf, twisted, cover):
        log.warning('Twisted sheaf restricts differently to U or V')
    log.info(f'Cech class {AutModel.from_domain(cech_class(cover, alpha)).scalars}')
    if args.path is not None:
        steps = pydantic.parse_obj_as(typing.List[PathStepModel], _read(args.path))
        value = format_rational(m_gamma(cover, alpha, [step.to_domain() for step in steps]))
        log.info(f'Twisted sheaf {twisted}')
        _emit(args, value, value)
        return EXIT_OK
    _emit(args, dump_sheaf(twisted), str(twisted))
    return EXIT_OK


def invariant(args: argparse.Namespace) -> int:
    value = h_invariant(_circle(args), args.alpha, args.r, args.degree)
    _emit(args, value, str(value))
    return EXIT_OK


def linked(args: argparse.Namespace) -> int:
    sheaf = _sheaves(args, 1)[0]
    if len(args.covectors) != 2:
        raise ValueError(f'linked needs two --covector flags, got {len(args.covectors)}')
    p, q = args.covectors
    exact = f_linked_exact(sheaf, p, q, args.window)
    criterion = f_linked_interval_criterion(sheaf, p, q, args.window)
    difference = format_rational(shift_difference(sheaf, p, q))
    _emit(args, {'linked': exact, 'criterion': criterion, 'shift_difference': difference},
          f'{p} and {q} are {"" if exact else "not "}linked; interval criterion {"holds" if criterion else "fails"};'
          f' shift difference {difference}')
    return EXIT_OK


def verify_lemmas(args: argparse.Namespace) -> int:
    reports = run_suites(args.suite, args.grid_size, args.seed)
    problems = [(report.suite, problem) for report in reports for problem in report.problems]
    for report in reports:
        log.info(f'{report.suite}: {report.passed}/{report.cases} cases passed in {report.seconds}s')
    if problems:
        log.warning(f'Detected {len(problems)} failed cases:')
        for index, (suite, problem) in enumerate(problems, start=1):
            log.warning(f'{index} - {suite} {problem.case}: {problem.description} {problem.payload}')
    else:
        log.success(f'All {sum(r.cases for r in reports)} cases passed')
    _emit(args, [report.dict() for report in reports],
          '\n'.join(f'{r.suite}: {"pass" if r.ok else "FAIL"} ({r.passed}/{r.cases})' for r in reports))
    return EXIT_FAILED if problems else EXIT_OK


HANDLERS: typing.Dict[str, typing.Callable[[argparse.Namespace], int]] = {
    'decompose': decompose,
    'ss': ss,
    'cohomology': cohomology,
    'tensor': tensor,
    'dual': dual,
    'hom': hom,
    'twist': twist,
    'invariant': invariant,
    'linked': linked,
    'verify-lemmas': verify_lemmas,
}


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Runs one command; 0 on success, 1 on failed verification, 2 on bad input
    """
    args = parser.parse_args(argv)
    if args.json:
        log.set_verbosity(WARNING)
    try:
        return HANDLERS[args.command](args)
    except pydantic.ValidationError as exc:
        log.error(f'Invalid input, {len(exc.errors())} problem(s):')
        for index, error in enumerate(exc.errors(), start=1):
            log.error(f'{index} - {"/".join(str(part) for part in error["loc"])}: {error["msg"]}')
    except OSError as exc:
        log.error(f'Cannot read input: {exc}')
    except json.JSONDecodeError as exc:
        log.error(f'Malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}')
    except (ShvError, ValueError) as exc:
        log.error(f'Invalid input: {exc}')
    return EXIT_INPUT


if __name__ == '__main__':
    raise SystemExit(main())
