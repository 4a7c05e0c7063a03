import dataclasses
import typing

from shv.errors import EndpointNotMarked, MixedDegrees, ShapeMismatch
from shv.exactalg import Matrix, Rational, Scalar, column_basis, complement_basis, hstack, inverse, kernel_basis, \
    solve, to_rational
from shv.logger import log
from shv.quiverrep import LineQuiverRep, RepMorphism, direct_sum_all, from_interval, range_endpoints

from .interval import Covector, Interval, Sign, end_covectors, merge_covectors


@dataclasses.dataclass(frozen=True)
class LineSummand:
    """
    mult copies of k_I placed in cohomological degree `degree`
    """

    interval: Interval
    degree: int = 0
    mult: int = 1

    def __post_init__(self) -> None:
        if self.mult < 1:
            raise ValueError(f'summand multiplicity must be positive, got {self.mult}')

    def sort_key(self) -> typing.Tuple[typing.Any, ...]:
        return (self.degree,) + self.interval.sort_key()

    def __str__(self) -> str:
        text = f'k_{self.interval}'
        if self.mult > 1:
            text += f'^{self.mult}'
        if self.degree:
            text += f'[deg {self.degree}]'
        return text


@dataclasses.dataclass(frozen=True)
class LineSheaf:
    """
    Complex of sheaves on R in canonical form: a multiset of shifted interval sheaves
    """

    summands: typing.Tuple[LineSummand, ...] = ()

    def __post_init__(self) -> None:
        counts: typing.Dict[typing.Tuple[Interval, int], int] = {}
        for s in self.summands:
            counts[(s.interval, s.degree)] = counts.get((s.interval, s.degree), 0) + s.mult
        merged = (LineSummand(i, d, m) for (i, d), m in counts.items())
        object.__setattr__(self, 'summands', tuple(sorted(merged, key=LineSummand.sort_key)))

    @classmethod
    def of(cls, *items: typing.Union[Interval, typing.Tuple[Interval, int], typing.Tuple[Interval, int, int]]) \
            -> 'LineSheaf':
        """
        Shorthand: LineSheaf.of(I, (J, degree), (K, degree, mult))
        """
        summands = []
        for item in items:
            if isinstance(item, Interval):
                summands.append(LineSummand(item))
            else:
                summands.append(LineSummand(*item))
        return cls(tuple(summands))

    @property
    def degrees(self) -> typing.Tuple[int, ...]:
        return tuple(sorted({s.degree for s in self.summands}))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def rank(self) -> int:
        """
        Number of indecomposable summands counted with multiplicity
        """
        return sum(s.mult for s in self.summands)

    def expanded(self) -> typing.List[typing.Tuple[Interval, int]]:
        """
        One (interval, degree) per indecomposable copy, in canonical order
        """
        return [(s.interval, s.degree) for s in self.summands for _ in range(s.mult)]

    def in_degree(self, degree: int) -> 'LineSheaf':
        return LineSheaf(tuple(s for s in self.summands if s.degree == degree))

    def shift(self, d: int) -> 'LineSheaf':
        """
        F[d], moving every summand to degree - d
        """
        return LineSheaf(tuple(LineSummand(s.interval, s.degree - d, s.mult) for s in self.summands))

    def __add__(self, other: 'LineSheaf') -> 'LineSheaf':
        return LineSheaf(self.summands + other.summands)

    def __str__(self) -> str:
        return ' + '.join(str(s) for s in self.summands) or '0'


def single_degree(*sheaves: typing.Any) -> int:
    """
    The one degree shared by all summands of the given sheaves, 0 when they are all zero
    """
    degrees = {d for s in sheaves for d in s.degrees}
    if len(degrees) > 1:
        raise MixedDegrees(f'expected a single degree, found {sorted(degrees)}')
    return degrees.pop() if degrees else 0


def decompose_line(rep: LineQuiverRep) -> LineSheaf:
    """
    Interval decomposition of a zigzag representation, every summand in degree 0
    """
    summands = []
    for bar, mult in rep.barcode().items():
        lo, lo_closed, hi, hi_closed = range_endpoints(bar, rep.points)
        summands.append(LineSummand(Interval(lo, hi, lo_closed, hi_closed), 0, mult))
    log.debug(f'line barcode over {len(rep.points)} points: {len(summands)} interval types')
    return LineSheaf(tuple(summands))


def marked_points(s: LineSheaf, extra: typing.Iterable[Scalar] = ()) -> typing.Tuple[Rational, ...]:
    points = {to_rational(x) for x in extra}
    for summand in s.summands:
        points.update(summand.interval.endpoints)
    return tuple(sorted(points))


def assemble_line(s: LineSheaf, points: typing.Iterable[Scalar] = ()) -> LineQuiverRep:
    """
    Direct sum of the interval representations on the union of all endpoints and `points`
    """
    single_degree(s)
    marked = marked_points(s, points)
    return direct_sum_all([from_interval(i, marked) for i, _ in s.expanded()], LineQuiverRep.zero(marked))


def ss_line(s: LineSheaf) -> typing.Tuple[Covector, ...]:
    covectors = []
    for summand in s.summands:
        i = summand.interval
        covectors += end_covectors(i.lo, i.lo_closed, i.hi, i.hi_closed, summand.degree, summand.mult)
    return merge_covectors(covectors)


def dual_line(s: LineSheaf) -> LineSheaf:
    return LineSheaf(tuple(LineSummand(x.interval.flipped(), -x.degree, x.mult) for x in s.summands))


def tensor_line(a: LineSheaf, b: LineSheaf) -> LineSheaf:
    summands = []
    for x in a.summands:
        for y in b.summands:
            meet = x.interval.intersect(y.interval)
            if meet is not None:
                summands.append(LineSummand(meet, x.degree + y.degree, x.mult * y.mult))
    return LineSheaf(tuple(summands))


def interval_cohomology_degree(i: Interval) -> typing.Optional[int]:
    """
    Degree of the single non-zero cohomology of k_I on R, None when it is acyclic
    """
    if i.is_bounded:
        if i.is_closed:
            return 0
        if i.is_open:
            return 1
        return None
    if i.is_real_line or i.is_closed:
        return 0
    return None


def cohomology_line(s: LineSheaf) -> typing.Dict[int, int]:
    """
    Graded dimensions of RΓ(R; F), zero degrees omitted
    """
    dims: typing.Dict[int, int] = {}
    for summand in s.summands:
        degree = interval_cohomology_degree(summand.interval)
        if degree is not None:
            dims[degree + summand.degree] = dims.get(degree + summand.degree, 0) + summand.mult
    return dict(sorted(dims.items()))


def euler_characteristic(dims: typing.Mapping[int, int]) -> int:
    return sum((-1) ** degree * dim for degree, dim in dims.items())


def _cells(marks: typing.Sequence[Rational]) -> typing.List[Rational]:
    """
    A sample point per cell of the stratification by `marks`: arcs at even positions, marks at odd ones
    """
    if not marks:
        return [Rational(0)]
    samples = [marks[0] - 1]
    for x, y in zip(marks, marks[1:]):
        samples += [x, (x + y) / 2]
    return samples + [marks[-1], marks[-1] + 1]


def hom_criterion(i: Interval, j: Interval) -> bool:
    """
    Hom(k_I, k_J) is k exactly when I & J is non-empty, closed in I and open in J, and is 0 otherwise
    """
    cells = _cells(sorted(set(i.endpoints) | set(j.endpoints)))
    in_i = [i.contains(x) for x in cells]
    in_j = [j.contains(x) for x in cells]
    meet = [a and b for a, b in zip(in_i, in_j)]
    if not any(meet):
        return False
    for v, inside in enumerate(meet):
        if not inside:
            continue
        for w in (v - 1, v + 1):
            if not 0 <= w < len(cells) or meet[w]:
                continue
            # arcs need their boundary points of I, points need their adjacent arcs of J
            if (v % 2 == 0 and in_i[w]) or (v % 2 == 1 and in_j[w]):
                return False
    return True


def hom_dim_line(a: LineSheaf, b: LineSheaf) -> int:
    single_degree(a, b)
    return sum(x.mult * y.mult for x in a.summands for y in b.summands if hom_criterion(x.interval, y.interval))


def is_compact(s: LineSheaf) -> bool:
    return all(x.interval.is_bounded for x in s.summands)


def autodual_structure(s: LineSheaf) -> typing.Optional[Rational]:
    """
    x0 when F = k_{x0} plus half-closed intervals in any degrees, F is self-dual and RΓ(F) = k; None otherwise
    """
    if not is_compact(s):
        return None
    points = [x for x in s.summands if x.interval.is_point]
    if len(points) != 1 or points[0].degree != 0 or points[0].mult != 1:
        return None
    if not all(x.interval.is_half_closed for x in s.summands if not x.interval.is_point):
        return None
    if dual_line(s) != s or cohomology_line(s) != {0: 1}:
        return None
    return points[0].interval.lo


def restrict_line(s: LineSheaf, window: Interval) -> LineSheaf:
    """
    Restriction to an open interval W identified with R: ends cut off by W become infinite
    """
    if window.lo_closed or window.hi_closed:
        raise ValueError(f'restriction window {window} must be open')
    summands = []
    for x in s.summands:
        meet = x.interval.intersect(window)
        if meet is None:
            continue
        lo_cut = meet.lo is not None and meet.lo == window.lo
        hi_cut = meet.hi is not None and meet.hi == window.hi
        clipped = Interval(None if lo_cut else meet.lo, None if hi_cut else meet.hi,
                           meet.lo_closed and not lo_cut, meet.hi_closed and not hi_cut)
        summands.append(LineSummand(clipped, x.degree, x.mult))
    return LineSheaf(tuple(summands))


def stalk_dim_line(s: LineSheaf, x: Scalar, degree: typing.Optional[int] = None) -> int:
    return sum(y.mult for y in s.summands if y.interval.contains(x) and (degree is None or y.degree == degree))


def microlocal_action(endo: RepMorphism, point: Scalar, sign: Sign) -> typing.Tuple[Matrix, Matrix]:
    """
    Action of an endomorphism of a line representation on its microlocal stalk at (point, sign).

    The stalk is the cone of the restriction from the point to the arc on the `sign` side (left for +, right
    for -): the first matrix acts on its kernel (summands owning the covector at a closed end), the second on
    its cokernel (summands owning it at an open end).
    """
    rep = endo.source
    if not isinstance(rep, LineQuiverRep) or endo.target != rep:
        raise ValueError('expected an endomorphism of a line representation')
    point = to_rational(point)
    if point not in rep.points:
        raise EndpointNotMarked(f'{point} is not among the marked points')
    i = rep.points.index(point)
    arrow, arc = (rep.left[i], 2 * i) if Sign(sign) is Sign.PLUS else (rep.right[i], 2 * i + 2)
    stalk_map, arc_map = endo.maps[2 * i + 1], endo.maps[arc]
    ker = kernel_basis(arrow)
    on_kernel = solve(ker, stalk_map @ ker)
    im = column_basis(arrow)
    comp = complement_basis(im)
    change = inverse(hstack(im, comp))
    projection = change.submatrix(range(im.cols, change.rows), range(change.cols))
    if on_kernel is None:
        raise ShapeMismatch('endomorphism does not commute with the restriction')
    return on_kernel, projection @ arc_map @ comp


def acts_by(endo: RepMorphism, point: Scalar, sign: Sign, value: Scalar) -> bool:
    """
    Every summand owning (point, sign) is mapped to value times itself
    """
    on_kernel, on_cokernel = microlocal_action(endo, point, sign)
    return on_kernel == Matrix.scalar(on_kernel.rows, value) and on_cokernel == Matrix.scalar(on_cokernel.rows, value)
