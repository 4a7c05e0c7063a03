import dataclasses
import math
import typing

from shv.exactalg import JordanType, Matrix, Rational, Scalar, format_rational, jordan_block_matrix, jordan_blocks, \
    to_rational
from shv.linesheaf import Covector, Interval, LineSheaf, LineSummand, end_covectors, interval_cohomology_degree, \
    merge_covectors, single_degree
from shv.logger import log
from shv.quiverrep import CircleQuiverRep, direct_sum_all, from_circle_summand, hom_space_dim


@dataclasses.dataclass(frozen=True)
class WrappedInterval:
    """
    Bounded interval of R pushed forward to the circle R/Z, stored by its lift with left end in [0, 1)
    """

    lift_lo: Rational
    length: Rational
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, 'lift_lo', to_rational(self.lift_lo))
        object.__setattr__(self, 'length', to_rational(self.length))
        if not 0 <= self.lift_lo < 1:
            raise ValueError(f'lift left end {self.lift_lo} must lie in [0, 1)')
        if self.length < 0:
            raise ValueError(f'negative length {self.length}')
        if self.length == 0 and not (self.lo_closed and self.hi_closed):
            raise ValueError('a wrapped point must be closed on both ends')

    @classmethod
    def from_lift(cls, interval: Interval) -> 'WrappedInterval':
        if not interval.is_bounded:
            raise ValueError(f'only bounded intervals push forward to wrapped intervals, got {interval}')
        lo = interval.lo
        return cls(lo - math.floor(lo), interval.hi - lo, interval.lo_closed, interval.hi_closed)

    @classmethod
    def point(cls, x: Scalar) -> 'WrappedInterval':
        return cls(to_rational(x) % 1, Rational(0))

    @property
    def lift(self) -> Interval:
        return Interval(self.lift_lo, self.lift_lo + self.length, self.lo_closed, self.hi_closed)

    @property
    def lift_hi(self) -> Rational:
        return self.lift_lo + self.length

    @property
    def endpoints(self) -> typing.Tuple[Rational, ...]:
        """
        End positions on the circle
        """
        return tuple(sorted({self.lift_lo, self.lift_hi % 1}))

    def fiber_count(self, x: Scalar) -> int:
        """
        |I & e^-1(e(x))|, the stalk dimension of e_*k_I at x
        """
        x = to_rational(x) % 1
        first = math.floor(self.lift_lo) - 1
        return sum(1 for n in range(first, math.ceil(self.lift_hi) + 1) if self.lift.contains(x + n))

    def is_half_closed(self) -> bool:
        return self.length > 0 and self.lo_closed != self.hi_closed

    def sort_key(self) -> typing.Tuple[typing.Any, ...]:
        return self.lift_lo, self.length, not self.lo_closed, self.hi_closed

    def __str__(self) -> str:
        return f'e*{self.lift}'


@dataclasses.dataclass(frozen=True)
class JordanBlock:
    """
    Rank r local system whose monodromy is the Jordan block A_{alpha,r}
    """

    alpha: Rational
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'alpha', to_rational(self.alpha))
        if self.alpha == 0:
            raise ValueError('local system monodromy eigenvalue must be non-zero')
        if self.r < 1:
            raise ValueError(f'local system rank must be positive, got {self.r}')

    @property
    def matrix(self) -> Matrix:
        return jordan_block_matrix(self.alpha, self.r)

    @property
    def is_trivial(self) -> bool:
        return self.alpha == 1 and self.r == 1

    def __str__(self) -> str:
        return f'L({format_rational(self.alpha)},{self.r})'


@dataclasses.dataclass(frozen=True)
class WrappedSummand:
    interval: WrappedInterval
    degree: int = 0
    mult: int = 1


@dataclasses.dataclass(frozen=True)
class LocalSummand:
    block: JordanBlock
    degree: int = 0
    mult: int = 1


@dataclasses.dataclass(frozen=True)
class CircleSheaf:
    """
    Complex of sheaves on the circle in canonical form: wrapped interval sheaves and Jordan local systems
    """

    wrapped: typing.Tuple[WrappedSummand, ...] = ()
    local: typing.Tuple[LocalSummand, ...] = ()

    def __post_init__(self) -> None:
        wrapped: typing.Dict[typing.Tuple[WrappedInterval, int], int] = {}
        for w in self.wrapped:
            wrapped[(w.interval, w.degree)] = wrapped.get((w.interval, w.degree), 0) + w.mult
        local: typing.Dict[typing.Tuple[JordanBlock, int], int] = {}
        for loc in self.local:
            local[(loc.block, loc.degree)] = local.get((loc.block, loc.degree), 0) + loc.mult
        if any(m < 1 for m in list(wrapped.values()) + list(local.values())):
            raise ValueError('summand multiplicities must be positive')
        object.__setattr__(self, 'wrapped', tuple(sorted(
            (WrappedSummand(i, d, m) for (i, d), m in wrapped.items()),
            key=lambda w: (w.degree,) + w.interval.sort_key())))
        object.__setattr__(self, 'local', tuple(sorted(
            (LocalSummand(b, d, m) for (b, d), m in local.items()),
            key=lambda loc: (loc.degree, loc.block.alpha, loc.block.r))))

    @classmethod
    def local_system(cls, alpha: Scalar, r: int = 1, degree: int = 0, mult: int = 1) -> 'CircleSheaf':
        return cls(local=(LocalSummand(JordanBlock(to_rational(alpha), r), degree, mult),))

    @classmethod
    def constant(cls) -> 'CircleSheaf':
        return cls.local_system(1, 1)

    @classmethod
    def pushforward(cls, interval: Interval, degree: int = 0, mult: int = 1) -> 'CircleSheaf':
        return cls(wrapped=(WrappedSummand(WrappedInterval.from_lift(interval), degree, mult),))

    @property
    def degrees(self) -> typing.Tuple[int, ...]:
        return tuple(sorted({w.degree for w in self.wrapped} | {loc.degree for loc in self.local}))

    @property
    def is_zero(self) -> bool:
        return not self.wrapped and not self.local

    def local_type(self, degree: int = 0) -> JordanType:
        """
        Jordan type of the locally constant part in one degree
        """
        return JordanType(tuple((loc.block.alpha, loc.block.r, loc.mult) for loc in self.local
                                if loc.degree == degree))

    def expanded_wrapped(self) -> typing.List[typing.Tuple[WrappedInterval, int]]:
        return [(w.interval, w.degree) for w in self.wrapped for _ in range(w.mult)]

    def expanded_local(self) -> typing.List[typing.Tuple[JordanBlock, int]]:
        return [(loc.block, loc.degree) for loc in self.local for _ in range(loc.mult)]

    def shift(self, d: int) -> 'CircleSheaf':
        return CircleSheaf(tuple(WrappedSummand(w.interval, w.degree - d, w.mult) for w in self.wrapped),
                           tuple(LocalSummand(loc.block, loc.degree - d, loc.mult) for loc in self.local))

    def __add__(self, other: 'CircleSheaf') -> 'CircleSheaf':
        return CircleSheaf(self.wrapped + other.wrapped, self.local + other.local)

    def __str__(self) -> str:
        parts = []
        for w in self.wrapped:
            parts.append(f'{w.interval}' + (f'^{w.mult}' if w.mult > 1 else '') +
                         (f'[deg {w.degree}]' if w.degree else ''))
        for loc in self.local:
            parts.append(f'{loc.block}' + (f'^{loc.mult}' if loc.mult > 1 else '') +
                         (f'[deg {loc.degree}]' if loc.degree else ''))
        return ' + '.join(parts) or '0'


def monodromy(rep: CircleQuiverRep) -> JordanType:
    return jordan_blocks(rep.monodromy())


def decompose_circle(rep: CircleQuiverRep) -> CircleSheaf:
    """
    Wrapped summands from the bars of the periodic lift, local systems from the regular part of the monodromy
    """
    wrapped = tuple(WrappedSummand(WrappedInterval(lo, length, lo_closed, hi_closed), 0, mult)
                    for (lo, lo_closed, length, hi_closed), mult in rep.wrapped_bars().items())
    local = tuple(LocalSummand(JordanBlock(alpha, r), 0, mult) for alpha, r, mult in monodromy(rep).blocks)
    log.debug(f'circle over {len(rep.points)} points: {len(wrapped)} wrapped and {len(local)} local types')
    return CircleSheaf(wrapped, local)


def circle_points(s: CircleSheaf, extra: typing.Iterable[Scalar] = ()) -> typing.Tuple[Rational, ...]:
    points = {to_rational(x) % 1 for x in extra}
    for w in s.wrapped:
        points.update(w.interval.endpoints)
    if not points:
        points.add(Rational(0))
    return tuple(sorted(points))


def local_system_rep(block: Matrix, points: typing.Sequence[Rational], base: int = 0) -> CircleQuiverRep:
    """
    Local system with monodromy `block`, the whole jump carried by the right arrow at points[base]
    """
    r = block.rows
    ident = Matrix.identity(r)
    m = len(points)
    return CircleQuiverRep(tuple(points), (r,) * m, (r,) * m, (ident,) * m,
                           tuple(block if j == base else ident for j in range(m)))


def assemble_circle(s: CircleSheaf, points: typing.Iterable[Scalar] = (),
                    base: typing.Optional[Scalar] = None) -> CircleQuiverRep:
    """
    Representation of a single-degree circle sheaf; local systems jump at `base`, the smallest point by default
    """
    single_degree(s)
    extra = list(points) + ([] if base is None else [base])
    marked = circle_points(s, extra)
    base_index = 0 if base is None else marked.index(to_rational(base) % 1)
    parts = [from_circle_summand(w, marked) for w, _ in s.expanded_wrapped()]
    parts += [local_system_rep(b.matrix, marked, base_index) for b, _ in s.expanded_local()]
    return direct_sum_all(parts, CircleQuiverRep.zero(marked))


def pullback_window(s: CircleSheaf, window: Interval) -> LineSheaf:
    """
    e^-1 F restricted to a bounded open window of R
    """
    if not window.is_bounded or not window.is_open:
        raise ValueError(f'pullback window {window} must be bounded and open')
    summands = []
    for w in s.wrapped:
        lift = w.interval.lift
        for n in range(math.floor(window.lo - lift.hi) - 1, math.ceil(window.hi - lift.lo) + 2):
            meet = lift.translate(n).intersect(window)
            if meet is not None:
                summands.append(LineSummand(meet, w.degree, w.mult))
    for loc in s.local:
        summands.append(LineSummand(window, loc.degree, loc.mult * loc.block.r))
    return LineSheaf(tuple(summands))


def _local_tensor(a: JordanBlock, b: JordanBlock) -> typing.List[JordanBlock]:
    p, q = sorted((a.r, b.r))
    alpha = a.alpha * b.alpha
    return [JordanBlock(alpha, q - p + 2 * i - 1) for i in range(1, p + 1)]


def _wrapped_tensor(a: WrappedInterval, b: WrappedInterval) -> typing.List[WrappedInterval]:
    first, second = a.lift, b.lift
    out = []
    for n in range(math.floor(first.lo - second.hi) - 1, math.ceil(first.hi - second.lo) + 2):
        meet = first.intersect(second.translate(n))
        if meet is not None:
            out.append(WrappedInterval.from_lift(meet))
    return out


def tensor_circle(a: CircleSheaf, b: CircleSheaf) -> CircleSheaf:
    wrapped, local = [], []
    for x in a.wrapped:
        for y in b.wrapped:
            wrapped += [WrappedSummand(w, x.degree + y.degree, x.mult * y.mult)
                        for w in _wrapped_tensor(x.interval, y.interval)]
        for loc in b.local:
            wrapped.append(WrappedSummand(x.interval, x.degree + loc.degree, x.mult * loc.mult * loc.block.r))
    for loc in a.local:
        for y in b.wrapped:
            wrapped.append(WrappedSummand(y.interval, loc.degree + y.degree, loc.mult * y.mult * loc.block.r))
        for other in b.local:
            local += [LocalSummand(block, loc.degree + other.degree, loc.mult * other.mult)
                      for block in _local_tensor(loc.block, other.block)]
    return CircleSheaf(tuple(wrapped), tuple(local))


def _flip(w: WrappedInterval) -> WrappedInterval:
    if w.length == 0:
        return w
    return WrappedInterval(w.lift_lo, w.length, not w.lo_closed, not w.hi_closed)


def dual_circle(s: CircleSheaf) -> CircleSheaf:
    return CircleSheaf(tuple(WrappedSummand(_flip(w.interval), -w.degree, w.mult) for w in s.wrapped),
                       tuple(LocalSummand(JordanBlock(1 / loc.block.alpha, loc.block.r), -loc.degree, loc.mult)
                             for loc in s.local))


def cohomology_circle(s: CircleSheaf) -> typing.Dict[int, int]:
    dims: typing.Dict[int, int] = {}
    for w in s.wrapped:
        degree = interval_cohomology_degree(w.interval.lift)
        if degree is not None:
            dims[degree + w.degree] = dims.get(degree + w.degree, 0) + w.mult
    for loc in s.local:
        if loc.block.alpha == 1:
            for degree in (loc.degree, loc.degree + 1):
                dims[degree] = dims.get(degree, 0) + loc.mult
    return dict(sorted(dims.items()))


def end_algebra(w: WrappedInterval) -> typing.Tuple[int, int]:
    """
    (dim A_I, dim of its nilpotent radical) for A_I = End(e_*k_I)
    """
    if not w.is_half_closed():
        return 1, 0
    translates = math.ceil(w.length)
    return translates, translates - 1


def ss_circle(s: CircleSheaf) -> typing.Tuple[Covector, ...]:
    covectors = []
    for w in s.wrapped:
        lift = w.interval.lift
        for c in end_covectors(lift.lo, lift.lo_closed, lift.hi, lift.hi_closed, w.degree, w.mult):
            covectors.append(Covector(c.base % 1, c.sign, c.degree, c.mult))
    return merge_covectors(covectors)


def circle_hom_dim(a: CircleSheaf, b: CircleSheaf) -> int:
    """
    dim Hom(a, b) for single-degree sheaves, solved on the quiver
    """
    single_degree(a, b)
    points = circle_points(a + b)
    return hom_space_dim(assemble_circle(a, points), assemble_circle(b, points))


def stalk_dim_circle(s: CircleSheaf, x: Scalar, degree: typing.Optional[int] = None) -> int:
    total = sum(w.mult * w.interval.fiber_count(x) for w in s.wrapped if degree is None or w.degree == degree)
    return total + sum(loc.mult * loc.block.r for loc in s.local if degree is None or loc.degree == degree)
