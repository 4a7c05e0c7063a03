import abc
import bisect
import dataclasses
import itertools
import math
import typing

from shv.errors import DuplicatePoint, EndpointNotMarked, ShapeMismatch
from shv.exactalg import Matrix, Rational, Scalar, block_diagonal, column_basis, complement_basis, hstack, \
    inverse, kernel_basis, rank, solve, to_rational
from shv.logger import log

from .zigzag import Bar, Relation, bar_multiplicities, regular_part

Arrow = typing.Tuple[int, int, Matrix]


class IntervalLike(typing.Protocol):
    """
    Endpoint data of an interval of R; None marks an infinite end
    """

    lo: typing.Optional[Rational]
    hi: typing.Optional[Rational]
    lo_closed: bool
    hi_closed: bool


class WrappedLike(typing.Protocol):
    """
    Lift [lift_lo, lift_lo + length] of a wrapped interval on the circle
    """

    lift_lo: Rational
    length: Rational
    lo_closed: bool
    hi_closed: bool


def _check_shape(matrix: Matrix, rows: int, cols: int, what: str) -> None:
    if matrix.shape != (rows, cols):
        raise ShapeMismatch(f'{what} has shape {matrix.shape}, expected {(rows, cols)}')


def _check_dims(dims: typing.Sequence[int], what: str) -> None:
    for d in dims:
        if d < 0:
            raise ValueError(f'{what} dimension must be non-negative, got {d}')


class ZigzagRep(abc.ABC):
    """
    Common vertex/arrow view of line and circle representations.

    Every arrow goes from a stalk vertex into an adjacent arc vertex.
    """

    points: typing.Tuple[Rational, ...]

    @property
    @abc.abstractmethod
    def vertex_dims(self) -> typing.Tuple[int, ...]:
        """
        Dimensions indexed by vertex
        """

    @property
    @abc.abstractmethod
    def arrows(self) -> typing.Tuple[Arrow, ...]:
        """
        (source vertex, target vertex, matrix) in a fixed order
        """

    @abc.abstractmethod
    def rebuild(self, dims: typing.Sequence[int], matrices: typing.Sequence[Matrix]) -> 'ZigzagRep':
        """
        Representation of the same quiver with new vertex dimensions and arrow matrices
        """

    @abc.abstractmethod
    def refine(self, extra: typing.Iterable[Scalar]) -> 'ZigzagRep':
        """
        Isomorphic representation on a finer set of marked points
        """

    @property
    def total_dim(self) -> int:
        return sum(self.vertex_dims)

    @property
    def max_dim(self) -> int:
        return max(self.vertex_dims, default=0)


@dataclasses.dataclass(frozen=True)
class LineQuiverRep(ZigzagRep):
    """
    Constructible sheaf on R as a representation of the zigzag quiver.

    `stalks[i]` is the stalk at points[i]; `arcs[i]` holds sections on the arc left of points[i]
    (arcs[n] is the arc after the last point). `left[i]` maps stalks[i] to arcs[i], `right[i]` to arcs[i + 1].
    """

    points: typing.Tuple[Rational, ...]
    stalks: typing.Tuple[int, ...]
    arcs: typing.Tuple[int, ...]
    left: typing.Tuple[Matrix, ...]
    right: typing.Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        points = tuple(to_rational(p) for p in self.points)
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'stalks', tuple(self.stalks))
        object.__setattr__(self, 'arcs', tuple(self.arcs))
        object.__setattr__(self, 'left', tuple(self.left))
        object.__setattr__(self, 'right', tuple(self.right))
        n = len(points)
        if any(a >= b for a, b in zip(points, points[1:])):
            raise DuplicatePoint(f'points must be strictly increasing: {[str(p) for p in points]}')
        if len(self.stalks) != n or len(self.arcs) != n + 1 or len(self.left) != n or len(self.right) != n:
            raise ShapeMismatch(f'{n} points need {n} stalks, {n + 1} arcs and {n} arrows each way')
        _check_dims(self.stalks, 'stalk')
        _check_dims(self.arcs, 'arc')
        for i in range(n):
            _check_shape(self.left[i], self.arcs[i], self.stalks[i], f'left arrow {i}')
            _check_shape(self.right[i], self.arcs[i + 1], self.stalks[i], f'right arrow {i}')

    @classmethod
    def constant(cls, dim: int) -> 'LineQuiverRep':
        return cls((), (), (dim,), (), ())

    @classmethod
    def zero(cls, points: typing.Sequence[Scalar] = ()) -> 'LineQuiverRep':
        n = len(points)
        empty = Matrix.zeros(0, 0)
        return cls(tuple(points), (0,) * n, (0,) * (n + 1), (empty,) * n, (empty,) * n)

    @property
    def vertex_dims(self) -> typing.Tuple[int, ...]:
        dims = [self.arcs[0]]
        for stalk, arc in zip(self.stalks, self.arcs[1:]):
            dims += [stalk, arc]
        return tuple(dims)

    @property
    def arrows(self) -> typing.Tuple[Arrow, ...]:
        out: typing.List[Arrow] = []
        for i in range(len(self.points)):
            out.append((2 * i + 1, 2 * i, self.left[i]))
            out.append((2 * i + 1, 2 * i + 2, self.right[i]))
        return tuple(out)

    def rebuild(self, dims: typing.Sequence[int], matrices: typing.Sequence[Matrix]) -> 'LineQuiverRep':
        return LineQuiverRep(self.points, tuple(dims[1::2]), tuple(dims[0::2]), tuple(matrices[0::2]),
                             tuple(matrices[1::2]))

    def stalk_dim(self, x: Scalar) -> int:
        x = to_rational(x)
        i = bisect.bisect_left(self.points, x)
        if i < len(self.points) and self.points[i] == x:
            return self.stalks[i]
        return self.arcs[i]

    def refine(self, extra: typing.Iterable[Scalar]) -> 'LineQuiverRep':
        """
        Inserts each extra point into the arc containing it, with identity arrows
        """
        points, stalks = list(self.points), list(self.stalks)
        arcs, left, right = list(self.arcs), list(self.left), list(self.right)
        for x in sorted({to_rational(e) for e in extra}):
            i = bisect.bisect_left(points, x)
            if i < len(points) and points[i] == x:
                raise DuplicatePoint(f'{x} is already a marked point')
            ident = Matrix.identity(arcs[i])
            points.insert(i, x)
            stalks.insert(i, arcs[i])
            arcs.insert(i, arcs[i])
            left.insert(i, ident)
            right.insert(i, ident)
        return LineQuiverRep(tuple(points), tuple(stalks), tuple(arcs), tuple(left), tuple(right))

    def barcode(self) -> typing.Dict[Bar, int]:
        """
        Multiplicities of the interval summands, keyed by vertex range
        """
        dims = self.vertex_dims
        arrows = self.arrows

        def step(k: int) -> Relation:
            if k % 2 == 0:
                return Relation.converse_graph(arrows[k][2])
            return Relation.graph(arrows[k][2])

        return bar_multiplicities(lambda k: dims[k], step, range(len(dims)), lower=0, upper=len(dims) - 1)


@dataclasses.dataclass(frozen=True)
class CircleQuiverRep(ZigzagRep):
    """
    Constructible sheaf on the circle R/Z as a representation of the cyclic zigzag quiver.

    `arcs[j]` holds sections on (points[j], points[j + 1]), the last arc wrapping past 1.
    `left[j]` maps stalks[j] to arcs[j - 1] and `right[j]` maps it to arcs[j].
    """

    points: typing.Tuple[Rational, ...]
    stalks: typing.Tuple[int, ...]
    arcs: typing.Tuple[int, ...]
    left: typing.Tuple[Matrix, ...]
    right: typing.Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        points = tuple(to_rational(p) for p in self.points)
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'stalks', tuple(self.stalks))
        object.__setattr__(self, 'arcs', tuple(self.arcs))
        object.__setattr__(self, 'left', tuple(self.left))
        object.__setattr__(self, 'right', tuple(self.right))
        m = len(points)
        if m < 1:
            raise ShapeMismatch('a circle representation needs at least one marked point')
        if any(not 0 <= p < 1 for p in points):
            raise ValueError(f'circle points must lie in [0, 1): {[str(p) for p in points]}')
        if any(a >= b for a, b in zip(points, points[1:])):
            raise DuplicatePoint(f'points must be strictly increasing: {[str(p) for p in points]}')
        if len(self.stalks) != m or len(self.arcs) != m or len(self.left) != m or len(self.right) != m:
            raise ShapeMismatch(f'{m} points need {m} stalks, {m} arcs and {m} arrows each way')
        _check_dims(self.stalks, 'stalk')
        _check_dims(self.arcs, 'arc')
        for j in range(m):
            _check_shape(self.left[j], self.arcs[j - 1], self.stalks[j], f'left arrow {j}')
            _check_shape(self.right[j], self.arcs[j], self.stalks[j], f'right arrow {j}')

    @classmethod
    def zero(cls, points: typing.Sequence[Scalar] = (0,)) -> 'CircleQuiverRep':
        m = len(points)
        empty = Matrix.zeros(0, 0)
        return cls(tuple(points), (0,) * m, (0,) * m, (empty,) * m, (empty,) * m)

    @property
    def vertex_dims(self) -> typing.Tuple[int, ...]:
        return tuple(d for pair in zip(self.stalks, self.arcs) for d in pair)

    @property
    def arrows(self) -> typing.Tuple[Arrow, ...]:
        m = len(self.points)
        out: typing.List[Arrow] = []
        for j in range(m):
            out.append((2 * j, 2 * ((j - 1) % m) + 1, self.left[j]))
            out.append((2 * j, 2 * j + 1, self.right[j]))
        return tuple(out)

    def rebuild(self, dims: typing.Sequence[int], matrices: typing.Sequence[Matrix]) -> 'CircleQuiverRep':
        return CircleQuiverRep(self.points, tuple(dims[0::2]), tuple(dims[1::2]), tuple(matrices[0::2]),
                               tuple(matrices[1::2]))

    def stalk_dim(self, x: Scalar) -> int:
        x = to_rational(x) % 1
        j = bisect.bisect_left(self.points, x)
        if j < len(self.points) and self.points[j] == x:
            return self.stalks[j]
        return self.arcs[j - 1]

    def refine(self, extra: typing.Iterable[Scalar]) -> 'CircleQuiverRep':
        """
        Inserts each extra point of [0, 1) into the arc containing it, with identity arrows
        """
        points, stalks = list(self.points), list(self.stalks)
        arcs, left, right = list(self.arcs), list(self.left), list(self.right)
        for x in sorted({to_rational(e) % 1 for e in extra}):
            j = bisect.bisect_left(points, x)
            if j < len(points) and points[j] == x:
                raise DuplicatePoint(f'{x} is already a marked point')
            # x splits arcs[j - 1]; the new stalk takes index j
            before = (j - 1) % len(points)
            dim = arcs[before]
            ident = Matrix.identity(dim)
            points.insert(j, x)
            stalks.insert(j, dim)
            left.insert(j, ident)
            right.insert(j, ident)
            arcs.insert(j, dim)
        return CircleQuiverRep(tuple(points), tuple(stalks), tuple(arcs), tuple(left), tuple(right))

    def _position(self, q: int) -> Rational:
        """
        Lifted position of the q-th marked point of the covering line
        """
        m = len(self.points)
        return self.points[q % m] + q // m

    def _lifted_dim(self, k: int) -> int:
        m = len(self.points)
        return self.stalks[(k // 2) % m] if k % 2 == 0 else self.arcs[(k // 2) % m]

    def _lifted_step(self, k: int) -> Relation:
        m = len(self.points)
        j = (k // 2) % m
        if k % 2 == 0:
            return Relation.graph(self.right[j])
        return Relation.converse_graph(self.left[(j + 1) % m])

    def wrapped_bars(self) -> typing.Dict[typing.Tuple[Rational, bool, Rational, bool], int]:
        """
        Bounded summands of the pullback to the covering line, one per wrapped summand.

        Bars are read with their left end in the first turn; a wrapped summand never spans more than N + 1 turns,
        N the largest dimension. Keys are (lift_lo, lo_closed, length, hi_closed).
        """
        m = len(self.points)
        span = 2 * m * (self.max_dim + 2) + 2
        bars = bar_multiplicities(self._lifted_dim, self._lifted_step, range(2 * m), span=span)
        out: typing.Dict[typing.Tuple[Rational, bool, Rational, bool], int] = {}
        for (s, t), mult in bars.items():
            lo = self._position(s // 2) if s % 2 == 0 else self._position((s - 1) // 2)
            hi = self._position(t // 2) if t % 2 == 0 else self._position((t + 1) // 2)
            key = (lo - math.floor(lo), s % 2 == 0, hi - lo, t % 2 == 0)
            out[key] = out.get(key, 0) + mult
        log.debug(f'circle bars over {span} lifted vertices: {len(out)} wrapped types')
        return out

    def monodromy(self) -> Matrix:
        """
        Transport once around the circle restricted to its regular part, starting on the arc before points[0]
        """
        m = len(self.points)
        relation = Relation.identity(self._lifted_dim(-1))
        for k in range(-1, 2 * m - 1):
            relation = relation.compose(self._lifted_step(k))
        return regular_part(relation)

    def lift(self, lo: Scalar, hi: Scalar) -> LineQuiverRep:
        """
        Pullback to the open window (lo, hi) of the covering line, as a representation on R
        """
        lo, hi = to_rational(lo), to_rational(hi)
        if lo >= hi:
            raise ValueError(f'empty window ({lo}, {hi})')
        m = len(self.points)
        first = (math.floor(lo) - 1) * m
        while self._position(first) <= lo:
            first += 1
        inside = list(itertools.takewhile(lambda q: self._position(q) < hi, itertools.count(first)))
        return LineQuiverRep(
            tuple(self._position(q) for q in inside),
            tuple(self.stalks[q % m] for q in inside),
            (self.arcs[(first - 1) % m],) + tuple(self.arcs[q % m] for q in inside),
            tuple(self.left[q % m] for q in inside),
            tuple(self.right[q % m] for q in inside),
        )


@dataclasses.dataclass(frozen=True)
class RepMorphism:
    """
    Vertexwise matrices between two representations on the same marked points
    """

    source: ZigzagRep
    target: ZigzagRep
    maps: typing.Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'maps', tuple(self.maps))
        if type(self.source) is not type(self.target) or self.source.points != self.target.points:
            raise ShapeMismatch('morphism ends live on different marked points')
        src, tgt = self.source.vertex_dims, self.target.vertex_dims
        if len(self.maps) != len(src):
            raise ShapeMismatch(f'{len(self.maps)} vertex maps for {len(src)} vertices')
        for v, f in enumerate(self.maps):
            _check_shape(f, tgt[v], src[v], f'vertex map {v}')
        for k, ((s, t, a), (_, _, b)) in enumerate(zip(self.source.arrows, self.target.arrows)):
            if b @ self.maps[s] != self.maps[t] @ a:
                raise ShapeMismatch(f'square at arrow {k} does not commute')

    @classmethod
    def zero(cls, source: ZigzagRep, target: ZigzagRep) -> 'RepMorphism':
        return cls(source, target, tuple(Matrix.zeros(b, a) for a, b in zip(source.vertex_dims,
                                                                               target.vertex_dims)))

    @classmethod
    def scalar(cls, rep: ZigzagRep, value: Scalar) -> 'RepMorphism':
        return cls(rep, rep, tuple(Matrix.scalar(d, value) for d in rep.vertex_dims))

    @classmethod
    def identity(cls, rep: ZigzagRep) -> 'RepMorphism':
        return cls.scalar(rep, 1)

    def __add__(self, other: 'RepMorphism') -> 'RepMorphism':
        return RepMorphism(self.source, self.target, tuple(f + g for f, g in zip(self.maps, other.maps)))

    def __mul__(self, value: Scalar) -> 'RepMorphism':
        return RepMorphism(self.source, self.target, tuple(f * value for f in self.maps))

    __rmul__ = __mul__

    def then(self, other: 'RepMorphism') -> 'RepMorphism':
        """
        other after self
        """
        return RepMorphism(self.source, other.target, tuple(g @ f for f, g in zip(self.maps, other.maps)))


Rep = typing.TypeVar('Rep', LineQuiverRep, CircleQuiverRep)


def common_refinement(a: Rep, b: Rep) -> typing.Tuple[Rep, Rep]:
    if type(a) is not type(b):
        raise ShapeMismatch(f'cannot combine {type(a).__name__} with {type(b).__name__}')
    return (typing.cast(Rep, a.refine(set(b.points) - set(a.points))),
            typing.cast(Rep, b.refine(set(a.points) - set(b.points))))


def direct_sum(a: Rep, b: Rep) -> Rep:
    a, b = common_refinement(a, b)
    dims = [x + y for x, y in zip(a.vertex_dims, b.vertex_dims)]
    return typing.cast(Rep, a.rebuild(dims, [block_diagonal(f, g) for (_, _, f), (_, _, g) in
                                             zip(a.arrows, b.arrows)]))


def direct_sum_all(reps: typing.Sequence[Rep], empty: Rep) -> Rep:
    total = empty
    for rep in reps:
        total = direct_sum(total, rep)
    return total


def tensor(a: Rep, b: Rep) -> Rep:
    """
    Stalkwise tensor product, arrows as Kronecker products
    """
    a, b = common_refinement(a, b)
    dims = [x * y for x, y in zip(a.vertex_dims, b.vertex_dims)]
    return typing.cast(Rep, a.rebuild(dims, [f.kronecker(g) for (_, _, f), (_, _, g) in zip(a.arrows, b.arrows)]))


def hom_basis(a: Rep, b: Rep) -> typing.List[RepMorphism]:
    """
    Basis of Hom(a, b): solutions X of  B X_s = X_t A  for every arrow, on the common refinement
    """
    a, b = common_refinement(a, b)
    da, db = a.vertex_dims, b.vertex_dims
    offsets = list(itertools.accumulate((x * y for x, y in zip(da, db)), initial=0))
    unknowns = offsets[-1]

    def var(v: int, i: int, j: int) -> int:
        return offsets[v] + i * da[v] + j

    equations: typing.List[typing.Dict[int, Rational]] = []
    for (s, t, arrow_a), (_, _, arrow_b) in zip(a.arrows, b.arrows):
        for i in range(db[t]):
            for j in range(da[s]):
                row: typing.Dict[int, Rational] = {}
                for k in range(db[s]):
                    c = arrow_b[i, k]
                    if c:
                        row[var(s, k, j)] = row.get(var(s, k, j), 0) + c
                for k in range(da[t]):
                    c = arrow_a[k, j]
                    if c:
                        row[var(t, i, k)] = row.get(var(t, i, k), 0) - c
                if any(row.values()):
                    equations.append(row)
    system = Matrix(len(equations), unknowns,
                    (row.get(col, 0) for row in equations for col in range(unknowns)))
    solutions = kernel_basis(system)
    basis = []
    for c in range(solutions.cols):
        vector = solutions.column(c)
        maps = tuple(Matrix(db[v], da[v], vector[offsets[v]:offsets[v + 1]]) for v in range(len(da)))
        basis.append(RepMorphism(a, b, maps))
    return basis


def hom_space_dim(a: Rep, b: Rep) -> int:
    return len(hom_basis(a, b))


def kernel(f: RepMorphism) -> ZigzagRep:
    """
    Vertexwise kernels with the induced arrows
    """
    bases = [kernel_basis(m) for m in f.maps]
    return _subrep(f.source, bases)


def image(f: RepMorphism) -> ZigzagRep:
    bases = [column_basis(m) for m in f.maps]
    return _subrep(f.target, bases)


def _subrep(rep: ZigzagRep, bases: typing.Sequence[Matrix]) -> ZigzagRep:
    matrices = []
    for s, t, arrow in rep.arrows:
        induced = solve(bases[t], arrow @ bases[s])
        if induced is None:
            raise ShapeMismatch('subspaces are not preserved by the arrows')
        matrices.append(induced)
    return rep.rebuild([m.cols for m in bases], matrices)


def cokernel(f: RepMorphism) -> ZigzagRep:
    """
    Vertexwise quotients target / image, coordinates taken on a standard complement
    """
    images = [column_basis(m) for m in f.maps]
    complements = [complement_basis(im) for im in images]
    projections = []
    for im, comp in zip(images, complements):
        change = inverse(hstack(im, comp))
        projections.append(change.submatrix(range(im.cols, change.rows), range(change.cols)))
    matrices = [projections[t] @ arrow @ complements[s] for s, t, arrow in f.target.arrows]
    return f.target.rebuild([c.cols for c in complements], matrices)


def _check_square(f: RepMorphism, a: RepMorphism, a_prime: RepMorphism) -> None:
    if a.source != f.source or a.target != f.source or a_prime.source != f.target or a_prime.target != f.target:
        raise ShapeMismatch('endomorphisms must act on the source and target of the morphism')
    if any(g @ x != y @ g for g, x, y in zip(f.maps, a.maps, a_prime.maps)):
        raise ShapeMismatch('endomorphisms do not commute with the morphism')


def kernel_endomorphism(f: RepMorphism, a: RepMorphism, a_prime: RepMorphism) -> RepMorphism:
    """
    Endomorphism of kernel(f) induced by a when f a = a' f
    """
    _check_square(f, a, a_prime)
    bases = [kernel_basis(m) for m in f.maps]
    maps = []
    for basis, x in zip(bases, a.maps):
        induced = solve(basis, x @ basis)
        if induced is None:
            raise ShapeMismatch('kernel is not preserved')
        maps.append(induced)
    rep = kernel(f)
    return RepMorphism(rep, rep, tuple(maps))


def cokernel_endomorphism(f: RepMorphism, a: RepMorphism, a_prime: RepMorphism) -> RepMorphism:
    """
    Endomorphism of cokernel(f) induced by a' when f a = a' f, in the coordinates used by cokernel()
    """
    _check_square(f, a, a_prime)
    maps = []
    for m, y in zip(f.maps, a_prime.maps):
        im = column_basis(m)
        comp = complement_basis(im)
        change = inverse(hstack(im, comp))
        projection = change.submatrix(range(im.cols, change.rows), range(change.cols))
        maps.append(projection @ y @ comp)
    rep = cokernel(f)
    return RepMorphism(rep, rep, tuple(maps))


def is_isomorphism(f: RepMorphism) -> bool:
    return all(m.is_square and rank(m) == m.rows for m in f.maps)


def vertex_range(interval: IntervalLike, points: typing.Sequence[Rational]) -> typing.Optional[Bar]:
    """
    Line vertices covered by an interval whose finite ends are marked points; None when empty
    """
    n = len(points)

    def index(x: Rational) -> int:
        try:
            return list(points).index(x)
        except ValueError:
            raise EndpointNotMarked(f'{x} is not among the marked points') from None

    start = 0 if interval.lo is None else 2 * index(interval.lo) + (1 if interval.lo_closed else 2)
    stop = 2 * n if interval.hi is None else 2 * index(interval.hi) + (1 if interval.hi_closed else 0)
    return (start, stop) if start <= stop else None


def range_endpoints(bar: Bar, points: typing.Sequence[Rational]) \
        -> typing.Tuple[typing.Optional[Rational], bool, typing.Optional[Rational], bool]:
    """
    (lo, lo_closed, hi, hi_closed) of the interval covering a line vertex range
    """
    s, t = bar
    last = 2 * len(points)
    if s == 0:
        lo, lo_closed = None, False
    elif s % 2:
        lo, lo_closed = points[(s - 1) // 2], True
    else:
        lo, lo_closed = points[s // 2 - 1], False
    if t == last:
        hi, hi_closed = None, False
    elif t % 2:
        hi, hi_closed = points[(t - 1) // 2], True
    else:
        hi, hi_closed = points[t // 2], False
    return lo, lo_closed, hi, hi_closed


def _indicator(points: typing.Sequence[Rational], bar: typing.Optional[Bar]) -> LineQuiverRep:
    n = len(points)
    dims = [0] * (2 * n + 1)
    if bar is not None:
        for v in range(bar[0], bar[1] + 1):
            dims[v] = 1
    rep = LineQuiverRep.zero(points)
    matrices = [Matrix.identity(1) if dims[s] and dims[t] else Matrix.zeros(dims[t], dims[s])
                for s, t, _ in rep.arrows]
    return rep.rebuild(dims, matrices)


def from_interval(interval: IntervalLike, points: typing.Optional[typing.Sequence[Scalar]] = None) -> LineQuiverRep:
    """
    Indecomposable k_I: dimension 1 exactly on the vertex range of I
    """
    if points is None:
        points = sorted({e for e in (interval.lo, interval.hi) if e is not None})
    marked = tuple(to_rational(p) for p in points)
    return _indicator(marked, vertex_range(interval, marked))


def from_circle_summand(wrapped: WrappedLike, points: typing.Optional[typing.Sequence[Scalar]] = None) \
        -> CircleQuiverRep:
    """
    e_*(k_I): stalk at each cell spanned by the lifts of that cell lying in I
    """
    lo = to_rational(wrapped.lift_lo)
    hi = lo + to_rational(wrapped.length)
    if points is None:
        points = sorted({lo % 1, hi % 1})
    marked = tuple(sorted(to_rational(p) for p in points))
    m = len(marked)
    if lo % 1 not in marked or hi % 1 not in marked:
        raise EndpointNotMarked(f'wrapped interval ends {lo}, {hi} are not marked')

    def inside(x: Rational) -> bool:
        return (lo < x or (lo == x and wrapped.lo_closed)) and (x < hi or (x == hi and wrapped.hi_closed))

    turns = range(math.floor(lo) - 1, math.ceil(hi) + 2)
    stalk_lifts = [[p + n for n in turns if inside(p + n)] for p in marked]
    arc_lifts = []
    for j, p in enumerate(marked):
        nxt = marked[j + 1] if j + 1 < m else marked[0] + 1
        arc_lifts.append([(p + n, nxt + n) for n in turns if lo <= p + n and nxt + n <= hi])

    def arrow(stalk: typing.List[Rational], arc: typing.List[typing.Tuple[Rational, Rational]], side: int) -> Matrix:
        where = {ends[side]: i for i, ends in enumerate(arc)}
        entries = [0] * (len(arc) * len(stalk))
        for c, x in enumerate(stalk):
            if x in where:
                entries[where[x] * len(stalk) + c] = 1
        return Matrix(len(arc), len(stalk), entries)

    return CircleQuiverRep(
        marked,
        tuple(len(s) for s in stalk_lifts),
        tuple(len(a) for a in arc_lifts),
        tuple(arrow(stalk_lifts[j], arc_lifts[j - 1], 1) for j in range(m)),
        tuple(arrow(stalk_lifts[j], arc_lifts[j], 0) for j in range(m)),
    )


def tits_form(dims: typing.Sequence[int]) -> int:
    """
    q(d) = sum d_v^2 - sum over arrows d_s d_t, for the linear zigzag
    """
    return sum(d * d for d in dims) - sum(a * b for a, b in zip(dims, dims[1:]))


def positive_roots(n: int, bound: int = 2) -> typing.List[typing.Tuple[int, ...]]:
    """
    Non-zero dimension vectors with entries up to `bound` and q(d) = 1 for n marked points
    """
    return [d for d in itertools.product(range(bound + 1), repeat=2 * n + 1) if any(d) and tits_form(d) == 1]
