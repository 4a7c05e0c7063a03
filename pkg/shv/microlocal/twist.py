import dataclasses
import typing

from shv.circlesheaf import CircleSheaf, assemble_circle, decompose_circle, pullback_window
from shv.errors import InconsistentModel, InvalidCover, NonInvertibleAut, ShapeMismatch
from shv.exactalg import Matrix, Rational, Scalar, to_rational, vstack
from shv.linesheaf import Interval, LineSheaf, restrict_line, single_degree
from shv.logger import log
from shv.quiverrep import CircleQuiverRep, RepMorphism, cokernel, direct_sum, range_endpoints


@dataclasses.dataclass(frozen=True)
class Arc:
    """
    Open arc of the circle running from lo to hi in the positive direction
    """

    lo: Rational
    hi: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, 'lo', to_rational(self.lo) % 1)
        object.__setattr__(self, 'hi', to_rational(self.hi) % 1)
        if self.lo == self.hi:
            raise InvalidCover(f'arc ({self.lo}, {self.hi}) has no length')

    @property
    def length(self) -> Rational:
        return (self.hi - self.lo) % 1

    @property
    def window(self) -> Interval:
        """
        Lift to R with left end in [0, 1)
        """
        return Interval.open(self.lo, self.lo + self.length)

    def contains(self, x: Scalar) -> bool:
        return 0 < (to_rational(x) - self.lo) % 1 < self.length

    def __str__(self) -> str:
        return f'({self.lo},{self.hi})'


@dataclasses.dataclass(frozen=True)
class CoverSpec:
    """
    Two open arcs covering the circle; their overlap has two components
    """

    u: Arc
    v: Arc

    def __post_init__(self) -> None:
        if not (self.u.contains(self.v.lo) and self.u.contains(self.v.hi)
                and self.v.contains(self.u.lo) and self.v.contains(self.u.hi)):
            raise InvalidCover(f'arcs {self.u} and {self.v} do not cover the circle with a two-piece overlap')

    @classmethod
    def default(cls) -> 'CoverSpec':
        return cls(Arc(Rational(0), Rational(3, 4)), Arc(Rational(1, 2), Rational(1, 4)))

    @property
    def components(self) -> typing.Tuple[Arc, Arc]:
        return Arc(self.v.lo, self.u.hi), Arc(self.u.lo, self.v.hi)

    @property
    def endpoints(self) -> typing.Tuple[Rational, ...]:
        return tuple(sorted({self.u.lo, self.u.hi, self.v.lo, self.v.hi}))


@dataclasses.dataclass(frozen=True)
class AutSpec:
    """
    Diagonal automorphism of F restricted to the overlap: one scalar per canonical summand of each component
    """

    scalars: typing.Tuple[typing.Tuple[Rational, ...], typing.Tuple[Rational, ...]]

    def __post_init__(self) -> None:
        if len(self.scalars) != 2:
            raise ShapeMismatch(f'{len(self.scalars)} overlap components given, expected 2')
        scalars = tuple(tuple(to_rational(a) for a in component) for component in self.scalars)
        if any(a == 0 for component in scalars for a in component):
            raise NonInvertibleAut(f'zero scalar in {[[str(a) for a in c] for c in scalars]}')
        object.__setattr__(self, 'scalars', scalars)

    def inverse(self) -> 'AutSpec':
        first, second = self.scalars
        return AutSpec((tuple(1 / a for a in first), tuple(1 / a for a in second)))


@dataclasses.dataclass(frozen=True)
class PathStep:
    """
    Crossing of one overlap component; sign +1 follows the orientation of the circle
    """

    component: int
    sign: int = 1
    summand: int = 0

    def __post_init__(self) -> None:
        if self.component not in (0, 1) or self.sign not in (1, -1):
            raise ValueError(f'invalid path step {self}')


def component_sheaves(sheaf: CircleSheaf, cover: CoverSpec) -> typing.List[LineSheaf]:
    """
    F restricted to each overlap component, as a sheaf on R
    """
    return [restrict_line(pullback_window(sheaf, c.window), c.window) for c in cover.components]


def identity_aut(sheaf: CircleSheaf, cover: CoverSpec) -> AutSpec:
    return scalar_aut(sheaf, cover, 1)


def scalar_aut(sheaf: CircleSheaf, cover: CoverSpec, a: Scalar) -> AutSpec:
    """
    a on every summand over the first component, 1 over the second
    """
    first, second = component_sheaves(sheaf, cover)
    return AutSpec(((to_rational(a),) * first.rank, (Rational(1),) * second.rank))


def _cells(rep: CircleQuiverRep, arc: Arc) -> typing.List[int]:
    """
    Circle vertices of the cells inside an arc whose ends are marked, in positive order
    """
    m = len(rep.points)
    j = rep.points.index(arc.lo)
    cells = [2 * j + 1]
    k = j + 1
    while rep.points[k % m] != arc.hi:
        cells += [2 * (k % m), 2 * (k % m) + 1]
        k += 1
    return cells


def _pieces(rep: CircleQuiverRep, arc: Arc, cells: typing.Sequence[int]) \
        -> typing.List[typing.Tuple[Interval, typing.List[typing.Tuple[int, int]]]]:
    """
    Connected pieces of the coordinate graph of the lifted arc, each with the interval it spans
    """
    window = arc.window
    line = rep.lift(window.lo, window.hi)
    parent: typing.Dict[typing.Tuple[int, int], typing.Tuple[int, int]] = {}

    def find(node: typing.Tuple[int, int]) -> typing.Tuple[int, int]:
        while parent.setdefault(node, node) != node:
            node = parent[node]
        return node

    for v, dim in enumerate(line.vertex_dims):
        for a in range(dim):
            find((v, a))
    for s, t, matrix in line.arrows:
        for row in range(matrix.rows):
            for col in range(matrix.cols):
                if matrix[row, col]:
                    parent[find((s, col))] = find((t, row))
    groups: typing.Dict[typing.Tuple[int, int], typing.List[typing.Tuple[int, int]]] = {}
    for node in list(parent):
        groups.setdefault(find(node), []).append(node)
    pieces = []
    for nodes in groups.values():
        vertices = [v for v, _ in nodes]
        lo, lo_closed, hi, hi_closed = range_endpoints((min(vertices), max(vertices)), line.points)
        pieces.append((Interval(lo, hi, lo_closed, hi_closed), [(cells[v], a) for v, a in sorted(nodes)]))
    return sorted(pieces, key=lambda piece: (piece[0].sort_key(), piece[1]))


def _overlap_scalars(rep: CircleQuiverRep, sheaf: CircleSheaf, cover: CoverSpec, alpha: AutSpec) \
        -> typing.Dict[int, Matrix]:
    """
    Diagonal matrix of the automorphism at every circle vertex of the overlap
    """
    out: typing.Dict[int, Matrix] = {}
    for arc, restricted, scalars in zip(cover.components, component_sheaves(sheaf, cover), alpha.scalars):
        copies = [interval for interval, _ in restricted.expanded()]
        if len(copies) != len(scalars):
            raise ShapeMismatch(f'{len(scalars)} scalars for {len(copies)} summands over {arc}')
        cells = _cells(rep, arc)
        values: typing.Dict[typing.Tuple[int, int], Rational] = {}
        taken: typing.Set[int] = set()
        for interval, nodes in _pieces(rep, arc, cells):
            index = next((c for c, i in enumerate(copies) if i == interval and c not in taken), None)
            if index is None:
                raise InconsistentModel(f'piece {interval} over {arc} matches no summand of {restricted}')
            taken.add(index)
            for node in nodes:
                values[node] = scalars[index]
        for v in cells:
            out[v] = Matrix.diagonal([values[(v, a)] for a in range(rep.vertex_dims[v])])
    return out


def _extension_by_zero(rep: CircleQuiverRep, inside: typing.Sequence[bool]) -> CircleQuiverRep:
    dims = [d if keep else 0 for d, keep in zip(rep.vertex_dims, inside)]
    matrices = [f if inside[s] and inside[t] else Matrix.zeros(dims[t], dims[s]) for s, t, f in rep.arrows]
    return typing.cast(CircleQuiverRep, rep.rebuild(dims, matrices))


def _membership(rep: CircleQuiverRep, arc: Arc) -> typing.List[bool]:
    m = len(rep.points)
    inside = []
    for j, p in enumerate(rep.points):
        nxt = rep.points[j + 1] if j + 1 < m else rep.points[0] + 1
        inside += [arc.contains(p), arc.contains((p + nxt) / 2)]
    return inside


def mv_twist(sheaf: CircleSheaf, cover: CoverSpec, alpha: AutSpec) -> CircleSheaf:
    """
    Cokernel of F_{U&V} -> F_U + F_V, the second component twisted by alpha, in canonical form
    """
    degree = single_degree(sheaf)
    flat = sheaf.shift(degree)
    log.debug(f'twisting {sheaf} over components {", ".join(str(c) for c in cover.components)}')
    rep = assemble_circle(flat, cover.endpoints, base=cover.v.lo)
    in_u, in_v = _membership(rep, cover.u), _membership(rep, cover.v)
    in_both = [a and b for a, b in zip(in_u, in_v)]
    scalars = _overlap_scalars(rep, flat, cover, alpha)
    overlap = _extension_by_zero(rep, in_both)
    target = direct_sum(_extension_by_zero(rep, in_u), _extension_by_zero(rep, in_v))
    maps = []
    for v, dim in enumerate(overlap.vertex_dims):
        if dim:
            maps.append(vstack(Matrix.identity(dim), scalars[v]))
        else:
            maps.append(Matrix.zeros(target.vertex_dims[v], 0))
    twisted = decompose_circle(typing.cast(CircleQuiverRep, cokernel(RepMorphism(overlap, target, tuple(maps)))))
    return twisted.shift(-degree)


def twist_restrictions_agree(sheaf: CircleSheaf, twisted: CircleSheaf, cover: CoverSpec) -> bool:
    """
    F and its twist restrict to isomorphic sheaves on U and on V
    """
    for arc in (cover.u, cover.v):
        window = arc.window
        if restrict_line(pullback_window(sheaf, window), window) != \
                restrict_line(pullback_window(twisted, window), window):
            return False
    return True


def m_gamma(cover: CoverSpec, alpha: AutSpec, path: typing.Sequence[PathStep]) -> Rational:
    """
    Signed product of the crossed scalars: the class of alpha in H^1 of the two-set cover
    """
    value = Rational(1)
    for step in path:
        component = alpha.scalars[step.component]
        if step.summand >= len(component):
            raise ShapeMismatch(f'summand {step.summand} missing over component {cover.components[step.component]}')
        value *= component[step.summand] ** step.sign
    return value


def cech_class(cover: CoverSpec, alpha: AutSpec) -> AutSpec:
    """
    Čech class of the twist by alpha: the class of alpha^-1
    """
    return alpha.inverse()
