import dataclasses
import math
import typing

from shv.circlesheaf import CircleSheaf, circle_points, decompose_circle, local_system_rep, pullback_window, \
    tensor_circle
from shv.errors import NotSimple
from shv.exactalg import Matrix, Rational, Scalar, block_diagonal, to_rational
from shv.linesheaf import Covector, Interval, LineSheaf, LineSummand, Sign, end_shift, marked_points, \
    restrict_line
from shv.logger import log
from shv.quiverrep import CircleQuiverRep, LineQuiverRep, RepMorphism, ZigzagRep, cokernel, direct_sum_all, \
    from_circle_summand, from_interval, hom_basis

Sheaf = typing.Union[LineSheaf, CircleSheaf]


@dataclasses.dataclass(frozen=True)
class Owner:
    """
    One end of one indecomposable copy whose conormal covector is the one asked about
    """

    copy: int
    degree: int
    at_lo: bool
    closed: bool


class MicrolocalRank(typing.NamedTuple):
    total: int
    degrees: typing.Tuple[int, ...]


def _end_owners(interval: Interval, copy: int, degree: int, p: Covector, periodic: bool) -> typing.List[Owner]:
    def at(x: typing.Optional[Rational]) -> bool:
        if x is None:
            return False
        return x % 1 == p.base % 1 if periodic else x == p.base

    found = []
    if at(interval.lo) and p.sign is (Sign.PLUS if interval.lo_closed else Sign.MINUS):
        found.append(Owner(copy, degree, True, interval.lo_closed))
    if at(interval.hi) and p.sign is (Sign.MINUS if interval.hi_closed else Sign.PLUS):
        found.append(Owner(copy, degree, False, interval.hi_closed))
    return found


def owners(sheaf: Sheaf, p: Covector) -> typing.List[Owner]:
    """
    Summand ends carrying p; local systems carry none
    """
    found: typing.List[Owner] = []
    if isinstance(sheaf, LineSheaf):
        for copy, (interval, degree) in enumerate(sheaf.expanded()):
            found += _end_owners(interval, copy, degree, p, periodic=False)
    else:
        for copy, (wrapped, degree) in enumerate(sheaf.expanded_wrapped()):
            found += _end_owners(wrapped.lift, copy, degree, p, periodic=True)
    return found


def microlocal_rank(sheaf: Sheaf, p: Covector) -> MicrolocalRank:
    found = owners(sheaf, p)
    return MicrolocalRank(len(found), tuple(sorted(o.degree for o in found)))


def is_simple_at(sheaf: Sheaf, p: Covector) -> bool:
    return microlocal_rank(sheaf, p).total == 1


def is_pure_at(sheaf: Sheaf, p: Covector) -> bool:
    return len(set(microlocal_rank(sheaf, p).degrees)) == 1


def sole_owner(sheaf: Sheaf, p: Covector) -> Owner:
    found = owners(sheaf, p)
    if len(found) != 1:
        raise NotSimple(p, len(found))
    return found[0]


def shift_difference(sheaf: Sheaf, p: Covector, q: Covector) -> Rational:
    """
    shift at p minus shift at q; only this difference is independent of how shifts are normalised
    """
    first, second = sole_owner(sheaf, p), sole_owner(sheaf, q)
    return end_shift(first.closed, first.degree) - end_shift(second.closed, second.degree)


def sheaf_points(sheaf: Sheaf) -> typing.Tuple[Rational, ...]:
    if isinstance(sheaf, LineSheaf):
        return marked_points(sheaf)
    return circle_points(sheaf)


def summand_reps(sheaf: Sheaf, degree: int, points: typing.Sequence[Rational]) -> typing.List[ZigzagRep]:
    """
    Representations of the indecomposable copies in one degree, in the order they are summed
    """
    if isinstance(sheaf, LineSheaf):
        return [from_interval(i, points) for i, d in sheaf.expanded() if d == degree]
    parts: typing.List[ZigzagRep] = [from_circle_summand(w, points) for w, d in sheaf.expanded_wrapped()
                                     if d == degree]
    return parts + [local_system_rep(b.matrix, points) for b, d in sheaf.expanded_local() if d == degree]


def assembled(sheaf: Sheaf, degree: int, points: typing.Sequence[Rational]) -> ZigzagRep:
    if isinstance(sheaf, LineSheaf):
        return direct_sum_all(summand_reps(sheaf, degree, points), LineQuiverRep.zero(points))
    return direct_sum_all(summand_reps(sheaf, degree, points), CircleQuiverRep.zero(points))


def _offsets(parts: typing.Sequence[ZigzagRep], vertices: int) -> typing.List[typing.List[int]]:
    offsets = []
    running = [0] * vertices
    for part in parts:
        offsets.append(list(running))
        running = [a + b for a, b in zip(running, part.vertex_dims)]
    return offsets


def _position(sheaf: Sheaf, copy: int) -> typing.Tuple[int, int]:
    """
    (degree, index among the summed copies of that degree) of an owning copy
    """
    copies = sheaf.expanded() if isinstance(sheaf, LineSheaf) else sheaf.expanded_wrapped()
    degree = copies[copy][1]
    return degree, sum(1 for _, d in copies[:copy] if d == degree)


@dataclasses.dataclass(frozen=True)
class EndoElement:
    """
    Degree-preserving endomorphism of a canonical sheaf, one morphism of assembled representations per degree.

    Coordinates follow the order of `summand_reps`; degrees without a morphism act by zero.
    """

    sheaf: Sheaf
    points: typing.Tuple[Rational, ...]
    maps: typing.Tuple[typing.Tuple[int, RepMorphism], ...]

    @classmethod
    def scalar(cls, sheaf: Sheaf, value: Scalar) -> 'EndoElement':
        points = sheaf_points(sheaf)
        return cls(sheaf, points, tuple((d, RepMorphism.scalar(assembled(sheaf, d, points), value))
                                        for d in sheaf.degrees))

    @classmethod
    def diagonal(cls, sheaf: Sheaf, values: typing.Sequence[Scalar]) -> 'EndoElement':
        """
        Scalar values[c] on the c-th summed copy, degree by degree
        """
        points = sheaf_points(sheaf)
        maps = []
        remaining = list(values)
        for d in sheaf.degrees:
            parts = summand_reps(sheaf, d, points)
            if len(remaining) < len(parts):
                raise ValueError(f'{len(values)} scalars are too few for the summands of {sheaf}')
            total = assembled(sheaf, d, points)
            blocks = tuple(block_diagonal(*(Matrix.scalar(part.vertex_dims[v], value)
                                            for part, value in zip(parts, remaining)))
                           for v in range(len(total.vertex_dims)))
            remaining = remaining[len(parts):]
            maps.append((d, RepMorphism(total, total, blocks)))
        return cls(sheaf, points, tuple(maps))

    def morphism(self, degree: int) -> typing.Optional[RepMorphism]:
        return dict(self.maps).get(degree)

    def block(self, target: int, source: int, degree: int) -> RepMorphism:
        """
        Component from the source-th to the target-th summed copy of one degree
        """
        parts = summand_reps(self.sheaf, degree, self.points)
        vertices = len(parts[source].vertex_dims)
        layout = _offsets(parts, vertices)
        f = self.morphism(degree)
        maps = []
        for v in range(vertices):
            rows = range(layout[target][v], layout[target][v] + parts[target].vertex_dims[v])
            cols = range(layout[source][v], layout[source][v] + parts[source].vertex_dims[v])
            maps.append(Matrix.zeros(len(rows), len(cols)) if f is None else f.maps[v].submatrix(rows, cols))
        return RepMorphism(parts[source], parts[target], tuple(maps))

    def __add__(self, other: 'EndoElement') -> 'EndoElement':
        total = dict(self.maps)
        for d, f in other.maps:
            total[d] = total[d] + f if d in total else f
        return EndoElement(self.sheaf, self.points, tuple(sorted(total.items(), key=lambda item: item[0])))


def mu_scalar(u: EndoElement, p: Covector) -> Rational:
    """
    Scalar by which u acts microlocally at p: the diagonal entry of its block on the owner of p
    """
    owner = sole_owner(u.sheaf, p)
    degree, index = _position(u.sheaf, owner.copy)
    diagonal = u.block(index, index, degree)
    for v, dim in enumerate(diagonal.source.vertex_dims):
        if dim:
            return diagonal.maps[v][0, 0]
    raise ArithmeticError(f'owner of {p} has no support')


def localize(sheaf: Sheaf, window: typing.Optional[Interval]) -> Sheaf:
    """
    F|_W as a sheaf on R for an open window W; the whole sheaf when there is no window
    """
    if window is None:
        return sheaf
    if isinstance(sheaf, CircleSheaf):
        return restrict_line(pullback_window(sheaf, window), window)
    return restrict_line(sheaf, window)


def end_basis(sheaf: Sheaf, window: typing.Optional[Interval] = None) -> typing.List[EndoElement]:
    """
    Basis of the degree-preserving endomorphisms of F|_W
    """
    local = localize(sheaf, window)
    points = sheaf_points(local)
    basis = []
    for d in local.degrees:
        rep = assembled(local, d, points)
        for f in hom_basis(rep, rep):
            basis.append(EndoElement(local, points, ((d, f),)))
    log.debug(f'End basis of {local}: {len(basis)} elements')
    return basis


def _check_simple(sheaf: Sheaf, *covectors: Covector) -> None:
    for p in covectors:
        sole_owner(sheaf, p)


def f_linked_exact(sheaf: Sheaf, p: Covector, q: Covector, window: typing.Optional[Interval] = None) -> bool:
    """
    u acts by the same scalar at p and q for every endomorphism u of F|_W.

    The scalar is linear in u and units span End over an infinite field, so a basis decides it.
    """
    local = localize(sheaf, window)
    _check_simple(local, p, q)
    if p.direction == q.direction:
        return True
    return all(mu_scalar(u, p) == mu_scalar(u, q) for u in end_basis(local))


def _unwound(sheaf: CircleSheaf, window: Interval) -> LineSheaf:
    """
    Every translate of every wrapped lift meeting the window, untruncated
    """
    summands = []
    for w in sheaf.wrapped:
        lift = w.interval.lift
        for n in range(math.floor(window.lo - lift.hi) - 1, math.ceil(window.hi - lift.lo) + 2):
            moved = lift.translate(n)
            if moved.intersect(window) is not None:
                summands.append(LineSummand(moved, w.degree, w.mult))
    return LineSheaf(tuple(summands))


def f_linked_interval_criterion(sheaf: Sheaf, p: Covector, q: Covector,
                                window: typing.Optional[Interval] = None) -> bool:
    """
    Some summand k_I[d] owns both p and q and the window contains the closure of I
    """
    _check_simple(localize(sheaf, window), p, q)
    if p.direction == q.direction:
        return True
    source: Sheaf = sheaf
    if isinstance(sheaf, CircleSheaf) and window is not None:
        source = _unwound(sheaf, window)
    first, second = owners(source, p), owners(source, q)
    if len(first) != 1 or len(second) != 1 or first[0].copy != second[0].copy:
        return False
    if window is None:
        return True
    if isinstance(source, LineSheaf):
        interval = source.expanded()[first[0].copy][0]
    else:
        interval = source.expanded_wrapped()[first[0].copy][0].lift
    return window.contains_interval(interval.closure())


def conjugate_point(sheaf: CircleSheaf, p: Covector) -> typing.Optional[Covector]:
    """
    Covector at the other end of the wrapped summand owning p, None when nothing owns p
    """
    found = owners(sheaf, p)
    if not found:
        return None
    if len(found) > 1:
        raise NotSimple(p, len(found))
    owner = found[0]
    lift = sheaf.expanded_wrapped()[owner.copy][0].lift
    if owner.at_lo:
        return Covector(lift.hi % 1, Sign.MINUS if lift.hi_closed else Sign.PLUS, owner.degree)
    return Covector(lift.lo % 1, Sign.PLUS if lift.lo_closed else Sign.MINUS, owner.degree)


def h_invariant(sheaf: CircleSheaf, alpha: Scalar, r: int, i: int) -> int:
    """
    Rank of the degree-i map induced by c on F (x) L_{1/alpha,r}: one per trivial local summand in degree i
    """
    twisted = tensor_circle(sheaf, CircleSheaf.local_system(1 / to_rational(alpha), r))
    return sum(loc.mult for loc in twisted.local if loc.block.is_trivial and loc.degree == i)


def h_invariants(sheaf: CircleSheaf) -> typing.Dict[typing.Tuple[Rational, int, int], int]:
    """
    Every non-zero h_invariant, keyed by (alpha, r, degree)
    """
    table = {}
    for loc in sheaf.local:
        key = (loc.block.alpha, loc.block.r, loc.degree)
        if key not in table:
            value = h_invariant(sheaf, *key)
            if value:
                table[key] = value
    return dict(sorted(table.items()))


def morph_elem_witness(target: CircleSheaf, u: RepMorphism) -> typing.Optional[typing.Tuple[Rational, int]]:
    """
    (alpha, r) other than (1, 1) whose degree-0 h_invariant drops from the target of u to its cokernel
    """
    quotient = decompose_circle(typing.cast(CircleQuiverRep, cokernel(u)))
    for loc in target.local:
        if loc.degree != 0 or loc.block.is_trivial:
            continue
        alpha, r = loc.block.alpha, loc.block.r
        if h_invariant(quotient, alpha, r, 0) < h_invariant(target, alpha, r, 0):
            return alpha, r
    return None
