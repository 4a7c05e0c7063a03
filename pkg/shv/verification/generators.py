import itertools
import random
import typing

from shv.circlesheaf import CircleSheaf, JordanBlock, LocalSummand, WrappedInterval, WrappedSummand
from shv.exactalg import Matrix, Rational, inverse
from shv.linesheaf import Interval, LineSheaf, LineSummand
from shv.quiverrep import RepMorphism, ZigzagRep

ALPHAS = (Rational(1), Rational(2), Rational(1, 2), Rational(-1), Rational(3))
OPENNESS = tuple(itertools.product((True, False), repeat=2))


def grid(size: int, step: Rational = Rational(1)) -> typing.List[Rational]:
    return [step * k for k in range(size)]


def intervals_on(points: typing.Sequence[Rational], rays: bool = True) -> typing.List[Interval]:
    """
    Every interval with ends among `points` (or infinite when `rays`), in all openness combinations
    """
    ends: typing.List[typing.Optional[Rational]] = list(points)
    los = ([None] if rays else []) + ends
    his = ends + ([None] if rays else [])
    out = []
    for lo in los:
        for hi in his:
            if lo is not None and hi is not None and lo > hi:
                continue
            for lo_closed, hi_closed in OPENNESS:
                if (lo is None and lo_closed) or (hi is None and hi_closed):
                    continue
                if lo is not None and lo == hi and not (lo_closed and hi_closed):
                    continue
                interval = Interval(lo, hi, lo_closed, hi_closed)
                if interval not in out:
                    out.append(interval)
    return out


def random_interval(rng: random.Random, points: typing.Sequence[Rational]) -> Interval:
    return rng.choice(intervals_on(points))


def random_line_sheaf(rng: random.Random, max_points: int = 6, max_summands: int = 3, max_mult: int = 3,
                      degrees: typing.Sequence[int] = (0,)) -> LineSheaf:
    points = sorted(rng.sample(range(-max_points, max_points), rng.randint(1, max_points)))
    marks = [Rational(p) for p in points]
    summands = [LineSummand(random_interval(rng, marks), rng.choice(degrees), rng.randint(1, max_mult))
                for _ in range(rng.randint(1, max_summands))]
    return LineSheaf(tuple(summands))


def random_wrapped(rng: random.Random, denominator: int = 4, turns: int = 2) -> WrappedInterval:
    lo = Rational(rng.randrange(denominator), denominator)
    length = Rational(rng.randint(0, turns * denominator), denominator)
    if length == 0:
        return WrappedInterval.point(lo)
    return WrappedInterval(lo, length, rng.random() < 0.5, rng.random() < 0.5)


def random_circle_sheaf(rng: random.Random, max_wrapped: int = 2, max_local: int = 2, max_r: int = 3,
                        degrees: typing.Sequence[int] = (0,)) -> CircleSheaf:
    wrapped = tuple(WrappedSummand(random_wrapped(rng), rng.choice(degrees), rng.randint(1, 2))
                    for _ in range(rng.randint(0, max_wrapped)))
    local = tuple(LocalSummand(JordanBlock(rng.choice(ALPHAS), rng.randint(1, max_r)), rng.choice(degrees),
                               rng.randint(1, 2))
                  for _ in range(rng.randint(0 if wrapped else 1, max_local)))
    return CircleSheaf(wrapped, local)


def random_invertible(rng: random.Random, n: int) -> Matrix:
    """
    Product of random unitriangular matrices with small integer entries
    """
    lower = Matrix(n, n, (1 if i == j else rng.randint(-2, 2) if i > j else 0 for i in range(n) for j in range(n)))
    upper = Matrix(n, n, (1 if i == j else rng.randint(-2, 2) if i < j else 0 for i in range(n) for j in range(n)))
    return lower @ upper


def scramble(rng: random.Random, rep: ZigzagRep) -> ZigzagRep:
    """
    The same representation after a random change of basis at every vertex
    """
    bases = [random_invertible(rng, d) for d in rep.vertex_dims]
    inverses = [inverse(b) if b.rows else b for b in bases]
    return rep.rebuild(rep.vertex_dims, [bases[t] @ f @ inverses[s] for s, t, f in rep.arrows])


GERM_TYPES = (Interval.closed_open(0, None), Interval.real_line(), Interval.open_closed(None, 0))


def random_germ_sheaf(rng: random.Random, max_summands: int = 3) -> LineSheaf:
    """
    Sum of k_[0,+inf), k_R and k_(-inf,0] in degree 0
    """
    return LineSheaf(tuple(LineSummand(rng.choice(GERM_TYPES)) for _ in range(rng.randint(1, max_summands))))


def random_combination(rng: random.Random, morphisms: typing.Sequence[RepMorphism], zero: RepMorphism,
                       spread: int = 2) -> RepMorphism:
    total = zero
    for f in morphisms:
        total = total + f * rng.randint(-spread, spread)
    return total
