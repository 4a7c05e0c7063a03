import functools
import itertools
import random
import typing

from shv.circlesheaf import CircleSheaf, WrappedInterval, WrappedSummand, assemble_circle, circle_points, \
    cohomology_circle, decompose_circle, dual_circle, end_algebra, local_system_rep, ss_circle, tensor_circle
from shv.exactalg import Matrix, Rational, jordan_block_matrix, jordan_blocks, kernel_basis
from shv.linesheaf import Covector, Interval, LineSheaf, LineSummand, Sign, acts_by, assemble_line, \
    autodual_structure, cohomology_line, decompose_line, dual_line, hom_criterion, hom_dim_line, microlocal_action, \
    ss_line
from shv.logger import log
from shv.microlocal import CoverSpec, PathStep, f_linked_exact, f_linked_interval_criterion, h_invariant, \
    is_simple_at, localize, m_gamma, morph_elem_witness, mv_twist, scalar_aut, identity_aut, \
    twist_restrictions_agree
from shv.oracle import CellularSheafModel, c_map_rank, cech_cohomology
from shv.quiverrep import CircleQuiverRep, LineQuiverRep, RepMorphism, cokernel, cokernel_endomorphism, \
    from_circle_summand, from_interval, hom_basis, hom_space_dim, kernel_endomorphism, positive_roots, tensor

from .generators import ALPHAS, grid, intervals_on, random_circle_sheaf, random_combination, random_germ_sheaf, \
    random_line_sheaf, scramble
from .report import Recorder, VerificationReport

Check = typing.Tuple[bool, str]
Suite = typing.Callable[[int, int], VerificationReport]


def _same(found: typing.Any, expected: typing.Any) -> Check:
    return found == expected, f'got {found}, expected {expected}'


def _line_round_trip(rng: random.Random, sheaf: LineSheaf) -> Check:
    return _same(decompose_line(typing.cast(LineQuiverRep, scramble(rng, assemble_line(sheaf)))), sheaf)


def _circle_round_trip(rng: random.Random, sheaf: CircleSheaf) -> Check:
    return _same(decompose_circle(typing.cast(CircleQuiverRep, scramble(rng, assemble_circle(sheaf)))), sheaf)


def _hom_profile(rng: random.Random, sheaf: LineSheaf, points: typing.Sequence[Rational],
                 sources: typing.Sequence[Interval]) -> Check:
    """
    dim Hom(k_J, F) for every indecomposable k_J, read off the scrambled quiver and off the summands
    """
    rep = scramble(rng, assemble_line(sheaf, points))
    for source in sources:
        found = hom_space_dim(from_interval(source, points), rep)
        expected = sum(mult for interval, mult in _counts(sheaf) if hom_criterion(source, interval))
        if found != expected:
            return False, f'Hom(k_{source}, F) has dimension {found} on the quiver, {expected} from summands'
    return _same(decompose_line(typing.cast(LineQuiverRep, rep)), sheaf)


def _counts(sheaf: LineSheaf) -> typing.List[typing.Tuple[Interval, int]]:
    return [(s.interval, s.mult) for s in sheaf.summands]


def decomposition(grid_size: int, seed: int) -> VerificationReport:
    rng = random.Random(seed)
    recorder = Recorder('decomposition', grid_size=grid_size, seed=seed)
    for k in range(50 * grid_size):
        sheaf = random_line_sheaf(rng)
        recorder.run(f'line-{k}', functools.partial(_line_round_trip, rng, sheaf), sheaf=sheaf)
    for k in range(10 * grid_size):
        sheaf = random_circle_sheaf(rng)
        recorder.run(f'circle-{k}', functools.partial(_circle_round_trip, rng, sheaf), sheaf=sheaf)
    # every sheaf of total dimension at most 3 on two marked points
    points = grid(2)
    sources = intervals_on(points)
    for size in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(sources, size):
            sheaf = LineSheaf(tuple(LineSummand(i) for i in combo))
            recorder.run(f'profile-{sheaf}', functools.partial(_hom_profile, rng, sheaf, points, sources),
                         sheaf=sheaf)
    return recorder.finish()


def _is_indicator(root: typing.Sequence[int]) -> bool:
    support = [v for v, d in enumerate(root) if d]
    return all(d in (0, 1) for d in root) and support == list(range(support[0], support[-1] + 1))


def gabriel(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('gabriel', grid_size=grid_size, seed=seed)
    for n in range(1, max(grid_size - 1, 2) + 1):
        roots = positive_roots(n)
        expected = (2 * n + 1) * (2 * n + 2) // 2
        recorder.check(f'roots-{n}', len(roots) == expected and all(_is_indicator(r) for r in roots),
                       f'{len(roots)} roots with q = 1, expected {expected} interval indicators', n=n)
        points = grid(n)
        reps = [from_interval(i, points) for i in intervals_on(points)]
        dims = {rep.vertex_dims for rep in reps}
        recorder.check(f'indecomposables-{n}', len(reps) == expected and dims == set(roots),
                       f'{len(reps)} interval representations with {len(dims)} dimension vectors', n=n)
        for rep in reps:
            recorder.check(f'end-{n}-{rep.vertex_dims}', hom_space_dim(rep, rep) == 1,
                           'interval representation has endomorphisms beyond scalars', dims=rep.vertex_dims)
    return recorder.finish()


def hom_table(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('hom-table', grid_size=grid_size, seed=seed)
    points = grid(grid_size)
    intervals = intervals_on(points)
    reps = {i: from_interval(i, points) for i in intervals}
    for i, j in itertools.product(intervals, repeat=2):
        found = hom_dim_line(LineSheaf.of(i), LineSheaf.of(j))
        expected = hom_space_dim(reps[i], reps[j])
        recorder.check(f'{i}->{j}', found == expected, f'closed form {found}, quiver {expected}', source=i, target=j)
    return recorder.finish()


def _cech_line(sheaf: LineSheaf) -> typing.Dict[int, int]:
    return cech_cohomology(CellularSheafModel.from_line(assemble_line(sheaf)))


def _cech_circle(sheaf: CircleSheaf) -> typing.Dict[int, int]:
    return cech_cohomology(CellularSheafModel.from_circle(assemble_circle(sheaf)))


def _line_cohomology(interval: Interval) -> Check:
    sheaf = LineSheaf.of(interval)
    return _same(cohomology_line(sheaf), _cech_line(sheaf))


def _circle_cohomology(sheaf: CircleSheaf) -> Check:
    return _same(cohomology_circle(sheaf), _cech_circle(sheaf))


def _pushforward_cohomology(interval: Interval) -> Check:
    sheaf = CircleSheaf.pushforward(interval)
    if cohomology_circle(sheaf) != cohomology_line(LineSheaf.of(interval)):
        return False, f'e_* changed the cohomology of k_{interval}'
    return _circle_cohomology(sheaf)


def cohomology(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('cohomology', grid_size=grid_size, seed=seed)
    for alpha in (Rational(1), Rational(2), Rational(1, 3), Rational(-1)):
        for r in range(1, grid_size + 1):
            recorder.run(f'L({alpha},{r})', functools.partial(_circle_cohomology, CircleSheaf.local_system(alpha, r)),
                         alpha=alpha, r=r)
    for interval in intervals_on(grid(3)):
        recorder.run(f'k_{interval}', functools.partial(_line_cohomology, interval), interval=interval)
    for interval in intervals_on(grid(grid_size, Rational(1, 2)), rays=False):
        if interval.lo < 1:
            recorder.run(f'e*k_{interval}', functools.partial(_pushforward_cohomology, interval), interval=interval)
    return recorder.finish()


def tensor_jordan(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('tensor-jordan', grid_size=grid_size, seed=seed)
    sizes = range(1, grid_size + 1)
    for (alpha, p), (beta, q) in itertools.product(itertools.product(ALPHAS, sizes), repeat=2):
        found = tensor_circle(CircleSheaf.local_system(alpha, p), CircleSheaf.local_system(beta, q)).local_type()
        expected = jordan_blocks(jordan_block_matrix(alpha, p).kronecker(jordan_block_matrix(beta, q)))
        recorder.check(f'L({alpha},{p})*L({beta},{q})', found == expected, f'tensor gives {found}, '
                       f'Kronecker product has {expected}', alpha=alpha, p=p, beta=beta, q=q)
    return recorder.finish()


def _local_invariants(sheaf: CircleSheaf) -> Check:
    blocks = {(loc.block.alpha, loc.block.r, loc.degree): loc.mult for loc in sheaf.local}
    degrees = set(sheaf.degrees)
    for alpha, r, degree in itertools.product(ALPHAS, range(1, 5), degrees):
        found = h_invariant(sheaf, alpha, r, degree)
        if found != blocks.get((alpha, r, degree), 0):
            return False, f'h({alpha},{r},{degree}) = {found}, expected {blocks.get((alpha, r, degree), 0)}'
    for degree in degrees:
        # the part in this degree, moved to degree 0 where the connecting map is read
        part = CircleSheaf(tuple(w for w in sheaf.wrapped if w.degree == degree),
                           tuple(loc for loc in sheaf.local if loc.degree == degree)).shift(degree)
        rep = assemble_circle(part)
        for alpha, r in {(a, r) for a, r, d in blocks if d == degree} | {(Rational(1), 1)}:
            twisted = tensor(rep, local_system_rep(jordan_block_matrix(1 / alpha, r), rep.points))
            found = c_map_rank(twisted)
            if found != h_invariant(sheaf, alpha, r, degree):
                return False, f'connecting map of F (x) L({1 / alpha},{r}) in degree {degree} has rank {found}'
    return True, 'ok'


def local_invariants(grid_size: int, seed: int) -> VerificationReport:
    rng = random.Random(seed)
    recorder = Recorder('local-invariants', grid_size=grid_size, seed=seed)
    for k in range(25 * grid_size):
        sheaf = random_circle_sheaf(rng, max_wrapped=1, max_r=4 if k % 5 == 0 else 2, degrees=(-1, 0, 1))
        recorder.run(f'sheaf-{k}', functools.partial(_local_invariants, sheaf), sheaf=sheaf)
    return recorder.finish()


def _morph_elem(target: CircleSheaf, wrapped: WrappedInterval) -> Check:
    points = circle_points(CircleSheaf((WrappedSummand(wrapped),)))
    source_rep = from_circle_summand(wrapped, points)
    target_rep = assemble_circle(target, points)
    before = cech_cohomology(CellularSheafModel.from_circle(target_rep)).get(0, 0)
    basis = hom_basis(source_rep, target_rep)
    if basis:
        basis.append(functools.reduce(lambda f, g: f + g, basis))
    for u in basis:
        quotient = typing.cast(CircleQuiverRep, cokernel(u))
        after = cech_cohomology(CellularSheafModel.from_circle(quotient)).get(0, 0)
        if after == before + 1 and morph_elem_witness(target, u) is None:
            return False, f'H^0 grows from {before} to {after} with no h-invariant drop'
    return True, 'ok'


def morph_elem(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('morph-elem', grid_size=grid_size, seed=seed)
    blocks = [CircleSheaf.local_system(a, r) for a in ALPHAS for r in (1, 2)]
    targets = blocks + [a + b for a, b in itertools.combinations_with_replacement(blocks, 2)]
    starts = (Rational(0), Rational(1, 2))
    arcs = [WrappedInterval(lo, Rational(k, grid_size), lo_closed, hi_closed)
            for lo in starts for k in range(1, grid_size + 1)
            for lo_closed, hi_closed in itertools.product((True, False), repeat=2)]
    for target, wrapped in itertools.product(targets, arcs):
        recorder.run(f'{wrapped}->{target}', functools.partial(_morph_elem, target, wrapped),
                     target=target, source=wrapped)
    return recorder.finish()


def _twist(sheaf: CircleSheaf, cover: CoverSpec, a: Rational) -> Check:
    twisted = mv_twist(sheaf, cover, scalar_aut(sheaf, cover, a))
    if twisted != CircleSheaf.local_system(a):
        return False, f'twist by {a} gives {twisted}'
    if not twist_restrictions_agree(sheaf, twisted, cover):
        return False, 'twist changed a restriction to U or V'
    return True, 'ok'


def twist(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('twist', grid_size=grid_size, seed=seed)
    cover = CoverSpec.default()
    sheaf = CircleSheaf.constant()
    lambdas = [Rational(2), Rational(3), Rational(1, 2), Rational(-1)]
    results = []
    for a in lambdas:
        recorder.run(f'twist-{a}', functools.partial(_twist, sheaf, cover, a), scalar=a)
        path = (PathStep(0, 1), PathStep(1, -1))
        found = m_gamma(cover, scalar_aut(sheaf, cover, a), path)
        recorder.check(f'monodromy-{a}', found == a, f'm_gamma = {found}', scalar=a)
        results.append(mv_twist(sheaf, cover, scalar_aut(sheaf, cover, a)))
    recorder.check('distinct', len(set(results)) == len(lambdas), 'distinct scalars gave isomorphic twists')
    recorder.run('identity', lambda: _same(mv_twist(sheaf, cover, identity_aut(sheaf, cover)), sheaf))
    return recorder.finish()


def _autodual_expected(sheaf: LineSheaf) -> bool:
    points = [s for s in sheaf.summands if s.interval.is_point]
    if len(points) != 1 or points[0].degree != 0 or points[0].mult != 1:
        return False
    rest = [s for s in sheaf.summands if not s.interval.is_point]
    if not all(s.interval.is_bounded and s.interval.is_half_closed for s in rest):
        return False
    counts = {(s.interval, s.degree): s.mult for s in rest}
    return all(counts.get((Interval(i.lo, i.hi, not i.lo_closed, not i.hi_closed), -d)) == m
               for (i, d), m in counts.items())


def duality(grid_size: int, seed: int) -> VerificationReport:
    rng = random.Random(seed)
    recorder = Recorder('duality', grid_size=grid_size, seed=seed)
    for k in range(50 * grid_size):
        line = random_line_sheaf(rng, degrees=(-1, 0, 1))
        recorder.check(f'line-{k}', dual_line(dual_line(line)) == line, 'duality is not involutive', sheaf=line)
        circle = random_circle_sheaf(rng, degrees=(-1, 0, 1))
        recorder.check(f'circle-{k}', dual_circle(dual_circle(circle)) == circle, 'duality is not involutive',
                       sheaf=circle)
    for alpha in ALPHAS:
        for r in range(1, grid_size + 1):
            found = dual_circle(CircleSheaf.local_system(alpha, r))
            recorder.check(f'L({alpha},{r})', found == CircleSheaf.local_system(1 / alpha, r),
                           f'dual is {found}', alpha=alpha, r=r)
    atoms = [LineSummand(i, d) for i in intervals_on(grid(3), rays=False) for d in (-1, 0, 1)]
    for size in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(atoms, size):
            sheaf = LineSheaf(combo)
            accepted = autodual_structure(sheaf) is not None
            recorder.check(f'autodual-{sheaf}', accepted == _autodual_expected(sheaf),
                           f'predicate {"accepts" if accepted else "rejects"} {sheaf}', sheaf=sheaf)
    return recorder.finish()


def _simple_covectors(sheaf: typing.Union[LineSheaf, CircleSheaf]) -> typing.List[Covector]:
    found = ss_line(sheaf) if isinstance(sheaf, LineSheaf) else ss_circle(sheaf)
    return [Covector(c.base, c.sign) for c in found if is_simple_at(sheaf, c)]


def _linked(sheaf: typing.Union[LineSheaf, CircleSheaf], window: typing.Optional[Interval]) -> Check:
    local = localize(sheaf, window)
    for p, q in itertools.combinations(_simple_covectors(local), 2):
        if f_linked_interval_criterion(sheaf, p, q, window) and not f_linked_exact(sheaf, p, q, window):
            return False, f'{p} and {q} pass the interval criterion but are not linked'
    return True, 'ok'


def _end_algebra(wrapped: WrappedInterval) -> Check:
    rep = from_circle_summand(wrapped)
    return _same(end_algebra(wrapped)[0], hom_space_dim(rep, rep))


def _windows(points: typing.Sequence[Rational]) -> typing.List[typing.Optional[Interval]]:
    """
    The whole line and every open window with ends half a step outside two marked points
    """
    half = Rational(1, 2)
    return [None] + [Interval.open(a - half, b + half) for a, b in itertools.combinations_with_replacement(points, 2)]


def linked(grid_size: int, seed: int) -> VerificationReport:
    rng = random.Random(seed)
    recorder = Recorder('linked', grid_size=grid_size, seed=seed)
    points = grid(grid_size + 3)
    intervals = intervals_on(points)
    windows = _windows(points)
    combos: typing.List[typing.Tuple[Interval, ...]] = [(i,) for i in intervals]
    for size in (2, 3):
        combos += [tuple(rng.choice(intervals) for _ in range(size)) for _ in range(15 * grid_size)]
    for combo in combos:
        sheaf = LineSheaf(tuple(LineSummand(i) for i in combo))
        for window in (None, rng.choice(windows[1:])):
            recorder.run(f'{sheaf}|{window}', functools.partial(_linked, sheaf, window), sheaf=sheaf,
                         window=window)
    for lo_closed, hi_closed in itertools.product((True, False), repeat=2):
        for k in range(1, 2 * grid_size + 1):
            wrapped = WrappedInterval(Rational(0), Rational(k, 2), lo_closed, hi_closed)
            recorder.run(f'end-{wrapped}', functools.partial(_end_algebra, wrapped), wrapped=wrapped)
            sheaf = CircleSheaf((WrappedSummand(wrapped),))
            recorder.run(f'{sheaf}', functools.partial(_linked, sheaf, None), sheaf=sheaf)
    return recorder.finish()


def _micro_entries(endo: RepMorphism) -> typing.List[Rational]:
    on_kernel, on_cokernel = microlocal_action(endo, 0, Sign.PLUS)
    return list(on_kernel.entries + on_cokernel.entries)


def commuting_endomorphisms(rng: random.Random, c: RepMorphism, alpha: Rational) \
        -> typing.Tuple[RepMorphism, RepMorphism]:
    """
    Random (a, a') with c a = a' c, both acting by alpha at (0,+)
    """
    source, target = c.source, c.target
    ends, ends_prime = hom_basis(source, source), hom_basis(target, target)
    source_size = len(_micro_entries(RepMorphism.zero(source, source)))
    target_size = len(_micro_entries(RepMorphism.zero(target, target)))
    columns = []
    for e in ends:
        square = [x for f, m in zip(c.maps, e.maps) for x in (f @ m).entries]
        columns.append(square + _micro_entries(e) + [Rational(0)] * target_size)
    for e in ends_prime:
        square = [-x for f, m in zip(c.maps, e.maps) for x in (m @ f).entries]
        columns.append(square + [Rational(0)] * source_size + _micro_entries(e))
    height = len(columns[0]) if columns else 0
    solutions = kernel_basis(Matrix.from_columns(columns, height=height))
    weights = [rng.randint(-2, 2) for _ in range(solutions.cols)]
    coefficients = [sum(w * solutions[row, col] for col, w in enumerate(weights)) for row in range(solutions.rows)]
    a, a_prime = RepMorphism.scalar(source, alpha), RepMorphism.scalar(target, alpha)
    for e, x in zip(ends, coefficients):
        a = a + e * x
    for e, x in zip(ends_prime, coefficients[len(ends):]):
        a_prime = a_prime + e * x
    return a, a_prime


def _kernel_cokernel(rng: random.Random, g: LineSheaf, g_prime: LineSheaf, alpha: Rational) -> Check:
    source, target = assemble_line(g, [0]), assemble_line(g_prime, [0])
    c = random_combination(rng, hom_basis(source, target), RepMorphism.zero(source, target))
    a, a_prime = commuting_endomorphisms(rng, c, alpha)
    on_kernel = acts_by(kernel_endomorphism(c, a, a_prime), 0, Sign.PLUS, alpha)
    on_cokernel = acts_by(cokernel_endomorphism(c, a, a_prime), 0, Sign.PLUS, alpha)
    return on_kernel and on_cokernel, f'kernel {"ok" if on_kernel else "fails"}, cokernel ' \
                                      f'{"ok" if on_cokernel else "fails"}'


def kernel_cokernel(grid_size: int, seed: int) -> VerificationReport:
    rng = random.Random(seed)
    recorder = Recorder('kernel-cokernel', grid_size=grid_size, seed=seed)
    for k in range(10 * grid_size):
        g, g_prime, alpha = random_germ_sheaf(rng), random_germ_sheaf(rng), rng.choice(ALPHAS)
        recorder.run(f'case-{k}', functools.partial(_kernel_cokernel, rng, g, g_prime, alpha), source=g,
                     target=g_prime, alpha=alpha)
    return recorder.finish()


def _covectors(*items: typing.Tuple[Rational, str]) -> typing.Tuple[Covector, ...]:
    return tuple(sorted((Covector(base, Sign(sign)) for base, sign in items), key=Covector.sort_key))


def microsupport(grid_size: int, seed: int) -> VerificationReport:
    recorder = Recorder('microsupport', grid_size=grid_size, seed=seed)
    zero, one, half = Rational(0), Rational(1), Rational(1, 2)
    line_table = [
        (Interval.open(0, 1), _covectors((zero, '-'), (one, '+'))),
        (Interval.closed(0, 1), _covectors((zero, '+'), (one, '-'))),
        (Interval.closed_open(0, 1), _covectors((zero, '+'), (one, '+'))),
        (Interval.open_closed(0, 1), _covectors((zero, '-'), (one, '-'))),
        (Interval.closed_open(0, None), _covectors((zero, '+'))),
        (Interval.open(0, None), _covectors((zero, '-'))),
        (Interval.open_closed(None, 0), _covectors((zero, '-'))),
        (Interval.open(None, 0), _covectors((zero, '+'))),
        (Interval.point(0), _covectors((zero, '+'), (zero, '-'))),
        (Interval.real_line(), ()),
    ]
    for interval, expected in line_table:
        recorder.check(f'k_{interval}', ss_line(LineSheaf.of(interval)) == expected,
                       f'SS(k_{interval}) = {[str(c) for c in ss_line(LineSheaf.of(interval))]}', interval=interval)
    quarter = Rational(1, 4)
    circle_table = [
        (CircleSheaf.pushforward(Interval.closed_open(0, half)), _covectors((zero, '+'), (half, '+'))),
        (CircleSheaf.pushforward(Interval.open(half, 1 + quarter)), _covectors((half, '-'), (quarter, '+'))),
        (CircleSheaf.pushforward(Interval.point(half)), _covectors((half, '+'), (half, '-'))),
        (CircleSheaf.local_system(2, 3), ()),
    ]
    for sheaf, expected in circle_table:
        recorder.check(f'{sheaf}', ss_circle(sheaf) == expected,
                       f'SS({sheaf}) = {[str(c) for c in ss_circle(sheaf)]}', sheaf=sheaf)
    return recorder.finish()


SUITES: typing.Dict[str, Suite] = {
    'decomposition': decomposition,
    'gabriel': gabriel,
    'hom-table': hom_table,
    'cohomology': cohomology,
    'tensor-jordan': tensor_jordan,
    'local-invariants': local_invariants,
    'morph-elem': morph_elem,
    'twist': twist,
    'duality': duality,
    'linked': linked,
    'kernel-cokernel': kernel_cokernel,
    'microsupport': microsupport,
}


def run_suites(name: str, grid_size: int = 4, seed: int = 0) -> typing.List[VerificationReport]:
    """
    Runs one suite, or every suite in turn for 'all'
    """
    names = list(SUITES) if name == 'all' else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f'unknown suite {name!r}, expected one of {", ".join(list(SUITES) + ["all"])}')
    reports = []
    for k, suite in enumerate(names):
        log.progress_bar(k, len(names), prefix='verify-lemmas', suffix=suite)
        reports.append(SUITES[suite](grid_size, seed))
    log.progress_bar(len(names), len(names), prefix='verify-lemmas', suffix='done')
    return reports
