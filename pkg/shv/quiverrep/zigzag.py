import dataclasses
import typing

from shv.exactalg import Matrix, column_basis, hstack, intersect_spaces, kernel_basis, pivot_columns, rank, \
    solve, sum_spaces, vstack


@dataclasses.dataclass(frozen=True)
class Relation:
    """
    Linear relation R between spaces A and B, spanned by the columns of [source; target]
    """

    source: Matrix
    target: Matrix

    @classmethod
    def _reduced(cls, source: Matrix, target: Matrix) -> 'Relation':
        pivots = pivot_columns(vstack(source, target))
        return cls(source.submatrix(range(source.rows), pivots), target.submatrix(range(target.rows), pivots))

    @classmethod
    def identity(cls, n: int) -> 'Relation':
        return cls(Matrix.identity(n), Matrix.identity(n))

    @classmethod
    def graph(cls, f: Matrix) -> 'Relation':
        """
        {(v, f v)}
        """
        return cls(Matrix.identity(f.cols), f)

    @classmethod
    def converse_graph(cls, g: Matrix) -> 'Relation':
        """
        {(g v, v)}
        """
        return cls(g, Matrix.identity(g.cols))

    @property
    def source_dim(self) -> int:
        return self.source.rows

    @property
    def target_dim(self) -> int:
        return self.target.rows

    def compose(self, other: 'Relation') -> 'Relation':
        """
        other after self: pairs (a, c) joined through some b
        """
        joint = kernel_basis(hstack(self.target, -other.source))
        left = joint.submatrix(range(self.source.cols), range(joint.cols))
        right = joint.submatrix(range(self.source.cols, joint.rows), range(joint.cols))
        return Relation._reduced(self.source @ left, other.target @ right)

    def domain(self) -> Matrix:
        return column_basis(self.source)

    def kernel(self) -> Matrix:
        """
        {a : (a, 0) in R}
        """
        return column_basis(self.source @ kernel_basis(self.target))

    def apply(self, subspace: Matrix) -> Matrix:
        """
        {b : (a, b) in R for some a in subspace}
        """
        joint = kernel_basis(hstack(self.source, -subspace))
        return column_basis(self.target @ joint.submatrix(range(self.source.cols), range(joint.cols)))

    def preimage(self, subspace: Matrix) -> Matrix:
        """
        {a : (a, b) in R for some b in subspace}
        """
        joint = kernel_basis(hstack(self.target, -subspace))
        return column_basis(self.source @ joint.submatrix(range(self.target.cols), range(joint.cols)))

    def rank(self) -> int:
        """
        Number of identity pieces: dim dom R - dim ker R
        """
        return rank(self.source) - self.kernel().cols


def _stable(step: typing.Callable[[Matrix], Matrix], start: Matrix) -> Matrix:
    current = start
    while True:
        following = step(current)
        if following.cols == current.cols:
            return following
        current = following


def regular_part(relation: Relation) -> Matrix:
    """
    Automorphism induced by an endo-relation on its regular quotient.

    The regular quotient is E / (E & S) with E the vectors transportable forever in both directions and
    S the vectors reachable from zero in either direction; string-like pieces die there.
    """
    n = relation.source_dim
    everything, nothing = Matrix.identity(n), Matrix.zeros(n, 0)
    forward = _stable(relation.preimage, everything)
    backward = _stable(relation.apply, everything)
    from_zero = _stable(relation.apply, nothing)
    to_zero = _stable(relation.preimage, nothing)
    core = intersect_spaces(forward, backward)
    singular = sum_spaces(from_zero, to_zero, rows=n)
    pivots = pivot_columns(hstack(singular, core))
    chosen = [p - singular.cols for p in pivots if p >= singular.cols]
    representatives = core.submatrix(range(n), chosen)
    images = []
    for j in range(representatives.cols):
        column = representatives.submatrix(range(n), [j])
        lifted = solve(relation.source, column)
        if lifted is None:
            raise ArithmeticError('regular vector outside the relation domain')
        images.append(relation.target @ lifted)
    if not images:
        return Matrix.zeros(0, 0)
    coordinates = solve(hstack(representatives, singular), hstack(*images))
    if coordinates is None:
        raise ArithmeticError('transport leaves the regular part')
    return coordinates.submatrix(range(representatives.cols), range(representatives.cols))


Bar = typing.Tuple[int, int]


def bar_multiplicities(dim: typing.Callable[[int], int],
                       step: typing.Callable[[int], Relation],
                       starts: typing.Iterable[int],
                       lower: typing.Optional[int] = None,
                       upper: typing.Optional[int] = None,
                       span: int = 0) -> typing.Dict[Bar, int]:
    """
    Interval multiplicities of a zigzag given vertexwise.

    rk(s, t) counts bars covering [s, t]; it is the rank of the path relation from s to t. Multiplicities follow
    by inclusion-exclusion. `lower`/`upper` bound a finite zigzag; unbounded ones look `span` vertices ahead.
    """
    rows: typing.Dict[int, typing.List[int]] = {}
    paths: typing.Dict[int, Relation] = {}

    def ranks_from(s: int, stop: int) -> typing.List[int]:
        if s not in rows:
            paths[s] = Relation.identity(dim(s))
            rows[s] = [paths[s].rank()]
        known = rows[s]
        while s + len(known) - 1 < stop:
            paths[s] = paths[s].compose(step(s + len(known) - 1))
            known.append(paths[s].rank())
        return known

    def rk(s: int, t: int) -> int:
        if (lower is not None and s < lower) or (upper is not None and t > upper):
            return 0
        return ranks_from(s, t)[t - s]

    result: typing.Dict[Bar, int] = {}
    for s in starts:
        last = upper if upper is not None else s + span
        for t in range(s, last + 1):
            mult = rk(s, t) - rk(s - 1, t) - rk(s, t + 1) + rk(s - 1, t + 1)
            if mult:
                result[(s, t)] = mult
    return result
