import dataclasses
import functools
import typing

import sympy

from shv.errors import NotInvertible, ShapeMismatch, SpectrumNotRational

from .matrix import Matrix, Rational, Scalar, ONE, ZERO, rank, to_rational, block_diagonal

Block = typing.Tuple[Rational, int, int]


@functools.lru_cache(maxsize=None)
def nilpotent(r: int) -> Matrix:
    """
    The standard nilpotent matrix N_r, ones on the superdiagonal
    """
    entries = [ZERO] * (r * r)
    for i in range(r - 1):
        entries[i * r + i + 1] = ONE
    return Matrix(r, r, entries)


@functools.lru_cache(maxsize=None)
def jordan_block_matrix(alpha: Rational, r: int) -> Matrix:
    """
    A_{alpha,r} = alpha * I_r + N_r
    """
    return Matrix.scalar(r, alpha) + nilpotent(r)


@dataclasses.dataclass(frozen=True)
class JordanType:
    """
    Multiset of Jordan blocks (eigenvalue, size, multiplicity), kept sorted and merged
    """

    blocks: typing.Tuple[Block, ...] = ()

    def __post_init__(self) -> None:
        merged: typing.Dict[typing.Tuple[Rational, int], int] = {}
        for alpha, size, mult in self.blocks:
            alpha = to_rational(alpha)
            if alpha == 0:
                raise ValueError('Jordan block eigenvalues must be non-zero')
            if size <= 0 or mult <= 0:
                raise ValueError(f'block ({alpha}, {size}, {mult}) needs positive size and multiplicity')
            merged[(alpha, size)] = merged.get((alpha, size), 0) + mult
        canonical = tuple((alpha, size, mult) for (alpha, size), mult in sorted(merged.items()))
        object.__setattr__(self, 'blocks', canonical)

    @classmethod
    def from_blocks(cls, blocks: typing.Iterable[typing.Tuple[Scalar, int, int]]) -> 'JordanType':
        return cls(tuple((to_rational(a), s, m) for a, s, m in blocks))

    @property
    def dimension(self) -> int:
        return sum(size * mult for _, size, mult in self.blocks)

    @property
    def eigenvalues(self) -> typing.Tuple[Rational, ...]:
        return tuple(sorted({alpha for alpha, _, _ in self.blocks}))

    def multiplicity(self, alpha: Scalar, size: int) -> int:
        alpha = to_rational(alpha)
        return sum(m for a, s, m in self.blocks if a == alpha and s == size)

    def expected_rank(self, alpha: Scalar, k: int) -> int:
        """
        rank((M - alpha I)^k) for any M of this Jordan type
        """
        alpha = to_rational(alpha)
        total = 0
        for a, size, mult in self.blocks:
            total += mult * (max(size - k, 0) if a == alpha else size)
        return total

    def to_matrix(self) -> Matrix:
        return block_diagonal(*(jordan_block_matrix(a, s) for a, s, m in self.blocks for _ in range(m)))

    def __str__(self) -> str:
        return ' + '.join(f'J({a},{s})^{m}' if m > 1 else f'J({a},{s})' for a, s, m in self.blocks) or '0'


def _charpoly(m: Matrix) -> sympy.Poly:
    if not m.is_square:
        raise ShapeMismatch(f'characteristic polynomial of a non-square {m.shape} matrix')
    x = sympy.Symbol('x')
    if not m.rows:
        return sympy.Poly(1, x, domain='QQ')
    entries = [sympy.Rational(a.numerator, a.denominator) for a in m.entries]
    return sympy.Poly(sympy.Matrix(m.rows, m.cols, entries).charpoly(x).as_expr(), x, domain='QQ')


def characteristic_polynomial(m: Matrix) -> typing.List[Rational]:
    """
    Coefficients of det(x I - m), lowest degree first
    """
    return [Rational(int(c.p), int(c.q)) for c in reversed(_charpoly(m).all_coeffs())]


def rational_spectrum(m: Matrix) -> typing.Dict[Rational, int]:
    """
    Eigenvalues with algebraic multiplicities; raises SpectrumNotRational on an irreducible factor of degree > 1
    """
    poly = _charpoly(m)
    if poly.degree() < 1:
        return {}
    _, factors = poly.factor_list()
    spectrum: typing.Dict[Rational, int] = {}
    for factor, mult in factors:
        if factor.degree() != 1:
            raise SpectrumNotRational(str(factor.as_expr()))
        lead, constant = factor.all_coeffs()
        root = sympy.Rational(-constant / lead)
        alpha = Rational(int(root.p), int(root.q))
        spectrum[alpha] = spectrum.get(alpha, 0) + int(mult)
    return spectrum


def jordan_blocks(m: Matrix) -> JordanType:
    """
    Jordan type of an invertible matrix with rational spectrum.

    Block counts come from the ranks of (m - alpha I)^k: the number of blocks of size at least k
    is rank_{k-1} - rank_k.
    """
    if not m.is_square:
        raise ShapeMismatch(f'Jordan form of a non-square {m.shape} matrix')
    n = m.rows
    if rank(m) != n:
        raise NotInvertible(f'{m!r} is singular')
    blocks: typing.List[Block] = []
    for alpha, algebraic in rational_spectrum(m).items():
        shifted = m - Matrix.scalar(n, alpha)
        ranks = [n]
        power = shifted
        while ranks[-1] > n - algebraic:
            ranks.append(rank(power))
            power = power @ shifted
        ranks.append(ranks[-1])
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        for size in range(1, len(at_least)):
            count = at_least[size - 1] - at_least[size]
            if count:
                blocks.append((alpha, size, count))
    return JordanType(tuple(blocks))
