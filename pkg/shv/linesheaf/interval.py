import dataclasses
import enum
import typing

from shv.exactalg import Rational, Scalar, format_rational, to_rational


class Sign(str, enum.Enum):
    """
    Direction of a conormal covector at a point of the base
    """

    PLUS = '+'
    MINUS = '-'

    def flipped(self) -> 'Sign':
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


def _optional(value: typing.Optional[Scalar]) -> typing.Optional[Rational]:
    return None if value is None else to_rational(value)


@dataclasses.dataclass(frozen=True)
class Interval:
    """
    Interval of R with optional infinite ends (None); a point is [x, x]
    """

    lo: typing.Optional[Rational]
    hi: typing.Optional[Rational]
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, 'lo', _optional(self.lo))
        object.__setattr__(self, 'hi', _optional(self.hi))
        if self.lo is None and self.lo_closed or self.hi is None and self.hi_closed:
            raise ValueError('infinite ends must be open')
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError(f'empty interval: {self.lo} > {self.hi}')
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                raise ValueError(f'degenerate interval at {self.lo} must be closed on both ends')

    @classmethod
    def closed(cls, lo: Scalar, hi: Scalar) -> 'Interval':
        return cls(to_rational(lo), to_rational(hi), True, True)

    @classmethod
    def open(cls, lo: typing.Optional[Scalar], hi: typing.Optional[Scalar]) -> 'Interval':
        return cls(_optional(lo), _optional(hi), False, False)

    @classmethod
    def closed_open(cls, lo: Scalar, hi: typing.Optional[Scalar]) -> 'Interval':
        return cls(to_rational(lo), _optional(hi), True, False)

    @classmethod
    def open_closed(cls, lo: typing.Optional[Scalar], hi: Scalar) -> 'Interval':
        return cls(_optional(lo), to_rational(hi), False, True)

    @classmethod
    def point(cls, x: Scalar) -> 'Interval':
        return cls.closed(x, x)

    @classmethod
    def real_line(cls) -> 'Interval':
        return cls(None, None)

    @property
    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def is_real_line(self) -> bool:
        return self.lo is None and self.hi is None

    @property
    def is_closed(self) -> bool:
        """
        Closed as a subset of R: every finite end belongs to it
        """
        return (self.lo is None or self.lo_closed) and (self.hi is None or self.hi_closed)

    @property
    def is_open(self) -> bool:
        return not self.lo_closed and not self.hi_closed

    @property
    def is_half_closed(self) -> bool:
        return self.is_bounded and self.lo_closed != self.hi_closed

    @property
    def endpoints(self) -> typing.Tuple[Rational, ...]:
        return tuple(sorted({e for e in (self.lo, self.hi) if e is not None}))

    def contains(self, x: Scalar) -> bool:
        x = to_rational(x)
        above = self.lo is None or self.lo < x or (self.lo == x and self.lo_closed)
        below = self.hi is None or x < self.hi or (x == self.hi and self.hi_closed)
        return above and below

    def contains_interval(self, other: 'Interval') -> bool:
        """
        other is a subset of self
        """
        if other.lo is None:
            left = self.lo is None
        else:
            left = self.contains(other.lo) or (not other.lo_closed and self.lo == other.lo)
        if other.hi is None:
            right = self.hi is None
        else:
            right = self.contains(other.hi) or (not other.hi_closed and self.hi == other.hi)
        return left and right

    def closure(self) -> 'Interval':
        return Interval(self.lo, self.hi, self.lo is not None, self.hi is not None)

    def intersect(self, other: 'Interval') -> typing.Optional['Interval']:
        """
        self & other, None when empty
        """
        lo, lo_closed = _max_end(self.lo, self.lo_closed, other.lo, other.lo_closed)
        hi, hi_closed = _min_end(self.hi, self.hi_closed, other.hi, other.hi_closed)
        if lo is not None and hi is not None and (lo > hi or lo == hi and not (lo_closed and hi_closed)):
            return None
        return Interval(lo, hi, lo_closed, hi_closed)

    def translate(self, shift: Scalar) -> 'Interval':
        shift = to_rational(shift)
        return Interval(None if self.lo is None else self.lo + shift, None if self.hi is None else self.hi + shift,
                        self.lo_closed, self.hi_closed)

    def flipped(self) -> 'Interval':
        """
        Openness of every finite end flipped; points are kept
        """
        if self.is_point:
            return self
        return Interval(self.lo, self.hi, self.lo is not None and not self.lo_closed,
                        self.hi is not None and not self.hi_closed)

    def sort_key(self) -> typing.Tuple[typing.Any, ...]:
        lo = (0, 0) if self.lo is None else (1, self.lo)
        hi = (1, 0) if self.hi is None else (0, self.hi)
        return lo, not self.lo_closed, hi, self.hi_closed

    def __str__(self) -> str:
        lo = '-inf' if self.lo is None else format_rational(self.lo)
        hi = '+inf' if self.hi is None else format_rational(self.hi)
        if self.is_point:
            return f'{{{lo}}}'
        return f'{"[" if self.lo_closed else "("}{lo},{hi}{"]" if self.hi_closed else ")"}'


def _max_end(a: typing.Optional[Rational], a_closed: bool, b: typing.Optional[Rational], b_closed: bool) \
        -> typing.Tuple[typing.Optional[Rational], bool]:
    if a is None:
        return b, b_closed
    if b is None or a > b:
        return a, a_closed
    if b > a:
        return b, b_closed
    return a, a_closed and b_closed


def _min_end(a: typing.Optional[Rational], a_closed: bool, b: typing.Optional[Rational], b_closed: bool) \
        -> typing.Tuple[typing.Optional[Rational], bool]:
    if a is None:
        return b, b_closed
    if b is None or a < b:
        return a, a_closed
    if b < a:
        return b, b_closed
    return a, a_closed and b_closed


@dataclasses.dataclass(frozen=True)
class Covector:
    """
    Conormal direction (base, sign) carried by summands in one degree, with multiplicity
    """

    base: Rational
    sign: Sign
    degree: int = 0
    mult: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, 'base', to_rational(self.base))
        object.__setattr__(self, 'sign', Sign(self.sign))
        if self.mult < 1:
            raise ValueError(f'covector multiplicity must be positive, got {self.mult}')

    @property
    def direction(self) -> typing.Tuple[Rational, Sign]:
        """
        Position in the cotangent bundle, forgetting degree and multiplicity
        """
        return self.base, self.sign

    def sort_key(self) -> typing.Tuple[typing.Any, ...]:
        return self.base, self.sign.value, self.degree

    def __str__(self) -> str:
        text = f'({format_rational(self.base)},{self.sign.value})'
        if self.degree:
            text += f'[deg {self.degree}]'
        return text if self.mult == 1 else f'{text}^{self.mult}'


def merge_covectors(covectors: typing.Iterable[Covector]) -> typing.Tuple[Covector, ...]:
    """
    Adds multiplicities of equal (base, sign, degree) and sorts
    """
    counts: typing.Dict[typing.Tuple[Rational, Sign, int], int] = {}
    for c in covectors:
        key = (c.base, c.sign, c.degree)
        counts[key] = counts.get(key, 0) + c.mult
    return tuple(sorted((Covector(b, s, d, m) for (b, s, d), m in counts.items()), key=Covector.sort_key))


def end_covectors(lo: typing.Optional[Rational], lo_closed: bool, hi: typing.Optional[Rational], hi_closed: bool,
                  degree: int, mult: int) -> typing.List[Covector]:
    """
    Conormal covectors at the finite ends of k_I: closed left end and open right end point up
    """
    out = []
    if lo is not None:
        out.append(Covector(lo, Sign.PLUS if lo_closed else Sign.MINUS, degree, mult))
    if hi is not None:
        out.append(Covector(hi, Sign.MINUS if hi_closed else Sign.PLUS, degree, mult))
    return out


def end_shift(closed: bool, degree: int) -> Rational:
    """
    Shift of an owning end: closed +1/2, open -1/2, plus the degree
    """
    return Rational(1 if closed else -1, 2) + degree
