import fractions
import typing

from shv.errors import NotInvertible, ShapeMismatch

Rational = fractions.Fraction
Scalar = typing.Union[int, fractions.Fraction]

ZERO = Rational(0)
ONE = Rational(1)


def to_rational(value: Scalar) -> Rational:
    """
    Coerces ints and fractions to a Rational without copying fractions
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f'{value!r} is not an exact scalar')
    return Rational(value)


def parse_rational(text: str) -> Rational:
    """
    Parses a "p/q" literal; q may be omitted when it is 1
    """
    try:
        return Rational(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f'{text!r} is not a rational literal "p/q"') from exc


def format_rational(value: Scalar) -> str:
    return str(to_rational(value))


class Matrix:
    """
    Immutable dense matrix over the rationals, entries stored row-major
    """

    def __init__(self, rows: int, cols: int, entries: typing.Iterable[Scalar] = ()):
        if rows < 0 or cols < 0:
            raise ValueError(f'negative matrix shape {rows}x{cols}')
        values = tuple(to_rational(e) for e in entries)
        if not values and rows * cols:
            values = (ZERO,) * (rows * cols)
        if len(values) != rows * cols:
            raise ShapeMismatch(f'{len(values)} entries given for a {rows}x{cols} matrix')
        self._rows = rows
        self._cols = cols
        self._entries = values

    @classmethod
    def _make(cls, rows: int, cols: int, entries: typing.Tuple[Rational, ...]) -> 'Matrix':
        matrix = cls.__new__(cls)
        matrix._rows = rows
        matrix._cols = cols
        matrix._entries = entries
        return matrix

    @classmethod
    def from_rows(cls, rows: typing.Sequence[typing.Sequence[Scalar]], cols: int = 0) -> 'Matrix':
        """
        Builds a matrix from nested rows; `cols` is only needed for a matrix with no rows
        """
        width = len(rows[0]) if rows else cols
        for row in rows:
            if len(row) != width:
                raise ShapeMismatch(f'ragged rows: expected width {width}, got {len(row)}')
        return cls(len(rows), width, (e for row in rows for e in row))

    @classmethod
    def from_columns(cls, columns: typing.Sequence[typing.Sequence[Scalar]], height: int = 0) -> 'Matrix':
        height = len(columns[0]) if columns else height
        return cls.from_rows([list(col) for col in columns], cols=height).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'Matrix':
        return cls._make(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls.scalar(n, ONE)

    @classmethod
    def scalar(cls, n: int, value: Scalar) -> 'Matrix':
        value = to_rational(value)
        entries = [ZERO] * (n * n)
        for i in range(n):
            entries[i * n + i] = value
        return cls._make(n, n, tuple(entries))

    @classmethod
    def diagonal(cls, values: typing.Sequence[Scalar]) -> 'Matrix':
        n = len(values)
        entries = [ZERO] * (n * n)
        for i, value in enumerate(values):
            entries[i * n + i] = to_rational(value)
        return cls._make(n, n, tuple(entries))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return self._rows, self._cols

    @property
    def entries(self) -> typing.Tuple[Rational, ...]:
        return self._entries

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    @property
    def is_zero(self) -> bool:
        return not any(self._entries)

    def __getitem__(self, key: typing.Tuple[int, int]) -> Rational:
        i, j = key
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f'({i}, {j}) outside a {self._rows}x{self._cols} matrix')
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> typing.Tuple[Rational, ...]:
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def column(self, j: int) -> typing.Tuple[Rational, ...]:
        return self._entries[j::self._cols] if self._cols else ()

    def to_lists(self) -> typing.List[typing.List[Rational]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def transpose(self) -> 'Matrix':
        return Matrix._make(self._cols, self._rows,
                            tuple(e for j in range(self._cols) for e in self.column(j)))

    def submatrix(self, rows: typing.Sequence[int], cols: typing.Sequence[int]) -> 'Matrix':
        return Matrix._make(len(rows), len(cols),
                            tuple(self._entries[i * self._cols + j] for i in rows for j in cols))

    def _check_same_shape(self, other: 'Matrix') -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f'{self.shape} against {other.shape}')

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other)
        return Matrix._make(self._rows, self._cols, tuple(a + b for a, b in zip(self._entries, other._entries)))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other)
        return Matrix._make(self._rows, self._cols, tuple(a - b for a, b in zip(self._entries, other._entries)))

    def __neg__(self) -> 'Matrix':
        return Matrix._make(self._rows, self._cols, tuple(-a for a in self._entries))

    def __mul__(self, value: Scalar) -> 'Matrix':
        value = to_rational(value)
        return Matrix._make(self._rows, self._cols, tuple(a * value for a in self._entries))

    __rmul__ = __mul__

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if self._cols != other._rows:
            raise ShapeMismatch(f'cannot multiply {self.shape} by {other.shape}')
        n, k, m = self._rows, self._cols, other._cols
        left, right = self._entries, other._entries
        out = [ZERO] * (n * m)
        # skipping zeros keeps Kronecker products of Jordan blocks cheap
        for i in range(n):
            base = i * m
            for inner in range(k):
                x = left[i * k + inner]
                if not x:
                    continue
                offset = inner * m
                for j in range(m):
                    y = right[offset + j]
                    if y:
                        out[base + j] += x * y
        return Matrix._make(n, m, tuple(out))

    def power(self, exponent: int) -> 'Matrix':
        if not self.is_square:
            raise ShapeMismatch(f'power of a non-square {self.shape} matrix')
        if exponent < 0:
            return inverse(self).power(-exponent)
        result, base = Matrix.identity(self._rows), self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def kronecker(self, other: 'Matrix') -> 'Matrix':
        rows, cols = self._rows * other._rows, self._cols * other._cols
        entries = [ZERO] * (rows * cols)
        for i in range(self._rows):
            for j in range(self._cols):
                a = self._entries[i * self._cols + j]
                if not a:
                    continue
                for p in range(other._rows):
                    for q in range(other._cols):
                        b = other._entries[p * other._cols + q]
                        if b:
                            entries[(i * other._rows + p) * cols + j * other._cols + q] = a * b
        return Matrix._make(rows, cols, tuple(entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        body = '; '.join(' '.join(str(e) for e in self.row(i)) for i in range(self._rows))
        return f'Matrix({self._rows}x{self._cols}: [{body}])'


def hstack(*matrices: Matrix, rows: int = 0) -> Matrix:
    """
    Concatenates matrices left to right; `rows` fixes the height when nothing is given
    """
    if not matrices:
        return Matrix.zeros(rows, 0)
    height = matrices[0].rows
    for m in matrices:
        if m.rows != height:
            raise ShapeMismatch(f'hstack of heights {height} and {m.rows}')
    return Matrix._make(height, sum(m.cols for m in matrices),
                        tuple(e for i in range(height) for m in matrices for e in m.row(i)))


def vstack(*matrices: Matrix, cols: int = 0) -> Matrix:
    if not matrices:
        return Matrix.zeros(0, cols)
    width = matrices[0].cols
    for m in matrices:
        if m.cols != width:
            raise ShapeMismatch(f'vstack of widths {width} and {m.cols}')
    return Matrix._make(sum(m.rows for m in matrices), width, tuple(e for m in matrices for e in m.entries))


def block_diagonal(*matrices: Matrix) -> Matrix:
    rows, cols = sum(m.rows for m in matrices), sum(m.cols for m in matrices)
    entries = [ZERO] * (rows * cols)
    r0 = c0 = 0
    for m in matrices:
        for i in range(m.rows):
            for j in range(m.cols):
                entries[(r0 + i) * cols + c0 + j] = m[i, j]
        r0 += m.rows
        c0 += m.cols
    return Matrix._make(rows, cols, tuple(entries))


def _reduced_echelon(m: Matrix) -> typing.Tuple[typing.List[typing.List[Rational]], typing.List[int]]:
    """
    Gauss-Jordan elimination; returns the non-zero rows of the reduced form and the pivot columns
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots: typing.List[int] = []
    top = 0
    for col in range(m.cols):
        if top == len(rows):
            break
        found = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        lead = rows[top][col]
        if lead != ONE:
            rows[top] = [x / lead for x in rows[top]]
        pivot_row = rows[top]
        for i, row in enumerate(rows):
            factor = row[col]
            if i != top and factor:
                rows[i] = [x - factor * y if y else x for x, y in zip(row, pivot_row)]
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def rank(m: Matrix) -> int:
    """
    Row rank over the rationals
    """
    if m.rows > m.cols:
        m = m.transpose()
    return len(_reduced_echelon(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """
    Matrix whose columns form a basis of the nullspace of `m`
    """
    reduced, pivots = _reduced_echelon(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    columns = []
    for f in free:
        vector = [ZERO] * m.cols
        vector[f] = ONE
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        columns.append(vector)
    return Matrix.from_columns(columns, height=m.cols)


def pivot_columns(m: Matrix) -> typing.List[int]:
    """
    Indices of the leftmost columns of `m` forming a basis of its column space
    """
    return _reduced_echelon(m)[1]


def column_basis(m: Matrix) -> Matrix:
    """
    Independent columns of `m` spanning its column space
    """
    return m.submatrix(range(m.rows), pivot_columns(m))


def complement_basis(subspace: Matrix) -> Matrix:
    """
    Standard basis vectors completing the column space of `subspace` to the whole space
    """
    n = subspace.rows
    _, pivots = _reduced_echelon(subspace.transpose())
    taken = set(pivots)
    identity = Matrix.identity(n)
    return identity.submatrix(range(n), [j for j in range(n) if j not in taken])


def solve(a: Matrix, b: Matrix) -> typing.Optional[Matrix]:
    """
    Some X with a @ X = b, or None when the system is inconsistent
    """
    if a.rows != b.rows:
        raise ShapeMismatch(f'cannot solve {a.shape} against {b.shape}')
    reduced, pivots = _reduced_echelon(hstack(a, b))
    if pivots and pivots[-1] >= a.cols:
        return None
    solution = [[ZERO] * b.cols for _ in range(a.cols)]
    for row, p in zip(reduced, pivots):
        solution[p] = row[a.cols:]
    return Matrix.from_rows(solution, cols=b.cols)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise NotInvertible(f'{m.shape} matrix is not square')
    solution = solve(m, Matrix.identity(m.rows))
    if solution is None or rank(m) != m.rows:
        raise NotInvertible(f'{m!r} is singular')
    return solution


def intersect_spaces(a: Matrix, b: Matrix) -> Matrix:
    """
    Basis of the intersection of two column spaces
    """
    kernel = kernel_basis(hstack(a, -b))
    return column_basis(a @ kernel.submatrix(range(a.cols), range(kernel.cols)))


def sum_spaces(*spaces: Matrix, rows: int = 0) -> Matrix:
    return column_basis(hstack(*spaces, rows=rows))


def contains(space: Matrix, vectors: Matrix) -> bool:
    return rank(hstack(space, vectors)) == rank(space)
