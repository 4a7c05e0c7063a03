import typing
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from shv.errors import NotInvertible, ShapeMismatch, SpectrumNotRational
from shv.exactalg import JordanType, Matrix, Rational, block_diagonal, characteristic_polynomial, format_rational, \
    inverse, jordan_block_matrix, jordan_blocks, kernel_basis, parse_rational, rank, rational_spectrum, solve

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw: typing.Callable[..., typing.Any], max_side: int = 4) -> Matrix:
    rows = draw(st.integers(min_value=0, max_value=max_side))
    cols = draw(st.integers(min_value=0, max_value=max_side))
    return Matrix(rows, cols, draw(st.lists(small_ints, min_size=rows * cols, max_size=rows * cols)))


@st.composite
def unitriangular(draw: typing.Callable[..., typing.Any], n: int) -> Matrix:
    lower = Matrix(n, n, (1 if i == j else draw(small_ints) if i > j else 0 for i in range(n) for j in range(n)))
    upper = Matrix(n, n, (1 if i == j else draw(small_ints) if i < j else 0 for i in range(n) for j in range(n)))
    return lower @ upper


class TestRationalLiterals(unittest.TestCase):

    def test_parse(self) -> None:
        self.assertEqual(parse_rational('3/6'), Rational(1, 2))
        self.assertEqual(parse_rational('-2'), Rational(-2))

    def test_format_omits_unit_denominator(self) -> None:
        self.assertEqual(format_rational(Rational(4, 2)), '2')
        self.assertEqual(format_rational(Rational(-1, 3)), '-1/3')

    def test_parse_rejects_garbage(self) -> None:
        for text in ('1/0', 'one', '0.5.1'):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    parse_rational(text)


class TestMatrix(unittest.TestCase):

    def test_rank_table(self) -> None:
        self.assertEqual(rank(Matrix.identity(3)), 3)
        self.assertEqual(rank(Matrix.zeros(2, 5)), 0)
        self.assertEqual(rank(Matrix.from_rows([[1, 2], [2, 4]])), 1)

    def test_kernel_table(self) -> None:
        self.assertEqual(kernel_basis(Matrix.identity(3)).shape, (3, 0))
        self.assertEqual(kernel_basis(Matrix.zeros(2, 3)).cols, 3)
        basis = kernel_basis(Matrix.from_rows([[1, 1]]))
        self.assertEqual(basis.cols, 1)
        self.assertEqual(basis[0, 0], -basis[1, 0])

    def test_wrong_entry_count(self) -> None:
        with self.assertRaises(ShapeMismatch):
            Matrix(2, 2, [1, 2, 3])

    def test_singular_inverse(self) -> None:
        with self.assertRaises(NotInvertible):
            inverse(Matrix.from_rows([[1, 2], [2, 4]]))

    @given(matrices())
    def test_rank_nullity(self, m: Matrix) -> None:
        kernel = kernel_basis(m)
        self.assertEqual(rank(m) + kernel.cols, m.cols)
        self.assertTrue((m @ kernel).is_zero)

    @given(st.integers(min_value=1, max_value=4).flatmap(unitriangular))
    def test_inverse(self, m: Matrix) -> None:
        self.assertEqual(m @ inverse(m), Matrix.identity(m.rows))

    @given(matrices(), st.data())
    def test_solve_finds_a_solution_of_a_consistent_system(self, a: Matrix, data: st.DataObject) -> None:
        x = Matrix(a.cols, 1, data.draw(st.lists(small_ints, min_size=a.cols, max_size=a.cols)))
        found = solve(a, a @ x)
        self.assertIsNotNone(found)
        self.assertEqual(a @ found, a @ x)


class TestJordan(unittest.TestCase):

    def test_scalar(self) -> None:
        self.assertEqual(jordan_blocks(Matrix.from_rows([[Rational(5, 2)]])),
                         JordanType.from_blocks([(Rational(5, 2), 1, 1)]))

    def test_unipotent_block(self) -> None:
        self.assertEqual(jordan_blocks(Matrix.from_rows([[1, 1], [0, 1]])), JordanType.from_blocks([(1, 2, 1)]))

    def test_kronecker_of_unipotent_blocks(self) -> None:
        product = jordan_block_matrix(Rational(1), 2).kronecker(jordan_block_matrix(Rational(1), 2))
        self.assertEqual(jordan_blocks(product), JordanType.from_blocks([(1, 1, 1), (1, 3, 1)]))

    def test_irrational_spectrum(self) -> None:
        with self.assertRaises(SpectrumNotRational) as ctx:
            jordan_blocks(Matrix.from_rows([[0, 2], [1, 0]]))
        self.assertIn('x**2', ctx.exception.factor)

    def test_characteristic_polynomial(self) -> None:
        self.assertEqual(characteristic_polynomial(Matrix.from_rows([[2, 1], [1, 3]])), [5, -5, 1])
        self.assertEqual(characteristic_polynomial(Matrix.from_rows([[Rational(1, 2)]])), [Rational(-1, 2), 1])
        self.assertEqual(characteristic_polynomial(Matrix.zeros(0, 0)), [1])
        with self.assertRaises(ShapeMismatch):
            characteristic_polynomial(Matrix.zeros(2, 3))

    def test_rational_spectrum(self) -> None:
        m = block_diagonal(jordan_block_matrix(Rational(2), 3), jordan_block_matrix(Rational(-1, 3), 1))
        self.assertEqual(rational_spectrum(m), {Rational(2): 3, Rational(-1, 3): 1})
        self.assertEqual(rational_spectrum(Matrix.zeros(0, 0)), {})

    def test_singular(self) -> None:
        with self.assertRaises(NotInvertible):
            jordan_blocks(Matrix.from_rows([[1, 1], [0, 0]]))

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.tuples(st.sampled_from([1, 2, -1, Rational(1, 3)]), st.integers(1, 3)), min_size=1,
                    max_size=3), st.data())
    def test_conjugation_invariance(self, blocks: list, data: st.DataObject) -> None:
        expected = JordanType.from_blocks([(alpha, size, 1) for alpha, size in blocks])
        m = expected.to_matrix()
        p = data.draw(unitriangular(m.rows))
        found = jordan_blocks(p @ m @ inverse(p))
        self.assertEqual(found, expected)
        for alpha in found.eigenvalues:
            shifted = m - Matrix.scalar(m.rows, alpha)
            for k in range(1, m.rows + 1):
                self.assertEqual(rank(shifted.power(k)), found.expected_rank(alpha, k))


if __name__ == '__main__':
    unittest.main()
