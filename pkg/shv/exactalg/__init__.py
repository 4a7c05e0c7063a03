__all__ = [
    'Rational',
    'Scalar',
    'Matrix',
    'JordanType',
    'to_rational',
    'parse_rational',
    'format_rational',
    'hstack',
    'vstack',
    'block_diagonal',
    'rank',
    'kernel_basis',
    'pivot_columns',
    'column_basis',
    'complement_basis',
    'solve',
    'inverse',
    'intersect_spaces',
    'sum_spaces',
    'contains',
    'nilpotent',
    'jordan_block_matrix',
    'characteristic_polynomial',
    'rational_spectrum',
    'jordan_blocks',
]

from .matrix import Rational, Scalar, Matrix, to_rational, parse_rational, format_rational, hstack, vstack, \
    block_diagonal, rank, kernel_basis, pivot_columns, column_basis, complement_basis, solve, inverse, \
    intersect_spaces, sum_spaces, contains
from .jordan import JordanType, nilpotent, jordan_block_matrix, characteristic_polynomial, rational_spectrum, \
    jordan_blocks
