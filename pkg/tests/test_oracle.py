import unittest

from shv.circlesheaf import CircleSheaf, assemble_circle, local_system_rep
from shv.errors import InconsistentModel
from shv.exactalg import Matrix, Rational, jordan_block_matrix
from shv.linesheaf import Interval, LineSheaf, assemble_line
from shv.oracle import CellularSheafModel, c_map_rank, cech_c_map, cech_cohomology, unipotent_twist


def _circle(sheaf: CircleSheaf) -> dict:
    return cech_cohomology(CellularSheafModel.from_circle(assemble_circle(sheaf)))


def _line(sheaf: LineSheaf) -> dict:
    return cech_cohomology(CellularSheafModel.from_line(assemble_line(sheaf)))


class TestCechCohomology(unittest.TestCase):

    def test_constant_circle(self) -> None:
        self.assertEqual(_circle(CircleSheaf.constant()), {0: 1, 1: 1})

    def test_non_trivial_monodromy_is_acyclic(self) -> None:
        self.assertEqual(_circle(CircleSheaf.local_system(2)), {})
        self.assertEqual(_circle(CircleSheaf.local_system(-1, 2)), {})

    def test_unipotent_block(self) -> None:
        self.assertEqual(_circle(CircleSheaf.local_system(1, 3)), {0: 1, 1: 1})

    def test_wrapped(self) -> None:
        self.assertEqual(_circle(CircleSheaf.pushforward(Interval.open(0, Rational(1, 2)))), {1: 1})
        self.assertEqual(_circle(CircleSheaf.pushforward(Interval.closed(0, Rational(3, 2)))), {0: 1})

    def test_line(self) -> None:
        self.assertEqual(_line(LineSheaf.of(Interval.open(0, 1))), {1: 1})
        self.assertEqual(_line(LineSheaf.of(Interval.closed(0, 1))), {0: 1})
        self.assertEqual(_line(LineSheaf.of(Interval.closed_open(0, 1))), {})
        self.assertEqual(_line(LineSheaf.of(Interval.real_line())), {0: 1})

    def test_inconsistent_model(self) -> None:
        with self.assertRaises(InconsistentModel):
            CellularSheafModel((1, 1), (1,), (((0, Matrix.identity(1)), (1, Matrix.identity(2))),))


class TestConnectingMap(unittest.TestCase):

    def test_unipotent_twist_doubles(self) -> None:
        rep = assemble_circle(CircleSheaf.constant())
        self.assertEqual(unipotent_twist(rep).vertex_dims, tuple(2 * d for d in rep.vertex_dims))

    def test_ranks(self) -> None:
        self.assertEqual(c_map_rank(assemble_circle(CircleSheaf.constant())), 1)
        self.assertEqual(c_map_rank(assemble_circle(CircleSheaf.local_system(1, 2))), 0)
        self.assertEqual(c_map_rank(assemble_circle(CircleSheaf.local_system(2))), 0)
        self.assertEqual(c_map_rank(assemble_circle(CircleSheaf.pushforward(Interval.closed_open(0, Rational(1, 2))))),
                         0)

    def test_counts_trivial_summands(self) -> None:
        sheaf = CircleSheaf.local_system(1, 1, mult=2) + CircleSheaf.local_system(1, 2)
        self.assertEqual(c_map_rank(assemble_circle(sheaf)), 2)

    def test_shape(self) -> None:
        rep = local_system_rep(jordan_block_matrix(Rational(1), 2), [Rational(0)])
        self.assertEqual(cech_c_map(rep).shape, (1, 1))


if __name__ == '__main__':
    unittest.main()
