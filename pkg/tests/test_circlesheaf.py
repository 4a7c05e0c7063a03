import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from shv.circlesheaf import CircleSheaf, WrappedInterval, assemble_circle, circle_hom_dim, cohomology_circle, \
    decompose_circle, dual_circle, end_algebra, local_system_rep, monodromy, pullback_window, ss_circle, \
    stalk_dim_circle, tensor_circle
from shv.errors import MixedDegrees
from shv.exactalg import JordanType, Rational, jordan_block_matrix
from shv.linesheaf import Covector, Interval, LineSheaf, Sign
from shv.quiverrep import CircleQuiverRep
from shv.verification.generators import random_circle_sheaf, scramble

HALF = Rational(1, 2)


class TestWrappedInterval(unittest.TestCase):

    def test_validation(self) -> None:
        with self.assertRaises(ValueError):
            WrappedInterval(1, HALF)
        with self.assertRaises(ValueError):
            WrappedInterval(0, -1)
        with self.assertRaises(ValueError):
            WrappedInterval(0, 0, True, False)

    def test_from_lift(self) -> None:
        self.assertEqual(WrappedInterval.from_lift(Interval.closed(Rational(3, 2), 2)), WrappedInterval(HALF, HALF))
        with self.assertRaises(ValueError):
            WrappedInterval.from_lift(Interval.closed_open(0, None))

    def test_fiber_count(self) -> None:
        w = WrappedInterval(0, Rational(3, 2), True, False)
        self.assertEqual(w.fiber_count(Rational(1, 4)), 2)
        self.assertEqual(w.fiber_count(Rational(3, 4)), 1)
        self.assertEqual(w.endpoints, (0, HALF))


class TestDecomposition(unittest.TestCase):

    def test_local_system(self) -> None:
        sheaf = CircleSheaf.local_system(2, 3)
        self.assertEqual(decompose_circle(assemble_circle(sheaf)), sheaf)

    def test_monodromy(self) -> None:
        rep = local_system_rep(jordan_block_matrix(Rational(2), 2), [Rational(0), HALF], base=1)
        self.assertEqual(monodromy(rep), JordanType.from_blocks([(2, 2, 1)]))

    def test_mixed_degrees(self) -> None:
        with self.assertRaises(MixedDegrees):
            assemble_circle(CircleSheaf.constant() + CircleSheaf.local_system(2, degree=1))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_round_trip(self, seed: int) -> None:
        rng = random.Random(seed)
        sheaf = random_circle_sheaf(rng)
        rep = scramble(rng, assemble_circle(sheaf))
        self.assertIsInstance(rep, CircleQuiverRep)
        self.assertEqual(decompose_circle(rep), sheaf)
        for x in rep.points:
            self.assertEqual(stalk_dim_circle(sheaf, x), rep.stalk_dim(x))


class TestOperations(unittest.TestCase):

    def test_tensor_of_unipotent_blocks(self) -> None:
        expected = CircleSheaf.local_system(1, 1) + CircleSheaf.local_system(1, 3)
        self.assertEqual(tensor_circle(CircleSheaf.local_system(1, 2), CircleSheaf.local_system(1, 2)), expected)
        self.assertEqual(tensor_circle(CircleSheaf.local_system(2, 2), CircleSheaf.local_system(HALF, 2)), expected)

    def test_tensor_wrapped_with_local(self) -> None:
        wrapped = CircleSheaf.pushforward(Interval.closed(0, HALF))
        self.assertEqual(tensor_circle(wrapped, CircleSheaf.local_system(2, 3)),
                         CircleSheaf.pushforward(Interval.closed(0, HALF), mult=3))

    def test_dual(self) -> None:
        self.assertEqual(dual_circle(CircleSheaf.local_system(2, 2)), CircleSheaf.local_system(HALF, 2))
        self.assertEqual(dual_circle(CircleSheaf.pushforward(Interval.closed(0, HALF), 1)),
                         CircleSheaf.pushforward(Interval.open(0, HALF), -1))

    def test_cohomology(self) -> None:
        self.assertEqual(cohomology_circle(CircleSheaf.constant()), {0: 1, 1: 1})
        self.assertEqual(cohomology_circle(CircleSheaf.local_system(2, 1)), {})
        self.assertEqual(cohomology_circle(CircleSheaf.local_system(1, 2)), {0: 1, 1: 1})
        self.assertEqual(cohomology_circle(CircleSheaf.pushforward(Interval.open(0, HALF))), {1: 1})
        self.assertEqual(cohomology_circle(CircleSheaf.pushforward(Interval.closed_open(0, Rational(3, 2)))), {})

    def test_end_algebra(self) -> None:
        self.assertEqual(end_algebra(WrappedInterval(0, HALF)), (1, 0))
        self.assertEqual(end_algebra(WrappedInterval(0, HALF, False, False)), (1, 0))
        self.assertEqual(end_algebra(WrappedInterval(0, Rational(3, 2), True, False)), (2, 1))

    def test_microsupport(self) -> None:
        self.assertEqual(ss_circle(CircleSheaf.pushforward(Interval.closed_open(0, HALF))),
                         (Covector(0, Sign.PLUS), Covector(HALF, Sign.PLUS)))
        self.assertEqual(ss_circle(CircleSheaf.pushforward(Interval.open(HALF, Rational(5, 4)))),
                         (Covector(Rational(1, 4), Sign.PLUS), Covector(HALF, Sign.MINUS)))
        self.assertEqual(ss_circle(CircleSheaf.local_system(3, 2)), ())

    def test_pullback_window(self) -> None:
        self.assertEqual(pullback_window(CircleSheaf.local_system(1, 2), Interval.open(0, 1)),
                         LineSheaf.of((Interval.open(0, 1), 0, 2)))
        found = pullback_window(CircleSheaf.pushforward(Interval.closed(0, HALF)), Interval.open(-HALF, Rational(3, 2)))
        self.assertEqual(found, LineSheaf.of(Interval.closed(0, HALF), Interval.closed_open(1, Rational(3, 2))))
        with self.assertRaises(ValueError):
            pullback_window(CircleSheaf.constant(), Interval.open(0, None))

    def test_hom(self) -> None:
        self.assertEqual(circle_hom_dim(CircleSheaf.constant(), CircleSheaf.constant()), 1)
        self.assertEqual(circle_hom_dim(CircleSheaf.local_system(2), CircleSheaf.constant()), 0)

    def test_stalks(self) -> None:
        sheaf = CircleSheaf.pushforward(Interval.closed_open(0, Rational(3, 2))) + CircleSheaf.local_system(2, 3)
        self.assertEqual(stalk_dim_circle(sheaf, Rational(1, 4)), 5)
        self.assertEqual(stalk_dim_circle(sheaf, Rational(3, 4)), 4)


if __name__ == '__main__':
    unittest.main()
