import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from shv.errors import DuplicatePoint, EndpointNotMarked, ShapeMismatch
from shv.exactalg import Matrix, Rational
from shv.circlesheaf import WrappedInterval
from shv.linesheaf import Interval
from shv.quiverrep import LineQuiverRep, RepMorphism, cokernel, direct_sum, from_circle_summand, from_interval, \
    hom_basis, hom_space_dim, image, is_isomorphism, kernel, positive_roots, tits_form
from shv.verification.generators import grid, intervals_on

POINTS = grid(3)
INTERVALS = intervals_on(POINTS)


class TestLineQuiverRep(unittest.TestCase):

    def test_refine_constant(self) -> None:
        rep = LineQuiverRep.constant(2).refine([0])
        self.assertEqual(rep.vertex_dims, (2, 2, 2))
        self.assertEqual(rep.left, (Matrix.identity(2),))

    def test_refine_half_open(self) -> None:
        rep = from_interval(Interval.closed_open(0, 1)).refine([Rational(1, 2)])
        self.assertEqual(rep.vertex_dims, (0, 1, 1, 1, 1, 0, 0))
        self.assertEqual(rep.stalk_dim(Rational(3, 4)), 1)
        self.assertEqual(rep.stalk_dim(1), 0)

    def test_refine_duplicate(self) -> None:
        with self.assertRaises(DuplicatePoint):
            from_interval(Interval.closed(0, 1)).refine([1])

    def test_unsorted_points(self) -> None:
        empty = Matrix.zeros(0, 0)
        with self.assertRaises(DuplicatePoint):
            LineQuiverRep((1, 0), (0, 0), (0, 0, 0), (empty, empty), (empty, empty))

    def test_bad_shape(self) -> None:
        with self.assertRaises(ShapeMismatch):
            LineQuiverRep((0,), (1,), (1, 1), (Matrix.identity(1),), (Matrix.zeros(2, 1),))

    def test_closed_interval(self) -> None:
        rep = from_interval(Interval.closed(0, 1))
        self.assertEqual(rep.vertex_dims, (0, 1, 1, 1, 0))

    def test_point(self) -> None:
        rep = from_interval(Interval.point(0))
        self.assertEqual(rep.stalks, (1,))
        self.assertEqual(rep.arcs, (0, 0))

    def test_unmarked_endpoint(self) -> None:
        with self.assertRaises(EndpointNotMarked):
            from_interval(Interval.closed(0, 1), [0])

    def test_barcode(self) -> None:
        rep = direct_sum(from_interval(Interval.closed(0, 1)), from_interval(Interval.open(0, None), [0, 1]))
        self.assertEqual(rep.barcode(), {(1, 3): 1, (2, 4): 1})


class TestCircleQuiverRep(unittest.TestCase):

    def test_wrapped_stalk(self) -> None:
        rep = from_circle_summand(WrappedInterval(0, Rational(3, 2), True, False))
        self.assertEqual(rep.stalk_dim(0), 2)
        self.assertEqual(rep.stalk_dim(Rational(3, 4)), 1)

    def test_points_in_unit_interval(self) -> None:
        with self.assertRaises(ValueError):
            from_circle_summand(WrappedInterval(0, 1), [0, Rational(3, 2)])

    def test_lift(self) -> None:
        rep = from_circle_summand(WrappedInterval(0, Rational(1, 2)))
        line = rep.lift(Rational(-1, 4), Rational(3, 4))
        self.assertEqual(line.points, (0, Rational(1, 2)))
        self.assertEqual(line.vertex_dims, (0, 1, 1, 1, 0))


class TestMorphisms(unittest.TestCase):

    def test_hom_table(self) -> None:
        half_open = from_interval(Interval.closed_open(0, 1))
        self.assertEqual(hom_space_dim(half_open, half_open), 1)
        self.assertEqual(hom_space_dim(from_interval(Interval.closed(0, 1)), from_interval(Interval.open(0, 1))), 0)

    def test_non_commuting_square(self) -> None:
        rep = from_interval(Interval.closed(0, 1))
        maps = tuple(Matrix.scalar(d, 2 if v == 1 else 1) for v, d in enumerate(rep.vertex_dims))
        with self.assertRaises(ShapeMismatch):
            RepMorphism(rep, rep, maps)

    def test_cokernel_of_zero(self) -> None:
        a, b = from_interval(Interval.closed(0, 1)), from_interval(Interval.open(0, 1), [0, 1])
        self.assertEqual(cokernel(RepMorphism.zero(a, b)).vertex_dims, b.vertex_dims)

    def test_identity_is_isomorphism(self) -> None:
        rep = from_interval(Interval.closed(0, 2), POINTS)
        self.assertTrue(is_isomorphism(RepMorphism.identity(rep)))

    def test_kernel_image_cokernel(self) -> None:
        source, target = from_interval(Interval.closed(0, 2), POINTS), from_interval(Interval.closed(0, 1), POINTS)
        (f,) = hom_basis(source, target)
        ker, im, coker = kernel(f), image(f), cokernel(f)
        for v in range(len(source.vertex_dims)):
            self.assertEqual(ker.vertex_dims[v] + im.vertex_dims[v], source.vertex_dims[v])
            self.assertEqual(im.vertex_dims[v] + coker.vertex_dims[v], target.vertex_dims[v])
        self.assertEqual(ker.vertex_dims, from_interval(Interval.open_closed(1, 2), POINTS).vertex_dims)
        self.assertEqual(coker.total_dim, 0)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(INTERVALS), st.sampled_from(INTERVALS), st.sampled_from(INTERVALS))
    def test_hom_additive(self, a: Interval, b: Interval, c: Interval) -> None:
        ra, rb, rc = (from_interval(i, POINTS) for i in (a, b, c))
        self.assertEqual(hom_space_dim(direct_sum(ra, rb), rc), hom_space_dim(ra, rc) + hom_space_dim(rb, rc))
        self.assertEqual(hom_space_dim(rc, direct_sum(ra, rb)), hom_space_dim(rc, ra) + hom_space_dim(rc, rb))


class TestGabriel(unittest.TestCase):

    def test_root_count(self) -> None:
        for n in (1, 2, 3):
            with self.subTest(n=n):
                self.assertEqual(len(positive_roots(n)), (2 * n + 1) * (2 * n + 2) // 2)

    def test_roots_are_interval_dimensions(self) -> None:
        points = grid(2)
        self.assertEqual({from_interval(i, points).vertex_dims for i in intervals_on(points)}, set(positive_roots(2)))

    def test_tits_form(self) -> None:
        self.assertEqual(tits_form((1, 1, 1)), 1)
        self.assertEqual(tits_form((1, 2, 1)), 2)


if __name__ == '__main__':
    unittest.main()
