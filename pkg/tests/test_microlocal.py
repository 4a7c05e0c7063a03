import unittest

from shv.circlesheaf import CircleSheaf, WrappedInterval, assemble_circle, circle_points
from shv.errors import InvalidCover, NonInvertibleAut, NotSimple, ShapeMismatch
from shv.exactalg import Rational
from shv.linesheaf import Covector, Interval, LineSheaf, Sign
from shv.microlocal import Arc, AutSpec, CoverSpec, EndoElement, PathStep, cech_class, component_sheaves, \
    conjugate_point, end_basis, f_linked_exact, f_linked_interval_criterion, h_invariant, h_invariants, \
    identity_aut, is_pure_at, is_simple_at, m_gamma, microlocal_rank, morph_elem_witness, mu_scalar, mv_twist, \
    owners, scalar_aut, shift_difference, sole_owner, twist_restrictions_agree
from shv.oracle import CellularSheafModel, cech_cohomology
from shv.quiverrep import CircleQuiverRep, cokernel, from_circle_summand, hom_basis

HALF = Rational(1, 2)
P0 = Covector(0, Sign.PLUS)


class TestOwners(unittest.TestCase):

    def test_closed_interval(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1))
        (owner,) = owners(sheaf, P0)
        self.assertTrue(owner.at_lo and owner.closed)
        self.assertEqual(owners(sheaf, Covector(0, Sign.MINUS)), [])

    def test_rank_and_purity(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1), (Interval.closed(0, 2), 1))
        self.assertEqual(microlocal_rank(sheaf, P0).total, 2)
        self.assertEqual(microlocal_rank(sheaf, P0).degrees, (0, 1))
        self.assertFalse(is_simple_at(sheaf, P0))
        self.assertFalse(is_pure_at(sheaf, P0))
        with self.assertRaises(NotSimple):
            sole_owner(sheaf, P0)

    def test_periodic_owner(self) -> None:
        sheaf = CircleSheaf.pushforward(Interval.open(HALF, Rational(5, 4)))
        self.assertTrue(is_simple_at(sheaf, Covector(Rational(1, 4), Sign.PLUS)))
        self.assertEqual(owners(CircleSheaf.local_system(2, 3), P0), [])


class TestShifts(unittest.TestCase):

    def test_closed_ends_agree(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1))
        self.assertEqual(shift_difference(sheaf, P0, Covector(1, Sign.MINUS)), 0)

    def test_half_closed_ends_differ_by_one(self) -> None:
        sheaf = LineSheaf.of(Interval.closed_open(0, 1))
        self.assertEqual(shift_difference(sheaf, P0, Covector(1, Sign.PLUS)), 1)

    def test_degree_enters(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1), (Interval.closed(2, 3), 1))
        self.assertEqual(shift_difference(sheaf, Covector(2, Sign.PLUS), P0), 1)


class TestLinked(unittest.TestCase):

    def test_single_interval(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1))
        q = Covector(1, Sign.MINUS)
        self.assertTrue(f_linked_exact(sheaf, P0, q))
        self.assertTrue(f_linked_interval_criterion(sheaf, P0, q))
        self.assertTrue(f_linked_interval_criterion(sheaf, P0, q, Interval.open(-HALF, Rational(3, 2))))

    def test_separate_summands(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1), Interval.closed(2, 3))
        q = Covector(2, Sign.PLUS)
        self.assertFalse(f_linked_exact(sheaf, P0, q))
        self.assertFalse(f_linked_interval_criterion(sheaf, P0, q))

    def test_window_cuts_an_owner(self) -> None:
        with self.assertRaises(NotSimple):
            f_linked_exact(LineSheaf.of(Interval.closed(0, 1)), P0, Covector(1, Sign.MINUS), Interval.open(HALF, 2))

    def test_mu_scalar(self) -> None:
        sheaf = LineSheaf.of(Interval.closed(0, 1), Interval.closed(2, 3))
        u = EndoElement.diagonal(sheaf, [2, 3])
        self.assertEqual(mu_scalar(u, P0), 2)
        self.assertEqual(mu_scalar(u, Covector(3, Sign.MINUS)), 3)
        self.assertEqual(mu_scalar(EndoElement.scalar(sheaf, 5) + u, P0), 7)

    def test_end_basis(self) -> None:
        self.assertEqual(len(end_basis(LineSheaf.of(Interval.real_line(), Interval.closed_open(0, None)))), 3)
        self.assertEqual(len(end_basis(CircleSheaf.pushforward(Interval.closed_open(0, Rational(3, 2))))), 2)

    def test_circle(self) -> None:
        sheaf = CircleSheaf.pushforward(Interval.closed(0, HALF))
        q = Covector(HALF, Sign.MINUS)
        self.assertTrue(f_linked_exact(sheaf, P0, q))
        self.assertTrue(f_linked_interval_criterion(sheaf, P0, q))


class TestConjugatePoint(unittest.TestCase):

    def test_other_end(self) -> None:
        sheaf = CircleSheaf.pushforward(Interval.closed(0, HALF))
        self.assertEqual(conjugate_point(sheaf, P0), Covector(HALF, Sign.MINUS))
        self.assertEqual(conjugate_point(sheaf, Covector(HALF, Sign.MINUS)), P0)

    def test_wraps_around(self) -> None:
        sheaf = CircleSheaf.pushforward(Interval.closed_open(HALF, Rational(5, 4)))
        self.assertEqual(conjugate_point(sheaf, Covector(HALF, Sign.PLUS)), Covector(Rational(1, 4), Sign.PLUS))

    def test_unowned(self) -> None:
        self.assertIsNone(conjugate_point(CircleSheaf.constant(), P0))

    def test_not_simple(self) -> None:
        with self.assertRaises(NotSimple):
            conjugate_point(CircleSheaf.pushforward(Interval.closed(0, HALF), mult=2), P0)


class TestInvariants(unittest.TestCase):

    def test_jordan_block(self) -> None:
        sheaf = CircleSheaf.local_system(2, 3)
        self.assertEqual(h_invariant(sheaf, 2, 3, 0), 1)
        self.assertEqual(h_invariant(sheaf, 2, 2, 0), 0)
        self.assertEqual(h_invariant(sheaf, HALF, 3, 0), 0)

    def test_multiplicity_and_degree(self) -> None:
        self.assertEqual(h_invariant(CircleSheaf.local_system(2, mult=2), 2, 1, 0), 2)
        sheaf = CircleSheaf.local_system(3, degree=1)
        self.assertEqual(h_invariant(sheaf, 3, 1, 1), 1)
        self.assertEqual(h_invariant(sheaf, 3, 1, 0), 0)

    def test_wrapped_summands_do_not_count(self) -> None:
        self.assertEqual(h_invariant(CircleSheaf.pushforward(Interval.closed(0, HALF)), 1, 1, 0), 0)

    def test_table(self) -> None:
        sheaf = CircleSheaf.local_system(2, 3) + CircleSheaf.constant()
        self.assertEqual(h_invariants(sheaf), {(Rational(1), 1, 0): 1, (Rational(2), 3, 0): 1})

    def test_morph_elem_witness(self) -> None:
        wrapped = WrappedInterval(0, HALF, False, False)
        points = circle_points(CircleSheaf.pushforward(wrapped.lift))
        target = CircleSheaf.local_system(1, 2)
        target_rep = assemble_circle(target, points)
        before = cech_cohomology(CellularSheafModel.from_circle(target_rep)).get(0, 0)
        basis = hom_basis(from_circle_summand(wrapped, points), target_rep)
        self.assertEqual(len(basis), 2)
        for u in basis:
            quotient = cokernel(u)
            self.assertIsInstance(quotient, CircleQuiverRep)
            after = cech_cohomology(CellularSheafModel.from_circle(quotient)).get(0, 0)
            if after == before + 1:
                self.assertIsNotNone(morph_elem_witness(target, u))


class TestTwist(unittest.TestCase):

    def setUp(self) -> None:
        self.cover = CoverSpec.default()
        self.sheaf = CircleSheaf.constant()

    def test_cover(self) -> None:
        self.assertEqual(self.cover.components, (Arc(HALF, Rational(3, 4)), Arc(0, Rational(1, 4))))
        self.assertEqual([s.rank for s in component_sheaves(self.sheaf, self.cover)], [1, 1])
        with self.assertRaises(InvalidCover):
            Arc(0, 1)
        with self.assertRaises(InvalidCover):
            CoverSpec(Arc(0, HALF), Arc(Rational(1, 4), Rational(3, 4)))

    def test_aut_validation(self) -> None:
        with self.assertRaises(NonInvertibleAut):
            AutSpec(((Rational(0),), (Rational(1),)))
        with self.assertRaises(ShapeMismatch):
            AutSpec(((Rational(1),),) * 3)
        with self.assertRaises(ShapeMismatch):
            mv_twist(self.sheaf, self.cover, AutSpec(((Rational(1), Rational(2)), (Rational(1),))))

    def test_scalar_twist_is_a_local_system(self) -> None:
        for a in (Rational(2), Rational(3), HALF, Rational(-1)):
            with self.subTest(a=a):
                twisted = mv_twist(self.sheaf, self.cover, scalar_aut(self.sheaf, self.cover, a))
                self.assertEqual(twisted, CircleSheaf.local_system(a))
                self.assertTrue(twist_restrictions_agree(self.sheaf, twisted, self.cover))

    def test_identity_twist(self) -> None:
        self.assertEqual(mv_twist(self.sheaf, self.cover, identity_aut(self.sheaf, self.cover)), self.sheaf)

    def test_twist_keeps_degree(self) -> None:
        sheaf = self.sheaf.shift(-1)
        twisted = mv_twist(sheaf, self.cover, scalar_aut(sheaf, self.cover, 2))
        self.assertEqual(twisted, CircleSheaf.local_system(2, degree=1))

    def test_monodromy_and_class(self) -> None:
        alpha = scalar_aut(self.sheaf, self.cover, 3)
        path = [PathStep(0, 1), PathStep(1, -1)]
        self.assertEqual(m_gamma(self.cover, alpha, path), 3)
        self.assertEqual(m_gamma(self.cover, alpha, [PathStep(0, -1)]), Rational(1, 3))
        self.assertEqual(cech_class(self.cover, alpha), AutSpec(((Rational(1, 3),), (Rational(1),))))
        with self.assertRaises(ShapeMismatch):
            m_gamma(self.cover, alpha, [PathStep(0, 1, summand=1)])
        with self.assertRaises(ValueError):
            PathStep(2)


if __name__ == '__main__':
    unittest.main()
