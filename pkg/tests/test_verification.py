import unittest

from shv.verification import SUITES, Recorder, VerificationReport, run_suites


class TestRecorder(unittest.TestCase):

    def test_outcomes(self) -> None:
        recorder = Recorder('demo', size=2)
        self.assertTrue(recorder.check('first', True, 'fine'))
        self.assertFalse(recorder.check('second', False, 'wrong', value=3))
        report = recorder.finish()
        self.assertEqual((report.cases, report.passed), (2, 1))
        self.assertFalse(report.ok)
        self.assertEqual(report.grid, {'size': 2})
        self.assertEqual(report.problems[0].payload, {'value': '3'})

    def test_raising_case(self) -> None:
        def broken() -> tuple:
            raise ZeroDivisionError('no inverse')

        recorder = Recorder('demo')
        self.assertFalse(recorder.run('broken', broken))
        self.assertTrue(recorder.run('fine', lambda: (True, '')))
        report = recorder.finish()
        self.assertEqual(report.problems[0].description, 'ZeroDivisionError: no inverse')
        self.assertEqual(report.passed, 1)

    def test_merge(self) -> None:
        a = VerificationReport(suite='s', cases=2, passed=2)
        b = VerificationReport(suite='s', cases=3, passed=1)
        merged = a.merge(b)
        self.assertEqual((merged.cases, merged.passed), (5, 3))


class TestSuites(unittest.TestCase):

    def test_every_suite_passes_on_a_small_grid(self) -> None:
        for name in SUITES:
            with self.subTest(suite=name):
                (report,) = run_suites(name, grid_size=2, seed=7)
                self.assertEqual(report.suite, name)
                self.assertGreater(report.cases, 0)
                self.assertEqual(report.problems, [])

    def test_all(self) -> None:
        reports = run_suites('all', grid_size=1, seed=1)
        self.assertEqual([r.suite for r in reports], list(SUITES))
        self.assertTrue(all(r.ok for r in reports))

    def test_unknown_suite(self) -> None:
        with self.assertRaises(KeyError):
            run_suites('lemma-42')


if __name__ == '__main__':
    unittest.main()
